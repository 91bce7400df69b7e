//! Cryptic wordplay operations and indicator detection.
//!
//! Each operation works on normalized letters and, where it produces
//! words, filters through a [`Lexicon`]. The search-oriented variants
//! (`anagram_search`, `hidden_spans`, `proper_slices`, `insertion_forms`)
//! are what the rule-based solver drives with its own acceptance test.

mod anagram;
mod hidden;
mod scramble;
mod transforms;

use std::ops::Range;

pub use anagram::{anagram_search, anagram_solutions};
pub use hidden::{hidden_spans, hidden_words};
pub use scramble::{scramble, scramble_with};
pub use transforms::{
    initialism, insertion_forms, insertions, proper_slices, reversal, reverse_letters, substrings, SubstringKind,
};

use crate::clue::{ClueType, Derivation};
use crate::lexicon::{IndicatorTable, Lexicon, LookupDepth};
use crate::text::{letters_only, LetterCounts};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WordplayResult {
    pub output: String,
    pub clue_type: ClueType,
    /// Token range of the fodder.
    pub consumed_span: Range<usize>,
    pub indicator_span: Option<Range<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndicatorMatch {
    /// Token range of the indicator phrase.
    pub span: Range<usize>,
    pub clue_type: ClueType,
}

/// Scans left to right taking the longest indicator phrase at each
/// position; matches never overlap. One entry per type tag.
pub fn detect_indicators<S: AsRef<str>>(tokens: &[S], table: &IndicatorTable) -> Vec<IndicatorMatch> {
    let mut out = Vec::new();
    let mut i = 0;
    while i < tokens.len() {
        let longest = table.max_tokens().min(tokens.len() - i);
        let mut matched = 0;
        for len in (1..=longest).rev() {
            let phrase = tokens[i..i + len]
                .iter()
                .map(AsRef::as_ref)
                .collect::<Vec<_>>()
                .join(" ");
            if let Some(types) = table.get(&phrase) {
                out.extend(types.iter().map(|&clue_type| IndicatorMatch {
                    span: i..i + len,
                    clue_type,
                }));
                matched = len;
                break;
            }
        }
        i += matched.max(1);
    }
    out
}

/// Re-checks a derivation against the letter-level definition of its clue
/// type. Definition-based types are checked with `depth` lookups.
pub fn verify_derivation(candidate: &str, d: &Derivation, lex: &Lexicon, depth: LookupDepth) -> bool {
    let cand = letters_only(candidate);
    let input = |i: usize| d.inputs.get(i).map(String::as_str).unwrap_or("");
    match d.clue_type {
        ClueType::Anagram => {
            let fodder = letters_only(input(0));
            LetterCounts::of(&fodder) == LetterCounts::of(&cand) && fodder != cand
        }
        ClueType::Initialism => initialism(&d.inputs).is_ok_and(|s| s == cand),
        ClueType::Hidden => {
            let words: Vec<String> = d.inputs.iter().map(|w| letters_only(w)).collect();
            let refs: Vec<&str> = words.iter().map(String::as_str).collect();
            hidden_spans(&refs, cand.len()).iter().any(|(s, _)| *s == cand)
        }
        ClueType::Reversal => reverse_letters(input(0)) == cand,
        ClueType::Insertion => insertion_forms(input(0), input(1)).contains(&cand),
        ClueType::SubstringInitial | ClueType::SubstringMiddle | ClueType::SubstringFinal => {
            let kind = SubstringKind::from_clue_type(d.clue_type).expect("substring type");
            proper_slices(input(0), kind).contains(&cand)
        }
        ClueType::DoubleDefinition => {
            d.inputs.len() == 2
                && d.inputs
                    .iter()
                    .all(|def| lex.reverse_lookup(def, depth).contains(candidate))
        }
        ClueType::DefinitionOnly => lex.reverse_lookup(input(0), depth).contains(candidate),
    }
}
