use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::clue::ClueType;
use crate::error::{Error, Result};
use crate::lexicon::Lexicon;
use crate::text::{fold_letter, letters_only};

/// First letter of each word, lowercased.
pub fn initialism<S: AsRef<str>>(words: &[S]) -> Result<String> {
    if words.is_empty() {
        return Err(Error::invalid("initialism of an empty word list"));
    }
    words
        .iter()
        .map(|w| {
            w.as_ref()
                .chars()
                .find_map(fold_letter)
                .ok_or_else(|| Error::invalid(format!("word {:?} has no letters", w.as_ref())))
        })
        .collect()
}

pub fn reverse_letters(s: &str) -> String {
    letters_only(s).chars().rev().collect()
}

/// The word spelt backwards, if that is itself a word.
pub fn reversal(word: &str, lex: &Lexicon) -> Option<String> {
    let r = reverse_letters(word);
    (!r.is_empty() && lex.contains(&r)).then_some(r)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SubstringKind {
    Initial,
    Middle,
    Final,
}

impl SubstringKind {
    pub fn clue_type(self) -> ClueType {
        match self {
            SubstringKind::Initial => ClueType::SubstringInitial,
            SubstringKind::Middle => ClueType::SubstringMiddle,
            SubstringKind::Final => ClueType::SubstringFinal,
        }
    }

    pub fn from_clue_type(t: ClueType) -> Option<Self> {
        match t {
            ClueType::SubstringInitial => Some(SubstringKind::Initial),
            ClueType::SubstringMiddle => Some(SubstringKind::Middle),
            ClueType::SubstringFinal => Some(SubstringKind::Final),
            _ => None,
        }
    }
}

/// Proper slices of `word` of the given kind, unfiltered. Middle slices
/// touch neither end.
pub fn proper_slices(word: &str, kind: SubstringKind) -> Vec<String> {
    let w = letters_only(word);
    let n = w.len();
    let mut out = Vec::new();
    if n < 2 {
        return out;
    }
    match kind {
        SubstringKind::Initial => out.extend((1..n).map(|i| w[..i].to_string())),
        SubstringKind::Final => out.extend((1..n).map(|i| w[i..].to_string())),
        SubstringKind::Middle => {
            for i in 1..n {
                for j in i + 1..n {
                    out.push(w[i..j].to_string());
                }
            }
        }
    }
    out
}

/// Proper prefixes, suffixes or infixes of `word` that are words.
pub fn substrings(word: &str, kind: SubstringKind, lex: &Lexicon) -> BTreeSet<String> {
    proper_slices(word, kind)
        .into_iter()
        .filter(|s| lex.contains(s))
        .collect()
}

/// `inner` placed at each interior position of `outer`, unfiltered.
pub fn insertion_forms(outer: &str, inner: &str) -> Vec<String> {
    let (o, i) = (letters_only(outer), letters_only(inner));
    if i.is_empty() || o.len() < 2 {
        return Vec::new();
    }
    (1..o.len()).map(|p| format!("{}{}{}", &o[..p], i, &o[p..])).collect()
}

/// Words formed by putting `inner` inside `outer`.
pub fn insertions(outer: &str, inner: &str, lex: &Lexicon) -> BTreeSet<String> {
    insertion_forms(outer, inner)
        .into_iter()
        .filter(|s| lex.contains(s))
        .collect()
}
