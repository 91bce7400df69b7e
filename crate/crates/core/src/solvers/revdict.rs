use std::collections::BTreeSet;

use crate::clue::{CandidateAnswer, Clue};
use crate::lexicon::{char_overlap_score, Lexicon, LookupDepth};
use crate::text::{letter_len, tokenize};

/// Reverse-dictionary baseline: look up the first and the last word of the
/// clue (synonyms plus direct hyponyms), keep words of the right total
/// length, and rank by letter overlap with the whole clue.
pub fn solve_reverse_dictionary(clue: &Clue, lex: &Lexicon) -> Vec<CandidateAnswer> {
    let tokens = tokenize(&clue.clue_text);
    let (Some(first), Some(last)) = (tokens.first(), tokens.last()) else {
        return Vec::new();
    };
    let depth = LookupDepth::new(1, 0, false);
    let total = clue.enumeration.total_letters();
    let mut hits: BTreeSet<String> = lex.reverse_lookup(&first.text, depth);
    hits.extend(lex.reverse_lookup(&last.text, depth));
    let mut out: Vec<CandidateAnswer> = hits
        .into_iter()
        .filter(|w| letter_len(w) == total)
        .map(|w| {
            let score = char_overlap_score(&w, &clue.clue_text) as f64;
            CandidateAnswer::new(w, score)
        })
        .collect();
    out.sort_by(crate::clue::rank_order);
    out
}
