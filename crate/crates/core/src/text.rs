//! Character-level helpers shared by every module: answer normalization,
//! clue tokenization and letter multisets.

use std::ops::Range;

use crate::error::{Error, Result};

/// Folds a character to a lowercase ASCII letter, if it is one (common
/// Latin accents are stripped).
pub fn fold_letter(c: char) -> Option<char> {
    let c = match c {
        'A'..='Z' => c.to_ascii_lowercase(),
        'a'..='z' => c,
        'à' | 'á' | 'â' | 'ä' | 'ã' | 'å' | 'À' | 'Á' | 'Â' | 'Ä' | 'Ã' | 'Å' => 'a',
        'ç' | 'Ç' => 'c',
        'è' | 'é' | 'ê' | 'ë' | 'È' | 'É' | 'Ê' | 'Ë' => 'e',
        'ì' | 'í' | 'î' | 'ï' | 'Ì' | 'Í' | 'Î' | 'Ï' => 'i',
        'ñ' | 'Ñ' => 'n',
        'ò' | 'ó' | 'ô' | 'ö' | 'õ' | 'Ò' | 'Ó' | 'Ô' | 'Ö' | 'Õ' => 'o',
        'ù' | 'ú' | 'û' | 'ü' | 'Ù' | 'Ú' | 'Û' | 'Ü' => 'u',
        _ => return None,
    };
    Some(c)
}

/// Lowercases, turns hyphens into spaces, drops every other non-letter and
/// collapses whitespace.
///
/// ```
/// use cryptic_core::normalize_answer;
/// assert_eq!(normalize_answer("Ice-Cream").unwrap(), "ice cream");
/// ```
pub fn normalize_answer(raw: &str) -> Result<String> {
    let mut out = String::with_capacity(raw.len());
    let mut pending_space = false;
    for c in raw.chars() {
        if c.is_whitespace() || is_hyphen(c) {
            pending_space = true;
        } else if let Some(l) = fold_letter(c) {
            if pending_space && !out.is_empty() {
                out.push(' ');
            }
            pending_space = false;
            out.push(l);
        }
    }
    if out.is_empty() {
        return Err(Error::EmptyAnswer(raw.to_string()));
    }
    Ok(out)
}

pub(crate) fn is_hyphen(c: char) -> bool {
    matches!(c, '-' | '‐' | '‑' | '–')
}

/// The letters of `s` with everything else (spaces included) removed.
pub fn letters_only(s: &str) -> String {
    s.chars().filter_map(fold_letter).collect()
}

/// Number of letters in `s`, ignoring whitespace and punctuation.
pub fn letter_len(s: &str) -> usize {
    s.chars().filter(|c| fold_letter(*c).is_some()).count()
}

/// A token of clue text: the folded letters plus the character range it
/// occupies in the original string.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    pub text: String,
    pub span: Range<usize>,
}

/// Splits clue text into letter tokens. Apostrophes are dropped inside a
/// word ("everything's" becomes "everythings"); any other non-letter ends a
/// token.
pub fn tokenize(text: &str) -> Vec<Token> {
    let mut tokens = Vec::new();
    let mut current = String::new();
    let mut start = 0;
    let mut end = 0;
    for (i, c) in text.chars().enumerate() {
        if let Some(l) = fold_letter(c) {
            if current.is_empty() {
                start = i;
            }
            current.push(l);
            end = i + 1;
        } else if matches!(c, '\'' | '’') && !current.is_empty() {
            continue;
        } else if !current.is_empty() {
            tokens.push(Token {
                text: std::mem::take(&mut current),
                span: start..end,
            });
        }
    }
    if !current.is_empty() {
        tokens.push(Token {
            text: current,
            span: start..end,
        });
    }
    tokens
}

/// Letter multiset over a-z.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct LetterCounts([u16; 26]);

impl LetterCounts {
    pub fn of(s: &str) -> Self {
        let mut counts = [0u16; 26];
        for c in s.chars().filter_map(fold_letter) {
            counts[(c as u8 - b'a') as usize] += 1;
        }
        LetterCounts(counts)
    }

    pub fn total(&self) -> usize {
        self.0.iter().map(|&n| n as usize).sum()
    }

    pub fn contains(&self, other: &LetterCounts) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a >= b)
    }

    /// Removes `other` from `self`; `None` if `other` is not contained.
    pub fn checked_sub(&self, other: &LetterCounts) -> Option<LetterCounts> {
        let mut out = self.0;
        for (slot, &b) in out.iter_mut().zip(other.0.iter()) {
            *slot = slot.checked_sub(b)?;
        }
        Some(LetterCounts(out))
    }

    /// Size of the multiset intersection.
    pub fn overlap(&self, other: &LetterCounts) -> usize {
        self.0
            .iter()
            .zip(other.0.iter())
            .map(|(&a, &b)| a.min(b) as usize)
            .sum()
    }

    pub fn distinct(&self) -> usize {
        self.0.iter().filter(|&&n| n > 0).count()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalize_examples() {
        assert_eq!(normalize_answer("Alan Turing").unwrap(), "alan turing");
        assert_eq!(normalize_answer("  BERT ").unwrap(), "bert");
        assert_eq!(normalize_answer("ice-cream").unwrap(), "ice cream");
        assert_eq!(normalize_answer("O'Neill's  2nd").unwrap(), "oneills nd");
        assert_eq!(normalize_answer("Café").unwrap(), "cafe");
    }

    #[test]
    fn normalize_rejects_empty() {
        assert!(matches!(normalize_answer("  - 42 "), Err(Error::EmptyAnswer(_))));
        assert!(normalize_answer("").is_err());
    }

    #[test]
    fn tokenize_tracks_spans() {
        let text = "But everything's really trivial, initially";
        let toks = tokenize(text);
        let words: Vec<_> = toks.iter().map(|t| t.text.as_str()).collect();
        assert_eq!(words, ["but", "everythings", "really", "trivial", "initially"]);
        let chars: Vec<char> = text.chars().collect();
        let span = &toks[1].span;
        let raw: String = chars[span.clone()].iter().collect();
        assert_eq!(raw, "everything's");
    }

    #[test]
    fn tokenize_splits_on_punctuation() {
        let toks = tokenize("Confused, Bret makes a well-known model (4)");
        let words: Vec<_> = toks.iter().map(|t| t.text.as_str()).collect();
        assert_eq!(words, ["confused", "bret", "makes", "a", "well", "known", "model"]);
    }

    #[test]
    fn letter_counts() {
        let a = LetterCounts::of("bert");
        let b = LetterCounts::of("somber text");
        assert_eq!(a.overlap(&b), 4);
        assert!(b.contains(&a));
        assert_eq!(b.checked_sub(&a).unwrap().total(), 6);
        assert!(a.checked_sub(&b).is_none());
        assert_eq!(LetterCounts::of("aab").distinct(), 2);
    }
}
