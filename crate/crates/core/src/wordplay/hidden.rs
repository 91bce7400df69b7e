use std::ops::Range;

use super::WordplayResult;
use crate::clue::ClueType;
use crate::lexicon::Lexicon;
use crate::text::tokenize;

/// Contiguous letter runs of length `len` across `words` (spaces removed),
/// skipping any run that is exactly one whole word. Each run comes with the
/// range of words it touches.
pub fn hidden_spans(words: &[&str], len: usize) -> Vec<(String, Range<usize>)> {
    let mut starts = Vec::with_capacity(words.len());
    let mut joined = String::new();
    for w in words {
        starts.push(joined.len());
        joined.push_str(w);
    }
    let word_at = |offset: usize| starts.partition_point(|&s| s <= offset) - 1;
    let mut out = Vec::new();
    if len == 0 || joined.len() < len {
        return out;
    }
    for s in 0..=joined.len() - len {
        let e = s + len;
        let (first, last) = (word_at(s), word_at(e - 1));
        if first == last && s == starts[first] && words[first].len() == len {
            continue;
        }
        out.push((joined[s..e].to_string(), first..last + 1));
    }
    out
}

/// Lexicon words of length `target_len` hidden in `phrase`.
pub fn hidden_words(phrase: &str, target_len: usize, lex: &Lexicon) -> Vec<WordplayResult> {
    let tokens = tokenize(phrase);
    let words: Vec<&str> = tokens.iter().map(|t| t.text.as_str()).collect();
    let mut out: Vec<WordplayResult> = hidden_spans(&words, target_len)
        .into_iter()
        .filter(|(s, _)| lex.contains(s))
        .map(|(output, span)| WordplayResult {
            output,
            clue_type: ClueType::Hidden,
            consumed_span: span,
            indicator_span: None,
        })
        .collect();
    out.sort_by(|a, b| {
        (&a.output, a.consumed_span.start, a.consumed_span.end).cmp(&(
            &b.output,
            b.consumed_span.start,
            b.consumed_span.end,
        ))
    });
    out.dedup();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    /// All substrings of the joined letters, minus whole words.
    fn substring_oracle(phrase: &str, len: usize, lex: &Lexicon) -> BTreeSet<String> {
        let words: Vec<String> = phrase.split_whitespace().map(str::to_string).collect();
        let joined: String = words.concat();
        let chars: Vec<char> = joined.chars().collect();
        let mut out = BTreeSet::new();
        for i in 0..chars.len() {
            for j in i + 1..=chars.len() {
                let s: String = chars[i..j].iter().collect();
                if s.len() == len && lex.contains(&s) {
                    let whole = words.iter().enumerate().any(|(k, w)| {
                        let start: usize = words[..k].iter().map(|w| w.len()).sum();
                        *w == s && start == i
                    });
                    if !whole {
                        out.insert(s);
                    }
                }
            }
        }
        out
    }

    fn outputs(r: &[WordplayResult]) -> BTreeSet<String> {
        r.iter().map(|r| r.output.clone()).collect()
    }

    #[test]
    fn somber_text_hides_bert() {
        let lex = Lexicon::bundled();
        let r = hidden_words("somber text", 4, lex);
        let bert = r.iter().find(|r| r.output == "bert").expect("bert hidden");
        assert_eq!(bert.consumed_span, 0..2);
        assert_eq!(outputs(&r), substring_oracle("somber text", 4, lex));
    }

    #[test]
    fn short_phrase_yields_nothing() {
        assert!(hidden_words("abc", 4, Lexicon::bundled()).is_empty());
    }

    #[test]
    fn interior_substring_is_found() {
        let lex = Lexicon::bundled();
        let r = hidden_words("xpetalx", 5, lex);
        assert!(outputs(&r).contains("petal"));
        assert_eq!(outputs(&r), substring_oracle("xpetalx", 5, lex));
    }

    #[test]
    fn whole_fodder_word_is_not_hidden() {
        let lex = Lexicon::bundled();
        let r = hidden_words("petal stop", 5, lex);
        assert!(!outputs(&r).contains("petal"));
        let r = hidden_words("petals", 5, lex);
        assert!(outputs(&r).contains("petal"));
    }
}
