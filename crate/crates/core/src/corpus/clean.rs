use std::collections::HashMap;
use std::io::BufRead;
use std::sync::OnceLock;

use regex::Regex;
use serde::{Deserialize, Serialize};

use crate::clue::Clue;
use crate::enumeration::{matches_enumeration, Enumeration};
use crate::error::{Error, Result};
use crate::text::{letters_only, normalize_answer};

/// A clue as scraped: every field optional, enumeration still inside the
/// clue text.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RawClueRecord {
    #[serde(default)]
    pub puzzle_id: Option<String>,
    #[serde(default)]
    pub clue_id: Option<String>,
    #[serde(default)]
    pub clue: Option<String>,
    #[serde(default)]
    pub answer: Option<String>,
    #[serde(default)]
    pub date: Option<String>,
}

impl From<&Clue> for RawClueRecord {
    fn from(c: &Clue) -> Self {
        RawClueRecord {
            puzzle_id: Some(c.puzzle_id.clone()),
            clue_id: Some(c.clue_id.clone()),
            clue: Some(c.surface()),
            answer: Some(c.answer.clone()),
            date: c.date.clone(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RemovalReason {
    CrossReference,
    IllFormatted,
    ExactDuplicate,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CleanReport {
    pub input: usize,
    pub retained: usize,
    pub cross_reference: usize,
    pub ill_formatted: usize,
    pub exact_duplicate: usize,
    /// Lines that could not be parsed at all; also counted in `input`.
    pub unparseable: usize,
    /// One message per unparseable line.
    pub errors: Vec<String>,
}

impl CleanReport {
    pub fn removed(&self) -> usize {
        self.cross_reference + self.ill_formatted + self.exact_duplicate + self.unparseable
    }
}

fn cross_reference_re() -> &'static Regex {
    static RE: OnceLock<Regex> = OnceLock::new();
    RE.get_or_init(|| Regex::new(r"(?i)\d+\s*(?:,\s*\d+\s*)*-?\s*(?:across|down|ac\b|dn\b)|\bsee\s+\d+").unwrap())
}

fn html_re() -> &'static Regex {
    static RE: OnceLock<Regex> = OnceLock::new();
    RE.get_or_init(|| Regex::new(r"(?i)&(?:#\d+|#x[0-9a-f]+|[a-z]+);|</?[a-z][^>]*>").unwrap())
}

/// Whether clue text points at another clue ("See 12", "3 down", "14,15 across").
pub fn is_cross_reference(clue_text: &str) -> bool {
    cross_reference_re().is_match(clue_text)
}

/// Splits `"text (8,4)"` into the text and its parsed enumeration.
pub fn split_enumeration(clue: &str) -> Option<(String, Enumeration)> {
    let trimmed = clue.trim_end();
    if !trimmed.ends_with(')') {
        return None;
    }
    let open = trimmed.rfind('(')?;
    let e = Enumeration::parse(&trimmed[open..]).ok()?;
    let text = trimmed[..open].trim().to_string();
    (!text.is_empty()).then_some((text, e))
}

fn duplicate_key(c: &Clue) -> (String, String) {
    let text = c
        .clue_text
        .split_whitespace()
        .collect::<Vec<_>>()
        .join(" ")
        .to_lowercase();
    (text, c.answer.clone())
}

/// Validates one record, or names why it is dropped.
fn validate(r: &RawClueRecord) -> std::result::Result<Clue, RemovalReason> {
    let (Some(pid), Some(cid), Some(clue), Some(answer)) = (&r.puzzle_id, &r.clue_id, &r.clue, &r.answer) else {
        return Err(RemovalReason::IllFormatted);
    };
    if pid.trim().is_empty() || cid.trim().is_empty() {
        return Err(RemovalReason::IllFormatted);
    }
    if is_cross_reference(clue) {
        return Err(RemovalReason::CrossReference);
    }
    if html_re().is_match(clue) || html_re().is_match(answer) {
        return Err(RemovalReason::IllFormatted);
    }
    let (text, enumeration) = split_enumeration(clue).ok_or(RemovalReason::IllFormatted)?;
    let normalized = normalize_answer(answer).map_err(|_| RemovalReason::IllFormatted)?;
    let answer = if matches_enumeration(&normalized, &enumeration) {
        normalized
    } else {
        // Right letter count but different word breaks (e.g. "ALANTURING"
        // for (4,6)): take the enumeration's word breaks.
        enumeration
            .segment(&letters_only(&normalized))
            .ok_or(RemovalReason::IllFormatted)?
    };
    Ok(Clue {
        puzzle_id: pid.clone(),
        clue_id: cid.clone(),
        clue_text: text,
        enumeration,
        answer,
        date: r.date.clone().filter(|d| !d.trim().is_empty()),
    })
}

/// Drops cross-references, ill-formatted records and exact duplicates.
/// Among duplicates the earliest dated record wins (undated ones last),
/// then the earliest in input order. Survivors keep input order.
pub fn clean(records: &[RawClueRecord]) -> (Vec<Clue>, CleanReport) {
    let mut report = CleanReport {
        input: records.len(),
        ..CleanReport::default()
    };
    let mut valid: Vec<(usize, Clue)> = Vec::new();
    for (i, r) in records.iter().enumerate() {
        match validate(r) {
            Ok(c) => valid.push((i, c)),
            Err(RemovalReason::CrossReference) => report.cross_reference += 1,
            Err(_) => report.ill_formatted += 1,
        }
    }
    let mut best: HashMap<(String, String), usize> = HashMap::new();
    for (pos, (_, c)) in valid.iter().enumerate() {
        let rank = |p: usize| (valid[p].1.date.is_none(), valid[p].1.date.clone(), valid[p].0);
        best.entry(duplicate_key(c))
            .and_modify(|b| {
                if rank(pos) < rank(*b) {
                    *b = pos;
                }
            })
            .or_insert(pos);
    }
    let mut keep = vec![false; valid.len()];
    for &p in best.values() {
        keep[p] = true;
    }
    let mut out = Vec::with_capacity(best.len());
    for (p, (_, c)) in valid.into_iter().enumerate() {
        if keep[p] {
            out.push(c);
        } else {
            report.exact_duplicate += 1;
        }
    }
    report.retained = out.len();
    (out, report)
}

/// Parses a JSONL dump, then cleans it. Lines that are not valid JSON
/// objects are counted and described in the report rather than failing.
pub fn clean_jsonl<R: BufRead>(r: R, source_name: &str) -> Result<(Vec<Clue>, CleanReport)> {
    let mut records = Vec::new();
    let mut errors = Vec::new();
    let mut lines = 0;
    for (i, line) in r.lines().enumerate() {
        let line = line.map_err(|e| Error::io(source_name, e))?;
        if line.trim().is_empty() {
            continue;
        }
        lines += 1;
        match serde_json::from_str::<RawClueRecord>(&line) {
            Ok(rec) => records.push(rec),
            Err(e) => errors.push(format!("line {}: {e}", i + 1)),
        }
    }
    let (clues, mut report) = clean(&records);
    report.input = lines;
    report.unparseable = errors.len();
    report.errors = errors;
    Ok((clues, report))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn raw(pid: &str, clue: &str, answer: &str, date: Option<&str>) -> RawClueRecord {
        RawClueRecord {
            puzzle_id: Some(pid.into()),
            clue_id: Some("1a".into()),
            clue: Some(clue.into()),
            answer: Some(answer.into()),
            date: date.map(str::to_string),
        }
    }

    #[test]
    fn cross_references_removed() {
        for text in [
            "See 12 across (5)",
            "See 4",
            "Partner of 3 down (4)",
            "With 14,15 across, a dog (4)",
        ] {
            assert!(is_cross_reference(text), "{text}");
        }
        assert!(!is_cross_reference("Confused, Bret makes a language model (4)"));
        let (c, r) = clean(&[raw("1", "See 12 across (5)", "petal", None)]);
        assert!(c.is_empty());
        assert_eq!(r.cross_reference, 1);
    }

    #[test]
    fn length_mismatch_and_html_are_ill_formatted() {
        let (c, r) = clean(&[
            raw("1", "Language model (5)", "bert", None),
            raw("2", "Bread &amp; butter (5)", "bread", None),
            raw("3", "<i>Language</i> model (4)", "bert", None),
            raw("4", "No enumeration", "bert", None),
            RawClueRecord {
                answer: None,
                ..raw("5", "Model (4)", "bert", None)
            },
        ]);
        assert!(c.is_empty());
        assert_eq!(r.ill_formatted, 5);
    }

    #[test]
    fn duplicates_keep_earliest() {
        let (c, r) = clean(&[
            raw("late", "Language  model (4)", "BERT", Some("2021-01-02")),
            raw("undated", "language model (4)", "bert", None),
            raw("early", "Language model (4)", "bert", Some("2020-05-01")),
            raw("other", "Language model (4)", "tool", None),
        ]);
        assert_eq!(r.exact_duplicate, 2);
        let ids: Vec<_> = c.iter().map(|c| c.puzzle_id.as_str()).collect();
        assert_eq!(ids, ["early", "other"]);
        assert_eq!(r.retained + r.removed(), r.input);
    }

    #[test]
    fn answers_follow_enumeration_breaks() {
        let (c, _) = clean(&[
            raw("1", "Computing pioneer (4,6)", "ALANTURING", None),
            raw("2", "Dessert (3-5)", "ice-cream", None),
        ]);
        assert_eq!(c[0].answer, "alan turing");
        assert_eq!(c[1].answer, "ice cream");
        assert_eq!(c[1].enumeration.to_string(), "(3-5)");
    }

    #[test]
    fn jsonl_errors_are_collected() {
        let text = "{\"puzzle_id\":\"1\",\"clue_id\":\"1a\",\"clue\":\"Model (4)\",\"answer\":\"bert\"}\nnot json\n\n";
        let (c, r) = clean_jsonl(text.as_bytes(), "t").unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(r.input, 2);
        assert_eq!(r.unparseable, 1);
        assert!(r.errors[0].starts_with("line 2"));
        assert_eq!(r.retained + r.removed(), r.input);
    }

    proptest! {
        #[test]
        fn clean_is_idempotent(
            rows in prop::collection::vec(
                ("[a-c]{1,2}", "[A-Za-z]{1,6}( [a-z]{1,6}){0,3}", "[a-z]{2,5}", prop::option::of("20[0-2][0-9]-01-01")),
                0..30,
            )
        ) {
            let records: Vec<RawClueRecord> = rows
                .iter()
                .map(|(p, text, ans, d)| raw(p, &format!("{text} ({})", ans.len()), ans, d.as_deref()))
                .collect();
            let (once, report) = clean(&records);
            prop_assert_eq!(report.retained + report.removed(), report.input);
            let again: Vec<RawClueRecord> = once.iter().map(RawClueRecord::from).collect();
            let (twice, r2) = clean(&again);
            prop_assert_eq!(r2.removed(), 0);
            prop_assert_eq!(twice, once);
        }
    }
}
