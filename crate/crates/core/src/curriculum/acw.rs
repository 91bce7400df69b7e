use std::collections::HashSet;
use std::io::BufRead;
use std::sync::OnceLock;

use regex::Regex;
use serde::{Deserialize, Serialize};

use super::Skip;
use crate::error::{Error, Result};
use crate::text::normalize_answer;

/// A plain crossword clue and its answer.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AcwPair {
    pub clue: String,
    pub answer: String,
}

impl AcwPair {
    pub fn new(clue: impl Into<String>, answer: impl Into<String>) -> Self {
        AcwPair {
            clue: clue.into(),
            answer: answer.into(),
        }
    }
}

/// Reads `clue<TAB>answer` lines. Lines without exactly one tab are
/// returned as skips (1-based line numbers), not errors.
pub fn read_acw<R: BufRead>(r: R, source_name: &str) -> Result<(Vec<AcwPair>, Vec<Skip>)> {
    let mut pairs = Vec::new();
    let mut skipped = Vec::new();
    for (i, line) in r.lines().enumerate() {
        let line = line.map_err(|e| Error::io(source_name, e))?;
        if line.trim().is_empty() {
            continue;
        }
        match line.split('\t').collect::<Vec<_>>()[..] {
            [clue, answer] => pairs.push(AcwPair::new(clue, answer)),
            _ => skipped.push(Skip {
                index: i + 1,
                reason: "expected clue<TAB>answer".into(),
            }),
        }
    }
    Ok((pairs, skipped))
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct AcwCleanReport {
    pub input: usize,
    pub retained: usize,
    pub exact_duplicate: usize,
    pub fill_in_blank: usize,
    pub bad_answer: usize,
}

fn blank_re() -> &'static Regex {
    static RE: OnceLock<Regex> = OnceLock::new();
    // an underscore run, or three or more dashes of any kind
    RE.get_or_init(|| Regex::new(r"_+|[-‐‑‒–—―]{3,}").unwrap())
}

pub fn is_fill_in_blank(clue: &str) -> bool {
    blank_re().is_match(clue)
}

/// Normalizes answers, drops fill-in-the-blank clues and exact duplicate
/// pairs (first occurrence kept).
pub fn clean_acw(pairs: &[AcwPair]) -> (Vec<AcwPair>, AcwCleanReport) {
    let mut report = AcwCleanReport {
        input: pairs.len(),
        ..AcwCleanReport::default()
    };
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for p in pairs {
        let Ok(answer) = normalize_answer(&p.answer) else {
            report.bad_answer += 1;
            continue;
        };
        let clue = p.clue.trim();
        if clue.is_empty() {
            report.bad_answer += 1;
            continue;
        }
        if is_fill_in_blank(clue) {
            report.fill_in_blank += 1;
            continue;
        }
        let pair = AcwPair::new(clue, answer);
        if !seen.insert(pair.clone()) {
            report.exact_duplicate += 1;
            continue;
        }
        out.push(pair);
    }
    report.retained = out.len();
    (out, report)
}
