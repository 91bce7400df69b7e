//! Top-k metrics after length filtering, plus the unfiltered sample
//! diagnostics (contains answer, correct length, correct word count).

mod report;

use std::collections::{BTreeMap, BTreeSet, HashSet};

use serde::{Deserialize, Serialize};

pub use report::{report, ReportFormat};

use crate::clue::{CandidateAnswer, Clue, ClueKey};
use crate::corpus::plural_class;
use crate::error::{Error, Result};
use crate::text::{letters_only, normalize_answer};

/// Settings echoed into every report.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct EvalMeta {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub solver: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub split: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub sample_size: usize,
    /// Always "whitespace_removed_length": candidates are kept when their
    /// letter count equals the enumeration total.
    pub filter: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClueRecord {
    pub puzzle_id: String,
    pub clue_id: String,
    pub answer: String,
    /// 1-based rank of the answer among distinct length-filtered candidates.
    pub filtered_rank: Option<usize>,
    pub sample_contains: bool,
    pub sample_outputs: usize,
    pub sample_correct_length: usize,
    pub sample_correct_word_count: usize,
    /// No candidate list was supplied for this clue.
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub missing: bool,
}

impl ClueRecord {
    pub fn top1(&self) -> bool {
        self.filtered_rank == Some(1)
    }

    pub fn top10(&self) -> bool {
        self.filtered_rank.is_some_and(|r| r <= 10)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EvalResult {
    pub meta: EvalMeta,
    pub clues: usize,
    pub top1_after_filter: f64,
    pub top10_contains_after_filter: f64,
    pub sample_contains_no_filter: f64,
    pub sample_correct_length: f64,
    pub sample_correct_word_count: f64,
    pub records: Vec<ClueRecord>,
}

impl EvalResult {
    /// Clues that had no candidate list.
    pub fn missing(&self) -> Vec<ClueKey> {
        self.records
            .iter()
            .filter(|r| r.missing)
            .map(|r| ClueKey::new(&r.puzzle_id, &r.clue_id))
            .collect()
    }

    fn from_records(meta: EvalMeta, records: Vec<ClueRecord>) -> EvalResult {
        let n = records.len();
        let frac = |k: usize, d: usize| if d == 0 { 0.0 } else { k as f64 / d as f64 };
        let count = |f: &dyn Fn(&ClueRecord) -> bool| records.iter().filter(|r| f(r)).count();
        let outputs: usize = records.iter().map(|r| r.sample_outputs).sum();
        EvalResult {
            meta,
            clues: n,
            top1_after_filter: frac(count(&ClueRecord::top1), n),
            top10_contains_after_filter: frac(count(&ClueRecord::top10), n),
            sample_contains_no_filter: frac(count(&|r| r.sample_contains), n),
            sample_correct_length: frac(records.iter().map(|r| r.sample_correct_length).sum(), outputs),
            sample_correct_word_count: frac(records.iter().map(|r| r.sample_correct_word_count).sum(), outputs),
            records,
        }
    }
}

/// Candidate text normalized the way answers are, or `None` for junk with
/// no letters.
fn normalized(c: &CandidateAnswer) -> Option<String> {
    normalize_answer(&c.text).ok()
}

fn score_clue(clue: &Clue, candidates: Option<&Vec<CandidateAnswer>>, sample_size: usize) -> ClueRecord {
    let gold = letters_only(&clue.answer);
    let total = clue.enumeration.total_letters();
    let words = clue.enumeration.word_count();
    let empty = Vec::new();
    let list = candidates.unwrap_or(&empty);

    let mut seen = HashSet::new();
    let filtered_rank = list
        .iter()
        .filter_map(normalized)
        .map(|n| letters_only(&n))
        .filter(|l| seen.insert(l.clone()))
        .filter(|l| l.len() == total)
        .position(|l| l == gold)
        .map(|p| p + 1);

    let sample: Vec<Option<String>> = list.iter().take(sample_size).map(normalized).collect();
    let mut rec = ClueRecord {
        puzzle_id: clue.puzzle_id.clone(),
        clue_id: clue.clue_id.clone(),
        answer: clue.answer.clone(),
        filtered_rank,
        sample_contains: false,
        sample_outputs: sample.len(),
        sample_correct_length: 0,
        sample_correct_word_count: 0,
        missing: candidates.is_none(),
    };
    for s in sample.iter().flatten() {
        let letters = letters_only(s);
        rec.sample_contains |= letters == gold;
        rec.sample_correct_length += usize::from(letters.len() == total);
        rec.sample_correct_word_count += usize::from(s.split(' ').count() == words);
    }
    rec
}

/// Scores every gold clue. A clue without a candidate list counts as wrong
/// and is flagged `missing`; a candidate list for an unknown clue is an
/// error.
pub fn evaluate(
    gold: &[Clue],
    candidates: &BTreeMap<ClueKey, Vec<CandidateAnswer>>,
    sample_size: usize,
    mut meta: EvalMeta,
) -> Result<EvalResult> {
    let known: BTreeSet<ClueKey> = gold.iter().map(Clue::key).collect();
    let unknown: Vec<String> = candidates
        .keys()
        .filter(|k| !known.contains(*k))
        .map(|k| format!("candidates for unknown clue {k}"))
        .collect();
    if !unknown.is_empty() {
        return Err(Error::Records {
            source_name: "candidates".into(),
            issues: unknown,
        });
    }
    meta.sample_size = sample_size;
    meta.filter = "whitespace_removed_length".into();
    let records = gold
        .iter()
        .map(|c| score_clue(c, candidates.get(&c.key()), sample_size))
        .collect();
    Ok(EvalResult::from_records(meta, records))
}

/// Records whose answer does / does not occur among `train_answers`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Segmented {
    pub seen: EvalResult,
    pub unseen: EvalResult,
}

/// Partitions per-clue records by whether the gold answer (or, with
/// `plural_equiv`, its plural class) is a train answer, and recomputes the
/// metrics on each side.
pub fn segment_by_train_overlap(
    result: &EvalResult,
    train_answers: &BTreeSet<String>,
    plural_equiv: bool,
) -> Segmented {
    let key = |a: &str| if plural_equiv { plural_class(a) } else { a.to_string() };
    let train: BTreeSet<String> = train_answers.iter().map(|a| key(a)).collect();
    let (seen, unseen): (Vec<ClueRecord>, Vec<ClueRecord>) = result
        .records
        .iter()
        .cloned()
        .partition(|r| train.contains(&key(&r.answer)));
    Segmented {
        seen: EvalResult::from_records(result.meta.clone(), seen),
        unseen: EvalResult::from_records(result.meta.clone(), unseen),
    }
}
