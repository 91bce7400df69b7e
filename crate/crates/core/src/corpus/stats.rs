use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use super::split::{SplitAssignment, Subset};
use crate::clue::Clue;
use crate::error::{Error, Result};
use crate::lexicon::plural_normalize;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AnswerStats {
    pub unique_answers: usize,
    pub unique_up_to_plural: usize,
    pub mean_clues_per_answer: f64,
}

/// Plural-equivalence representative: each word singularized.
pub fn plural_class(answer: &str) -> String {
    answer.split(' ').map(plural_normalize).collect::<Vec<_>>().join(" ")
}

pub fn answer_stats(clues: &[Clue]) -> Result<AnswerStats> {
    if clues.is_empty() {
        return Err(Error::invalid("answer statistics of an empty clue set"));
    }
    let unique: BTreeSet<&str> = clues.iter().map(|c| c.answer.as_str()).collect();
    let classes: BTreeSet<String> = unique.iter().map(|a| plural_class(a)).collect();
    Ok(AnswerStats {
        unique_answers: unique.len(),
        unique_up_to_plural: classes.len(),
        mean_clues_per_answer: clues.len() as f64 / unique.len() as f64,
    })
}

/// Answers of the clues assigned to train.
pub fn train_answers(clues: &[Clue], split: &SplitAssignment) -> BTreeSet<String> {
    split
        .select(clues, Subset::Train)
        .into_iter()
        .map(|c| c.answer.clone())
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SubsetOverlap {
    pub clues: usize,
    /// Fraction of clues whose answer is also a train answer.
    pub answer_in_train: f64,
    /// Same, comparing plural classes.
    pub plural_class_in_train: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OverlapReport {
    pub policy: String,
    pub subsets: BTreeMap<String, SubsetOverlap>,
}

/// For dev and test, how often the answer (or its plural class) already
/// occurs among train answers.
pub fn audit_overlap(clues: &[Clue], split: &SplitAssignment) -> OverlapReport {
    let train = train_answers(clues, split);
    let train_classes: BTreeSet<String> = train.iter().map(|a| plural_class(a)).collect();
    let frac = |k: usize, n: usize| if n == 0 { 0.0 } else { k as f64 / n as f64 };
    let subsets = [Subset::Dev, Subset::Test]
        .into_iter()
        .map(|sub| {
            let members = split.select(clues, sub);
            let seen = members.iter().filter(|c| train.contains(&c.answer)).count();
            let seen_class = members
                .iter()
                .filter(|c| train_classes.contains(&plural_class(&c.answer)))
                .count();
            let report = SubsetOverlap {
                clues: members.len(),
                answer_in_train: frac(seen, members.len()),
                plural_class_in_train: frac(seen_class, members.len()),
            };
            (sub.name().to_string(), report)
        })
        .collect();
    OverlapReport {
        policy: split.policy.name().to_string(),
        subsets,
    }
}
