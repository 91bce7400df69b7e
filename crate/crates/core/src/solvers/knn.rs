use std::collections::{BTreeMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::clue::{CandidateAnswer, Clue};
use crate::error::{Error, Result};
use crate::text::tokenize;

/// Bag-of-words nearest-neighbour model over unigram counts.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct KnnModel {
    vocabulary: BTreeMap<String, usize>,
    /// Sparse count vectors, sorted by token index.
    rows: Vec<Vec<(usize, u32)>>,
    /// Squared norm of each row.
    norms: Vec<u64>,
    answers: Vec<String>,
    /// For each token index, the rows it occurs in with its count.
    postings: Vec<Vec<(u32, u32)>>,
    include_lengths: bool,
}

/// Lowercase letter tokens, plus the rendered enumeration when requested.
fn features(clue: &Clue, include_lengths: bool) -> Vec<String> {
    let mut t: Vec<String> = tokenize(&clue.clue_text).into_iter().map(|t| t.text).collect();
    if include_lengths {
        t.push(clue.enumeration.to_string());
    }
    t
}

fn count(tokens: &[String]) -> BTreeMap<&str, u32> {
    let mut m = BTreeMap::new();
    for t in tokens {
        *m.entry(t.as_str()).or_insert(0) += 1;
    }
    m
}

pub fn knn_fit(train: &[Clue], include_lengths: bool) -> Result<KnnModel> {
    let feats: Vec<Vec<String>> = train.iter().map(|c| features(c, include_lengths)).collect();
    let mut vocabulary = BTreeMap::new();
    for t in feats.iter().flatten() {
        vocabulary.entry(t.clone()).or_insert(0);
    }
    if vocabulary.is_empty() {
        return Err(Error::invalid("k-NN training set has an empty vocabulary"));
    }
    for (i, v) in vocabulary.values_mut().enumerate() {
        *v = i;
    }
    let mut postings = vec![Vec::new(); vocabulary.len()];
    let mut rows = Vec::with_capacity(feats.len());
    let mut norms = Vec::with_capacity(feats.len());
    for (r, f) in feats.iter().enumerate() {
        let mut row: Vec<(usize, u32)> = count(f).into_iter().map(|(t, n)| (vocabulary[t], n)).collect();
        row.sort_unstable();
        for &(t, n) in &row {
            postings[t].push((r as u32, n));
        }
        norms.push(row.iter().map(|&(_, n)| u64::from(n) * u64::from(n)).sum());
        rows.push(row);
    }
    Ok(KnnModel {
        vocabulary,
        rows,
        norms,
        answers: train.iter().map(|c| c.answer.clone()).collect(),
        postings,
        include_lengths,
    })
}

impl KnnModel {
    pub fn vocabulary(&self) -> &BTreeMap<String, usize> {
        &self.vocabulary
    }

    pub fn include_lengths(&self) -> bool {
        self.include_lengths
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// The stored count vector of training clue `i` as (token, count).
    pub fn row(&self, i: usize) -> Vec<(&str, u32)> {
        let names: BTreeMap<usize, &str> = self.vocabulary.iter().map(|(k, &v)| (v, k.as_str())).collect();
        self.rows[i].iter().map(|&(t, n)| (names[&t], n)).collect()
    }

    /// Squared Euclidean distance from the query to every training row,
    /// computed exactly in integers as |q|² + |r|² − 2·q·r.
    fn squared_distances(&self, clue: &Clue) -> Vec<u64> {
        let tokens = features(clue, self.include_lengths);
        let q = count(&tokens);
        let q_norm: u64 = q.values().map(|&n| u64::from(n) * u64::from(n)).sum();
        let mut dots = vec![0u64; self.rows.len()];
        for (t, &qn) in &q {
            if let Some(&idx) = self.vocabulary.get(*t) {
                for &(r, rn) in &self.postings[idx] {
                    dots[r as usize] += u64::from(qn) * u64::from(rn);
                }
            }
        }
        self.norms
            .iter()
            .zip(&dots)
            .map(|(&r, &d)| q_norm + r - 2 * d)
            .collect()
    }
}

/// Answers of the nearest training clues, first occurrence of each answer
/// only, until `k` distinct answers are collected. Ties go to the earlier
/// training clue. Score is the negated distance.
pub fn knn_predict(model: &KnnModel, clue: &Clue, k: usize) -> Vec<CandidateAnswer> {
    let d = model.squared_distances(clue);
    let mut order: Vec<usize> = (0..d.len()).collect();
    order.sort_by_key(|&i| (d[i], i));
    let mut seen = HashSet::new();
    let mut out = Vec::with_capacity(k);
    for i in order {
        if out.len() == k {
            break;
        }
        if seen.insert(model.answers[i].as_str()) {
            out.push(CandidateAnswer::new(model.answers[i].clone(), -(d[i] as f64).sqrt()));
        }
    }
    out
}
