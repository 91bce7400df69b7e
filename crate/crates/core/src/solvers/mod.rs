//! The three non-neural solvers and the file adapters used to exchange
//! clues and candidate lists with external models.

mod candidates;
mod knn;
mod revdict;
mod rule_based;
mod seq2seq;

use std::collections::BTreeMap;
use std::time::Duration;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub use candidates::{import_candidates, read_candidates, write_candidates, CandidateRecord};
pub use knn::{knn_fit, knn_predict, KnnModel};
pub use revdict::solve_reverse_dictionary;
pub use rule_based::solve_rule_based;
pub use seq2seq::{export_seq2seq, parse_seq2seq_line, seq2seq_line, Seq2SeqLine};

use crate::clue::{CandidateAnswer, Clue, ClueType};
use crate::error::{Error, Result};
use crate::lexicon::LookupDepth;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SolverConfig {
    pub max_candidates: usize,
    /// Per-clue budget in seconds.
    pub timeout_secs: f64,
    pub definition_max_tokens: usize,
    /// Weight on definition similarity.
    pub w_def: f64,
    /// Additive bonus per clue type; missing types score 0.
    pub type_weights: BTreeMap<ClueType, f64>,
    /// Graph depth used to decide whether a candidate matches a definition.
    pub definition_depth: LookupDepth,
}

impl Default for SolverConfig {
    fn default() -> Self {
        let type_weights = ClueType::ALL
            .into_iter()
            .filter(|t| *t != ClueType::DefinitionOnly)
            .map(|t| (t, 0.1))
            .chain([(ClueType::DefinitionOnly, 0.0)])
            .collect();
        SolverConfig {
            max_candidates: 100,
            timeout_secs: 120.0,
            definition_max_tokens: 3,
            w_def: 1.0,
            type_weights,
            definition_depth: LookupDepth::new(1, 1, false),
        }
    }
}

impl SolverConfig {
    pub fn validate(&self) -> Result<()> {
        if self.max_candidates == 0 {
            return Err(Error::invalid("max_candidates must be at least 1"));
        }
        if !(self.timeout_secs > 0.0 && self.timeout_secs.is_finite()) {
            return Err(Error::invalid("timeout must be a positive number of seconds"));
        }
        if self.definition_max_tokens == 0 {
            return Err(Error::invalid("definition_max_tokens must be at least 1"));
        }
        Ok(())
    }

    pub fn timeout(&self) -> Duration {
        Duration::from_secs_f64(self.timeout_secs)
    }

    pub fn type_weight(&self, t: ClueType) -> f64 {
        self.type_weights.get(&t).copied().unwrap_or(0.0)
    }
}

/// Ranked candidates for one clue. `timed_out` marks a search cut short by
/// the deadline; the candidates found until then are still returned.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct SolveOutcome {
    pub candidates: Vec<CandidateAnswer>,
    pub timed_out: bool,
}

/// Solves every clue on a pool of `threads` workers (all cores when
/// `None`). Output order follows input order regardless of scheduling.
pub fn solve_all<F>(clues: &[Clue], threads: Option<usize>, solve: F) -> Result<Vec<CandidateRecord>>
where
    F: Fn(&Clue) -> SolveOutcome + Sync,
{
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(n) = threads {
        pool = pool.num_threads(n.max(1));
    }
    let pool = pool
        .build()
        .map_err(|e| Error::invalid(format!("cannot start worker pool: {e}")))?;
    Ok(pool.install(|| {
        clues
            .par_iter()
            .map(|c| {
                let out = solve(c);
                CandidateRecord {
                    puzzle_id: c.puzzle_id.clone(),
                    clue_id: c.clue_id.clone(),
                    candidates: out.candidates,
                    timed_out: out.timed_out,
                }
            })
            .collect()
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn config_defaults_and_validation() {
        let cfg = SolverConfig::default();
        assert_eq!(cfg.max_candidates, 100);
        assert_eq!(cfg.timeout(), Duration::from_secs(120));
        assert_eq!(cfg.type_weight(ClueType::Anagram), 0.1);
        assert_eq!(cfg.type_weight(ClueType::DefinitionOnly), 0.0);
        cfg.validate().unwrap();
        assert!(SolverConfig {
            max_candidates: 0,
            ..cfg.clone()
        }
        .validate()
        .is_err());
        assert!(SolverConfig {
            timeout_secs: 0.0,
            ..cfg
        }
        .validate()
        .is_err());
    }

    #[test]
    fn solve_all_keeps_input_order() {
        let clues: Vec<Clue> = (0..50)
            .map(|i| Clue {
                puzzle_id: "p".into(),
                clue_id: format!("{i}"),
                clue_text: "x".into(),
                enumeration: crate::Enumeration::single(1).unwrap(),
                answer: "x".into(),
                date: None,
            })
            .collect();
        let out = solve_all(&clues, Some(4), |c| SolveOutcome {
            candidates: vec![CandidateAnswer::new(c.clue_id.clone(), 0.0)],
            timed_out: false,
        })
        .unwrap();
        for (i, r) in out.iter().enumerate() {
            assert_eq!(r.clue_id, i.to_string());
            assert_eq!(r.candidates[0].text, i.to_string());
        }
    }
}
