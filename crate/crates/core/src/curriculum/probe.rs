use std::collections::BTreeMap;
use std::str::FromStr;

use rand::seq::SliceRandom;
use serde::{Deserialize, Serialize};

use super::{AcwPair, Skip};
use crate::error::{Error, Result};
use crate::lexicon::Lexicon;
use crate::seed::{item_seed, rng};
use crate::wordplay::scramble;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ProbeVariant {
    /// `etalp => petal`
    ScrambleOnly,
    /// `etalp | flower part => petal`
    ScrambleWithPhrase,
    /// `petal => petal`
    CopyOnly,
    /// `petal | flower part => petal`
    CopyWithPhrase,
}

impl FromStr for ProbeVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "scramble_only" => Ok(ProbeVariant::ScrambleOnly),
            "scramble_with_phrase" => Ok(ProbeVariant::ScrambleWithPhrase),
            "copy_only" => Ok(ProbeVariant::CopyOnly),
            "copy_with_phrase" => Ok(ProbeVariant::CopyWithPhrase),
            _ => Err(Error::invalid(format!("unknown probe variant {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ProbeSplit {
    Random,
    AnswerDisjoint,
}

impl FromStr for ProbeSplit {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "random" | "naive" => Ok(ProbeSplit::Random),
            "answer_disjoint" | "disjoint" => Ok(ProbeSplit::AnswerDisjoint),
            _ => Err(Error::invalid(format!("unknown probe split {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProbeDataset {
    pub train: Vec<String>,
    pub test: Vec<String>,
    pub skipped: Vec<Skip>,
}

fn probe_line(pair: &AcwPair, variant: ProbeVariant, seed: u64) -> Result<String> {
    let source = match variant {
        ProbeVariant::ScrambleOnly | ProbeVariant::ScrambleWithPhrase => scramble(&pair.answer, seed)?,
        ProbeVariant::CopyOnly | ProbeVariant::CopyWithPhrase => pair.answer.clone(),
    };
    Ok(match variant {
        ProbeVariant::ScrambleOnly | ProbeVariant::CopyOnly => format!("{source} => {}", pair.answer),
        _ => format!("{source} | {} => {}", pair.clue, pair.answer),
    })
}

/// Descrambling probe datasets over single-word answers (and, when a
/// lexicon is given, only answers it contains), split into train and test
/// either at random or keeping each answer on one side.
pub fn gen_wordplay_probe(
    pairs: &[AcwPair],
    variant: ProbeVariant,
    split: ProbeSplit,
    seed: u64,
    test_fraction: f64,
    lexicon: Option<&Lexicon>,
) -> Result<ProbeDataset> {
    if !(0.0..=1.0).contains(&test_fraction) {
        return Err(Error::invalid("test fraction must lie in [0, 1]"));
    }
    let mut ds = ProbeDataset::default();
    let mut lines: Vec<(usize, String)> = Vec::new();
    for (i, p) in pairs.iter().enumerate() {
        if p.answer.contains(' ') {
            ds.skipped.push(Skip {
                index: i,
                reason: "multiword answer".into(),
            });
            continue;
        }
        if lexicon.is_some_and(|l| !l.contains(&p.answer)) {
            ds.skipped.push(Skip {
                index: i,
                reason: "answer not in lexicon".into(),
            });
            continue;
        }
        match probe_line(p, variant, item_seed(seed, i as u64)) {
            Ok(l) => lines.push((i, l)),
            Err(e) => ds.skipped.push(Skip {
                index: i,
                reason: e.to_string(),
            }),
        }
    }
    let mut r = rng(seed);
    // Units are single lines (random) or all lines of one answer (disjoint).
    let mut units: Vec<Vec<String>> = match split {
        ProbeSplit::Random => lines.into_iter().map(|(_, l)| vec![l]).collect(),
        ProbeSplit::AnswerDisjoint => {
            let mut by_answer: BTreeMap<&str, Vec<String>> = BTreeMap::new();
            for (i, l) in lines {
                by_answer.entry(pairs[i].answer.as_str()).or_default().push(l);
            }
            by_answer.into_values().collect()
        }
    };
    units.shuffle(&mut r);
    let total: usize = units.iter().map(Vec::len).sum();
    let test_target = (test_fraction * total as f64).round() as usize;
    for u in units {
        if ds.test.len() < test_target {
            ds.test.extend(u);
        } else {
            ds.train.extend(u);
        }
    }
    Ok(ds)
}
