use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use serde::{Deserialize, Serialize};

use crate::clue::{Clue, ClueKey};
use crate::error::{Error, Result};
use crate::seed::rng;
use crate::text::letters_only;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SplitPolicy {
    /// Clues shuffled and cut at the fractions.
    Naive,
    /// No answer appears in two subsets.
    Disjoint,
    /// No two-letter answer prefix appears in two subsets.
    #[serde(alias = "word_initial_disjoint")]
    WordInitial,
}

impl SplitPolicy {
    pub fn name(self) -> &'static str {
        match self {
            SplitPolicy::Naive => "naive",
            SplitPolicy::Disjoint => "disjoint",
            SplitPolicy::WordInitial => "word_initial",
        }
    }
}

impl fmt::Display for SplitPolicy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SplitPolicy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "naive" => Ok(SplitPolicy::Naive),
            "disjoint" => Ok(SplitPolicy::Disjoint),
            "word_initial" | "word_initial_disjoint" => Ok(SplitPolicy::WordInitial),
            _ => Err(Error::invalid(format!("unknown split policy {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Subset {
    Train,
    Dev,
    Test,
}

impl Subset {
    pub const ALL: [Subset; 3] = [Subset::Train, Subset::Dev, Subset::Test];

    pub fn name(self) -> &'static str {
        match self {
            Subset::Train => "train",
            Subset::Dev => "dev",
            Subset::Test => "test",
        }
    }
}

impl FromStr for Subset {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Subset::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::invalid(format!("unknown subset {s:?}")))
    }
}

/// Train/dev/test fractions; they must be non-negative and sum to 1.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Fractions(pub [f64; 3]);

impl Default for Fractions {
    fn default() -> Self {
        Fractions([0.6, 0.2, 0.2])
    }
}

impl Fractions {
    pub fn new(train: f64, dev: f64, test: f64) -> Result<Self> {
        let f = [train, dev, test];
        if f.iter().any(|x| !x.is_finite() || *x < 0.0) || (f.iter().sum::<f64>() - 1.0).abs() > 1e-9 {
            return Err(Error::invalid(format!(
                "fractions {f:?} must be non-negative and sum to 1"
            )));
        }
        Ok(Fractions(f))
    }
}

impl FromStr for Fractions {
    type Err = Error;

    /// `"0.6,0.2,0.2"`.
    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<f64> = s
            .split(',')
            .map(|p| p.trim().parse::<f64>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|e| Error::invalid(format!("bad fractions {s:?}: {e}")))?;
        match parts[..] {
            [a, b, c] => Fractions::new(a, b, c),
            _ => Err(Error::invalid(format!("expected three fractions, got {s:?}"))),
        }
    }
}

/// Subset of every clue, in the order of the clues it was built from.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SplitAssignment {
    pub policy: SplitPolicy,
    pub seed: u64,
    pub fractions: Fractions,
    pub entries: Vec<(ClueKey, Subset)>,
}

impl SplitAssignment {
    pub fn lookup(&self) -> BTreeMap<&ClueKey, Subset> {
        self.entries.iter().map(|(k, s)| (k, *s)).collect()
    }

    pub fn count(&self, subset: Subset) -> usize {
        self.entries.iter().filter(|(_, s)| *s == subset).count()
    }

    /// The clues assigned to `subset`, in input order.
    pub fn select<'c>(&self, clues: &'c [Clue], subset: Subset) -> Vec<&'c Clue> {
        let map = self.lookup();
        clues.iter().filter(|c| map.get(&c.key()) == Some(&subset)).collect()
    }
}

/// The grouping key a policy uses for a clue, if it groups at all.
pub fn group_key(policy: SplitPolicy, answer: &str) -> Option<String> {
    match policy {
        SplitPolicy::Naive => None,
        SplitPolicy::Disjoint => Some(answer.to_string()),
        SplitPolicy::WordInitial => Some(letters_only(answer).chars().take(2).collect()),
    }
}

pub fn split(clues: &[Clue], policy: SplitPolicy, seed: u64, fractions: Fractions) -> Result<SplitAssignment> {
    let n = clues.len();
    let mut subsets = vec![Subset::Train; n];
    let mut r = rng(seed);
    match policy {
        SplitPolicy::Naive => {
            let mut order: Vec<usize> = (0..n).collect();
            order.shuffle(&mut r);
            let cut1 = (fractions.0[0] * n as f64).round() as usize;
            let cut2 = ((fractions.0[0] + fractions.0[1]) * n as f64).round().min(n as f64) as usize;
            for (pos, &i) in order.iter().enumerate() {
                subsets[i] = if pos < cut1 {
                    Subset::Train
                } else if pos < cut2 {
                    Subset::Dev
                } else {
                    Subset::Test
                };
            }
        }
        SplitPolicy::Disjoint | SplitPolicy::WordInitial => {
            let mut groups: BTreeMap<String, Vec<usize>> = BTreeMap::new();
            for (i, c) in clues.iter().enumerate() {
                let key = group_key(policy, &c.answer).expect("grouped policy");
                groups.entry(key).or_default().push(i);
            }
            if groups.len() < 3 {
                return Err(Error::TooFewGroups(groups.len()));
            }
            let mut order: Vec<Vec<usize>> = groups.into_values().collect();
            order.shuffle(&mut r);
            let targets = fractions.0.map(|f| f * n as f64);
            let mut counts = [0usize; 3];
            let mut current = 0;
            let g = order.len();
            for (gi, members) in order.into_iter().enumerate() {
                // Move on once the current subset reached its target, or
                // when the remaining groups are just enough to give every
                // later subset one group each.
                while current < 2
                    && counts[current] > 0
                    && (counts[current] as f64 >= targets[current] || g - gi <= 2 - current)
                {
                    current += 1;
                }
                counts[current] += members.len();
                for i in members {
                    subsets[i] = Subset::ALL[current];
                }
            }
        }
    }
    Ok(SplitAssignment {
        policy,
        seed,
        fractions,
        entries: clues.iter().map(|c| c.key()).zip(subsets).collect(),
    })
}
