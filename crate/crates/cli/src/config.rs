//! Optional TOML run configuration. Command-line flags win over values
//! here, which win over built-in defaults.

use std::path::{Path, PathBuf};

use anyhow::Context;
use serde::{Deserialize, Serialize};

use cryptic_core::corpus::{Fractions, SplitPolicy};
use cryptic_core::curriculum::Task;
use cryptic_core::solvers::SolverConfig;

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Config {
    pub threads: Option<usize>,
    pub seed: Option<u64>,
    pub lexicon: LexiconPaths,
    pub split: SplitSection,
    pub solver: SolverConfig,
    pub knn: KnnSection,
    pub eval: EvalSection,
    pub curriculum: CurriculumSection,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct LexiconPaths {
    pub thesaurus: Option<PathBuf>,
    pub wordlist: Option<PathBuf>,
    pub indicators: Option<PathBuf>,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SplitSection {
    pub policy: Option<SplitPolicy>,
    pub fractions: Option<Fractions>,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct KnnSection {
    pub k: Option<usize>,
    pub include_lengths: Option<bool>,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct EvalSection {
    pub sample_size: Option<usize>,
    pub format: Option<String>,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct CurriculumSection {
    pub tasks: Option<Vec<Task>>,
    pub weights: Option<Vec<u32>>,
    pub total: Option<usize>,
    pub with_replacement: Option<bool>,
}

impl Config {
    pub fn load(path: &Path) -> anyhow::Result<Config> {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        let cfg: Config = toml::from_str(&text).with_context(|| format!("parsing {}", path.display()))?;
        cfg.solver
            .validate()
            .with_context(|| format!("{}: [solver]", path.display()))?;
        Ok(cfg)
    }
}
