mod commands;
mod config;
mod manifest;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use cryptic_core::corpus::{Fractions, SplitPolicy, Subset};

/// Cryptic crossword benchmark pipeline: clean, split, solve, evaluate and
/// build auxiliary training data.
#[derive(Debug, Parser)]
#[command(name = "cryptic-bench", version)]
pub struct Cli {
    /// TOML config; flags override its values.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,

    /// Worker threads (default: all cores).
    #[arg(long, global = true, env = "CRYPTIC_BENCH_THREADS")]
    pub threads: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Normalize raw clue records and drop unusable ones.
    Clean(CleanArgs),
    /// Assign clues to train/dev/test.
    Split(SplitArgs),
    /// Produce ranked candidate lists.
    Solve(SolveArgs),
    /// Score candidate lists against gold answers.
    Eval(EvalArgs),
    /// Generate and mix auxiliary tasks from plain clue/answer pairs.
    GenCurriculum(CurriculumArgs),
    /// Write `clue (enum) => answer` lines for external models.
    ExportSeq2seq(ExportArgs),
}

#[derive(Debug, Args)]
pub struct CleanArgs {
    /// Raw clues, one JSON object per line.
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long)]
    pub output: PathBuf,
    /// Also write the cleaning report here.
    #[arg(long)]
    pub report: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SplitArgs {
    /// Cleaned clues (JSONL).
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long)]
    pub output: PathBuf,
    /// naive, disjoint or word_initial.
    #[arg(long)]
    pub policy: Option<SplitPolicy>,
    #[arg(long)]
    pub seed: Option<u64>,
    /// Train,dev,test fractions, e.g. 0.6,0.2,0.2.
    #[arg(long)]
    pub fractions: Option<Fractions>,
    /// Write answer statistics and the train-overlap audit here.
    #[arg(long)]
    pub audit: Option<PathBuf>,
}

/// Restricts a clue file to one subset of a split.
#[derive(Debug, Clone, Args)]
pub struct SubsetArgs {
    #[arg(long)]
    pub split: Option<PathBuf>,
    /// Subset to use; defaults to test when a split is given.
    #[arg(long, requires = "split")]
    pub subset: Option<Subset>,
}

#[derive(Debug, Clone, Args)]
pub struct LexiconArgs {
    /// Thesaurus TSV (`from<TAB>relation<TAB>to`); needs --wordlist.
    #[arg(long, requires = "wordlist")]
    pub thesaurus: Option<PathBuf>,
    #[arg(long, requires = "thesaurus")]
    pub wordlist: Option<PathBuf>,
    /// Indicator TSV (`phrase<TAB>type,type`).
    #[arg(long)]
    pub indicators: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SolverKind {
    RuleBased,
    ReverseDictionary,
    Knn,
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long)]
    pub output: PathBuf,
    #[arg(long, value_enum)]
    pub solver: SolverKind,
    #[command(flatten)]
    pub subset: SubsetArgs,
    #[command(flatten)]
    pub lexicon: LexiconArgs,
    #[arg(long)]
    pub max_candidates: Option<usize>,
    /// Per-clue time budget for the rule-based solver.
    #[arg(long)]
    pub timeout_secs: Option<f64>,
    /// Neighbours returned by the knn solver.
    #[arg(long)]
    pub k: Option<usize>,
    /// Add the enumeration to knn features.
    #[arg(long)]
    pub include_lengths: bool,
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    /// Gold clues (JSONL).
    #[arg(long)]
    pub gold: PathBuf,
    /// Candidate lists (JSONL).
    #[arg(long)]
    pub candidates: PathBuf,
    #[command(flatten)]
    pub subset: SubsetArgs,
    #[arg(long)]
    pub sample_size: Option<usize>,
    /// json, csv or text.
    #[arg(long)]
    pub format: Option<String>,
    /// Write the report here instead of stdout.
    #[arg(long)]
    pub output: Option<PathBuf>,
    /// Also report clues whose answer is / is not a train answer (needs --split).
    #[arg(long, requires = "split")]
    pub segment_by_train: bool,
    /// With --segment-by-train, count plural variants as seen.
    #[arg(long)]
    pub plural_equiv: bool,
    /// Exit 0 even when some clues have no candidate list.
    #[arg(long)]
    pub allow_missing: bool,
}

#[derive(Debug, Args)]
pub struct CurriculumArgs {
    /// Plain clues as `clue<TAB>answer` lines.
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long)]
    pub output: PathBuf,
    /// Comma-separated: phrase, descramble, descramble_word, anagram.
    #[arg(long, value_delimiter = ',')]
    pub tasks: Option<Vec<cryptic_core::curriculum::Task>>,
    /// One positive weight per task, comma-separated.
    #[arg(long, value_delimiter = ',')]
    pub weights: Option<Vec<u32>>,
    /// Examples in the mix (default: as many as the weights allow).
    #[arg(long)]
    pub total: Option<usize>,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long)]
    pub with_replacement: bool,
    /// Write JSON objects instead of `input => target` lines.
    #[arg(long)]
    pub jsonl: bool,
    #[command(flatten)]
    pub lexicon: LexiconArgs,
}

#[derive(Debug, Args)]
pub struct ExportArgs {
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long)]
    pub output: PathBuf,
    #[command(flatten)]
    pub subset: SubsetArgs,
    /// Append the enumeration to each clue.
    #[arg(long)]
    pub with_lengths: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            if e.downcast_ref::<commands::UsageError>().is_some() {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}
