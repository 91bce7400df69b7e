//! Auxiliary training data built from plain (non-cryptic) crossword clues:
//! definition lookup, descrambling and anagram tasks, each marked with a
//! task label, and a seeded mixer.

mod acw;
mod mix;
mod probe;

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub use acw::{clean_acw, read_acw, AcwCleanReport, AcwPair};
pub use mix::{mix, quotas};
pub use probe::{gen_wordplay_probe, ProbeDataset, ProbeSplit, ProbeVariant};

use crate::enumeration::Enumeration;
use crate::error::{Error, Result};
use crate::lexicon::Lexicon;
use crate::seed::{item_seed, rng};
use crate::text::{letters_only, LetterCounts};
use crate::wordplay::scramble_with;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Task {
    Phrase,
    Descramble,
    DescrambleWord,
    Anagram,
}

impl Task {
    pub const ALL: [Task; 4] = [Task::Phrase, Task::Descramble, Task::DescrambleWord, Task::Anagram];

    /// The label that starts every input of this task.
    pub fn label(self) -> &'static str {
        match self {
            Task::Phrase => "phrase",
            Task::Descramble => "descramble",
            Task::DescrambleWord => "descramble word",
            Task::Anagram => "anagram",
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Task::Phrase => "phrase",
            Task::Descramble => "descramble",
            Task::DescrambleWord => "descramble_word",
            Task::Anagram => "anagram",
        }
    }
}

impl fmt::Display for Task {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Task {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Task::ALL
            .into_iter()
            .find(|t| t.name() == s || t.label() == s)
            .ok_or_else(|| Error::invalid(format!("unknown curriculum task {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurricularExample {
    pub task: Task,
    /// `<label>: <body> (<enumeration>)`.
    pub input: String,
    pub target: String,
}

impl CurricularExample {
    fn new(task: Task, body: &str, enumeration: &Enumeration, target: &str) -> Self {
        CurricularExample {
            task,
            input: format!("{}: {} {}", task.label(), body, enumeration),
            target: target.to_string(),
        }
    }

    /// The seq2seq line: `<input> => <target>`.
    pub fn line(&self) -> String {
        format!("{} => {}", self.input, self.target)
    }
}

/// Where the scrambled letters go relative to the clue.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Placement {
    Prepend,
    Append,
}

fn enumeration_of(pair: &AcwPair) -> Result<Enumeration> {
    Enumeration::of_answer(&pair.answer)
}

pub fn gen_phrase(pair: &AcwPair) -> Result<CurricularExample> {
    let clue = pair.clue.trim();
    if clue.is_empty() {
        return Err(Error::invalid("empty clue"));
    }
    Ok(CurricularExample::new(
        Task::Phrase,
        clue,
        &enumeration_of(pair)?,
        &pair.answer,
    ))
}

/// Descramble with the placement that was drawn.
pub fn gen_descramble_placed(pair: &AcwPair, seed: u64) -> Result<(CurricularExample, Placement)> {
    let clue = pair.clue.trim();
    if clue.is_empty() {
        return Err(Error::invalid("empty clue"));
    }
    let e = enumeration_of(pair)?;
    let mut r = rng(seed);
    let placement = if r.gen_bool(0.5) {
        Placement::Prepend
    } else {
        Placement::Append
    };
    let scrambled = scramble_with(&pair.answer, &mut r)?;
    let body = match placement {
        Placement::Prepend => format!("{scrambled} {clue}"),
        Placement::Append => format!("{clue} {scrambled}"),
    };
    Ok((
        CurricularExample::new(Task::Descramble, &body, &e, &pair.answer),
        placement,
    ))
}

pub fn gen_descramble(pair: &AcwPair, seed: u64) -> Result<CurricularExample> {
    gen_descramble_placed(pair, seed).map(|(ex, _)| ex)
}

pub fn gen_descramble_word(pair: &AcwPair, seed: u64) -> Result<CurricularExample> {
    let e = enumeration_of(pair)?;
    let scrambled = scramble_with(&pair.answer, &mut rng(seed))?;
    Ok(CurricularExample::new(
        Task::DescrambleWord,
        &scrambled,
        &e,
        &pair.answer,
    ))
}

/// Single lexicon words other than the answer with the answer's letters.
pub fn anagram_partners<'l>(answer: &str, lex: &'l Lexicon) -> Vec<&'l str> {
    let letters = letters_only(answer);
    let mut out: Vec<&str> = lex
        .with_letters(&LetterCounts::of(&letters))
        .iter()
        .map(String::as_str)
        .filter(|w| *w != letters)
        .collect();
    out.sort_unstable();
    out
}

/// `anagram: <indicator> <partner> (<enum>)`, or `None` when the answer
/// has no anagram partner in the lexicon (or no indicator is given).
pub fn gen_anagram(pair: &AcwPair, lex: &Lexicon, indicators: &[&str], seed: u64) -> Result<Option<CurricularExample>> {
    let e = enumeration_of(pair)?;
    let partners = anagram_partners(&pair.answer, lex);
    let mut r = rng(seed);
    let (Some(partner), Some(indicator)) = (partners.choose(&mut r), indicators.choose(&mut r)) else {
        return Ok(None);
    };
    let body = format!("{indicator} {partner}");
    Ok(Some(CurricularExample::new(Task::Anagram, &body, &e, &pair.answer)))
}

/// A pair the generator passed over, and why.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Skip {
    pub index: usize,
    pub reason: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Generated {
    pub examples: Vec<CurricularExample>,
    pub skipped: Vec<Skip>,
}

/// Inputs a generator may need beyond the pair itself.
pub struct GenContext<'a> {
    pub lexicon: &'a Lexicon,
    /// Anagram indicator phrases, sorted.
    pub anagram_indicators: Vec<&'a str>,
}

/// Runs one task over every pair. Item `i` uses seed
/// `item_seed(seed, i)`, so results do not depend on thread count.
pub fn generate(task: Task, pairs: &[AcwPair], ctx: &GenContext<'_>, seed: u64) -> Generated {
    let results: Vec<(usize, Result<Option<CurricularExample>>)> = pairs
        .par_iter()
        .enumerate()
        .map(|(i, p)| {
            let s = item_seed(seed, i as u64);
            let out = match task {
                Task::Phrase => gen_phrase(p).map(Some),
                Task::Descramble => gen_descramble(p, s).map(Some),
                Task::DescrambleWord => gen_descramble_word(p, s).map(Some),
                Task::Anagram => gen_anagram(p, ctx.lexicon, &ctx.anagram_indicators, s),
            };
            (i, out)
        })
        .collect();
    let mut g = Generated::default();
    for (index, r) in results {
        match r {
            Ok(Some(ex)) => g.examples.push(ex),
            Ok(None) => g.skipped.push(Skip {
                index,
                reason: "no anagram partner in lexicon".into(),
            }),
            Err(e) => g.skipped.push(Skip {
                index,
                reason: e.to_string(),
            }),
        }
    }
    g
}

/// Written next to generated data: what was asked for and what came out.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CurriculumManifest {
    pub seed: u64,
    pub tasks: Vec<Task>,
    pub weights: Vec<u32>,
    pub generated: Vec<usize>,
    pub emitted: Vec<usize>,
    pub skipped: Vec<usize>,
    pub total: usize,
}

#[cfg(test)]
mod tests;
