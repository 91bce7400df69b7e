use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;
use std::ops::Range;

use serde::{Deserialize, Serialize};

use crate::enumeration::Enumeration;

/// Identifies a clue across files: puzzle id plus direction/number.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ClueKey {
    pub puzzle_id: String,
    pub clue_id: String,
}

impl ClueKey {
    pub fn new(puzzle_id: impl Into<String>, clue_id: impl Into<String>) -> Self {
        ClueKey {
            puzzle_id: puzzle_id.into(),
            clue_id: clue_id.into(),
        }
    }
}

impl fmt::Display for ClueKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.puzzle_id, self.clue_id)
    }
}

/// A cleaned clue. `answer` is normalized and matches `enumeration`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Clue {
    pub puzzle_id: String,
    pub clue_id: String,
    pub clue_text: String,
    pub enumeration: Enumeration,
    pub answer: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub date: Option<String>,
}

impl Clue {
    pub fn key(&self) -> ClueKey {
        ClueKey::new(&self.puzzle_id, &self.clue_id)
    }

    /// Clue text followed by its rendered enumeration, as printed in a puzzle.
    pub fn surface(&self) -> String {
        format!("{} {}", self.clue_text, self.enumeration)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ClueType {
    Anagram,
    Initialism,
    Hidden,
    Reversal,
    Insertion,
    SubstringInitial,
    SubstringMiddle,
    SubstringFinal,
    DoubleDefinition,
    DefinitionOnly,
}

impl ClueType {
    pub const ALL: [ClueType; 10] = [
        ClueType::Anagram,
        ClueType::Initialism,
        ClueType::Hidden,
        ClueType::Reversal,
        ClueType::Insertion,
        ClueType::SubstringInitial,
        ClueType::SubstringMiddle,
        ClueType::SubstringFinal,
        ClueType::DoubleDefinition,
        ClueType::DefinitionOnly,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ClueType::Anagram => "anagram",
            ClueType::Initialism => "initialism",
            ClueType::Hidden => "hidden",
            ClueType::Reversal => "reversal",
            ClueType::Insertion => "insertion",
            ClueType::SubstringInitial => "substring_initial",
            ClueType::SubstringMiddle => "substring_middle",
            ClueType::SubstringFinal => "substring_final",
            ClueType::DoubleDefinition => "double_definition",
            ClueType::DefinitionOnly => "definition_only",
        }
    }

    pub fn from_name(name: &str) -> Option<ClueType> {
        ClueType::ALL.into_iter().find(|t| t.name() == name)
    }
}

impl fmt::Display for ClueType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// How a candidate was reached. Spans are character ranges into the clue
/// text; `inputs` holds the strings the wordplay consumed.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Derivation {
    pub clue_type: ClueType,
    pub definition_span: Range<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub indicator_span: Option<Range<usize>>,
    #[serde(default)]
    pub inputs: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CandidateAnswer {
    pub text: String,
    pub score: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub derivation: Option<Derivation>,
}

impl CandidateAnswer {
    pub fn new(text: impl Into<String>, score: f64) -> Self {
        CandidateAnswer {
            text: text.into(),
            score,
            derivation: None,
        }
    }
}

/// Ranking order: higher score first, then lexicographically by text.
pub fn rank_order(a: &CandidateAnswer, b: &CandidateAnswer) -> Ordering {
    b.score.total_cmp(&a.score).then_with(|| a.text.cmp(&b.text))
}

/// Sorts by [`rank_order`] and keeps the first (best) entry for each text.
pub fn rank_candidates(candidates: &mut Vec<CandidateAnswer>) {
    candidates.sort_by(rank_order);
    let mut seen = HashSet::new();
    candidates.retain(|c| seen.insert(c.text.clone()));
}
