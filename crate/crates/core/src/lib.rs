//! Cryptic crossword solving and benchmarking toolkit.

pub mod clue;
pub mod corpus;
pub mod curriculum;
pub mod enumeration;
pub mod error;
pub mod eval;
pub mod lexicon;
pub mod seed;
pub mod solvers;
pub mod synthetic;
pub mod text;
pub mod wordplay;

pub use clue::{rank_candidates, CandidateAnswer, Clue, ClueKey, ClueType, Derivation};
pub use enumeration::{matches_enumeration, Enumeration, Separator};
pub use error::{Error, Result};
pub use lexicon::{char_overlap_score, IndicatorTable, Lexicon, LookupDepth};
pub use text::normalize_answer;
