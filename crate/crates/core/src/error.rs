use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed enumeration {text:?}: unexpected {found} at position {position}")]
    Enumeration {
        text: String,
        found: String,
        position: usize,
    },

    #[error("answer {0:?} is empty after normalization")]
    EmptyAnswer(String),

    #[error("{source_name}:{line}: {message}")]
    Load {
        source_name: String,
        line: usize,
        message: String,
    },

    #[error("lexicon has an empty word list")]
    EmptyWordlist,

    #[error("{0}")]
    InvalidInput(String),

    #[error("split needs at least 3 groups, found {0}")]
    TooFewGroups(usize),

    #[error("cannot scramble {0:?}: needs at least two distinct letters")]
    Unscramblable(String),

    /// Per-record problems gathered while reading a file.
    #[error("{source_name}: {} problem(s); first: {}", issues.len(), issues.first().map(String::as_str).unwrap_or(""))]
    Records { source_name: String, issues: Vec<String> },

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }
}
