use std::collections::{BTreeMap, BTreeSet};
use std::path::Path;
use std::sync::OnceLock;

use crate::clue::ClueType;
use crate::error::{Error, Result};
use crate::text::tokenize;

const BUNDLED_INDICATORS: &str = include_str!("../../data/indicators.tsv");

/// Indicator phrases (normalized, possibly multiword) mapped to the
/// wordplay types they signal. Loaded from `phrase<TAB>type[,type...]`.
#[derive(Debug, Clone, Default)]
pub struct IndicatorTable {
    entries: BTreeMap<String, BTreeSet<ClueType>>,
    max_tokens: usize,
}

impl IndicatorTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, phrase: &str, types: impl IntoIterator<Item = ClueType>) -> Result<()> {
        let key = normalize_phrase(phrase);
        if key.is_empty() {
            return Err(Error::invalid(format!("empty indicator phrase {phrase:?}")));
        }
        self.max_tokens = self.max_tokens.max(key.split(' ').count());
        self.entries.entry(key).or_default().extend(types);
        Ok(())
    }

    pub fn parse(text: &str, source_name: &str) -> Result<Self> {
        let mut table = IndicatorTable::new();
        for (idx, line) in text.lines().enumerate() {
            if line.trim().is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |message: String| Error::Load {
                source_name: source_name.to_string(),
                line: idx + 1,
                message,
            };
            let (phrase, tags) = line
                .split_once('\t')
                .ok_or_else(|| err("expected phrase<TAB>types".to_string()))?;
            let mut types = Vec::new();
            for tag in tags.split(',').map(str::trim).filter(|t| !t.is_empty()) {
                types.push(ClueType::from_name(tag).ok_or_else(|| err(format!("unknown clue type {tag:?}")))?);
            }
            if types.is_empty() {
                return Err(err("no clue types given".to_string()));
            }
            table.insert(phrase, types).map_err(|e| err(e.to_string()))?;
        }
        Ok(table)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let p = path.as_ref();
        let text = std::fs::read_to_string(p).map_err(|e| Error::io(p, e))?;
        Self::parse(&text, &p.display().to_string())
    }

    /// The curated seed list shipped with the crate.
    pub fn bundled() -> &'static IndicatorTable {
        static BUNDLED: OnceLock<IndicatorTable> = OnceLock::new();
        BUNDLED.get_or_init(|| {
            IndicatorTable::parse(BUNDLED_INDICATORS, "indicators.tsv").expect("bundled indicator table is well formed")
        })
    }

    pub fn get(&self, phrase: &str) -> Option<&BTreeSet<ClueType>> {
        self.entries.get(phrase)
    }

    /// Longest indicator, in tokens.
    pub fn max_tokens(&self) -> usize {
        self.max_tokens
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Phrases tagged with `clue_type`, in sorted order.
    pub fn phrases_for(&self, clue_type: ClueType) -> Vec<&str> {
        self.entries
            .iter()
            .filter(|(_, t)| t.contains(&clue_type))
            .map(|(p, _)| p.as_str())
            .collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &BTreeSet<ClueType>)> {
        self.entries.iter().map(|(p, t)| (p.as_str(), t))
    }
}

fn normalize_phrase(phrase: &str) -> String {
    tokenize(phrase)
        .into_iter()
        .map(|t| t.text)
        .collect::<Vec<_>>()
        .join(" ")
}
