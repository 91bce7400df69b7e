use std::collections::BTreeMap;
use std::io::{BufRead, Write};

use serde::{Deserialize, Serialize};

use crate::clue::{CandidateAnswer, ClueKey};
use crate::error::{Error, Result};

/// One line of a candidate JSONL file.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CandidateRecord {
    pub puzzle_id: String,
    pub clue_id: String,
    pub candidates: Vec<CandidateAnswer>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub timed_out: bool,
}

impl CandidateRecord {
    pub fn key(&self) -> ClueKey {
        ClueKey::new(&self.puzzle_id, &self.clue_id)
    }
}

pub fn write_candidates<W: Write>(mut w: W, records: &[CandidateRecord]) -> Result<()> {
    for r in records {
        serde_json::to_writer(&mut w, r)?;
        w.write_all(b"\n").map_err(|e| Error::io("<candidates>", e))?;
    }
    Ok(())
}

fn parse_lines<R: BufRead>(r: R, source_name: &str) -> Result<(Vec<CandidateRecord>, Vec<String>)> {
    let mut out = Vec::new();
    let mut issues = Vec::new();
    for (i, line) in r.lines().enumerate() {
        let line = line.map_err(|e| Error::io(source_name, e))?;
        if line.trim().is_empty() {
            continue;
        }
        match serde_json::from_str::<CandidateRecord>(&line) {
            Ok(rec) => out.push(rec),
            Err(e) => issues.push(format!("line {}: {e}", i + 1)),
        }
    }
    Ok((out, issues))
}

fn itemized<T>(value: T, source_name: &str, issues: Vec<String>) -> Result<T> {
    if issues.is_empty() {
        Ok(value)
    } else {
        Err(Error::Records {
            source_name: source_name.to_string(),
            issues,
        })
    }
}

/// Reads every record, collecting per-line problems instead of stopping at
/// the first one.
pub fn read_candidates<R: BufRead>(r: R, source_name: &str) -> Result<Vec<CandidateRecord>> {
    let (records, issues) = parse_lines(r, source_name)?;
    itemized(records, source_name, issues)
}

/// Candidate lists keyed by clue, in file order within each list.
/// Duplicate keys and malformed lines are reported together.
pub fn import_candidates<R: BufRead>(r: R, source_name: &str) -> Result<BTreeMap<ClueKey, Vec<CandidateAnswer>>> {
    let (records, mut issues) = parse_lines(r, source_name)?;
    let mut map = BTreeMap::new();
    for rec in records {
        let key = rec.key();
        if map.contains_key(&key) {
            issues.push(format!("duplicate clue {key}"));
            continue;
        }
        map.insert(key, rec.candidates);
    }
    itemized(map, source_name, issues)
}
