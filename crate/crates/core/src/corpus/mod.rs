//! Raw clue ingestion, cleaning, splitting and leakage audits.
//!
//! Files are JSON lines. A cleaned clue file holds one [`Clue`] per line;
//! a split file holds `{"puzzle_id", "clue_id", "subset"}` per line, in the
//! order of the clue file it was built from.

mod clean;
mod split;
mod stats;

use std::io::{BufRead, Write};

use serde::{Deserialize, Serialize};

pub use clean::{clean, clean_jsonl, is_cross_reference, split_enumeration, CleanReport, RawClueRecord, RemovalReason};
pub use split::{group_key, split, Fractions, SplitAssignment, SplitPolicy, Subset};
pub use stats::{answer_stats, audit_overlap, plural_class, train_answers, AnswerStats, OverlapReport, SubsetOverlap};

use crate::clue::{Clue, ClueKey};
use crate::error::{Error, Result};

fn write_line<W: Write, T: Serialize>(w: &mut W, value: &T) -> Result<()> {
    serde_json::to_writer(&mut *w, value)?;
    w.write_all(b"\n").map_err(|e| Error::io("<output>", e))
}

fn read_lines<R: BufRead, T: for<'de> Deserialize<'de>>(r: R, source_name: &str) -> Result<Vec<T>> {
    let mut out = Vec::new();
    let mut issues = Vec::new();
    for (i, line) in r.lines().enumerate() {
        let line = line.map_err(|e| Error::io(source_name, e))?;
        if line.trim().is_empty() {
            continue;
        }
        match serde_json::from_str(&line) {
            Ok(v) => out.push(v),
            Err(e) => issues.push(format!("line {}: {e}", i + 1)),
        }
    }
    if issues.is_empty() {
        Ok(out)
    } else {
        Err(Error::Records {
            source_name: source_name.to_string(),
            issues,
        })
    }
}

pub fn write_clues<W: Write>(mut w: W, clues: &[Clue]) -> Result<()> {
    clues.iter().try_for_each(|c| write_line(&mut w, c))
}

pub fn read_clues<R: BufRead>(r: R, source_name: &str) -> Result<Vec<Clue>> {
    read_lines(r, source_name)
}

#[derive(Serialize, Deserialize)]
struct SplitLine {
    puzzle_id: String,
    clue_id: String,
    subset: Subset,
}

pub fn write_split<W: Write>(mut w: W, split: &SplitAssignment) -> Result<()> {
    for (k, s) in &split.entries {
        write_line(
            &mut w,
            &SplitLine {
                puzzle_id: k.puzzle_id.clone(),
                clue_id: k.clue_id.clone(),
                subset: *s,
            },
        )?;
    }
    Ok(())
}

/// Reads a split file back as (clue, subset) pairs in file order.
pub fn read_split<R: BufRead>(r: R, source_name: &str) -> Result<Vec<(ClueKey, Subset)>> {
    let lines: Vec<SplitLine> = read_lines(r, source_name)?;
    Ok(lines
        .into_iter()
        .map(|l| (ClueKey::new(l.puzzle_id, l.clue_id), l.subset))
        .collect())
}
