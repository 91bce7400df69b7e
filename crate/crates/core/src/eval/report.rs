use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::EvalResult;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ReportFormat {
    Json,
    Csv,
    Text,
}

impl FromStr for ReportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(ReportFormat::Json),
            "csv" => Ok(ReportFormat::Csv),
            "text" | "txt" => Ok(ReportFormat::Text),
            _ => Err(Error::invalid(format!("unknown report format {s:?}"))),
        }
    }
}

pub fn report(result: &EvalResult, format: ReportFormat) -> Result<String> {
    match format {
        ReportFormat::Json => Ok(serde_json::to_string_pretty(result)? + "\n"),
        ReportFormat::Csv => csv_report(result),
        ReportFormat::Text => Ok(text_report(result)),
    }
}

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map(T::to_string).unwrap_or_default()
}

/// Metric rows first (`metric,value`), then a per-clue table with its own
/// header row.
fn csv_report(r: &EvalResult) -> Result<String> {
    let mut w = csv::WriterBuilder::new().flexible(true).from_writer(Vec::new());
    w.write_record(["metric", "value"])?;
    let m = &r.meta;
    let rows: [(&str, String); 11] = [
        ("solver", opt(&m.solver)),
        ("split", opt(&m.split)),
        ("seed", opt(&m.seed)),
        ("sample_size", m.sample_size.to_string()),
        ("filter", m.filter.clone()),
        ("clues", r.clues.to_string()),
        ("top1_after_filter", r.top1_after_filter.to_string()),
        ("top10_contains_after_filter", r.top10_contains_after_filter.to_string()),
        ("sample_contains_no_filter", r.sample_contains_no_filter.to_string()),
        ("sample_correct_length", r.sample_correct_length.to_string()),
        ("sample_correct_word_count", r.sample_correct_word_count.to_string()),
    ];
    for (k, v) in rows {
        w.write_record([k, v.as_str()])?;
    }
    w.write_record([
        "puzzle_id",
        "clue_id",
        "answer",
        "filtered_rank",
        "sample_contains",
        "sample_outputs",
        "sample_correct_length",
        "sample_correct_word_count",
        "missing",
    ])?;
    for c in &r.records {
        w.write_record([
            c.puzzle_id.clone(),
            c.clue_id.clone(),
            c.answer.clone(),
            opt(&c.filtered_rank),
            c.sample_contains.to_string(),
            c.sample_outputs.to_string(),
            c.sample_correct_length.to_string(),
            c.sample_correct_word_count.to_string(),
            c.missing.to_string(),
        ])?;
    }
    let bytes = w.into_inner().map_err(|e| Error::invalid(format!("csv flush: {e}")))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

fn pct(x: f64) -> String {
    format!("{:.1}", 100.0 * x)
}

/// Two headline columns as in the usual results table, then the sample
/// diagnostics.
fn text_report(r: &EvalResult) -> String {
    let m = &r.meta;
    let mut s = String::new();
    let _ = writeln!(
        s,
        "solver: {}  split: {}  seed: {}  sample size: {}  filter: {}",
        m.solver.as_deref().unwrap_or("-"),
        m.split.as_deref().unwrap_or("-"),
        m.seed.map(|x| x.to_string()).unwrap_or_else(|| "-".into()),
        m.sample_size,
        m.filter
    );
    let _ = writeln!(s, "clues: {}", r.clues);
    let _ = writeln!(s);
    let _ = writeln!(s, "{:<24}{:>14}{:>18}", "", "Top correct", "Top 10 contains");
    let _ = writeln!(
        s,
        "{:<24}{:>14}{:>18}",
        "after length filter",
        pct(r.top1_after_filter),
        pct(r.top10_contains_after_filter)
    );
    let _ = writeln!(s);
    let _ = writeln!(s, "sample of first {} outputs, no filter (%):", m.sample_size);
    let _ = writeln!(s, "  {:<28}{:>8}", "contains answer", pct(r.sample_contains_no_filter));
    let _ = writeln!(s, "  {:<28}{:>8}", "correct length", pct(r.sample_correct_length));
    let _ = writeln!(
        s,
        "  {:<28}{:>8}",
        "correct word count",
        pct(r.sample_correct_word_count)
    );
    let missing = r.missing();
    if !missing.is_empty() {
        let _ = writeln!(s);
        let _ = writeln!(s, "missing candidate lists: {}", missing.len());
        for k in missing {
            let _ = writeln!(s, "  {k}");
        }
    }
    s
}
