use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use cryptic_core::corpus::RawClueRecord;
use cryptic_core::synthetic::wordplay_suite;
use cryptic_core::{IndicatorTable, Lexicon};
use serde_json::Value;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_cryptic-bench"));
    c.env_remove("CRYPTIC_BENCH_THREADS");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn ok(out: &Output) {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
}

fn p(dir: &Path, name: &str) -> String {
    dir.join(name).display().to_string()
}

fn manifest(output: &str) -> Value {
    serde_json::from_str(&fs::read_to_string(format!("{output}.manifest.json")).unwrap()).unwrap()
}

/// Raw clue file: the synthetic suite plus a cross-reference and a duplicate.
fn write_raw(dir: &Path) -> String {
    let suite = wordplay_suite(Lexicon::bundled(), IndicatorTable::bundled(), 20, 3);
    let mut lines: Vec<String> = suite
        .iter()
        .map(|c| serde_json::to_string(&RawClueRecord::from(&c.clue)).unwrap())
        .collect();
    lines.push(r#"{"puzzle_id":"x","clue_id":"9d","clue":"See 4 across (5)","answer":"petal"}"#.into());
    lines.push(lines[0].clone());
    let path = p(dir, "raw.jsonl");
    fs::write(&path, lines.join("\n") + "\n").unwrap();
    path
}

#[test]
fn full_pipeline() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let raw = write_raw(d);
    let (clues, split, cands, report) = (
        p(d, "clues.jsonl"),
        p(d, "split.jsonl"),
        p(d, "cands.jsonl"),
        p(d, "report.txt"),
    );

    ok(&run(&[
        "clean",
        "--input",
        &raw,
        "--output",
        &clues,
        "--report",
        &p(d, "clean.json"),
    ]));
    assert_eq!(fs::read_to_string(&clues).unwrap().lines().count(), 100);
    let m = manifest(&clues);
    assert_eq!(m["command"], "clean");
    assert_eq!(m["summary"]["cross_reference"], 1);
    assert_eq!(m["summary"]["exact_duplicate"], 1);
    assert_eq!(m["inputs"][0]["sha256"].as_str().unwrap().len(), 64);

    ok(&run(&[
        "split",
        "--input",
        &clues,
        "--output",
        &split,
        "--policy",
        "disjoint",
        "--seed",
        "4",
        "--audit",
        &p(d, "audit.json"),
    ]));
    let audit: Value = serde_json::from_str(&fs::read_to_string(p(d, "audit.json")).unwrap()).unwrap();
    assert_eq!(audit["overlap"]["subsets"]["test"]["answer_in_train"], 0.0);
    let first = fs::read(&split).unwrap();
    ok(&run(&[
        "split", "--input", &clues, "--output", &split, "--policy", "disjoint", "--seed", "4",
    ]));
    assert_eq!(first, fs::read(&split).unwrap());

    ok(&run(&[
        "--threads",
        "2",
        "solve",
        "--solver",
        "rule-based",
        "--input",
        &clues,
        "--split",
        &split,
        "--output",
        &cands,
    ]));
    let m = manifest(&cands);
    assert_eq!(m["threads"], 2);
    assert_eq!(m["config"]["solver_config"]["max_candidates"], 100);

    ok(&run(&[
        "eval",
        "--gold",
        &clues,
        "--candidates",
        &cands,
        "--split",
        &split,
        "--output",
        &report,
        "--segment-by-train",
    ]));
    let text = fs::read_to_string(&report).unwrap();
    assert!(text.contains("Top 10 contains"), "{text}");
    assert!(text.contains("# answers not seen in train"));

    let out = run(&[
        "eval",
        "--gold",
        &clues,
        "--candidates",
        &cands,
        "--split",
        &split,
        "--format",
        "json",
    ]);
    ok(&out);
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["top10_contains_after_filter"], 1.0);

    let knn = p(d, "knn.jsonl");
    ok(&run(&[
        "solve", "--solver", "knn", "--input", &clues, "--split", &split, "--subset", "train", "--output", &knn,
    ]));
    let out = run(&[
        "eval",
        "--gold",
        &clues,
        "--candidates",
        &knn,
        "--split",
        &split,
        "--subset",
        "train",
        "--format",
        "csv",
    ]);
    ok(&out);
    assert!(String::from_utf8_lossy(&out.stdout).contains("top1_after_filter,1"));

    let rd = p(d, "rd.jsonl");
    ok(&run(&[
        "solve",
        "--solver",
        "reverse-dictionary",
        "--input",
        &clues,
        "--output",
        &rd,
        "--max-candidates",
        "3",
    ]));
    for line in fs::read_to_string(&rd).unwrap().lines() {
        let v: Value = serde_json::from_str(line).unwrap();
        assert!(v["candidates"].as_array().unwrap().len() <= 3);
    }

    let seq = p(d, "seq.txt");
    ok(&run(&[
        "export-seq2seq",
        "--input",
        &clues,
        "--split",
        &split,
        "--subset",
        "train",
        "--with-lengths",
        "--output",
        &seq,
    ]));
    let body = fs::read_to_string(&seq).unwrap();
    assert!(body.lines().count() > 0 && body.lines().all(|l| l.contains(") => ")));
}

#[test]
fn eval_missing_candidates_exits_1() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let raw = write_raw(d);
    let clues = p(d, "clues.jsonl");
    ok(&run(&["clean", "--input", &raw, "--output", &clues]));
    let cands = p(d, "c.jsonl");
    fs::write(
        &cands,
        r#"{"puzzle_id":"suite-anagram","clue_id":"1a","candidates":[]}"#,
    )
    .unwrap();
    let out = run(&["eval", "--gold", &clues, "--candidates", &cands]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("no candidate list"));
    ok(&run(&[
        "eval",
        "--gold",
        &clues,
        "--candidates",
        &cands,
        "--allow-missing",
    ]));

    fs::write(&cands, r#"{"puzzle_id":"nowhere","clue_id":"1a","candidates":[]}"#).unwrap();
    let out = run(&["eval", "--gold", &clues, "--candidates", &cands, "--allow-missing"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn usage_and_data_errors() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    assert_eq!(run(&["split", "--bogus"]).status.code(), Some(2));
    assert_eq!(
        run(&["split", "--input", "a", "--output", "b", "--policy", "sideways"])
            .status
            .code(),
        Some(2)
    );
    let out = run(&["clean", "--input", &p(d, "absent.jsonl"), "--output", &p(d, "o.jsonl")]);
    assert_eq!(out.status.code(), Some(1));

    let cfg = p(d, "bad.toml");
    fs::write(&cfg, "threads = 2\nunknown_key = 1\n").unwrap();
    let raw = write_raw(d);
    let out = run(&["--config", &cfg, "clean", "--input", &raw, "--output", &p(d, "o.jsonl")]);
    assert_eq!(out.status.code(), Some(2));

    fs::write(p(d, "broken.jsonl"), "{\"puzzle_id\": 3\nnot json\n").unwrap();
    let out = run(&["split", "--input", &p(d, "broken.jsonl"), "--output", &p(d, "s.jsonl")]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("2 problem(s)"));
}

#[test]
fn config_and_env_precedence() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let raw = write_raw(d);
    let clues = p(d, "clues.jsonl");
    ok(&run(&["clean", "--input", &raw, "--output", &clues]));
    let cfg = p(d, "run.toml");
    fs::write(&cfg, "threads = 3\nseed = 17\n[split]\npolicy = \"word_initial\"\n").unwrap();
    let split = p(d, "s.jsonl");

    ok(&run(&[
        "--config", &cfg, "split", "--input", &clues, "--output", &split,
    ]));
    let m = manifest(&split);
    assert_eq!(
        (m["threads"].clone(), m["seed"].clone()),
        (Value::from(3), Value::from(17))
    );
    assert_eq!(m["config"]["policy"], "word_initial");

    let out = bin()
        .env("CRYPTIC_BENCH_THREADS", "5")
        .args([
            "--config", &cfg, "split", "--input", &clues, "--output", &split, "--policy", "naive", "--seed", "1",
        ])
        .output()
        .unwrap();
    ok(&out);
    let m = manifest(&split);
    assert_eq!(m["threads"], 5);
    assert_eq!(m["config"]["policy"], "naive");
    assert_eq!(m["seed"], 1);

    let out = bin()
        .env("CRYPTIC_BENCH_THREADS", "5")
        .args(["--threads", "1", "split", "--input", &clues, "--output", &split])
        .output()
        .unwrap();
    ok(&out);
    assert_eq!(manifest(&split)["threads"], 1);

    // same effective config, same hash
    let h1 = manifest(&split)["config_sha256"].clone();
    ok(&run(&[
        "split", "--input", &clues, "--output", &split, "--seed", "0", "--policy", "naive",
    ]));
    assert_eq!(manifest(&split)["config_sha256"], h1);
}

#[test]
fn curriculum_mix_counts() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let acw = p(d, "acw.tsv");
    let mut rows = String::new();
    for (clue, answer) in [
        ("flower part", "petal"),
        ("halt", "stop"),
        ("muppet", "bert"),
        ("hearing organ", "ear"),
    ] {
        for i in 0..20 {
            rows.push_str(&format!("{clue} {i}\t{answer}\n"));
        }
    }
    rows.push_str("___ of the Apes\tplanet\nno tab here\n");
    fs::write(&acw, rows).unwrap();
    let out_path: PathBuf = d.join("mix.txt");
    let out = out_path.display().to_string();
    ok(&run(&[
        "gen-curriculum",
        "--input",
        &acw,
        "--output",
        &out,
        "--tasks",
        "phrase,descramble",
        "--weights",
        "7,6",
        "--total",
        "65",
        "--seed",
        "2",
    ]));
    let body = fs::read_to_string(&out_path).unwrap();
    assert_eq!(body.lines().filter(|l| l.starts_with("phrase: ")).count(), 35);
    assert_eq!(body.lines().filter(|l| l.starts_with("descramble: ")).count(), 30);
    let m = manifest(&out);
    assert_eq!(m["summary"]["acw_clean"]["fill_in_blank"], 1);
    assert_eq!(m["summary"]["unreadable_lines"], 1);

    let again = d.join("again.txt");
    ok(&run(&[
        "gen-curriculum",
        "--input",
        &acw,
        "--output",
        &again.display().to_string(),
        "--tasks",
        "phrase,descramble",
        "--weights",
        "7,6",
        "--total",
        "65",
        "--seed",
        "2",
    ]));
    assert_eq!(body, fs::read_to_string(&again).unwrap());

    let out = run(&[
        "gen-curriculum",
        "--input",
        &acw,
        "--output",
        &p(d, "x.txt"),
        "--tasks",
        "phrase",
        "--weights",
        "1,2",
    ]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&[
        "gen-curriculum",
        "--input",
        &acw,
        "--output",
        &p(d, "x.txt"),
        "--tasks",
        "phrase",
        "--total",
        "1000",
    ]);
    assert_eq!(out.status.code(), Some(1));
}
