use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::fs::File;
use std::io::{BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use anyhow::{bail, Context, Result};
use serde_json::json;

use cryptic_core::corpus::{
    answer_stats, audit_overlap, clean_jsonl, read_clues, read_split, split, write_clues, write_split, Fractions,
    SplitAssignment, SplitPolicy, Subset,
};
use cryptic_core::curriculum::{clean_acw, generate, mix, read_acw, CurriculumManifest, GenContext, Task};
use cryptic_core::eval::{evaluate, report, segment_by_train_overlap, EvalMeta, ReportFormat};
use cryptic_core::solvers::{
    export_seq2seq, import_candidates, knn_fit, knn_predict, solve_all, solve_reverse_dictionary, solve_rule_based,
    write_candidates, SolveOutcome,
};
use cryptic_core::{Clue, ClueKey, ClueType, IndicatorTable, Lexicon};

use crate::config::Config;
use crate::manifest::{digest_file, hex_sha256, RunManifest};
use crate::{
    CleanArgs, Cli, Command, CurriculumArgs, EvalArgs, ExportArgs, LexiconArgs, SolveArgs, SolverKind, SplitArgs,
    SubsetArgs,
};

/// Bad flags or configuration, as opposed to bad data. Exits with 2.
#[derive(Debug)]
pub struct UsageError(pub String);

impl fmt::Display for UsageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

fn usage(msg: impl Into<String>) -> anyhow::Error {
    UsageError(msg.into()).into()
}

struct Run {
    cfg: Config,
    threads: Option<usize>,
    command: &'static str,
    started: Instant,
}

impl Run {
    fn finish(
        &self,
        effective: serde_json::Value,
        seed: Option<u64>,
        inputs: &[&Path],
        output: &Path,
        summary: serde_json::Value,
    ) -> Result<()> {
        let canonical = serde_json::to_vec(&effective)?;
        let m = RunManifest {
            tool: "cryptic-bench".into(),
            version: env!("CARGO_PKG_VERSION").into(),
            command: self.command.into(),
            argv: std::env::args().collect(),
            config_sha256: hex_sha256(&canonical),
            config: effective,
            seed,
            threads: self.threads,
            inputs: inputs.iter().map(|p| digest_file(p)).collect::<Result<_>>()?,
            outputs: vec![output.to_path_buf()],
            summary,
            elapsed_secs: self.started.elapsed().as_secs_f64(),
        };
        m.write(output)
    }
}

pub fn run(cli: Cli) -> Result<()> {
    let cfg = match &cli.config {
        Some(p) => Config::load(p).map_err(|e| usage(format!("{e:#}")))?,
        None => Config::default(),
    };
    // flag (or CRYPTIC_BENCH_THREADS) > config > all cores
    let threads = cli.threads.or(cfg.threads);
    if threads == Some(0) {
        return Err(usage("--threads must be at least 1"));
    }
    if let Some(n) = threads {
        // Global pool for the parallel generators; ignore a pool already set.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    let command = match &cli.command {
        Command::Clean(_) => "clean",
        Command::Split(_) => "split",
        Command::Solve(_) => "solve",
        Command::Eval(_) => "eval",
        Command::GenCurriculum(_) => "gen-curriculum",
        Command::ExportSeq2seq(_) => "export-seq2seq",
    };
    let run = Run {
        cfg,
        threads,
        command,
        started: Instant::now(),
    };
    match cli.command {
        Command::Clean(a) => clean_cmd(&run, a),
        Command::Split(a) => split_cmd(&run, a),
        Command::Solve(a) => solve_cmd(&run, a),
        Command::Eval(a) => eval_cmd(&run, a),
        Command::GenCurriculum(a) => curriculum_cmd(&run, a),
        Command::ExportSeq2seq(a) => export_cmd(&run, a),
    }
}

fn open(path: &Path) -> Result<BufReader<File>> {
    Ok(BufReader::new(
        File::open(path).with_context(|| format!("opening {}", path.display()))?,
    ))
}

fn create(path: &Path) -> Result<BufWriter<File>> {
    Ok(BufWriter::new(
        File::create(path).with_context(|| format!("creating {}", path.display()))?,
    ))
}

fn name(path: &Path) -> String {
    path.display().to_string()
}

fn load_clues(path: &Path) -> Result<Vec<Clue>> {
    Ok(read_clues(open(path)?, &name(path))?)
}

fn load_split(path: &Path) -> Result<BTreeMap<ClueKey, Subset>> {
    Ok(read_split(open(path)?, &name(path))?.into_iter().collect())
}

/// The clues of one subset (all clues without a split). Every clue must
/// appear in the split.
fn select(clues: &[Clue], split: &BTreeMap<ClueKey, Subset>, subset: Subset) -> Result<Vec<Clue>> {
    let unassigned: Vec<String> = clues
        .iter()
        .filter(|c| !split.contains_key(&c.key()))
        .map(|c| c.key().to_string())
        .collect();
    if let Some(first) = unassigned.first() {
        bail!(
            "{} clue(s) missing from the split file, first {first}",
            unassigned.len()
        );
    }
    Ok(clues.iter().filter(|c| split[&c.key()] == subset).cloned().collect())
}

fn subset_of(clues: &[Clue], a: &SubsetArgs) -> Result<(Vec<Clue>, Option<Subset>)> {
    match &a.split {
        None => Ok((clues.to_vec(), None)),
        Some(p) => {
            let subset = a.subset.unwrap_or(Subset::Test);
            Ok((select(clues, &load_split(p)?, subset)?, Some(subset)))
        }
    }
}

fn load_lexicon(run: &Run, a: &LexiconArgs) -> Result<(&'static Lexicon, &'static IndicatorTable)> {
    let paths = &run.cfg.lexicon;
    let thesaurus = a.thesaurus.clone().or(paths.thesaurus.clone());
    let wordlist = a.wordlist.clone().or(paths.wordlist.clone());
    let lex: &'static Lexicon = match (thesaurus, wordlist) {
        (Some(t), Some(w)) => Box::leak(Box::new(Lexicon::load(t, w)?)),
        (None, None) => Lexicon::bundled(),
        _ => return Err(usage("thesaurus and wordlist must be given together")),
    };
    let ind: &'static IndicatorTable = match a.indicators.clone().or(paths.indicators.clone()) {
        Some(p) => Box::leak(Box::new(IndicatorTable::load(p)?)),
        None => IndicatorTable::bundled(),
    };
    Ok((lex, ind))
}

fn clean_cmd(run: &Run, a: CleanArgs) -> Result<()> {
    let (clues, rep) = clean_jsonl(open(&a.input)?, &name(&a.input))?;
    let mut w = create(&a.output)?;
    write_clues(&mut w, &clues)?;
    w.flush()?;
    let rep_json = serde_json::to_value(&rep)?;
    if let Some(p) = &a.report {
        std::fs::write(p, serde_json::to_string_pretty(&rep)? + "\n")
            .with_context(|| format!("writing {}", p.display()))?;
    }
    eprintln!(
        "kept {} of {} clues ({} removed)",
        rep.retained,
        rep.input,
        rep.removed()
    );
    run.finish(json!({}), None, &[&a.input], &a.output, rep_json)
}

fn split_cmd(run: &Run, a: SplitArgs) -> Result<()> {
    let policy = a.policy.or(run.cfg.split.policy).unwrap_or(SplitPolicy::Naive);
    let fractions = a.fractions.or(run.cfg.split.fractions).unwrap_or_default();
    let fractions = Fractions::new(fractions.0[0], fractions.0[1], fractions.0[2]).map_err(|e| usage(e.to_string()))?;
    let seed = a.seed.or(run.cfg.seed).unwrap_or(0);
    let clues = load_clues(&a.input)?;
    let s: SplitAssignment = split(&clues, policy, seed, fractions)?;
    let mut w = create(&a.output)?;
    write_split(&mut w, &s)?;
    w.flush()?;
    let counts: BTreeMap<&str, usize> = Subset::ALL.iter().map(|&x| (x.name(), s.count(x))).collect();
    let audit = audit_overlap(&clues, &s);
    if let Some(p) = &a.audit {
        let doc = json!({ "answers": answer_stats(&clues)?, "overlap": audit });
        std::fs::write(p, serde_json::to_string_pretty(&doc)? + "\n")
            .with_context(|| format!("writing {}", p.display()))?;
    }
    eprintln!("{policy} split: {counts:?}");
    run.finish(
        json!({ "policy": policy, "fractions": fractions, "seed": seed }),
        Some(seed),
        &[&a.input],
        &a.output,
        json!({ "counts": counts, "overlap": audit }),
    )
}

fn solve_cmd(run: &Run, a: SolveArgs) -> Result<()> {
    let mut cfg = run.cfg.solver.clone();
    if let Some(m) = a.max_candidates {
        cfg.max_candidates = m;
    }
    if let Some(t) = a.timeout_secs {
        cfg.timeout_secs = t;
    }
    cfg.validate().map_err(|e| usage(e.to_string()))?;
    let k = a.k.or(run.cfg.knn.k).unwrap_or(10);
    if k == 0 {
        return Err(usage("--k must be at least 1"));
    }
    let include_lengths = a.include_lengths || run.cfg.knn.include_lengths.unwrap_or(false);

    let all = load_clues(&a.input)?;
    let (targets, subset) = subset_of(&all, &a.subset)?;
    let mut inputs: Vec<&Path> = vec![&a.input];
    if let Some(p) = &a.subset.split {
        inputs.push(p);
    }
    let records = match a.solver {
        SolverKind::RuleBased => {
            let (lex, ind) = load_lexicon(run, &a.lexicon)?;
            solve_all(&targets, run.threads, |c| solve_rule_based(c, lex, ind, &cfg))?
        }
        SolverKind::ReverseDictionary => {
            let (lex, _) = load_lexicon(run, &a.lexicon)?;
            let max = cfg.max_candidates;
            solve_all(&targets, run.threads, |c| {
                let mut candidates = solve_reverse_dictionary(c, lex);
                candidates.truncate(max);
                SolveOutcome {
                    candidates,
                    timed_out: false,
                }
            })?
        }
        SolverKind::Knn => {
            let Some(split_path) = &a.subset.split else {
                return Err(usage("the knn solver trains on the train subset and needs --split"));
            };
            let train = select(&all, &load_split(split_path)?, Subset::Train)?;
            let model = knn_fit(&train, include_lengths)?;
            solve_all(&targets, run.threads, |c| SolveOutcome {
                candidates: knn_predict(&model, c, k),
                timed_out: false,
            })?
        }
    };
    let mut w = create(&a.output)?;
    write_candidates(&mut w, &records)?;
    w.flush()?;
    let timed_out = records.iter().filter(|r| r.timed_out).count();
    eprintln!("solved {} clues ({timed_out} timed out)", records.len());
    let effective = match a.solver {
        SolverKind::Knn => json!({ "solver": a.solver, "k": k, "include_lengths": include_lengths, "subset": subset }),
        _ => {
            json!({ "solver": a.solver, "solver_config": cfg, "subset": subset, "lexicon": lexicon_desc(run, &a.lexicon) })
        }
    };
    run.finish(
        effective,
        None,
        &inputs,
        &a.output,
        json!({ "clues": records.len(), "timed_out": timed_out }),
    )
}

fn lexicon_desc(run: &Run, a: &LexiconArgs) -> serde_json::Value {
    let p = &run.cfg.lexicon;
    let show = |x: &Option<PathBuf>, y: &Option<PathBuf>| {
        x.clone()
            .or(y.clone())
            .map_or_else(|| "bundled".to_string(), |p| p.display().to_string())
    };
    json!({
        "thesaurus": show(&a.thesaurus, &p.thesaurus),
        "wordlist": show(&a.wordlist, &p.wordlist),
        "indicators": show(&a.indicators, &p.indicators),
    })
}

fn eval_cmd(run: &Run, a: EvalArgs) -> Result<()> {
    let sample_size = a.sample_size.or(run.cfg.eval.sample_size).unwrap_or(10);
    if sample_size == 0 {
        return Err(usage("--sample-size must be at least 1"));
    }
    let format_name = a
        .format
        .clone()
        .or(run.cfg.eval.format.clone())
        .unwrap_or_else(|| "text".into());
    let format: ReportFormat = format_name
        .parse()
        .map_err(|e: cryptic_core::Error| usage(e.to_string()))?;

    let all = load_clues(&a.gold)?;
    let (gold, subset) = subset_of(&all, &a.subset)?;
    let mut lists = import_candidates(open(&a.candidates)?, &name(&a.candidates))?;
    // Lists for clues of other subsets are fine; lists for unknown clues are not.
    let everything: BTreeSet<ClueKey> = all.iter().map(Clue::key).collect();
    let wanted: BTreeSet<ClueKey> = gold.iter().map(Clue::key).collect();
    lists.retain(|k, _| wanted.contains(k) || !everything.contains(k));

    let meta = EvalMeta {
        split: subset.map(|s| s.name().to_string()),
        ..EvalMeta::default()
    };
    let result = evaluate(&gold, &lists, sample_size, meta)?;
    let mut text = report(&result, format)?;
    if a.segment_by_train {
        let split_path = a.subset.split.as_ref().expect("clap requires --split");
        let train = select(&all, &load_split(split_path)?, Subset::Train)?;
        let seg = segment_by_train_overlap(
            &result,
            &train.iter().map(|c| c.answer.clone()).collect(),
            a.plural_equiv,
        );
        text = match format {
            ReportFormat::Json => serde_json::to_string_pretty(&json!({
                "all": result,
                "seen_in_train": seg.seen,
                "unseen_in_train": seg.unseen,
            }))?,
            _ => format!(
                "{text}\n# answers seen in train\n{}\n# answers not seen in train\n{}",
                report(&seg.seen, format)?,
                report(&seg.unseen, format)?
            ),
        };
    }
    if !text.ends_with('\n') {
        text.push('\n');
    }
    match &a.output {
        Some(p) => {
            std::fs::write(p, &text).with_context(|| format!("writing {}", p.display()))?;
            let mut inputs: Vec<&Path> = vec![&a.gold, &a.candidates];
            if let Some(s) = &a.subset.split {
                inputs.push(s);
            }
            run.finish(
                json!({ "sample_size": sample_size, "format": format_name, "subset": subset,
                        "segment_by_train": a.segment_by_train, "plural_equiv": a.plural_equiv }),
                None,
                &inputs,
                p,
                json!({
                    "clues": result.clues,
                    "top1_after_filter": result.top1_after_filter,
                    "top10_contains_after_filter": result.top10_contains_after_filter,
                }),
            )?;
        }
        None => print!("{text}"),
    }
    let missing = result.missing();
    if !missing.is_empty() && !a.allow_missing {
        bail!(
            "{} clue(s) have no candidate list, first {} (use --allow-missing to accept)",
            missing.len(),
            missing[0]
        );
    }
    Ok(())
}

fn curriculum_cmd(run: &Run, a: CurriculumArgs) -> Result<()> {
    let c = &run.cfg.curriculum;
    let tasks = a
        .tasks
        .clone()
        .or(c.tasks.clone())
        .unwrap_or_else(|| Task::ALL.to_vec());
    let weights = a
        .weights
        .clone()
        .or(c.weights.clone())
        .unwrap_or_else(|| vec![1; tasks.len()]);
    if tasks.is_empty() || weights.len() != tasks.len() || weights.contains(&0) {
        return Err(usage(format!(
            "need one positive weight per task: {} task(s), weights {weights:?}",
            tasks.len()
        )));
    }
    let with_replacement = a.with_replacement || c.with_replacement.unwrap_or(false);
    let seed = a.seed.or(run.cfg.seed).unwrap_or(0);

    let (pairs, unreadable) = read_acw(open(&a.input)?, &name(&a.input))?;
    let (pairs, clean_report) = clean_acw(&pairs);
    let (lex, ind) = load_lexicon(run, &a.lexicon)?;
    let ctx = GenContext {
        lexicon: lex,
        anagram_indicators: ind.phrases_for(ClueType::Anagram),
    };
    let generated: Vec<_> = tasks
        .iter()
        .enumerate()
        .map(|(i, &t)| generate(t, &pairs, &ctx, cryptic_core::seed::item_seed(seed, i as u64)))
        .collect();
    let total = match a.total.or(c.total) {
        Some(t) => t,
        // the largest mix every task can fill without reuse
        None if !with_replacement => {
            let unit = generated
                .iter()
                .zip(&weights)
                .map(|(g, &w)| g.examples.len() / w as usize)
                .min()
                .unwrap_or(0);
            unit * weights.iter().map(|&w| w as usize).sum::<usize>()
        }
        None => generated.iter().map(|g| g.examples.len()).sum(),
    };
    let datasets: Vec<(&[_], u32)> = generated
        .iter()
        .zip(&weights)
        .map(|(g, &w)| (g.examples.as_slice(), w))
        .collect();
    let mixed = mix(&datasets, total, seed, with_replacement)?;

    let mut w = create(&a.output)?;
    for ex in &mixed {
        if a.jsonl {
            serde_json::to_writer(&mut w, ex)?;
            writeln!(w)?;
        } else {
            writeln!(w, "{}", ex.line())?;
        }
    }
    w.flush()?;
    let emitted: Vec<usize> = tasks
        .iter()
        .map(|&t| mixed.iter().filter(|e| e.task == t).count())
        .collect();
    let manifest = CurriculumManifest {
        seed,
        tasks: tasks.clone(),
        weights: weights.clone(),
        generated: generated.iter().map(|g| g.examples.len()).collect(),
        emitted,
        skipped: generated.iter().map(|g| g.skipped.len()).collect(),
        total,
    };
    eprintln!("wrote {} examples", mixed.len());
    run.finish(
        json!({ "tasks": tasks, "weights": weights, "total": total, "with_replacement": with_replacement,
                "seed": seed, "lexicon": lexicon_desc(run, &a.lexicon) }),
        Some(seed),
        &[&a.input],
        &a.output,
        json!({ "curriculum": manifest, "acw_clean": clean_report, "unreadable_lines": unreadable.len() }),
    )
}

fn export_cmd(run: &Run, a: ExportArgs) -> Result<()> {
    let all = load_clues(&a.input)?;
    let (clues, subset) = subset_of(&all, &a.subset)?;
    let lines = export_seq2seq(&clues, a.with_lengths);
    let mut w = create(&a.output)?;
    for l in &lines {
        writeln!(w, "{l}")?;
    }
    w.flush()?;
    let mut inputs: Vec<&Path> = vec![&a.input];
    if let Some(s) = &a.subset.split {
        inputs.push(s);
    }
    run.finish(
        json!({ "with_lengths": a.with_lengths, "subset": subset }),
        None,
        &inputs,
        &a.output,
        json!({ "lines": lines.len() }),
    )
}
