use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use cryptic_core::solvers::{knn_fit, knn_predict, solve_reverse_dictionary, solve_rule_based, SolverConfig};
use cryptic_core::synthetic::{knn_sets, wordplay_suite};
use cryptic_core::{IndicatorTable, Lexicon};

fn solvers(c: &mut Criterion) {
    let lex = Lexicon::bundled();
    let ind = IndicatorTable::bundled();
    let cfg = SolverConfig::default();
    let suite = wordplay_suite(lex, ind, 10, 1);

    c.bench_function("rule-based, 50 suite clues", |b| {
        b.iter(|| {
            for lc in &suite {
                black_box(solve_rule_based(&lc.clue, lex, ind, &cfg));
            }
        })
    });
    c.bench_function("reverse dictionary, 50 suite clues", |b| {
        b.iter(|| {
            for lc in &suite {
                black_box(solve_reverse_dictionary(&lc.clue, lex));
            }
        })
    });

    let (train, test) = knn_sets(lex, 5_000, 100, 2);
    c.bench_function("knn fit 5k", |b| b.iter(|| knn_fit(black_box(&train), false).unwrap()));
    let model = knn_fit(&train, false).unwrap();
    c.bench_function("knn predict 100", |b| {
        b.iter(|| {
            for q in &test {
                black_box(knn_predict(&model, q, 10));
            }
        })
    });
}

criterion_group!(benches, solvers);
criterion_main!(benches);
