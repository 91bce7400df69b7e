use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use cryptic_core::wordplay::{anagram_solutions, detect_indicators, hidden_words, scramble};
use cryptic_core::{Enumeration, IndicatorTable, Lexicon};

fn wordplay(c: &mut Criterion) {
    let lex = Lexicon::bundled();
    let ind = IndicatorTable::bundled();
    let single = Enumeration::single(7).unwrap();
    let two = Enumeration::parse("(4,6)").unwrap();

    c.bench_function("anagram single word", |b| {
        b.iter(|| anagram_solutions(black_box("silent"), &Enumeration::single(6).unwrap(), lex))
    });
    c.bench_function("anagram seven letters", |b| {
        b.iter(|| anagram_solutions(black_box("strange"), &single, lex))
    });
    c.bench_function("anagram two words", |b| {
        b.iter(|| anagram_solutions(black_box("alanturing"), &two, lex))
    });
    c.bench_function("hidden words in phrase", |b| {
        b.iter(|| hidden_words(black_box("the somber text hides a small model inside"), 4, lex))
    });
    let tokens: Vec<&str> = "confused about the first letters of everything mixed up inside"
        .split(' ')
        .collect();
    c.bench_function("detect indicators", |b| {
        b.iter(|| detect_indicators(black_box(&tokens), ind))
    });
    c.bench_function("scramble", |b| b.iter(|| scramble(black_box("transformer"), 7)));
}

criterion_group!(benches, wordplay);
criterion_main!(benches);
