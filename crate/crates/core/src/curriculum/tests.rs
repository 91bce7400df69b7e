use super::*;
use crate::enumeration::matches_enumeration;
use crate::lexicon::IndicatorTable;
use crate::ClueType;

fn petal() -> AcwPair {
    AcwPair::new("flower part", "petal")
}

fn sorted_letters(s: &str) -> Vec<char> {
    let mut v: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
    v.sort_unstable();
    v
}

#[test]
fn phrase_examples() {
    let ex = gen_phrase(&petal()).unwrap();
    assert_eq!(ex.input, "phrase: flower part (5)");
    assert_eq!(ex.target, "petal");
    assert_eq!(ex.line(), "phrase: flower part (5) => petal");
    let ex = gen_phrase(&AcwPair::new("computing pioneer", "alan turing")).unwrap();
    assert!(ex.input.ends_with("(4,6)"));
    assert!(gen_phrase(&AcwPair::new("  ", "petal")).is_err());
}

#[test]
fn descramble_reference_strings_appear() {
    let mut prepend = None;
    let mut append = None;
    let mut word = None;
    for seed in 0..20_000 {
        let (ex, placement) = gen_descramble_placed(&petal(), seed).unwrap();
        match placement {
            Placement::Prepend if ex.input == "descramble: etalp flower part (5)" => prepend = Some(seed),
            Placement::Append if ex.input == "descramble: flower part etalp (5)" => append = Some(seed),
            _ => {}
        }
        if gen_descramble_word(&petal(), seed).unwrap().input == "descramble word: etalp (5)" {
            word = Some(seed);
        }
    }
    assert!(prepend.is_some() && append.is_some() && word.is_some());
}

#[test]
fn descramble_edge_cases() {
    assert!(gen_descramble(&AcwPair::new("sound of surprise", "aaa"), 1).is_err());
    let ex = gen_descramble_word(&AcwPair::new("alphabet start", "ab"), 3).unwrap();
    assert_eq!(ex.input, "descramble word: ba (2)");
    assert_eq!(
        gen_descramble(&petal(), 8).unwrap(),
        gen_descramble(&petal(), 8).unwrap()
    );
}

#[test]
fn anagram_partners_match_brute_force() {
    let lex = Lexicon::bundled();
    for answer in ["petal", "stop", "bert", "listen", "zebra"] {
        let expect: Vec<&str> = lex
            .words()
            .into_iter()
            .filter(|w| !w.contains(' ') && *w != answer && sorted_letters(w) == sorted_letters(answer))
            .collect();
        assert_eq!(anagram_partners(answer, lex), expect, "{answer}");
    }
}

#[test]
fn anagram_reference_string_appears() {
    let lex = Lexicon::bundled();
    let phrases = IndicatorTable::bundled().phrases_for(ClueType::Anagram);
    assert!(phrases.contains(&"confusingly"));
    let found = (0..50_000).any(|seed| {
        gen_anagram(&petal(), lex, &phrases, seed)
            .unwrap()
            .is_some_and(|ex| ex.input == "anagram: confusingly plate (5)" && ex.target == "petal")
    });
    assert!(found);
    assert_eq!(
        gen_anagram(&AcwPair::new("x", "zebra"), lex, &phrases, 0).unwrap(),
        None
    );
}

#[test]
fn generate_is_deterministic_and_reports_skips() {
    let pairs = vec![petal(), AcwPair::new("scream", "aaa"), AcwPair::new("halt", "stop")];
    let lex = Lexicon::bundled();
    let ctx = GenContext {
        lexicon: lex,
        anagram_indicators: IndicatorTable::bundled().phrases_for(ClueType::Anagram),
    };
    let a = generate(Task::Descramble, &pairs, &ctx, 11);
    assert_eq!(a, generate(Task::Descramble, &pairs, &ctx, 11));
    assert_eq!(a.examples.len(), 2);
    assert_eq!(a.skipped.len(), 1);
    assert_eq!(a.skipped[0].index, 1);
    for ex in &a.examples {
        assert!(ex.input.starts_with("descramble: "));
        assert!(matches_enumeration(
            &ex.target,
            &Enumeration::of_answer(&ex.target).unwrap()
        ));
    }
    let an = generate(Task::Anagram, &pairs, &ctx, 11);
    assert_eq!(an.examples.len(), 2, "{an:?}");
}

#[test]
fn acw_cleaning() {
    let pairs = vec![
        AcwPair::new("___ of the Apes", "planet"),
        AcwPair::new("Gone --- Wind", "with the"),
        AcwPair::new("flower part", "petal"),
        AcwPair::new("flower part", "PETAL"),
        AcwPair::new("flower part", "sepal"),
        AcwPair::new("nothing", "123"),
    ];
    let (out, r) = clean_acw(&pairs);
    assert_eq!(out, [petal(), AcwPair::new("flower part", "sepal")]);
    assert_eq!((r.fill_in_blank, r.exact_duplicate, r.bad_answer), (2, 1, 1));
    assert_eq!(r.retained, 2);

    let (p, skips) = read_acw("flower part\tpetal\nbroken line\n\nx\ty\tz\n".as_bytes(), "t").unwrap();
    assert_eq!(p, [petal()]);
    assert_eq!(skips.iter().map(|s| s.index).collect::<Vec<_>>(), [2, 4]);
}

#[test]
fn probe_variants() {
    let pairs = vec![petal(), AcwPair::new("computing pioneer", "alan turing")];
    let all = |v| {
        let d = gen_wordplay_probe(&pairs, v, ProbeSplit::Random, 5, 0.0, None).unwrap();
        assert_eq!(d.skipped.len(), 1);
        d.train
    };
    let s = all(ProbeVariant::ScrambleOnly);
    assert!(s[0].ends_with(" => petal") && !s[0].starts_with("petal"));
    assert_eq!(
        sorted_letters(s[0].split(" => ").next().unwrap()),
        sorted_letters("petal")
    );
    let s = all(ProbeVariant::ScrambleWithPhrase);
    assert!(s[0].contains(" | flower part => petal"));
    assert_eq!(all(ProbeVariant::CopyOnly), ["petal => petal"]);
    assert_eq!(all(ProbeVariant::CopyWithPhrase), ["petal | flower part => petal"]);
}

#[test]
fn probe_disjoint_split() {
    let pairs: Vec<AcwPair> = (0..200)
        .map(|i| AcwPair::new(format!("clue {i}"), ["petal", "stop", "bert", "plate", "ernie"][i % 5]))
        .collect();
    let d = gen_wordplay_probe(&pairs, ProbeVariant::CopyOnly, ProbeSplit::AnswerDisjoint, 1, 0.2, None).unwrap();
    assert_eq!(d.train.len() + d.test.len(), 200);
    let answers = |v: &[String]| -> std::collections::BTreeSet<String> {
        v.iter().map(|l| l.rsplit(" => ").next().unwrap().to_string()).collect()
    };
    assert!(answers(&d.train).is_disjoint(&answers(&d.test)));
    assert!(!d.test.is_empty());
}
