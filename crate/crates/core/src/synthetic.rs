//! Seeded synthetic clues built from a lexicon and indicator table: a
//! labelled wordplay suite, bulk corpora for split testing and clue sets
//! for nearest-neighbour checks.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use rand::seq::SliceRandom;
use rand::Rng;

use crate::clue::{Clue, ClueType};
use crate::enumeration::Enumeration;
use crate::lexicon::{IndicatorTable, Lexicon, LookupDepth};
use crate::seed::rng;
use crate::text::{letters_only, LetterCounts};
use crate::wordplay::{reverse_letters, scramble_with};

/// The wordplay types the suite covers, in generation order.
pub const SUITE_TYPES: [ClueType; 5] = [
    ClueType::Anagram,
    ClueType::Initialism,
    ClueType::Hidden,
    ClueType::Reversal,
    ClueType::DoubleDefinition,
];

/// A generated clue with the mechanism it was built with.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabelledClue {
    pub clue_type: ClueType,
    pub clue: Clue,
}

fn capitalize(s: &str) -> String {
    let mut c = s.chars();
    match c.next() {
        Some(f) => f.to_uppercase().chain(c).collect(),
        None => String::new(),
    }
}

fn make_clue(puzzle: &str, id: usize, text: &str, answer: &str) -> Clue {
    Clue {
        puzzle_id: puzzle.to_string(),
        clue_id: format!("{id}a"),
        clue_text: capitalize(text),
        enumeration: Enumeration::of_answer(answer).expect("lexicon answers are letters"),
        answer: answer.to_string(),
        date: None,
    }
}

struct Material<'a> {
    lex: &'a Lexicon,
    /// Single-word answers (4 to 8 letters) and the phrases that define them.
    definers: BTreeMap<&'a str, Vec<&'a str>>,
    /// Filler words: no indicator tokens, three letters or more.
    fillers: Vec<&'a str>,
    indicator_words: HashSet<&'a str>,
    indicators: BTreeMap<ClueType, Vec<&'a str>>,
}

impl<'a> Material<'a> {
    fn new(lex: &'a Lexicon, ind: &'a IndicatorTable) -> Self {
        let depth = LookupDepth::new(1, 1, false);
        let indicator_words: HashSet<&str> = ind.iter().flat_map(|(p, _)| p.split(' ')).collect();
        let words = lex.words();
        let mut definers: BTreeMap<&str, Vec<&str>> = BTreeMap::new();
        for &phrase in &words {
            if phrase.split(' ').count() > 3 || phrase.split(' ').any(|t| indicator_words.contains(t)) {
                continue;
            }
            for a in lex.reverse_lookup(phrase, depth) {
                if let Ok(i) = words.binary_search(&a.as_str()) {
                    let answer = words[i];
                    let len = answer.len();
                    if !answer.contains(' ') && (4..=8).contains(&len) && !phrase.split(' ').any(|t| t == answer) {
                        definers.entry(answer).or_default().push(phrase);
                    }
                }
            }
        }
        let fillers = words
            .iter()
            .copied()
            .filter(|w| !w.contains(' ') && w.len() >= 3 && !indicator_words.contains(w))
            .collect();
        let indicators = SUITE_TYPES.iter().map(|&t| (t, ind.phrases_for(t))).collect();
        Material {
            lex,
            definers,
            fillers,
            indicator_words,
            indicators,
        }
    }

    fn indicator<R: Rng>(&self, t: ClueType, r: &mut R) -> Option<&'a str> {
        self.indicators.get(&t)?.choose(r).copied()
    }

    fn wordplay<R: Rng>(&self, t: ClueType, answer: &str, def: &str, r: &mut R) -> Option<String> {
        match t {
            ClueType::Anagram => {
                let ind = self.indicator(t, r)?;
                let partners: Vec<&str> = self
                    .lex
                    .with_letters(&LetterCounts::of(answer))
                    .iter()
                    .map(String::as_str)
                    .filter(|w| *w != answer && !self.indicator_words.contains(w))
                    .collect();
                let fodder = match partners.choose(r) {
                    Some(p) => p.to_string(),
                    None => scramble_with(answer, r).ok()?,
                };
                Some(format!("{ind} {fodder} {def}"))
            }
            ClueType::Initialism => {
                let ind = self.indicator(t, r)?;
                let mut picked = Vec::new();
                for c in answer.chars() {
                    let pool: Vec<&str> = self.fillers.iter().copied().filter(|w| w.starts_with(c)).collect();
                    picked.push(*pool.choose(r)?);
                }
                Some(format!("{} {ind} {def}", picked.join(" ")))
            }
            ClueType::Hidden => {
                let ind = self.indicator(t, r)?;
                let mut cuts: Vec<usize> = (1..answer.len()).collect();
                cuts.shuffle(r);
                for k in cuts {
                    let (head, tail) = answer.split_at(k);
                    let left: Vec<&str> = self
                        .fillers
                        .iter()
                        .copied()
                        .filter(|w| w.len() > head.len() && w.ends_with(head))
                        .collect();
                    let right: Vec<&str> = self
                        .fillers
                        .iter()
                        .copied()
                        .filter(|w| w.len() > tail.len() && w.starts_with(tail))
                        .collect();
                    if let (Some(a), Some(b)) = (left.choose(r), right.choose(r)) {
                        return Some(format!("{def} {ind} {a} {b}"));
                    }
                }
                None
            }
            ClueType::Reversal => {
                let rev = reverse_letters(answer);
                if rev == answer || self.indicator_words.contains(rev.as_str()) {
                    return None;
                }
                let ind = self.indicator(t, r)?;
                Some(format!("{rev} {ind} {def}"))
            }
            ClueType::DoubleDefinition => {
                let defs = &self.definers[answer];
                let def_words: BTreeSet<&str> = def.split(' ').collect();
                let others: Vec<&str> = defs
                    .iter()
                    .copied()
                    .filter(|d| *d != def && d.split(' ').all(|w| !def_words.contains(w)))
                    .collect();
                let second = others.choose(r)?;
                Some(format!("{def} {second}"))
            }
            _ => None,
        }
    }
}

/// `per_type` clues of each suite type. Answers are single words of 4 to 8
/// letters with a definition of at most three words; each clue has the
/// definition at one end and the wordplay, with its indicator, at the
/// other. Answers within one type are distinct. Fewer clues come back only
/// when the lexicon runs out of usable answers.
pub fn wordplay_suite(lex: &Lexicon, ind: &IndicatorTable, per_type: usize, seed: u64) -> Vec<LabelledClue> {
    let m = Material::new(lex, ind);
    let mut r = rng(seed);
    let mut out = Vec::new();
    for t in SUITE_TYPES {
        let mut answers: Vec<&str> = m.definers.keys().copied().collect();
        answers.shuffle(&mut r);
        let mut made = 0;
        for answer in answers {
            if made == per_type {
                break;
            }
            let def = *m.definers[answer].choose(&mut r).expect("non-empty");
            if let Some(text) = m.wordplay(t, answer, def, &mut r) {
                out.push(LabelledClue {
                    clue_type: t,
                    clue: make_clue(&format!("suite-{}", t.name()), made + 1, &text, answer),
                });
                made += 1;
            }
        }
    }
    out
}

/// A bulk corpus of `n` clues with repeated answers (a few very common,
/// most rare) and unique keys, for exercising splits and statistics.
pub fn corpus(lex: &Lexicon, n: usize, seed: u64) -> Vec<Clue> {
    let mut r = rng(seed);
    let words: Vec<&str> = lex
        .words()
        .into_iter()
        .filter(|w| (3..=15).contains(&letters_only(w).len()))
        .collect();
    let singles: Vec<&str> = words.iter().copied().filter(|w| !w.contains(' ')).collect();
    (0..n)
        .map(|i| {
            // squaring skews draws toward the front of the list
            let u: f64 = r.gen();
            let answer = words[((u * u) * words.len() as f64) as usize];
            let len = r.gen_range(3..=8);
            let text: Vec<&str> = (0..len).map(|_| *singles.choose(&mut r).expect("words")).collect();
            Clue {
                puzzle_id: format!("synthetic-{:05}", i / 30),
                clue_id: format!("{}{}", i % 30 + 1, if i % 2 == 0 { "a" } else { "d" }),
                clue_text: capitalize(&text.join(" ")),
                enumeration: Enumeration::of_answer(answer).expect("lexicon answers are letters"),
                answer: answer.to_string(),
                date: None,
            }
        })
        .collect()
}

/// Training clues with pairwise-distinct word sets, and test clues whose
/// answers never occur in training.
pub fn knn_sets(lex: &Lexicon, n_train: usize, n_test: usize, seed: u64) -> (Vec<Clue>, Vec<Clue>) {
    let mut r = rng(seed);
    let mut singles: Vec<&str> = lex.words().into_iter().filter(|w| !w.contains(' ')).collect();
    singles.shuffle(&mut r);
    let (test_answers, train_answers) = singles.split_at(n_test.min(singles.len() / 2));
    let mut seen: HashSet<BTreeSet<&str>> = HashSet::new();
    let mut make = |answers: &[&str], n: usize, tag: &str, r: &mut rand_chacha::ChaCha8Rng| {
        let mut out = Vec::with_capacity(n);
        while out.len() < n {
            let len = r.gen_range(3..=7);
            let text: Vec<&str> = (0..len).map(|_| *singles.choose(r).expect("words")).collect();
            if !seen.insert(text.iter().copied().collect()) {
                continue;
            }
            let answer = answers[out.len() % answers.len()];
            out.push(make_clue(tag, out.len() + 1, &text.join(" "), answer));
        }
        out
    };
    let train = make(train_answers, n_train, "knn-train", &mut r);
    let test = make(test_answers, n_test, "knn-test", &mut r);
    (train, test)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumeration::matches_enumeration;

    #[test]
    fn suite_is_full_and_well_formed() {
        let lex = Lexicon::bundled();
        let suite = wordplay_suite(lex, IndicatorTable::bundled(), 100, 1);
        for t in SUITE_TYPES {
            let of_type: Vec<_> = suite.iter().filter(|c| c.clue_type == t).collect();
            assert_eq!(of_type.len(), 100, "{t:?}");
            let answers: BTreeSet<_> = of_type.iter().map(|c| &c.clue.answer).collect();
            assert_eq!(answers.len(), 100);
        }
        for c in &suite {
            assert!(matches_enumeration(&c.clue.answer, &c.clue.enumeration));
        }
        assert_eq!(suite, wordplay_suite(lex, IndicatorTable::bundled(), 100, 1));
    }

    #[test]
    fn knn_sets_are_answer_disjoint() {
        let (train, test) = knn_sets(Lexicon::bundled(), 300, 100, 2);
        let a: BTreeSet<_> = train.iter().map(|c| &c.answer).collect();
        assert!(test.iter().all(|c| !a.contains(&c.answer)));
        assert_eq!((train.len(), test.len()), (300, 100));
    }

    #[test]
    fn corpus_keys_unique() {
        let c = corpus(Lexicon::bundled(), 2_000, 3);
        let keys: HashSet<_> = c.iter().map(Clue::key).collect();
        assert_eq!(keys.len(), 2_000);
        let answers: HashSet<_> = c.iter().map(|c| &c.answer).collect();
        assert!(answers.len() < 2_000);
    }
}
