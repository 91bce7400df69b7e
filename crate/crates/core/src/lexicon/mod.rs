//! Word list, thesaurus graph and reverse-dictionary lookup.
//!
//! The thesaurus is a TSV file of `word<TAB>relation<TAB>word` rows with
//! relation one of `syn`, `hyper`, `hypo` (long forms `synonym`,
//! `hypernym`, `hyponym` are accepted too). A row `a hyper b` states that
//! `b` is a hypernym of `a`; loading adds the mirrored `b hypo a` edge, and
//! synonym rows are made symmetric. An optional fourth column carries a
//! sense id, which is ignored.

mod indicators;
mod inflect;

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};
use std::path::Path;
use std::sync::OnceLock;

pub use indicators::IndicatorTable;
pub use inflect::{inflections, plural_normalize};

use crate::error::{Error, Result};
use crate::text::{normalize_answer, LetterCounts};

const BUNDLED_WORDLIST: &str = include_str!("../../data/wordlist.txt");
const BUNDLED_THESAURUS: &str = include_str!("../../data/thesaurus.tsv");

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Relation {
    Synonym,
    Hypernym,
    Hyponym,
}

impl Relation {
    pub fn parse(label: &str) -> Option<Relation> {
        match label {
            "syn" | "synonym" => Some(Relation::Synonym),
            "hyper" | "hypernym" => Some(Relation::Hypernym),
            "hypo" | "hyponym" => Some(Relation::Hyponym),
            _ => None,
        }
    }
}

/// How far [`Lexicon::reverse_lookup`] walks the graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, serde::Serialize, serde::Deserialize)]
pub struct LookupDepth {
    pub hyponyms: usize,
    pub hypernyms: usize,
    pub inflections: bool,
}

impl LookupDepth {
    pub fn new(hyponyms: usize, hypernyms: usize, inflections: bool) -> Self {
        LookupDepth {
            hyponyms,
            hypernyms,
            inflections,
        }
    }
}

#[derive(Debug, Default)]
pub struct LexiconBuilder {
    words: BTreeSet<String>,
    synonyms: BTreeMap<String, BTreeSet<String>>,
    hyponyms: BTreeMap<String, BTreeSet<String>>,
    hypernyms: BTreeMap<String, BTreeSet<String>>,
}

impl LexiconBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn word(&mut self, word: &str) -> &mut Self {
        if let Ok(w) = normalize_answer(word) {
            self.words.insert(w);
        }
        self
    }

    pub fn words<'a>(&mut self, words: impl IntoIterator<Item = &'a str>) -> &mut Self {
        for w in words {
            self.word(w);
        }
        self
    }

    /// Adds `from -relation-> to` together with its mirror edge. Both
    /// endpoints join the word set.
    pub fn relation(&mut self, from: &str, relation: Relation, to: &str) -> Result<&mut Self> {
        let a = normalize_answer(from)?;
        let b = normalize_answer(to)?;
        if a == b {
            return Ok(self);
        }
        let link = |m: &mut BTreeMap<String, BTreeSet<String>>, x: &str, y: &str| {
            m.entry(x.to_string()).or_default().insert(y.to_string());
        };
        match relation {
            Relation::Synonym => {
                link(&mut self.synonyms, &a, &b);
                link(&mut self.synonyms, &b, &a);
            }
            Relation::Hypernym => {
                link(&mut self.hypernyms, &a, &b);
                link(&mut self.hyponyms, &b, &a);
            }
            Relation::Hyponym => {
                link(&mut self.hyponyms, &a, &b);
                link(&mut self.hypernyms, &b, &a);
            }
        }
        self.words.insert(a);
        self.words.insert(b);
        Ok(self)
    }

    pub fn build(self) -> Result<Lexicon> {
        if self.words.is_empty() {
            return Err(Error::EmptyWordlist);
        }
        let mut by_signature: HashMap<LetterCounts, Vec<String>> = HashMap::new();
        let mut by_length: BTreeMap<usize, Vec<(String, LetterCounts)>> = BTreeMap::new();
        for w in self.words.iter().filter(|w| !w.contains(' ')) {
            let sig = LetterCounts::of(w);
            by_signature.entry(sig).or_default().push(w.clone());
            by_length.entry(w.len()).or_default().push((w.clone(), sig));
        }
        Ok(Lexicon {
            words: self.words.into_iter().collect(),
            synonyms: self.synonyms.into_iter().collect(),
            hyponyms: self.hyponyms.into_iter().collect(),
            hypernyms: self.hypernyms.into_iter().collect(),
            by_signature,
            by_length,
        })
    }
}

/// An immutable word set with a labelled thesaurus graph. Single words are
/// also indexed by letter multiset and by length for wordplay search.
#[derive(Debug)]
pub struct Lexicon {
    words: HashSet<String>,
    synonyms: HashMap<String, BTreeSet<String>>,
    hyponyms: HashMap<String, BTreeSet<String>>,
    hypernyms: HashMap<String, BTreeSet<String>>,
    by_signature: HashMap<LetterCounts, Vec<String>>,
    by_length: BTreeMap<usize, Vec<(String, LetterCounts)>>,
}

impl Lexicon {
    pub fn builder() -> LexiconBuilder {
        LexiconBuilder::new()
    }

    /// Builds a lexicon with no thesaurus edges.
    pub fn from_words<'a>(words: impl IntoIterator<Item = &'a str>) -> Result<Lexicon> {
        let mut b = LexiconBuilder::new();
        b.words(words);
        b.build()
    }

    pub fn load(thesaurus: impl AsRef<Path>, wordlist: impl AsRef<Path>) -> Result<Lexicon> {
        let (tp, wp) = (thesaurus.as_ref(), wordlist.as_ref());
        let t = std::fs::read_to_string(tp).map_err(|e| Error::io(tp, e))?;
        let w = std::fs::read_to_string(wp).map_err(|e| Error::io(wp, e))?;
        Self::parse(&t, &tp.display().to_string(), &w)
    }

    pub fn parse(thesaurus: &str, thesaurus_name: &str, wordlist: &str) -> Result<Lexicon> {
        let mut b = LexiconBuilder::new();
        for line in wordlist.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            b.word(line);
        }
        if b.words.is_empty() {
            return Err(Error::EmptyWordlist);
        }
        for (idx, line) in thesaurus.lines().enumerate() {
            let lineno = idx + 1;
            if line.trim().is_empty() || line.starts_with('#') {
                continue;
            }
            let load_err = |message: String| Error::Load {
                source_name: thesaurus_name.to_string(),
                line: lineno,
                message,
            };
            let cols: Vec<&str> = line.split('\t').collect();
            if !(3..=4).contains(&cols.len()) {
                return Err(load_err(format!(
                    "expected 3 tab-separated columns, found {}",
                    cols.len()
                )));
            }
            let rel =
                Relation::parse(cols[1].trim()).ok_or_else(|| load_err(format!("unknown relation {:?}", cols[1])))?;
            b.relation(cols[0], rel, cols[2]).map_err(|e| load_err(e.to_string()))?;
        }
        b.build()
    }

    /// The toy lexicon shipped with the crate (about 2.6k words).
    pub fn bundled() -> &'static Lexicon {
        static BUNDLED: OnceLock<Lexicon> = OnceLock::new();
        BUNDLED.get_or_init(|| {
            Lexicon::parse(BUNDLED_THESAURUS, "thesaurus.tsv", BUNDLED_WORDLIST)
                .expect("bundled lexicon is well formed")
        })
    }

    pub fn contains(&self, word: &str) -> bool {
        self.words.contains(word)
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    /// All entries in sorted order.
    pub fn words(&self) -> Vec<&str> {
        let mut w: Vec<&str> = self.words.iter().map(String::as_str).collect();
        w.sort_unstable();
        w
    }

    /// Single words (no spaces) sharing exactly this letter multiset.
    pub fn with_letters(&self, counts: &LetterCounts) -> &[String] {
        self.by_signature.get(counts).map(Vec::as_slice).unwrap_or(&[])
    }

    /// Single words of the given length with their letter multisets.
    pub fn of_length(&self, len: usize) -> &[(String, LetterCounts)] {
        self.by_length.get(&len).map(Vec::as_slice).unwrap_or(&[])
    }

    /// Whether a candidate fits: for a single word, membership; for a
    /// phrase, either the phrase itself or each of its words is present.
    pub fn accepts(&self, candidate: &str) -> bool {
        self.contains(candidate) || (candidate.contains(' ') && candidate.split(' ').all(|w| self.contains(w)))
    }

    pub fn neighbours(&self, word: &str, relation: Relation) -> impl Iterator<Item = &str> {
        let map = match relation {
            Relation::Synonym => &self.synonyms,
            Relation::Hypernym => &self.hypernyms,
            Relation::Hyponym => &self.hyponyms,
        };
        map.get(word).into_iter().flatten().map(String::as_str)
    }

    /// Words reachable from `phrase` by one synonym edge, up to
    /// `depth.hyponyms` hyponym edges and up to `depth.hypernyms` hypernym
    /// edges; optionally with every inflection of each hit. The phrase is
    /// looked up whole and never returned itself.
    pub fn reverse_lookup(&self, phrase: &str, depth: LookupDepth) -> BTreeSet<String> {
        let key = phrase.split_whitespace().collect::<Vec<_>>().join(" ").to_lowercase();
        let mut out: BTreeSet<String> = BTreeSet::new();
        if !self.words.contains(&key) {
            return out;
        }
        out.extend(self.neighbours(&key, Relation::Synonym).map(str::to_string));
        for (relation, limit) in [
            (Relation::Hyponym, depth.hyponyms),
            (Relation::Hypernym, depth.hypernyms),
        ] {
            let mut visited: HashSet<&str> = HashSet::from([key.as_str()]);
            let mut frontier: Vec<&str> = vec![key.as_str()];
            for _ in 0..limit {
                let mut next = Vec::new();
                for w in &frontier {
                    for n in self.neighbours(w, relation) {
                        if visited.insert(n) {
                            next.push(n);
                        }
                    }
                }
                out.extend(next.iter().map(|s| s.to_string()));
                if next.is_empty() {
                    break;
                }
                frontier = next;
            }
        }
        if depth.inflections {
            let base: Vec<String> = out.iter().cloned().collect();
            for w in base {
                out.extend(inflect_phrase(&w));
            }
        }
        out.remove(&key);
        out
    }
}

fn inflect_phrase(phrase: &str) -> BTreeSet<String> {
    match phrase.rsplit_once(' ') {
        None => inflections(phrase),
        Some((head, last)) => inflections(last).into_iter().map(|l| format!("{head} {l}")).collect(),
    }
}

/// Size of the multiset intersection of the letters of both strings.
pub fn char_overlap_score(candidate: &str, clue_text: &str) -> usize {
    LetterCounts::of(candidate).overlap(&LetterCounts::of(clue_text))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn toy() -> Lexicon {
        let thes = "model\thypo\tbert\n\
                    bert\tsyn\tsesame street character\n\
                    model\thypo\tsupermodel\n\
                    supermodel\thypo\ttopmodel\n\
                    model\thyper\tsystem\n\
                    system\thyper\tentity\n\
                    # comment\n\
                    petal\tsynonym\tflower part\n";
        Lexicon::parse(thes, "toy.tsv", "bert\nmodel\npetal\n").unwrap()
    }

    #[test]
    fn hyponym_depth_one_reaches_bert() {
        let lex = toy();
        let r = lex.reverse_lookup("model", LookupDepth::new(1, 0, false));
        assert_eq!(r.into_iter().collect::<Vec<_>>(), ["bert", "supermodel"]);
        let r = lex.reverse_lookup("model", LookupDepth::new(2, 2, false));
        assert!(r.contains("topmodel") && r.contains("entity") && r.contains("system"));
    }

    #[test]
    fn closure_rules() {
        let lex = toy();
        assert!(lex.neighbours("bert", Relation::Hypernym).any(|w| w == "model"));
        assert!(lex.neighbours("system", Relation::Hyponym).any(|w| w == "model"));
        assert!(lex
            .neighbours("sesame street character", Relation::Synonym)
            .any(|w| w == "bert"));
        assert!(lex.contains("sesame street character"));
        assert!(lex.contains("topmodel"));
    }

    #[test]
    fn depth_zero_without_synonyms_is_empty() {
        let lex = toy();
        assert!(lex.reverse_lookup("system", LookupDepth::new(0, 0, false)).is_empty());
        assert!(lex
            .reverse_lookup("unknown phrase", LookupDepth::new(3, 3, true))
            .is_empty());
    }

    #[test]
    fn inflected_lookup() {
        let lex = toy();
        let r = lex.reverse_lookup("flower part", LookupDepth::new(0, 0, true));
        assert!(r.contains("petal") && r.contains("petals"));
        let r = lex.reverse_lookup("petal", LookupDepth::new(0, 0, true));
        assert!(r.contains("flower parts"));
    }

    #[test]
    fn unknown_relation_reports_line() {
        let err = Lexicon::parse("a\tsyn\tb\nc\tantonym\td\n", "t.tsv", "a\n").unwrap_err();
        match err {
            Error::Load { line, message, .. } => {
                assert_eq!(line, 2);
                assert!(message.contains("antonym"));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn empty_wordlist_is_an_error() {
        assert!(matches!(
            Lexicon::parse("a\tsyn\tb\n", "t", "\n# nothing\n"),
            Err(Error::EmptyWordlist)
        ));
    }

    #[test]
    fn duplicate_edges_collapse() {
        let lex = Lexicon::parse("a\tsyn\tb\nb\tsyn\ta\na\tsyn\tb\n", "t", "a\n").unwrap();
        assert_eq!(lex.neighbours("a", Relation::Synonym).count(), 1);
        assert_eq!(lex.neighbours("b", Relation::Synonym).count(), 1);
    }

    #[test]
    fn bundled_lexicon_loads() {
        let lex = Lexicon::bundled();
        assert!(lex.len() > 2000);
        for w in [
            "bert", "petal", "plate", "pleat", "leapt", "stop", "pots", "level", "uni",
        ] {
            assert!(lex.contains(w), "{w}");
        }
        assert!(!lex.contains("bret"));
        let r = lex.reverse_lookup("language model", LookupDepth::default());
        assert!(r.contains("bert"));
        let r = lex.reverse_lookup("model", LookupDepth::new(1, 0, false));
        assert!(r.contains("bert"));
    }

    #[test]
    fn overlap_examples() {
        assert_eq!(char_overlap_score("bert", "somber text"), 4);
        assert_eq!(char_overlap_score("bert", "aaaa"), 0);
        assert_eq!(char_overlap_score("alan turing", "alan turing"), 10);
    }

    proptest! {
        #[test]
        fn overlap_symmetric_and_bounded(a in "[a-z ]{0,16}", b in "[a-z ]{0,16}") {
            let s = char_overlap_score(&a, &b);
            prop_assert_eq!(s, char_overlap_score(&b, &a));
            prop_assert!(s <= crate::text::letter_len(&a).min(crate::text::letter_len(&b)));
        }

        #[test]
        fn lookup_monotone_in_depth(idx in 0usize..400, hypo in 0usize..3, hyper in 0usize..3) {
            let lex = Lexicon::bundled();
            let words = lex.words();
            let w = words[idx * 7 % words.len()];
            let base = lex.reverse_lookup(w, LookupDepth::new(hypo, hyper, false));
            let deeper_hypo = lex.reverse_lookup(w, LookupDepth::new(hypo + 1, hyper, false));
            let deeper_hyper = lex.reverse_lookup(w, LookupDepth::new(hypo, hyper + 1, false));
            let inflected = lex.reverse_lookup(w, LookupDepth::new(hypo, hyper, true));
            prop_assert!(base.is_subset(&deeper_hypo));
            prop_assert!(base.is_subset(&deeper_hyper));
            prop_assert!(base.is_subset(&inflected));
        }
    }
}
