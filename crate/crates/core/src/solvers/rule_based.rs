use std::collections::{BTreeSet, HashMap};
use std::ops::Range;
use std::time::Instant;

use super::{SolveOutcome, SolverConfig};
use crate::clue::{rank_candidates, CandidateAnswer, Clue, ClueType, Derivation};
use crate::enumeration::matches_enumeration;
use crate::lexicon::{IndicatorTable, Lexicon};
use crate::text::{tokenize, LetterCounts, Token};
use crate::wordplay::{
    anagram_search, detect_indicators, hidden_spans, initialism, insertion_forms, proper_slices, reverse_letters,
    SubstringKind,
};

/// Definition-plus-wordplay search over one clue.
///
/// Every prefix and suffix of up to `definition_max_tokens` tokens is tried
/// as the definition. Indicators found in the remaining tokens select a
/// wordplay operation, which is applied to the token windows directly
/// before or after the indicator. Double definitions pair a prefix with a
/// suffix covering the whole clue (one linking word allowed between them).
/// Words the definition alone points at are kept with the
/// `definition_only` weight, so they rank below confirmed wordplay.
///
/// Scores are `w_def * similarity + type_weight`, where similarity is 1 for
/// a candidate found by reverse lookup of the definition and otherwise the
/// Dice coefficient of their letter multisets.
pub fn solve_rule_based(clue: &Clue, lex: &Lexicon, ind: &IndicatorTable, cfg: &SolverConfig) -> SolveOutcome {
    let tokens = tokenize(&clue.clue_text);
    let mut s = Search {
        clue,
        words: tokens.iter().map(|t| t.text.clone()).collect(),
        lens: tokens.iter().map(|t| t.text.len()).collect(),
        tokens,
        lex,
        ind,
        cfg,
        deadline: Instant::now() + cfg.timeout(),
        timed_out: false,
        lookups: HashMap::new(),
        found: Vec::new(),
    };
    s.run();
    let mut candidates = s.found;
    rank_candidates(&mut candidates);
    candidates.truncate(cfg.max_candidates);
    SolveOutcome {
        candidates,
        timed_out: s.timed_out,
    }
}

struct Search<'a> {
    clue: &'a Clue,
    tokens: Vec<Token>,
    words: Vec<String>,
    lens: Vec<usize>,
    lex: &'a Lexicon,
    ind: &'a IndicatorTable,
    cfg: &'a SolverConfig,
    deadline: Instant,
    timed_out: bool,
    lookups: HashMap<Range<usize>, BTreeSet<String>>,
    found: Vec<CandidateAnswer>,
}

impl Search<'_> {
    fn run(&mut self) {
        let n = self.tokens.len();
        if n == 0 {
            return;
        }
        let dmax = self.cfg.definition_max_tokens.min(n);
        let mut defs: Vec<Range<usize>> = Vec::new();
        for k in 1..=dmax {
            defs.push(0..k);
            if k < n {
                defs.push(n - k..n);
            }
        }
        for def in &defs {
            self.definition_only(def.clone());
        }
        self.double_definitions();
        for def in defs {
            if self.expired() {
                return;
            }
            let fodder = if def.start == 0 { def.end..n } else { 0..def.start };
            if !fodder.is_empty() {
                self.wordplay(def, fodder);
            }
        }
    }

    fn expired(&mut self) -> bool {
        if !self.timed_out && Instant::now() >= self.deadline {
            self.timed_out = true;
        }
        self.timed_out
    }

    fn phrase(&self, r: Range<usize>) -> String {
        self.words[r].join(" ")
    }

    fn letters(&self, r: Range<usize>) -> usize {
        self.lens[r].iter().sum()
    }

    fn char_span(&self, r: &Range<usize>) -> Range<usize> {
        self.tokens[r.start].span.start..self.tokens[r.end - 1].span.end
    }

    fn lookup(&mut self, r: Range<usize>) -> &BTreeSet<String> {
        if !self.lookups.contains_key(&r) {
            let set = self
                .lex
                .reverse_lookup(&self.phrase(r.clone()), self.cfg.definition_depth);
            self.lookups.insert(r.clone(), set);
        }
        &self.lookups[&r]
    }

    fn similarity(&mut self, candidate: &str, def: Range<usize>) -> f64 {
        if self.lookup(def.clone()).contains(candidate) {
            return 1.0;
        }
        let a = LetterCounts::of(candidate);
        let b = LetterCounts::of(&self.phrase(def));
        let total = a.total() + b.total();
        if total == 0 {
            0.0
        } else {
            2.0 * a.overlap(&b) as f64 / total as f64
        }
    }

    fn emit(
        &mut self,
        text: String,
        clue_type: ClueType,
        def: Range<usize>,
        indicator: Option<Range<usize>>,
        inputs: Vec<String>,
    ) {
        if !matches_enumeration(&text, &self.clue.enumeration) || !self.lex.accepts(&text) {
            return;
        }
        let score = self.cfg.w_def * self.similarity(&text, def.clone()) + self.cfg.type_weight(clue_type);
        let derivation = Derivation {
            clue_type,
            definition_span: self.char_span(&def),
            indicator_span: indicator.map(|r| self.char_span(&r)),
            inputs,
        };
        self.found.push(CandidateAnswer {
            text,
            score,
            derivation: Some(derivation),
        });
    }

    /// Segments a run of letters per the enumeration, then emits it.
    fn emit_letters(
        &mut self,
        letters: &str,
        clue_type: ClueType,
        def: Range<usize>,
        indicator: Range<usize>,
        inputs: Vec<String>,
    ) {
        if let Some(text) = self.clue.enumeration.segment(letters) {
            self.emit(text, clue_type, def, Some(indicator), inputs);
        }
    }

    fn definition_only(&mut self, def: Range<usize>) {
        let e = &self.clue.enumeration;
        let hits: Vec<String> = self
            .lookup(def.clone())
            .iter()
            .filter(|w| matches_enumeration(w, e))
            .cloned()
            .collect();
        let phrase = self.phrase(def.clone());
        for w in hits {
            self.emit(w, ClueType::DefinitionOnly, def.clone(), None, vec![phrase.clone()]);
        }
    }

    fn double_definitions(&mut self) {
        let n = self.tokens.len();
        let dmax = self.cfg.definition_max_tokens;
        for p in 1..=dmax.min(n) {
            for q in 1..=dmax.min(n - p) {
                if n - p - q > 1 {
                    continue;
                }
                let (first, second) = (0..p, n - q..n);
                let a = self.lookup(first.clone()).clone();
                let clue = self.clue;
                let b = self.lookup(second.clone());
                let shared: Vec<String> = a
                    .intersection(b)
                    .filter(|w| matches_enumeration(w, &clue.enumeration))
                    .cloned()
                    .collect();
                let inputs = vec![self.phrase(first.clone()), self.phrase(second)];
                for w in shared {
                    self.emit(w, ClueType::DoubleDefinition, first.clone(), None, inputs.clone());
                }
            }
        }
    }

    /// Windows of fodder tokens ending right before or starting right after
    /// the indicator, shortest first.
    fn windows(&self, fodder: &Range<usize>, ind: &Range<usize>) -> Vec<Range<usize>> {
        let mut out = Vec::new();
        if ind.start > fodder.start {
            out.extend((fodder.start..ind.start).rev().map(|j| j..ind.start));
        }
        if ind.end < fodder.end {
            out.extend((ind.end + 1..=fodder.end).map(|j| ind.end..j));
        }
        out
    }

    fn wordplay(&mut self, def: Range<usize>, fodder: Range<usize>) {
        let total = self.clue.enumeration.total_letters();
        let matches = detect_indicators(&self.words[fodder.clone()], self.ind);
        for m in matches {
            if self.expired() {
                return;
            }
            let ind = fodder.start + m.span.start..fodder.start + m.span.end;
            let windows = self.windows(&fodder, &ind);
            match m.clue_type {
                ClueType::Anagram => {
                    let exact: Vec<_> = windows
                        .into_iter()
                        .filter(|w| self.letters(w.clone()) == total)
                        .collect();
                    for w in exact {
                        let fod = self.phrase(w);
                        let (hits, complete) =
                            anagram_search(&fod, &self.clue.enumeration, self.lex, Some(self.deadline));
                        for h in hits {
                            self.emit(h, ClueType::Anagram, def.clone(), Some(ind.clone()), vec![fod.clone()]);
                        }
                        if !complete {
                            self.timed_out = true;
                            return;
                        }
                    }
                }
                ClueType::Initialism => {
                    for w in windows.iter().filter(|w| w.len() == total) {
                        if let Ok(letters) = initialism(&self.words[w.clone()]) {
                            let inputs = self.words[w.clone()].to_vec();
                            self.emit_letters(&letters, ClueType::Initialism, def.clone(), ind.clone(), inputs);
                        }
                    }
                }
                ClueType::Hidden => {
                    // Longer windows contain every run of the shorter ones,
                    // so only the widest window on each side is scanned.
                    let widest = [fodder.start..ind.start, ind.end..fodder.end];
                    for w in widest.into_iter().filter(|w| !w.is_empty()) {
                        let owned = self.words[w].to_vec();
                        let refs: Vec<&str> = owned.iter().map(String::as_str).collect();
                        for (letters, touched) in hidden_spans(&refs, total) {
                            let inputs = owned[touched].to_vec();
                            self.emit_letters(&letters, ClueType::Hidden, def.clone(), ind.clone(), inputs);
                        }
                    }
                }
                ClueType::Reversal => {
                    let exact: Vec<_> = windows
                        .into_iter()
                        .filter(|w| self.letters(w.clone()) == total)
                        .collect();
                    for w in exact {
                        let fod = self.words[w].concat();
                        let rev = reverse_letters(&fod);
                        self.emit_letters(&rev, ClueType::Reversal, def.clone(), ind.clone(), vec![fod]);
                    }
                }
                ClueType::Insertion => {
                    let (left, right): (Vec<_>, Vec<_>) = windows.into_iter().partition(|w| w.end == ind.start);
                    for a in &left {
                        for b in &right {
                            if self.letters(a.clone()) + self.letters(b.clone()) != total {
                                continue;
                            }
                            let (x, y) = (self.words[a.clone()].concat(), self.words[b.clone()].concat());
                            for (outer, inner) in [(&y, &x), (&x, &y)] {
                                for form in insertion_forms(outer, inner) {
                                    let inputs = vec![outer.clone(), inner.clone()];
                                    self.emit_letters(&form, ClueType::Insertion, def.clone(), ind.clone(), inputs);
                                }
                            }
                        }
                    }
                }
                ClueType::SubstringInitial | ClueType::SubstringMiddle | ClueType::SubstringFinal => {
                    let kind = SubstringKind::from_clue_type(m.clue_type).expect("substring type");
                    let single: Vec<_> = windows
                        .into_iter()
                        .filter(|w| w.len() == 1 && self.lens[w.start] > total)
                        .collect();
                    for w in single {
                        let word = self.words[w.start].clone();
                        for slice in proper_slices(&word, kind) {
                            if slice.len() == total {
                                self.emit_letters(&slice, m.clue_type, def.clone(), ind.clone(), vec![word.clone()]);
                            }
                        }
                    }
                }
                ClueType::DoubleDefinition | ClueType::DefinitionOnly => {}
            }
        }
    }
}
