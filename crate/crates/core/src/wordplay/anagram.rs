use std::collections::BTreeSet;
use std::time::Instant;

use crate::enumeration::Enumeration;
use crate::lexicon::Lexicon;
use crate::text::{letters_only, LetterCounts};

/// Every rearrangement of `letters` that fits `target` with each word in
/// the lexicon, excluding the input letter sequence itself.
pub fn anagram_solutions(letters: &str, target: &Enumeration, lex: &Lexicon) -> BTreeSet<String> {
    anagram_search(letters, target, lex, None).0
}

/// As [`anagram_solutions`], stopping early once `deadline` passes. The
/// flag is false when the search was cut short.
pub fn anagram_search(
    letters: &str,
    target: &Enumeration,
    lex: &Lexicon,
    deadline: Option<Instant>,
) -> (BTreeSet<String>, bool) {
    let fodder = letters_only(letters);
    let counts = LetterCounts::of(&fodder);
    let mut out = BTreeSet::new();
    if counts.total() != target.total_letters() {
        return (out, true);
    }
    if let [_] = target.parts() {
        out.extend(lex.with_letters(&counts).iter().filter(|w| **w != fodder).cloned());
        return (out, true);
    }
    let mut search = Search {
        lex,
        parts: target.parts(),
        deadline,
        steps: 0,
        expired: false,
        stack: Vec::new(),
        out: &mut out,
        fodder: &fodder,
    };
    search.descend(0, counts);
    let complete = !search.expired;
    (out, complete)
}

struct Search<'a> {
    lex: &'a Lexicon,
    parts: &'a [usize],
    deadline: Option<Instant>,
    steps: u64,
    expired: bool,
    stack: Vec<&'a str>,
    out: &'a mut BTreeSet<String>,
    fodder: &'a str,
}

impl<'a> Search<'a> {
    fn descend(&mut self, depth: usize, remaining: LetterCounts) {
        if self.expired {
            return;
        }
        if depth + 1 == self.parts.len() {
            let lex = self.lex;
            for w in lex.with_letters(&remaining) {
                self.stack.push(w);
                if self.stack.concat() != self.fodder {
                    self.out.insert(self.stack.join(" "));
                }
                self.stack.pop();
            }
            return;
        }
        let lex = self.lex;
        for (word, sig) in lex.of_length(self.parts[depth]) {
            self.steps += 1;
            if self.steps.is_multiple_of(1024) {
                if let Some(d) = self.deadline {
                    if Instant::now() >= d {
                        self.expired = true;
                        return;
                    }
                }
            }
            if let Some(rest) = remaining.checked_sub(sig) {
                self.stack.push(word);
                self.descend(depth + 1, rest);
                self.stack.pop();
                if self.expired {
                    return;
                }
            }
        }
    }
}
