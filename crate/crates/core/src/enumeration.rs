use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Separator {
    Space,
    Hyphen,
}

/// Letters per answer word, e.g. `(8,4)` or `(3-2)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Enumeration {
    parts: Vec<usize>,
    separators: Vec<Separator>,
}

impl Enumeration {
    pub fn new(parts: Vec<usize>, separators: Vec<Separator>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::invalid("enumeration needs at least one part"));
        }
        if parts.contains(&0) {
            return Err(Error::invalid("enumeration parts must be positive"));
        }
        if separators.len() + 1 != parts.len() {
            return Err(Error::invalid("enumeration needs exactly one separator between parts"));
        }
        Ok(Enumeration { parts, separators })
    }

    /// Single-word enumeration.
    pub fn single(len: usize) -> Result<Self> {
        Self::new(vec![len], Vec::new())
    }

    /// Space-separated parts.
    pub fn from_parts(parts: &[usize]) -> Result<Self> {
        let seps = vec![Separator::Space; parts.len().saturating_sub(1)];
        Self::new(parts.to_vec(), seps)
    }

    /// The enumeration an answer implies by its word lengths.
    pub fn of_answer(answer: &str) -> Result<Self> {
        let parts: Vec<usize> = answer.split_whitespace().map(|w| w.chars().count()).collect();
        Self::from_parts(&parts)
    }

    pub fn parse(text: &str) -> Result<Self> {
        Parser::new(text).parse()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn separators(&self) -> &[Separator] {
        &self.separators
    }

    pub fn total_letters(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn word_count(&self) -> usize {
        self.parts.len()
    }

    /// Splits a run of letters at the part boundaries, joining with spaces.
    /// `None` if the letter count does not equal the total.
    pub fn segment(&self, letters: &str) -> Option<String> {
        let chars: Vec<char> = letters.chars().filter(|c| !c.is_whitespace()).collect();
        if chars.len() != self.total_letters() {
            return None;
        }
        let mut out = String::with_capacity(chars.len() + self.parts.len());
        let mut at = 0;
        for (i, &n) in self.parts.iter().enumerate() {
            if i > 0 {
                out.push(' ');
            }
            out.extend(&chars[at..at + n]);
            at += n;
        }
        Some(out)
    }
}

impl fmt::Display for Enumeration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, part) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(match self.separators[i - 1] {
                    Separator::Space => ",",
                    Separator::Hyphen => "-",
                })?;
            }
            write!(f, "{part}")?;
        }
        f.write_str(")")
    }
}

impl FromStr for Enumeration {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Enumeration::parse(s)
    }
}

impl Serialize for Enumeration {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Enumeration {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        Enumeration::parse(&s).map_err(serde::de::Error::custom)
    }
}

/// True iff the answer's words have exactly the enumerated lengths, in
/// order. Hyphen and space separators are treated alike.
pub fn matches_enumeration(answer: &str, enumeration: &Enumeration) -> bool {
    let mut words = answer.split_whitespace();
    for &part in enumeration.parts() {
        match words.next() {
            Some(w) if w.chars().count() == part => {}
            _ => return false,
        }
    }
    words.next().is_none()
}

struct Parser<'a> {
    text: &'a str,
    chars: Vec<char>,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Parser {
            text,
            chars: text.chars().collect(),
            pos: 0,
        }
    }

    fn error(&self) -> Error {
        let found = match self.chars.get(self.pos) {
            Some(c) => format!("{c:?}"),
            None => "end of input".to_string(),
        };
        Error::Enumeration {
            text: self.text.to_string(),
            found,
            position: self.pos,
        }
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.chars.get(self.pos) == Some(&c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error())
        }
    }

    fn number(&mut self) -> Result<usize> {
        let start = self.pos;
        let mut value: usize = 0;
        while let Some(d) = self.chars.get(self.pos).and_then(|c| c.to_digit(10)) {
            value = value
                .checked_mul(10)
                .and_then(|v| v.checked_add(d as usize))
                .ok_or_else(|| self.error())?;
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error());
        }
        if value == 0 {
            self.pos = start;
            return Err(self.error());
        }
        Ok(value)
    }

    fn parse(mut self) -> Result<Enumeration> {
        self.skip_ws();
        self.expect('(')?;
        let mut parts = Vec::new();
        let mut separators = Vec::new();
        loop {
            self.skip_ws();
            parts.push(self.number()?);
            self.skip_ws();
            match self.chars.get(self.pos) {
                Some(',') => separators.push(Separator::Space),
                Some(c) if crate::text::is_hyphen(*c) => separators.push(Separator::Hyphen),
                Some(')') => {
                    self.pos += 1;
                    break;
                }
                _ => return Err(self.error()),
            }
            self.pos += 1;
        }
        self.skip_ws();
        if self.pos != self.chars.len() {
            return Err(self.error());
        }
        Enumeration::new(parts, separators)
    }
}
