use crate::clue::Clue;
use crate::enumeration::Enumeration;
use crate::error::{Error, Result};

/// `<clue_text> (<enumeration>) => <answer>`, or without the parenthetical.
pub fn seq2seq_line(clue: &Clue, with_lengths: bool) -> String {
    let answer = clue.answer.to_lowercase();
    if with_lengths {
        format!("{} {} => {}", clue.clue_text, clue.enumeration, answer)
    } else {
        format!("{} => {}", clue.clue_text, answer)
    }
}

pub fn export_seq2seq(clues: &[Clue], with_lengths: bool) -> Vec<String> {
    clues.iter().map(|c| seq2seq_line(c, with_lengths)).collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Seq2SeqLine {
    pub clue_text: String,
    pub enumeration: Option<Enumeration>,
    pub answer: String,
}

/// Inverse of [`seq2seq_line`]. The last ` => ` separates input from
/// target; a trailing parenthetical that parses as an enumeration is split
/// off the input.
pub fn parse_seq2seq_line(line: &str) -> Result<Seq2SeqLine> {
    let (input, answer) = line
        .rsplit_once(" => ")
        .ok_or_else(|| Error::invalid(format!("no ' => ' separator in {line:?}")))?;
    let mut clue_text = input.to_string();
    let mut enumeration = None;
    if input.ends_with(')') {
        if let Some(open) = input.rfind('(') {
            if let Ok(e) = Enumeration::parse(&input[open..]) {
                enumeration = Some(e);
                clue_text = input[..open].trim_end().to_string();
            }
        }
    }
    Ok(Seq2SeqLine {
        clue_text,
        enumeration,
        answer: answer.to_string(),
    })
}
