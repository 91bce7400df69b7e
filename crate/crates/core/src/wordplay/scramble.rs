use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::text::{letters_only, LetterCounts};

/// A random non-identity permutation of the word's letters (spaces
/// removed), reproducible for a given seed.
pub fn scramble(word: &str, seed: u64) -> Result<String> {
    scramble_with(word, &mut ChaCha8Rng::seed_from_u64(seed))
}

/// Shuffles until the result differs from the input. Rejection keeps the
/// draw uniform over the non-identity arrangements.
pub fn scramble_with<R: Rng + ?Sized>(word: &str, rng: &mut R) -> Result<String> {
    let letters = letters_only(word);
    if LetterCounts::of(&letters).distinct() < 2 {
        return Err(Error::Unscramblable(word.to_string()));
    }
    let mut bytes = letters.clone().into_bytes();
    loop {
        bytes.shuffle(rng);
        if bytes != letters.as_bytes() {
            return Ok(String::from_utf8(bytes).expect("ascii letters"));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn preserves_letters_and_moves_something() {
        for seed in 0..10_000 {
            let s = scramble("petal", seed).unwrap();
            assert_ne!(s, "petal");
            let mut a: Vec<u8> = s.into_bytes();
            a.sort_unstable();
            assert_eq!(a, b"aelpt");
        }
    }

    #[test]
    fn deterministic_per_seed() {
        assert_eq!(scramble("petal", 7).unwrap(), scramble("petal", 7).unwrap());
    }

    #[test]
    fn rejects_single_letter_words() {
        assert!(scramble("aa", 1).is_err());
        assert!(scramble("a", 1).is_err());
        assert_eq!(scramble("ab", 3).unwrap(), "ba");
    }

    #[test]
    fn spaces_removed() {
        let s = scramble("alan turing", 5).unwrap();
        assert_eq!(s.len(), 10);
        assert!(!s.contains(' '));
    }
}
