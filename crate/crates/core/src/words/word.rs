use std::fmt;

use super::alphabet::is_letter;
use super::{Alphabet, WordError};

/// A finite word. Every symbol is an ASCII alphanumeric letter, so byte
/// offsets and letter positions coincide.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(String);

impl Word {
    pub fn empty() -> Self {
        Word(String::new())
    }

    pub fn new(s: &str) -> Result<Self, WordError> {
        if let Some(bad) = s.chars().find(|c| !is_letter(*c)) {
            return Err(WordError::InvalidLetter(bad));
        }
        Ok(Word(s.to_owned()))
    }

    /// Builds a word and checks every symbol against `alphabet`.
    pub fn over(alphabet: &Alphabet, s: &str) -> Result<Self, WordError> {
        let w = Self::new(s)?;
        w.check_over(alphabet)?;
        Ok(w)
    }

    pub fn from_letter(c: char) -> Self {
        debug_assert!(is_letter(c));
        Word(c.to_string())
    }

    pub(crate) fn from_string_unchecked(s: String) -> Self {
        Word(s)
    }

    pub fn check_over(&self, alphabet: &Alphabet) -> Result<(), WordError> {
        match self.letters().find(|c| !alphabet.contains(*c)) {
            Some(c) => Err(WordError::UnknownLetter(c)),
            None => Ok(()),
        }
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn as_bytes(&self) -> &[u8] {
        self.0.as_bytes()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> impl DoubleEndedIterator<Item = char> + '_ {
        self.0.bytes().map(char::from)
    }

    pub fn first(&self) -> Option<char> {
        self.0.bytes().next().map(char::from)
    }

    pub fn last(&self) -> Option<char> {
        self.0.bytes().next_back().map(char::from)
    }

    pub fn letter_at(&self, i: usize) -> Option<char> {
        self.0.as_bytes().get(i).map(|b| char::from(*b))
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut s = String::with_capacity(self.len() + other.len());
        s.push_str(&self.0);
        s.push_str(&other.0);
        Word(s)
    }

    pub fn push(&mut self, c: char) {
        debug_assert!(is_letter(c));
        self.0.push(c);
    }

    pub fn push_word(&mut self, w: &Word) {
        self.0.push_str(&w.0);
    }

    /// The factor starting at `start` with length `len`.
    pub fn factor(&self, start: usize, len: usize) -> Word {
        Word(self.0[start..start + len].to_owned())
    }

    pub fn contains_factor(&self, f: &Word) -> bool {
        self.0.contains(f.as_str())
    }

    pub fn count(&self, c: char) -> usize {
        self.letters().filter(|x| *x == c).count()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            f.write_str("ε")
        } else {
            write!(f, "{:?}", self.0)
        }
    }
}

impl std::str::FromStr for Word {
    type Err = WordError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Word::new(s)
    }
}
