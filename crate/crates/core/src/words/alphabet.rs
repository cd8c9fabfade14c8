use std::fmt;

use super::WordError;

/// Finite ordered set of single-character letters.
///
/// Letters are ASCII alphanumerics and are kept sorted, so two alphabets
/// compare equal exactly when they hold the same letters.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Alphabet {
    letters: Vec<char>,
}

pub(crate) fn is_letter(c: char) -> bool {
    c.is_ascii_alphanumeric()
}

impl Alphabet {
    pub fn new<I: IntoIterator<Item = char>>(letters: I) -> Result<Self, WordError> {
        let mut letters: Vec<char> = letters.into_iter().collect();
        if let Some(&bad) = letters.iter().find(|c| !is_letter(**c)) {
            return Err(WordError::InvalidLetter(bad));
        }
        letters.sort_unstable();
        if let Some(w) = letters.windows(2).find(|w| w[0] == w[1]) {
            return Err(WordError::DuplicateLetter(w[0]));
        }
        if letters.is_empty() {
            return Err(WordError::EmptyAlphabet);
        }
        Ok(Alphabet { letters })
    }

    /// Like [`Alphabet::new`] but silently drops repeated letters.
    pub fn from_letters_dedup<I: IntoIterator<Item = char>>(
        letters: I,
    ) -> Result<Self, WordError> {
        let mut letters: Vec<char> = letters.into_iter().collect();
        letters.sort_unstable();
        letters.dedup();
        Self::new(letters)
    }

    pub fn letters(&self) -> &[char] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn contains(&self, c: char) -> bool {
        self.index_of(c).is_some()
    }

    pub fn index_of(&self, c: char) -> Option<usize> {
        self.letters.binary_search(&c).ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = char> + '_ {
        self.letters.iter().copied()
    }

    pub fn is_subset_of(&self, other: &Alphabet) -> bool {
        self.iter().all(|c| other.contains(c))
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.letters {
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self)
    }
}
