use crate::words::{Alphabet, Morphism};

use super::LanguageError;

/// Index of the first entry of a directive sequence.
pub const FIRST_LEVEL: usize = 2;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DirectiveEntry {
    pub morphism: Morphism,
    pub seed: char,
}

/// A finite prefix `(σ_n, a_n)` for `n = 2, 3, …` with `σ_n : A_n → A_{n-1}`
/// and `a_n ∈ A_n`, plus an optional increasing list of marked levels.
///
/// Marks range over `2..=last_level() + 1`; the extra value lets a
/// half-open block `[n_i, n_{i+1})` end at the final entry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DirectiveSequence {
    entries: Vec<DirectiveEntry>,
    marks: Vec<usize>,
}

impl DirectiveSequence {
    pub fn new(entries: Vec<DirectiveEntry>, marks: Vec<usize>) -> Result<Self, LanguageError> {
        if entries.is_empty() {
            return Err(LanguageError::EmptyDirective);
        }
        for (i, e) in entries.iter().enumerate() {
            let level = i + FIRST_LEVEL;
            if !e.morphism.domain().contains(e.seed) {
                return Err(LanguageError::SeedNotInAlphabet {
                    level,
                    seed: e.seed,
                });
            }
            if i > 0 && e.morphism.codomain() != entries[i - 1].morphism.domain() {
                return Err(LanguageError::AlphabetMismatch {
                    level,
                    expected: entries[i - 1].morphism.domain().to_string(),
                    found: e.morphism.codomain().to_string(),
                });
            }
        }
        let seq = DirectiveSequence {
            entries,
            marks: Vec::new(),
        };
        seq.with_marks(marks)
    }

    /// Replaces the marks, checking they are strictly increasing and in range.
    pub fn with_marks(mut self, marks: Vec<usize>) -> Result<Self, LanguageError> {
        if marks.windows(2).any(|w| w[0] >= w[1]) {
            return Err(LanguageError::InvalidMarks(format!(
                "marks must be strictly increasing: {marks:?}"
            )));
        }
        if let Some(&bad) = marks
            .iter()
            .find(|&&n| n < FIRST_LEVEL || n > self.last_level() + 1)
        {
            return Err(LanguageError::InvalidMarks(format!(
                "mark {bad} outside {FIRST_LEVEL}..={}",
                self.last_level() + 1
            )));
        }
        self.marks = marks;
        Ok(self)
    }

    /// `count` copies of `(m, seed)`.
    pub fn stationary(m: &Morphism, seed: char, count: usize) -> Result<Self, LanguageError> {
        let entry = DirectiveEntry {
            morphism: m.clone(),
            seed,
        };
        DirectiveSequence::new(vec![entry; count], Vec::new())
    }

    /// The morphisms of `pattern` repeated cyclically, all seeded with `seed`.
    pub fn periodic(pattern: &[Morphism], seed: char, count: usize) -> Result<Self, LanguageError> {
        if pattern.is_empty() {
            return Err(LanguageError::EmptyDirective);
        }
        let entries = (0..count)
            .map(|i| DirectiveEntry {
                morphism: pattern[i % pattern.len()].clone(),
                seed,
            })
            .collect();
        DirectiveSequence::new(entries, Vec::new())
    }

    pub fn entries(&self) -> &[DirectiveEntry] {
        &self.entries
    }

    pub fn marks(&self) -> &[usize] {
        &self.marks
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn last_level(&self) -> usize {
        self.entries.len() + FIRST_LEVEL - 1
    }

    pub fn entry(&self, level: usize) -> Result<&DirectiveEntry, LanguageError> {
        level
            .checked_sub(FIRST_LEVEL)
            .and_then(|i| self.entries.get(i))
            .ok_or(LanguageError::LevelOutOfRange { level })
    }

    pub fn morphism(&self, level: usize) -> Result<&Morphism, LanguageError> {
        Ok(&self.entry(level)?.morphism)
    }

    pub fn morphisms(&self) -> impl Iterator<Item = &Morphism> + '_ {
        self.entries.iter().map(|e| &e.morphism)
    }

    /// `A_n`; `A_1` is the codomain of `σ_2`.
    pub fn alphabet(&self, level: usize) -> Result<&Alphabet, LanguageError> {
        if level == 1 {
            return Ok(self.entries[0].morphism.codomain());
        }
        Ok(self.morphism(level)?.domain())
    }

    /// Largest `|A_n|` over the prefix, `A_1` included.
    pub fn max_alphabet_size(&self) -> usize {
        self.entries
            .iter()
            .map(|e| e.morphism.domain().len())
            .chain(std::iter::once(self.entries[0].morphism.codomain().len()))
            .max()
            .unwrap_or(0)
    }

    /// The sequence `(σ_k, a_k)_{k ≥ level}`, re-indexed to start at 2.
    /// It generates a subshift over `A_{level-1}`.
    pub fn tail(&self, level: usize) -> Result<DirectiveSequence, LanguageError> {
        self.entry(level)?;
        let start = level - FIRST_LEVEL;
        let marks = self
            .marks
            .iter()
            .filter(|&&n| n >= level)
            .map(|&n| n - start)
            .collect();
        DirectiveSequence::new(self.entries[start..].to_vec(), marks)
    }

    /// Entries for levels `2..=last`.
    pub fn prefix(&self, last: usize) -> Result<DirectiveSequence, LanguageError> {
        self.entry(last)?;
        let marks = self.marks.iter().copied().filter(|&n| n <= last + 1).collect();
        DirectiveSequence::new(self.entries[..last + 1 - FIRST_LEVEL].to_vec(), marks)
    }

    /// Same sequence with the morphism at each level replaced by `f(level, σ)`.
    pub fn map_morphisms<F>(&self, mut f: F) -> Result<DirectiveSequence, LanguageError>
    where
        F: FnMut(usize, &Morphism) -> Result<Morphism, LanguageError>,
    {
        let entries = self
            .entries
            .iter()
            .enumerate()
            .map(|(i, e)| {
                Ok(DirectiveEntry {
                    morphism: f(i + FIRST_LEVEL, &e.morphism)?,
                    seed: e.seed,
                })
            })
            .collect::<Result<Vec<_>, LanguageError>>()?;
        DirectiveSequence::new(entries, self.marks.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fib() -> Morphism {
        Morphism::from_rules(&[('a', "ab"), ('b', "a")]).unwrap()
    }

    #[test]
    fn levels_start_at_two() {
        let d = DirectiveSequence::stationary(&fib(), 'a', 5).unwrap();
        assert_eq!(d.last_level(), 6);
        assert!(d.morphism(1).is_err());
        assert!(d.morphism(2).is_ok());
        assert!(d.morphism(7).is_err());
        assert_eq!(d.alphabet(1).unwrap().to_string(), "ab");
    }

    #[test]
    fn chaining_is_checked() {
        let x = Morphism::from_rules(&[('x', "ab"), ('y', "a")]).unwrap();
        let entries = vec![
            DirectiveEntry { morphism: x.clone(), seed: 'x' },
            DirectiveEntry { morphism: fib(), seed: 'a' },
        ];
        assert!(matches!(
            DirectiveSequence::new(entries, vec![]),
            Err(LanguageError::AlphabetMismatch { level: 3, .. })
        ));
        let entries = vec![
            DirectiveEntry { morphism: fib(), seed: 'a' },
            DirectiveEntry { morphism: x, seed: 'x' },
        ];
        // σ_3 : {x,y} -> {a,b} = A_2
        assert!(DirectiveSequence::new(entries, vec![]).is_ok());
    }

    #[test]
    fn seed_and_marks_are_checked() {
        let bad_seed = vec![DirectiveEntry { morphism: fib(), seed: 'c' }];
        assert!(matches!(
            DirectiveSequence::new(bad_seed, vec![]),
            Err(LanguageError::SeedNotInAlphabet { level: 2, seed: 'c' })
        ));
        let d = DirectiveSequence::stationary(&fib(), 'a', 4).unwrap();
        assert!(d.clone().with_marks(vec![2, 4, 6]).is_ok());
        assert!(d.clone().with_marks(vec![2, 2]).is_err());
        assert!(d.clone().with_marks(vec![1, 3]).is_err());
        assert!(d.with_marks(vec![7]).is_err());
    }

    #[test]
    fn tail_reindexes() {
        let d = DirectiveSequence::stationary(&fib(), 'a', 6)
            .unwrap()
            .with_marks(vec![2, 4, 6])
            .unwrap();
        let t = d.tail(4).unwrap();
        assert_eq!(t.len(), 4);
        assert_eq!(t.marks(), &[2, 4]);
        assert_eq!(d.prefix(4).unwrap().len(), 3);
    }
}
