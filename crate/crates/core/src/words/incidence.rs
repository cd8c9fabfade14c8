use std::fmt;

use super::{Alphabet, Morphism, WordError};

/// Letter-count matrix of a morphism: `entries[x][y]` is the number of
/// occurrences of codomain letter `x` in the image of domain letter `y`.
#[derive(Clone, PartialEq, Eq)]
pub struct IncidenceMatrix {
    rows: Alphabet,
    cols: Alphabet,
    entries: Vec<Vec<u64>>,
}

impl IncidenceMatrix {
    pub(crate) fn from_parts(rows: Alphabet, cols: Alphabet, entries: Vec<Vec<u64>>) -> Self {
        debug_assert_eq!(entries.len(), rows.len());
        IncidenceMatrix {
            rows,
            cols,
            entries,
        }
    }

    pub fn rows(&self) -> &Alphabet {
        &self.rows
    }

    pub fn cols(&self) -> &Alphabet {
        &self.cols
    }

    pub fn entries(&self) -> &[Vec<u64>] {
        &self.entries
    }

    pub fn get(&self, row: char, col: char) -> Option<u64> {
        Some(self.entries[self.rows.index_of(row)?][self.cols.index_of(col)?])
    }

    pub fn column_sum(&self, col: usize) -> u64 {
        self.entries.iter().map(|r| r[col]).sum()
    }

    pub fn is_positive(&self) -> bool {
        self.entries.iter().flatten().all(|&x| x > 0)
    }

    /// Integer matrix product `self × rhs`.
    pub fn multiply(&self, rhs: &IncidenceMatrix) -> Result<IncidenceMatrix, WordError> {
        if self.cols != rhs.rows {
            return Err(WordError::AlphabetMismatch {
                expected: self.cols.to_string(),
                found: rhs.rows.to_string(),
            });
        }
        let n = self.rows.len();
        let m = rhs.cols.len();
        let k = self.cols.len();
        let mut entries = vec![vec![0u64; m]; n];
        for (i, row) in entries.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = (0..k).map(|t| self.entries[i][t] * rhs.entries[t][j]).sum();
            }
        }
        Ok(IncidenceMatrix::from_parts(
            self.rows.clone(),
            rhs.cols.clone(),
            entries,
        ))
    }

    pub(crate) fn pattern(&self) -> BoolMatrix {
        BoolMatrix {
            rows: self.rows.len(),
            cols: self.cols.len(),
            cells: self
                .entries
                .iter()
                .map(|r| r.iter().map(|&x| x > 0).collect())
                .collect(),
        }
    }
}

impl fmt::Debug for IncidenceMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IncidenceMatrix({:?} x {:?}, {:?})", self.rows, self.cols, self.entries)
    }
}

impl fmt::Display for IncidenceMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "  ")?;
        for c in self.cols.iter() {
            write!(f, " {c}")?;
        }
        for (r, row) in self.rows.iter().zip(&self.entries) {
            write!(f, "\n{r} ")?;
            for x in row {
                write!(f, " {x}")?;
            }
        }
        Ok(())
    }
}

/// Zero/nonzero pattern of a nonnegative matrix. Products of patterns are
/// exact for positivity questions and never overflow.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct BoolMatrix {
    rows: usize,
    cols: usize,
    cells: Vec<Vec<bool>>,
}

impl BoolMatrix {
    pub(crate) fn multiply(&self, rhs: &BoolMatrix) -> BoolMatrix {
        debug_assert_eq!(self.cols, rhs.rows);
        let cells = (0..self.rows)
            .map(|i| {
                (0..rhs.cols)
                    .map(|j| (0..self.cols).any(|t| self.cells[i][t] && rhs.cells[t][j]))
                    .collect()
            })
            .collect();
        BoolMatrix {
            rows: self.rows,
            cols: rhs.cols,
            cells,
        }
    }

    pub(crate) fn is_positive(&self) -> bool {
        self.cells.iter().flatten().all(|&x| x)
    }
}

/// Largest power that needs checking: `(|A| - 1)^2 + 1`.
pub fn primitivity_exponent_bound(alphabet_size: usize) -> usize {
    let n = alphabet_size.saturating_sub(1);
    n * n + 1
}

impl Morphism {
    /// Some power `k ≤ (|A|-1)^2 + 1` of the incidence matrix is positive.
    pub fn is_primitive(&self) -> Result<bool, WordError> {
        if !self.is_endomorphism() {
            return Err(WordError::NotEndomorphism);
        }
        let base = self.incidence_matrix().pattern();
        let mut power = base.clone();
        for k in 1..=primitivity_exponent_bound(self.domain().len()) {
            if power.is_positive() {
                return Ok(true);
            }
            if k < primitivity_exponent_bound(self.domain().len()) {
                power = power.multiply(&base);
            }
        }
        Ok(false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fib() -> Morphism {
        Morphism::from_rules(&[('a', "ab"), ('b', "a")]).unwrap()
    }

    #[test]
    fn fibonacci_matrix() {
        assert_eq!(fib().incidence_matrix().entries(), &[vec![1, 1], vec![1, 0]]);
    }

    #[test]
    fn identity_matrix() {
        let ab = Alphabet::new("ab".chars()).unwrap();
        assert_eq!(
            Morphism::identity(&ab).incidence_matrix().entries(),
            &[vec![1, 0], vec![0, 1]]
        );
    }

    #[test]
    fn primitivity() {
        assert!(fib().is_primitive().unwrap());
        let d = Morphism::from_rules(&[('a', "ab"), ('b', "b"), ('c', "c")]).unwrap();
        assert!(!d.is_primitive().unwrap());
        let ab = Alphabet::new("ab".chars()).unwrap();
        assert!(!Morphism::identity(&ab).is_primitive().unwrap());
        let x = Morphism::from_rules(&[('x', "ab"), ('y', "a")]).unwrap();
        assert_eq!(x.is_primitive(), Err(WordError::NotEndomorphism));
    }

    #[test]
    fn primitive_needs_the_full_bound() {
        // Wielandt-type matrix on 3 letters: first positive power is (3-1)^2+1 = 5
        let m = Morphism::from_rules(&[('a', "b"), ('b', "c"), ('c', "ab")]).unwrap();
        assert!(m.is_primitive().unwrap());
        let pattern = m.incidence_matrix().pattern();
        let mut p = pattern.clone();
        for _ in 1..4 {
            p = p.multiply(&pattern);
        }
        assert!(!p.is_positive(), "fourth power should still have a zero");
    }

    #[test]
    fn column_sums_are_image_lengths() {
        let m = fib().incidence_matrix();
        assert_eq!(m.column_sum(0), 2);
        assert_eq!(m.column_sum(1), 1);
    }
}
