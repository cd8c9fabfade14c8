use crate::words::{Alphabet, Morphism, Word};

use super::BratteliError;

/// Name used for the root vertex `v₀` in exported and read-back forms.
pub const ROOT_LABEL: char = '0';

/// An ordered Bratteli diagram truncated at a finite depth.
///
/// `V_0 = {v₀}`; every vertex of `V_1` has exactly one edge to `v₀`. For
/// each level `n ≥ 2` the ordered edge fibres are stored as the morphism
/// read at that level: the edges leaving `v ∈ V_n` are, in order, the
/// letters of `σ_n(v)`. An edge is identified by `(level, source, index)`.
///
/// The *depth* is the number of morphism levels, so the top level is
/// `V_{depth+1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BratteliDiagram {
    first_level: Option<Alphabet>,
    levels: Vec<Morphism>,
}

impl BratteliDiagram {
    /// The diagram with `V_0` only.
    pub fn root_only() -> Self {
        BratteliDiagram {
            first_level: None,
            levels: Vec::new(),
        }
    }

    pub fn from_first_level(v1: Alphabet) -> Self {
        BratteliDiagram {
            first_level: Some(v1),
            levels: Vec::new(),
        }
    }

    /// Realises `ms[0], ms[1], …` as the morphisms read at levels `2, 3, …`.
    pub fn build_from_morphisms(ms: &[Morphism]) -> Result<Self, BratteliError> {
        let first = ms.first().ok_or(BratteliError::EmptyInput)?;
        let mut diag = BratteliDiagram::from_first_level(first.codomain().clone());
        for m in ms {
            diag.push_level(m.clone())?;
        }
        Ok(diag)
    }

    /// Adds a level on top; its codomain must be the current top level.
    pub fn push_level(&mut self, m: Morphism) -> Result<(), BratteliError> {
        let level = self.top_level() + 1;
        let top = self
            .vertices(self.top_level())
            .ok_or(BratteliError::EmptyInput)?;
        if m.codomain() != top {
            return Err(BratteliError::AlphabetMismatch {
                level,
                expected: top.to_string(),
                found: m.codomain().to_string(),
            });
        }
        if let Some(v) = m
            .codomain()
            .iter()
            .find(|&v| !m.images().iter().any(|w| w.letters().any(|x| x == v)))
        {
            return Err(BratteliError::UnreachedVertex {
                level: level - 1,
                vertex: v,
            });
        }
        self.levels.push(m);
        Ok(())
    }

    /// Number of morphism levels.
    pub fn depth(&self) -> usize {
        self.levels.len()
    }

    /// Index of the highest vertex level.
    pub fn top_level(&self) -> usize {
        match self.first_level {
            None => 0,
            Some(_) => self.levels.len() + 1,
        }
    }

    /// `V_level` for `level ≥ 1`.
    pub fn vertices(&self, level: usize) -> Option<&Alphabet> {
        match level {
            0 => None,
            1 => self.first_level.as_ref(),
            n => self.levels.get(n - 2).map(Morphism::domain),
        }
    }

    pub fn vertex_counts(&self) -> Vec<usize> {
        (0..=self.top_level())
            .map(|l| self.vertices(l).map_or(1, Alphabet::len))
            .collect()
    }

    pub fn max_vertices(&self) -> usize {
        self.vertex_counts().into_iter().max().unwrap_or(1)
    }

    pub fn edge_count(&self, level: usize) -> usize {
        match level {
            1 => self.first_level.as_ref().map_or(0, Alphabet::len),
            n if n >= 2 => self
                .levels
                .get(n - 2)
                .map_or(0, |m| m.images().iter().map(Word::len).sum()),
            _ => 0,
        }
    }

    pub(crate) fn level_morphism(&self, level: usize) -> Option<&Morphism> {
        level.checked_sub(2).and_then(|i| self.levels.get(i))
    }

    /// Ordered targets of the edges leaving `v ∈ V_level`, `level ≥ 2`.
    pub fn fiber(&self, level: usize, v: char) -> Option<&Word> {
        self.level_morphism(level)?.image(v)
    }

    pub fn fiber_len(&self, level: usize, v: char) -> usize {
        match level {
            1 => 1,
            _ => self.fiber(level, v).map_or(0, Word::len),
        }
    }

    /// The morphism read at `level`: `σ(v) = t(e_1)⋯t(e_l)`.
    ///
    /// Level 1 gives the constant map `v ↦ v₀`, with `v₀` written as
    /// [`ROOT_LABEL`].
    pub fn read_morphism(&self, level: usize) -> Result<Morphism, BratteliError> {
        if level == 1 {
            let v1 = self
                .first_level
                .as_ref()
                .ok_or(BratteliError::LevelOutOfRange { level })?;
            let root = Alphabet::new([ROOT_LABEL]).expect("valid label");
            let rules = v1.iter().map(|v| (v, Word::from_letter(ROOT_LABEL)));
            return Ok(Morphism::new(v1.clone(), root, rules)?);
        }
        self.level_morphism(level)
            .cloned()
            .ok_or(BratteliError::LevelOutOfRange { level })
    }

    /// Keeps levels `1..=depth+1`.
    pub fn truncate(&self, depth: usize) -> Result<BratteliDiagram, BratteliError> {
        if depth > self.depth() {
            return Err(BratteliError::DepthOutOfRange {
                depth,
                max: self.depth(),
            });
        }
        Ok(BratteliDiagram {
            first_level: self.first_level.clone(),
            levels: self.levels[..depth].to_vec(),
        })
    }

    /// Keeps the vertex levels `1` and `cuts`; level `k` of the result reads
    /// the composition of the original morphisms from just above the
    /// previous cut up to `cuts[k]`. Edge orders become the lexicographic
    /// order on the composed paths, which is exactly composition order.
    pub fn telescope(&self, cuts: &[usize]) -> Result<BratteliDiagram, BratteliError> {
        let top = self.top_level();
        let invalid = |msg: String| Err(BratteliError::InvalidCuts(msg));
        if cuts.is_empty() || self.levels.is_empty() {
            return invalid("no levels to keep".into());
        }
        if cuts.windows(2).any(|w| w[0] >= w[1]) {
            return invalid(format!("cuts must be strictly increasing: {cuts:?}"));
        }
        if cuts[0] < 2 || *cuts.last().unwrap() != top {
            return invalid(format!("cuts must lie in 2..={top} and end at {top}: {cuts:?}"));
        }
        let mut out = BratteliDiagram::from_first_level(
            self.first_level.clone().expect("levels imply V_1"),
        );
        let mut prev = 1;
        for &cut in cuts {
            let mut acc = self.levels[cut - 2].clone();
            for level in (prev + 1..cut).rev() {
                acc = Morphism::compose(&self.levels[level - 2], &acc)?;
            }
            out.push_level(acc)?;
            prev = cut;
        }
        Ok(out)
    }

    /// Greedy telescoping witness for simplicity up to `witness_depth`
    /// morphism levels: the levels at which the running product of
    /// incidence matrices first becomes positive, block after block.
    pub fn simplicity_cuts(&self, witness_depth: usize) -> Vec<usize> {
        let last = witness_depth.min(self.depth()) + 1;
        let mut cuts = Vec::new();
        let mut product = None;
        for level in 2..=last {
            let pattern = self.levels[level - 2].incidence_matrix().pattern();
            let p = match product.take() {
                None => pattern,
                Some(acc) => crate::words::BoolMatrix::multiply(&acc, &pattern),
            };
            if p.is_positive() {
                cuts.push(level);
            } else {
                product = Some(p);
            }
        }
        cuts
    }

    /// True iff the truncated diagram telescopes to one whose consecutive
    /// incidence products are all positive.
    ///
    /// Every vertex has an incoming and an outgoing edge, so a positive
    /// product stays positive when more levels are multiplied in; one
    /// positive block starting at `V_1` is therefore enough.
    pub fn is_simple(&self, witness_depth: usize) -> bool {
        // only V_1 → v₀ edges
        if self.depth() == 0 {
            return true;
        }
        !self.simplicity_cuts(witness_depth).is_empty()
    }
}
