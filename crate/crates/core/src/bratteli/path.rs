use std::collections::BTreeSet;

use crate::words::Word;

use super::{BratteliDiagram, BratteliError};

/// A finite path from a top vertex down to `v₀`.
///
/// `indices[0]` is the fibre index of the edge at level 2, `indices[1]` at
/// level 3, and so on; the level-1 edge is forced. The path has
/// `depth = indices.len()` and starts at `top ∈ V_{depth+1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    pub top: char,
    pub indices: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeId {
    pub level: usize,
    pub source: char,
    pub index: usize,
}

impl Path {
    pub fn new(top: char, indices: Vec<usize>) -> Self {
        Path { top, indices }
    }

    pub fn depth(&self) -> usize {
        self.indices.len()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Extreme {
    Min,
    Max,
}

/// Vershik orbit coding: the `V_1` vertex of each successive path.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitCoding {
    pub word: Word,
    /// False when the maximal path was reached before `steps` letters.
    pub complete: bool,
}

/// How many distinct extremal paths remain, level by level.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtremaReport {
    pub depth: usize,
    /// `min_counts[j-1]`: distinct vertices at level `j` over the all-minimal
    /// paths from every top vertex.
    pub min_counts: Vec<usize>,
    pub max_counts: Vec<usize>,
    pub unique_min: bool,
    pub unique_max: bool,
}

impl ExtremaReport {
    pub fn is_unique(&self) -> bool {
        self.unique_min && self.unique_max
    }
}

impl BratteliDiagram {
    /// Vertices visited by `p`, from level 1 up to the top.
    pub fn path_vertices(&self, p: &Path) -> Result<Vec<char>, BratteliError> {
        let depth = p.depth();
        if depth > self.depth() {
            return Err(BratteliError::DepthOutOfRange {
                depth,
                max: self.depth(),
            });
        }
        let top_level = depth + 1;
        let top_set = self.vertices(top_level).ok_or(BratteliError::EmptyInput)?;
        if !top_set.contains(p.top) {
            return Err(BratteliError::InvalidPath(format!(
                "`{}` is not a vertex of level {top_level}",
                p.top
            )));
        }
        let mut verts = vec![p.top; depth + 1];
        let mut v = p.top;
        for level in (2..=top_level).rev() {
            let i = p.indices[level - 2];
            let fiber = self.fiber(level, v).expect("vertex checked");
            v = fiber.letter_at(i).ok_or_else(|| {
                BratteliError::InvalidPath(format!(
                    "index {i} out of range at level {level} (fibre of `{v}` has {} edges)",
                    fiber.len()
                ))
            })?;
            verts[level - 2] = v;
        }
        Ok(verts)
    }

    pub fn path_edges(&self, p: &Path) -> Result<Vec<EdgeId>, BratteliError> {
        let verts = self.path_vertices(p)?;
        let mut edges = vec![EdgeId {
            level: 1,
            source: verts[0],
            index: 0,
        }];
        edges.extend(p.indices.iter().enumerate().map(|(i, &index)| EdgeId {
            level: i + 2,
            source: verts[i + 1],
            index,
        }));
        Ok(edges)
    }

    fn check_depth(&self, depth: usize) -> Result<(), BratteliError> {
        if depth > self.depth() || self.vertices(1).is_none() {
            return Err(BratteliError::DepthOutOfRange {
                depth,
                max: self.depth(),
            });
        }
        Ok(())
    }

    fn extreme_from(&self, top: char, depth: usize, which: Extreme) -> Path {
        let mut indices = vec![0; depth];
        let mut v = top;
        for level in (2..=depth + 1).rev() {
            let fiber = self.fiber(level, v).expect("valid vertex");
            let i = match which {
                Extreme::Min => 0,
                Extreme::Max => fiber.len() - 1,
            };
            indices[level - 2] = i;
            v = fiber.letter_at(i).expect("nonempty fibre");
        }
        Path { top, indices }
    }

    pub fn min_path_from(&self, top: char, depth: usize) -> Result<Path, BratteliError> {
        self.path_from(top, depth, Extreme::Min)
    }

    pub fn max_path_from(&self, top: char, depth: usize) -> Result<Path, BratteliError> {
        self.path_from(top, depth, Extreme::Max)
    }

    fn path_from(&self, top: char, depth: usize, which: Extreme) -> Result<Path, BratteliError> {
        self.check_depth(depth)?;
        if !self.vertices(depth + 1).is_some_and(|v| v.contains(top)) {
            return Err(BratteliError::InvalidPath(format!(
                "`{top}` is not a vertex of level {}",
                depth + 1
            )));
        }
        Ok(self.extreme_from(top, depth, which))
    }

    /// Top vertex of the canonical extremal path of the given depth: the
    /// smallest vertex at level `depth+1` reached by extremal descent from
    /// the top of the whole diagram.
    fn canonical_top(&self, depth: usize, which: Extreme) -> char {
        let mut current: BTreeSet<char> = self
            .vertices(self.top_level())
            .expect("checked")
            .iter()
            .collect();
        for level in (depth + 2..=self.top_level()).rev() {
            current = current
                .into_iter()
                .map(|v| {
                    let f = self.fiber(level, v).expect("valid vertex");
                    match which {
                        Extreme::Min => f.first(),
                        Extreme::Max => f.last(),
                    }
                    .expect("nonempty fibre")
                })
                .collect();
        }
        *current.iter().next().expect("nonempty level")
    }

    /// The all-minimal path of the given depth (approximates `x_m`).
    pub fn min_path(&self, depth: usize) -> Result<Path, BratteliError> {
        self.check_depth(depth)?;
        Ok(self.extreme_from(self.canonical_top(depth, Extreme::Min), depth, Extreme::Min))
    }

    /// The all-maximal path of the given depth (approximates `x_M`).
    pub fn max_path(&self, depth: usize) -> Result<Path, BratteliError> {
        self.check_depth(depth)?;
        Ok(self.extreme_from(self.canonical_top(depth, Extreme::Max), depth, Extreme::Max))
    }

    /// Counts distinct all-minimal (all-maximal) paths level by level over
    /// every top vertex of the given depth. Extrema are reported unique
    /// when those paths agree on the lower half of the levels, i.e. they
    /// merge within the top half.
    pub fn unique_extrema_check(&self, depth: usize) -> Result<ExtremaReport, BratteliError> {
        self.check_depth(depth)?;
        let tops = self.vertices(depth + 1).expect("checked");
        let counts = |which| -> Result<Vec<usize>, BratteliError> {
            let paths = tops
                .iter()
                .map(|t| self.path_vertices(&self.extreme_from(t, depth, which)))
                .collect::<Result<Vec<_>, _>>()?;
            Ok((0..=depth)
                .map(|j| paths.iter().map(|vs| vs[j]).collect::<BTreeSet<_>>().len())
                .collect())
        };
        let min_counts = counts(Extreme::Min)?;
        let max_counts = counts(Extreme::Max)?;
        let lower = depth.div_ceil(2).max(1);
        let unique = |c: &[usize]| c[..lower].iter().all(|&n| n == 1);
        Ok(ExtremaReport {
            depth,
            unique_min: unique(&min_counts),
            unique_max: unique(&max_counts),
            min_counts,
            max_counts,
        })
    }

    pub fn is_max_path(&self, p: &Path) -> Result<bool, BratteliError> {
        let verts = self.path_vertices(p)?;
        Ok(p.indices
            .iter()
            .enumerate()
            .all(|(i, &idx)| idx + 1 == self.fiber_len(i + 2, verts[i + 1])))
    }

    /// Immediate successor of `p` among the paths of the same depth and top
    /// vertex: bump the lowest non-maximal edge to the next edge of its
    /// fibre and reset every edge below it to its minimum.
    pub fn vershik_successor(&self, p: &Path) -> Result<Path, BratteliError> {
        let verts = self.path_vertices(p)?;
        for pos in 0..p.depth() {
            let level = pos + 2;
            if p.indices[pos] + 1 < self.fiber_len(level, verts[level - 1]) {
                let mut next = p.clone();
                next.indices[pos] += 1;
                next.indices[..pos].iter_mut().for_each(|i| *i = 0);
                return Ok(next);
            }
        }
        Err(BratteliError::MaximalPath)
    }

    /// Like [`vershik_successor`](Self::vershik_successor), but sends the
    /// maximal path to [`min_path`](Self::min_path) of the same depth. The
    /// flag reports whether that wrap-around happened.
    pub fn vershik_successor_wrapping(&self, p: &Path) -> Result<(Path, bool), BratteliError> {
        match self.vershik_successor(p) {
            Ok(next) => Ok((next, false)),
            Err(BratteliError::MaximalPath) => Ok((self.min_path(p.depth())?, true)),
            Err(e) => Err(e),
        }
    }

    /// The `V_1` vertex of `start` and of each of its next `steps - 1`
    /// successors. Stops early, with `complete = false`, at the maximal path.
    pub fn orbit_coding(&self, start: &Path, steps: usize) -> Result<OrbitCoding, BratteliError> {
        let mut word = Word::empty();
        let mut p = start.clone();
        for i in 0..steps {
            word.push(self.path_vertices(&p)?[0]);
            if i + 1 == steps {
                break;
            }
            match self.vershik_successor(&p) {
                Ok(next) => p = next,
                Err(BratteliError::MaximalPath) => {
                    return Ok(OrbitCoding {
                        word,
                        complete: false,
                    })
                }
                Err(e) => return Err(e),
            }
        }
        Ok(OrbitCoding {
            word,
            complete: true,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::Morphism;

    fn odometer(depth: usize) -> BratteliDiagram {
        let m = Morphism::from_rules(&[('0', "00")]).unwrap();
        BratteliDiagram::build_from_morphisms(&vec![m; depth]).unwrap()
    }

    fn zeta(depth: usize) -> BratteliDiagram {
        let m = Morphism::from_rules(&[('a', "aab"), ('b', "ab")]).unwrap();
        BratteliDiagram::build_from_morphisms(&vec![m; depth]).unwrap()
    }

    fn fib(depth: usize) -> BratteliDiagram {
        let m = Morphism::from_rules(&[('a', "ab"), ('b', "a")]).unwrap();
        BratteliDiagram::build_from_morphisms(&vec![m; depth]).unwrap()
    }

    #[test]
    fn odometer_extrema() {
        let d = odometer(3);
        assert_eq!(d.min_path(3).unwrap().indices, vec![0, 0, 0]);
        assert_eq!(d.max_path(3).unwrap().indices, vec![1, 1, 1]);
        assert!(d.unique_extrema_check(3).unwrap().is_unique());
    }

    #[test]
    fn odometer_increment() {
        let d = odometer(3);
        let p = Path::new('0', vec![1, 0, 1]);
        assert_eq!(d.vershik_successor(&p).unwrap().indices, vec![0, 1, 1]);
        let max = Path::new('0', vec![1, 1, 1]);
        assert_eq!(d.vershik_successor(&max), Err(BratteliError::MaximalPath));
        let (wrapped, flag) = d.vershik_successor_wrapping(&max).unwrap();
        assert!(flag);
        assert_eq!(wrapped.indices, vec![0, 0, 0]);
    }

    #[test]
    fn zeta_extrema_are_unique() {
        let d = zeta(8);
        for depth in 1..=8 {
            let r = d.unique_extrema_check(depth).unwrap();
            assert!(r.is_unique(), "depth {depth}: {r:?}");
        }
    }

    #[test]
    fn fibonacci_max_is_not_unique() {
        let r = fib(6).unique_extrema_check(6).unwrap();
        assert!(r.unique_min);
        assert!(!r.unique_max);
        assert!(r.max_counts.iter().all(|&c| c == 2));
    }

    #[test]
    fn zeta_successor_of_min() {
        let d = zeta(3);
        let min = d.min_path(3).unwrap();
        let next = d.vershik_successor(&min).unwrap();
        assert_eq!(next.indices, vec![1, 0, 0]);
        assert_eq!(next.top, min.top);
    }

    #[test]
    fn zeta_orbit_coding() {
        let d = zeta(6);
        let min = d.min_path(6).unwrap();
        let c = d.orbit_coding(&min, 8).unwrap();
        assert!(c.complete);
        assert_eq!(c.word.as_str(), "aabaabab");
    }

    #[test]
    fn odometer_coding_is_constant() {
        let d = odometer(4);
        let c = d.orbit_coding(&d.min_path(4).unwrap(), 16).unwrap();
        assert_eq!(c.word.as_str(), "0".repeat(16));
        assert!(c.complete);
    }

    #[test]
    fn shallow_coding_is_partial() {
        let d = odometer(2);
        let c = d.orbit_coding(&d.min_path(2).unwrap(), 10).unwrap();
        assert_eq!(c.word.len(), 4);
        assert!(!c.complete);
    }

    #[test]
    fn invalid_paths() {
        let d = zeta(2);
        assert!(matches!(
            d.path_vertices(&Path::new('c', vec![0, 0])),
            Err(BratteliError::InvalidPath(_))
        ));
        assert!(matches!(
            d.path_vertices(&Path::new('b', vec![0, 2])),
            Err(BratteliError::InvalidPath(_))
        ));
        assert!(matches!(
            d.path_vertices(&Path::new('a', vec![0, 0, 0])),
            Err(BratteliError::DepthOutOfRange { .. })
        ));
    }

    #[test]
    fn edges_of_min_path() {
        let d = zeta(2);
        let edges = d.path_edges(&d.min_path(2).unwrap()).unwrap();
        assert_eq!(edges.len(), 3);
        assert_eq!(edges[0], EdgeId { level: 1, source: 'a', index: 0 });
    }
}
