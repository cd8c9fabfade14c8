use crate::language::{DirectiveSequence, LanguageError, FIRST_LEVEL};
use crate::words::{Alphabet, Morphism, Word};

use super::AdicError;

/// The Kakutani–Rokhlin partition at level `n`: one tower per `c ∈ A_n`
/// with base `τ_n([c])` and height `|τ_n(c)|`, where `τ_n = σ_2⋯σ_n` and
/// `τ_1` is the identity.
///
/// Atoms are pairs `(c, j)` with `0 ≤ j < |τ_n(c)|`; the atom reads the
/// letter `τ_n(c)[j]` of `A_1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TowerPartition {
    pub level: usize,
    pub alphabet: Alphabet,
    /// `τ_n(c)` in alphabet order.
    pub columns: Vec<Word>,
    pub next_alphabet: Alphabet,
    /// `τ_{n+1}(c)` for `c ∈ A_{n+1}`, in alphabet order.
    pub next_columns: Vec<Word>,
    /// `refinement[c][j]`: the level-`n` atom containing atom `(c, j)` of
    /// level `n+1`, with `c` indexing `next_alphabet`.
    pub refinement: Vec<Vec<(char, usize)>>,
}

impl TowerPartition {
    pub fn heights(&self) -> Vec<usize> {
        self.columns.iter().map(Word::len).collect()
    }

    pub fn next_heights(&self) -> Vec<usize> {
        self.next_columns.iter().map(Word::len).collect()
    }

    pub fn column(&self, c: char) -> Option<&Word> {
        self.alphabet.index_of(c).map(|i| &self.columns[i])
    }

    pub fn atom_count(&self) -> usize {
        self.heights().iter().sum()
    }

    /// Length of the longest common prefix of the columns. Growth with `n`
    /// is the visible trace of the towers' bases shrinking to a point.
    pub fn common_prefix_len(&self) -> usize {
        common_len(&self.columns, |w, i| w.as_bytes()[i])
    }

    pub fn common_suffix_len(&self) -> usize {
        common_len(&self.columns, |w, i| w.as_bytes()[w.len() - 1 - i])
    }
}

fn common_len(ws: &[Word], at: impl Fn(&Word, usize) -> u8) -> usize {
    let min = ws.iter().map(Word::len).min().unwrap_or(0);
    (0..min)
        .take_while(|&i| ws.iter().all(|w| at(w, i) == at(&ws[0], i)))
        .count()
}

/// `τ_n`, with `τ_1` the identity of `A_1`.
fn tau(d: &DirectiveSequence, n: usize) -> Result<Morphism, AdicError> {
    let mut t = Morphism::identity(d.alphabet(1)?);
    for level in FIRST_LEVEL..=n {
        t = Morphism::compose(&t, d.morphism(level)?)?;
    }
    Ok(t)
}

/// The partition at level `n ≥ 1` and how level `n+1` refines it.
///
/// With `σ_{n+1}(c) = c_1⋯c_l` and `i` maximal with
/// `|τ_n(c_1⋯c_i)| ≤ j`, atom `(c, j)` of level `n+1` lies in atom
/// `(c_{i+1}, j − |τ_n(c_1⋯c_i)|)` of level `n`.
pub fn tower_partition(d: &DirectiveSequence, n: usize) -> Result<TowerPartition, AdicError> {
    if n == 0 {
        return Err(LanguageError::LevelOutOfRange { level: 0 }.into());
    }
    let next = d.morphism(n + 1)?;
    let tau_n = tau(d, n)?;
    let tau_next = Morphism::compose(&tau_n, next)?;

    let refinement = next
        .images()
        .iter()
        .map(|image| {
            let mut atoms = Vec::new();
            for c in image.letters() {
                let h = tau_n.image(c).expect("letter of A_n").len();
                atoms.extend((0..h).map(|j| (c, j)));
            }
            atoms
        })
        .collect();

    Ok(TowerPartition {
        level: n,
        alphabet: tau_n.domain().clone(),
        columns: tau_n.images().to_vec(),
        next_alphabet: next.domain().clone(),
        next_columns: tau_next.images().to_vec(),
        refinement,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NestedReport {
    pub level: usize,
    /// Every refinement index names an atom of level `n`.
    pub indices_valid: bool,
    /// Each level-`n+1` atom reads the same letter as its container.
    pub letters_consistent: bool,
    /// `|τ_{n+1}(c)| = Σ |τ_n(c_i)|` over `σ_{n+1}(c) = c_1⋯c_l`.
    pub sum_rule: bool,
    /// Per `c ∈ A_{n+1}`: the summands `|τ_n(c_i)|`.
    pub sums: Vec<(char, Vec<usize>)>,
}

impl NestedReport {
    pub fn is_nested(&self) -> bool {
        self.indices_valid && self.letters_consistent && self.sum_rule
    }
}

fn nested(p: &TowerPartition, next: &Morphism) -> NestedReport {
    let mut indices_valid = true;
    let mut letters_consistent = true;
    for (col, atoms) in p.next_columns.iter().zip(&p.refinement) {
        if atoms.len() != col.len() {
            indices_valid = false;
            continue;
        }
        for (j, &(c, k)) in atoms.iter().enumerate() {
            match p.column(c) {
                Some(w) if k < w.len() => {
                    if w.letter_at(k) != col.letter_at(j) {
                        letters_consistent = false;
                    }
                }
                _ => indices_valid = false,
            }
        }
    }
    let mut sum_rule = true;
    let sums = next
        .rules()
        .zip(&p.next_columns)
        .map(|((c, image), col)| {
            let parts: Vec<usize> = image
                .letters()
                .map(|x| p.column(x).map_or(0, Word::len))
                .collect();
            sum_rule &= parts.iter().sum::<usize>() == col.len();
            (c, parts)
        })
        .collect();
    NestedReport {
        level: p.level,
        indices_valid,
        letters_consistent,
        sum_rule,
        sums,
    }
}

/// Checks that the level-`n+1` partition refines the level-`n` one.
pub fn check_nested(d: &DirectiveSequence, n: usize) -> Result<NestedReport, AdicError> {
    let p = tower_partition(d, n)?;
    Ok(nested(&p, d.morphism(n + 1)?))
}

/// Checks two independently computed partitions against each other: `q`
/// must be the partition one level above `p`, with the same columns `p`
/// predicts, and `p` must refine as `σ` prescribes.
pub fn check_partitions_nested(
    p: &TowerPartition,
    q: &TowerPartition,
    sigma: &Morphism,
) -> Result<NestedReport, AdicError> {
    if q.alphabet != p.next_alphabet || sigma.domain() != &p.next_alphabet || sigma.codomain() != &p.alphabet {
        return Err(AdicError::AlphabetMismatch {
            level: p.level + 1,
            expected: p.next_alphabet.to_string(),
            found: q.alphabet.to_string(),
        });
    }
    let mut report = nested(p, sigma);
    report.letters_consistent &= q.columns == p.next_columns && q.level == p.level + 1;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn stationary(rules: &[(char, &str)]) -> DirectiveSequence {
        let m = Morphism::from_rules(rules).unwrap();
        let seed = m.domain().letters()[0];
        DirectiveSequence::stationary(&m, seed, 12).unwrap()
    }

    const ZETA: &[(char, &str)] = &[('a', "aab"), ('b', "ab")];

    #[test]
    fn zeta_heights() {
        let d = stationary(ZETA);
        assert_eq!(tower_partition(&d, 2).unwrap().heights(), vec![3, 2]);
        let p = tower_partition(&d, 3).unwrap();
        assert_eq!(p.heights(), vec![8, 5]);
        assert_eq!(p.columns[0].as_str(), "aabaabab");
        assert_eq!(p.next_heights(), vec![21, 13]);
    }

    #[test]
    fn base_level_is_identity() {
        let d = stationary(ZETA);
        let p = tower_partition(&d, 1).unwrap();
        assert_eq!(p.heights(), vec![1, 1]);
        assert_eq!(p.refinement[0], vec![('a', 0), ('a', 0), ('b', 0)]);
        assert_eq!(p.refinement[1], vec![('a', 0), ('b', 0)]);
    }

    #[test]
    fn refinement_decomposition() {
        let p = tower_partition(&stationary(ZETA), 2).unwrap();
        // σ(a) = aab, heights 3,3,2: j = 7 sits at offset 1 of the b tower
        assert_eq!(p.refinement[0][7], ('b', 1));
        assert_eq!(p.refinement[0][3], ('a', 0));
    }

    #[test]
    fn zeta_nested_with_sum_rule() {
        let d = stationary(ZETA);
        let r = check_nested(&d, 2).unwrap();
        assert!(r.is_nested());
        assert_eq!(r.sums[0], ('a', vec![3, 3, 2]));
        for n in 1..=6 {
            assert!(check_nested(&d, n).unwrap().is_nested(), "n = {n}");
        }
    }

    #[test]
    fn odometer_heights_are_powers_of_two() {
        let d = stationary(&[('0', "00")]);
        for n in 1..=8 {
            let p = tower_partition(&d, n).unwrap();
            assert_eq!(p.heights(), vec![1 << (n - 1)]);
            assert!(check_nested(&d, n).unwrap().is_nested());
        }
    }

    #[test]
    fn partitions_of_different_directives() {
        let zeta = stationary(ZETA);
        let odo = stationary(&[('0', "00")]);
        let p = tower_partition(&zeta, 2).unwrap();
        let q = tower_partition(&odo, 3).unwrap();
        assert!(matches!(
            check_partitions_nested(&p, &q, zeta.morphism(3).unwrap()),
            Err(AdicError::AlphabetMismatch { level: 3, .. })
        ));
        let q = tower_partition(&zeta, 3).unwrap();
        assert!(check_partitions_nested(&p, &q, zeta.morphism(3).unwrap())
            .unwrap()
            .is_nested());
    }

    #[test]
    fn common_prefix_grows() {
        let d = stationary(ZETA);
        let lens: Vec<usize> = (1..=5)
            .map(|n| tower_partition(&d, n).unwrap().common_prefix_len())
            .collect();
        assert!(lens.windows(2).all(|w| w[0] <= w[1]));
        assert!(lens[4] > lens[1]);
    }

    #[test]
    fn out_of_range() {
        let d = stationary(ZETA);
        assert!(tower_partition(&d, 0).is_err());
        assert!(tower_partition(&d, 13).is_err());
    }
}
