use std::collections::{BTreeSet, HashSet};

use crate::words::{Alphabet, Morphism, Word};

use super::{DirectiveSequence, LanguageError, FIRST_LEVEL};

/// Longest generated word the enumeration will build before giving up.
pub const WORD_BUDGET: usize = 1 << 22;

/// Factors of length `1..=max_len` of the subshift generated by a
/// directive sequence, as far as a finite prefix can tell.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorLanguage {
    alphabet: Alphabet,
    max_len: usize,
    // by_len[k] holds the factors of length k + 1
    by_len: Vec<BTreeSet<Word>>,
    stabilized: bool,
    depth_used: usize,
    longest: Word,
}

impl FactorLanguage {
    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn max_len(&self) -> usize {
        self.max_len
    }

    pub fn is_stabilized(&self) -> bool {
        self.stabilized
    }

    /// Largest `n` such that `σ_2⋯σ_n(a_n)` was consumed.
    pub fn depth_used(&self) -> usize {
        self.depth_used
    }

    /// The last word `σ_2⋯σ_n(a_n)` that was generated.
    pub fn generated_word(&self) -> &Word {
        &self.longest
    }

    pub fn of_len(&self, len: usize) -> impl Iterator<Item = &Word> + '_ {
        len.checked_sub(1)
            .and_then(|i| self.by_len.get(i))
            .into_iter()
            .flatten()
    }

    pub fn count(&self, len: usize) -> usize {
        len.checked_sub(1)
            .and_then(|i| self.by_len.get(i))
            .map_or(0, BTreeSet::len)
    }

    pub fn contains(&self, w: &Word) -> bool {
        w.len()
            .checked_sub(1)
            .and_then(|i| self.by_len.get(i))
            .is_some_and(|s| s.contains(w))
    }

    pub fn iter(&self) -> impl Iterator<Item = &Word> + '_ {
        self.by_len.iter().flatten()
    }

    /// All factors of length `≤ len` as one set.
    pub fn up_to(&self, len: usize) -> BTreeSet<Word> {
        self.by_len.iter().take(len).flatten().cloned().collect()
    }

    /// Every factor of a stored factor is stored.
    pub fn is_factorial(&self) -> bool {
        self.iter().all(|w| {
            (1..w.len()).all(|k| (0..=w.len() - k).all(|i| self.contains(&w.factor(i, k))))
        })
    }

    /// Every stored factor shorter than `max_len` sits inside a stored
    /// factor of length `max_len`.
    pub fn is_extendable(&self) -> bool {
        let top: Vec<&Word> = self.of_len(self.max_len).collect();
        self.by_len
            .iter()
            .take(self.max_len.saturating_sub(1))
            .flatten()
            .all(|w| top.iter().any(|t| t.contains_factor(w)))
    }

    /// Builds a language directly from factor sets (tests and tools).
    pub fn from_words<I>(alphabet: Alphabet, max_len: usize, words: I, stabilized: bool) -> Self
    where
        I: IntoIterator<Item = Word>,
    {
        let mut by_len = vec![BTreeSet::new(); max_len];
        let mut longest = Word::empty();
        for w in words {
            if w.len() > longest.len() {
                longest = w.clone();
            }
            for k in 1..=max_len.min(w.len()) {
                for i in 0..=w.len() - k {
                    by_len[k - 1].insert(w.factor(i, k));
                }
            }
        }
        FactorLanguage {
            alphabet,
            max_len,
            by_len,
            stabilized,
            depth_used: 0,
            longest,
        }
    }
}

/// Incremental union of factor sets of generated words.
struct FactorAccumulator {
    max_len: usize,
    seen: Vec<HashSet<Vec<u8>>>,
}

impl FactorAccumulator {
    fn new(max_len: usize) -> Self {
        FactorAccumulator {
            max_len,
            seen: vec![HashSet::new(); max_len],
        }
    }

    /// Adds every factor of `w` up to `max_len`; true if any was new.
    fn absorb(&mut self, w: &[u8]) -> bool {
        let mut grew = false;
        for k in 1..=self.max_len.min(w.len()) {
            for f in w.windows(k) {
                if !self.seen[k - 1].contains(f) {
                    self.seen[k - 1].insert(f.to_vec());
                    grew = true;
                }
            }
        }
        grew
    }

    fn into_sets(self) -> Vec<BTreeSet<Word>> {
        self.seen
            .into_iter()
            .map(|set| {
                set.into_iter()
                    .map(|f| Word::new(std::str::from_utf8(&f).expect("ascii")).expect("letters"))
                    .collect()
            })
            .collect()
    }
}

/// Words of length `≤ max_len` occurring in `σ_2⋯σ_n(a_n)`, for `n` up to
/// stabilization.
///
/// The enumeration stops at level `n` once `σ_2⋯σ_n(a_n)` contributes no
/// new factor, has length `≥ 2·max_len`, and is at least twice as long as
/// the word that contributed the last new factor. Running out of prefix
/// first yields `stabilized = false`, or [`LanguageError::NonGrowing`] if
/// no generated word ever reached length `2·max_len`.
///
/// Only factors that extend to a factor of length `max_len` are kept, so
/// the result is factorial and extendable whenever any word reached
/// `max_len`.
pub fn factors(d: &DirectiveSequence, max_len: usize) -> Result<FactorLanguage, LanguageError> {
    if max_len == 0 {
        return Err(LanguageError::ZeroLength);
    }
    let alphabet = d.alphabet(1)?.clone();
    let mut tau = Morphism::identity(&alphabet);
    let mut acc = FactorAccumulator::new(max_len);
    let mut stabilized = false;
    let mut depth_used = FIRST_LEVEL - 1;
    let mut longest = Word::empty();
    let mut max_seen = 0usize;
    // length of the word that last contributed a new factor
    let mut last_growth_len = 0usize;

    for (i, entry) in d.entries().iter().enumerate() {
        let level = i + FIRST_LEVEL;
        tau = Morphism::compose(&tau, &entry.morphism)?;
        if tau.max_image_len() > WORD_BUDGET {
            break;
        }
        let w = tau.image(entry.seed).expect("seed checked at construction");
        depth_used = level;
        max_seen = max_seen.max(w.len());
        let grew = acc.absorb(w.as_bytes());
        longest = w.clone();
        if grew {
            last_growth_len = w.len();
        } else if w.len() >= 2 * max_len && w.len() >= 2 * last_growth_len {
            stabilized = true;
            break;
        }
    }

    if !stabilized && max_seen < 2 * max_len {
        return Err(LanguageError::NonGrowing {
            depth: depth_used,
            longest: max_seen,
        });
    }

    let mut by_len = acc.into_sets();
    prune_to_extendable(&mut by_len, max_len);
    Ok(FactorLanguage {
        alphabet,
        max_len,
        by_len,
        stabilized,
        depth_used,
        longest,
    })
}

/// Keeps only the factors of the length-`max_len` factors.
fn prune_to_extendable(by_len: &mut [BTreeSet<Word>], max_len: usize) {
    if by_len[max_len - 1].is_empty() {
        return;
    }
    let top = by_len[max_len - 1].clone();
    for k in 1..max_len {
        let mut keep = BTreeSet::new();
        for t in &top {
            for i in 0..=t.len() - k {
                keep.insert(t.factor(i, k));
            }
        }
        by_len[k - 1] = keep;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fib() -> Morphism {
        Morphism::from_rules(&[('a', "ab"), ('b', "a")]).unwrap()
    }

    fn set(lang: &FactorLanguage) -> BTreeSet<String> {
        lang.iter().map(|w| w.to_string()).collect()
    }

    #[test]
    fn fibonacci_up_to_three() {
        let d = DirectiveSequence::stationary(&fib(), 'a', 30).unwrap();
        let lang = factors(&d, 3).unwrap();
        let expected: BTreeSet<String> = ["a", "b", "ab", "ba", "aa", "aab", "aba", "baa", "bab"]
            .into_iter()
            .map(String::from)
            .collect();
        assert_eq!(set(&lang), expected);
        assert!(lang.is_stabilized());
        assert!(lang.is_factorial());
        assert!(lang.is_extendable());
    }

    #[test]
    fn two_point_language() {
        let m = Morphism::from_rules(&[('a', "ab"), ('b', "ab")]).unwrap();
        let d = DirectiveSequence::stationary(&m, 'a', 20).unwrap();
        let lang = factors(&d, 2).unwrap();
        let expected: BTreeSet<String> =
            ["a", "b", "ab", "ba"].into_iter().map(String::from).collect();
        assert_eq!(set(&lang), expected);
    }

    #[test]
    fn identity_never_grows() {
        let ab = Alphabet::new("ab".chars()).unwrap();
        let d = DirectiveSequence::stationary(&Morphism::identity(&ab), 'a', 10).unwrap();
        assert!(matches!(factors(&d, 2), Err(LanguageError::NonGrowing { .. })));
    }

    #[test]
    fn short_prefix_is_not_stabilized() {
        let d = DirectiveSequence::stationary(&fib(), 'a', 6).unwrap();
        // σ^6(a) has length 21 >= 2·5 but the run never doubles
        let lang = factors(&d, 5).unwrap();
        assert!(!lang.is_stabilized());
        assert_eq!(lang.depth_used(), 7);
    }

    #[test]
    fn zero_length_rejected() {
        let d = DirectiveSequence::stationary(&fib(), 'a', 6).unwrap();
        assert_eq!(factors(&d, 0), Err(LanguageError::ZeroLength));
    }

    #[test]
    fn deterministic() {
        let d = DirectiveSequence::stationary(&fib(), 'a', 30).unwrap();
        assert_eq!(factors(&d, 8).unwrap(), factors(&d, 8).unwrap());
    }
}
