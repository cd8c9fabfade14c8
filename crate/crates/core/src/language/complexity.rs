use crate::words::Word;

use super::{FactorLanguage, LanguageError};

/// Word complexity `p(1..=N)` of a factor language and its first
/// differences `s(n) = p(n+1) - p(n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexityProfile {
    values: Vec<usize>,
    differences: Vec<i64>,
    certified: bool,
    alphabet_size: usize,
}

impl ComplexityProfile {
    /// Profile from raw values, e.g. for replaying stored results.
    pub fn from_values(values: Vec<usize>, alphabet_size: usize, certified: bool) -> Self {
        let differences = values
            .windows(2)
            .map(|w| w[1] as i64 - w[0] as i64)
            .collect();
        ComplexityProfile {
            values,
            differences,
            certified,
            alphabet_size,
        }
    }

    /// `p(n)` for `n = 1..=N`.
    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn p(&self, n: usize) -> Option<usize> {
        n.checked_sub(1).and_then(|i| self.values.get(i)).copied()
    }

    /// `s(n) = p(n+1) - p(n)` for `n = 1..N`.
    pub fn differences(&self) -> &[i64] {
        &self.differences
    }

    pub fn is_certified(&self) -> bool {
        self.certified
    }

    pub fn require_certified(&self) -> Result<&Self, LanguageError> {
        if self.certified {
            Ok(self)
        } else {
            Err(LanguageError::NotStabilized)
        }
    }

    /// Levels `n` with `s(n) < 0`, which only a truncated language can show.
    pub fn negative_differences(&self) -> Vec<usize> {
        self.differences
            .iter()
            .enumerate()
            .filter(|(_, d)| **d < 0)
            .map(|(i, _)| i + 1)
            .collect()
    }

    /// `p(n+1) ≤ |A|·p(n)` and `p(n) ≥ 1` everywhere.
    pub fn within_bounds(&self) -> bool {
        self.values.iter().all(|&p| p >= 1)
            && self
                .values
                .windows(2)
                .all(|w| w[1] <= self.alphabet_size * w[0])
    }
}

pub fn complexity(lang: &FactorLanguage, n: usize) -> Result<ComplexityProfile, LanguageError> {
    if n > lang.max_len() {
        return Err(LanguageError::LengthBeyondLanguage {
            requested: n,
            max_len: lang.max_len(),
        });
    }
    let values = (1..=n).map(|k| lang.count(k)).collect();
    Ok(ComplexityProfile::from_values(
        values,
        lang.alphabet().len(),
        lang.is_stabilized(),
    ))
}

/// Smallest `n₀` with `p(n₀) ≤ n₀`. A witness means the language is that of
/// an ultimately periodic sequence.
pub fn morse_hedlund_witness(profile: &ComplexityProfile) -> Option<usize> {
    profile
        .values()
        .iter()
        .enumerate()
        .map(|(i, &p)| (i + 1, p))
        .find(|&(n, p)| p <= n)
        .map(|(n, _)| n)
}

/// Smallest period `q ≤ max_period` of the second half of `w`, if any.
///
/// Used as an independent check on [`morse_hedlund_witness`]: a generated
/// word of an ultimately periodic language ends in a periodic run.
pub fn eventual_period(w: &Word, max_period: usize) -> Option<usize> {
    let bytes = w.as_bytes();
    let tail = &bytes[bytes.len() / 2..];
    (1..=max_period.min(tail.len().saturating_sub(1)))
        .find(|&q| (q..tail.len()).all(|i| tail[i] == tail[i - q]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::language::{factors, DirectiveSequence};
    use crate::words::Morphism;

    #[test]
    fn fibonacci_profile() {
        let fib = Morphism::from_rules(&[('a', "ab"), ('b', "a")]).unwrap();
        let d = DirectiveSequence::stationary(&fib, 'a', 30).unwrap();
        let p = complexity(&factors(&d, 3).unwrap(), 3).unwrap();
        assert_eq!(p.values(), &[2, 3, 4]);
        assert_eq!(p.differences(), &[1, 1]);
        assert!(p.is_certified());
        assert_eq!(morse_hedlund_witness(&p), None);
    }

    #[test]
    fn two_point_profile() {
        let m = Morphism::from_rules(&[('a', "ab"), ('b', "ab")]).unwrap();
        let d = DirectiveSequence::stationary(&m, 'a', 20).unwrap();
        let p = complexity(&factors(&d, 3).unwrap(), 3).unwrap();
        assert_eq!(p.values(), &[2, 2, 2]);
        assert_eq!(morse_hedlund_witness(&p), Some(2));
    }

    #[test]
    fn constant_sequence() {
        let m = Morphism::from_rules(&[('a', "aa")]).unwrap();
        let d = DirectiveSequence::stationary(&m, 'a', 10).unwrap();
        let p = complexity(&factors(&d, 3).unwrap(), 3).unwrap();
        assert_eq!(p.values(), &[1, 1, 1]);
        assert_eq!(morse_hedlund_witness(&p), Some(1));
    }

    #[test]
    fn witness_on_raw_values() {
        let p = ComplexityProfile::from_values(vec![2, 2, 2], 2, true);
        assert_eq!(morse_hedlund_witness(&p), Some(2));
        let p = ComplexityProfile::from_values(vec![1, 1], 1, true);
        assert_eq!(morse_hedlund_witness(&p), Some(1));
    }

    #[test]
    fn uncertified_and_negative() {
        let p = ComplexityProfile::from_values(vec![2, 3, 2], 2, false);
        assert_eq!(p.require_certified(), Err(LanguageError::NotStabilized));
        assert_eq!(p.negative_differences(), vec![2]);
    }

    #[test]
    fn beyond_language() {
        let fib = Morphism::from_rules(&[('a', "ab"), ('b', "a")]).unwrap();
        let d = DirectiveSequence::stationary(&fib, 'a', 30).unwrap();
        let lang = factors(&d, 3).unwrap();
        assert!(matches!(
            complexity(&lang, 4),
            Err(LanguageError::LengthBeyondLanguage { .. })
        ));
    }

    #[test]
    fn periods() {
        assert_eq!(eventual_period(&Word::new("abababab").unwrap(), 4), Some(2));
        assert_eq!(eventual_period(&Word::new("aabbbbbb").unwrap(), 4), Some(1));
        assert_eq!(eventual_period(&Word::new("abaababaabaababaababa").unwrap(), 3), None);
    }
}
