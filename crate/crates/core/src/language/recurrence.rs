use crate::words::Word;

use super::{FactorLanguage, LanguageError};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecurrenceGap {
    pub window: Word,
    pub missing: Vec<Word>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecurrenceReport {
    pub factor_len: usize,
    pub window: usize,
    pub holds: bool,
    /// Windows missing some factor; capped at [`MAX_REPORTED_GAPS`].
    pub gaps: Vec<RecurrenceGap>,
}

pub const MAX_REPORTED_GAPS: usize = 16;

/// Checks that every factor of length `m` occurs in every factor of
/// length `window`: uniform recurrence at this scale.
pub fn recurrence_probe(
    lang: &FactorLanguage,
    m: usize,
    window: usize,
) -> Result<RecurrenceReport, LanguageError> {
    if m == 0 || m > window || window > lang.max_len() {
        return Err(LanguageError::InsufficientLanguage {
            have: lang.max_len(),
            need: window.max(m),
        });
    }
    let short: Vec<&Word> = lang.of_len(m).collect();
    let mut gaps = Vec::new();
    let mut holds = true;
    for w in lang.of_len(window) {
        let missing: Vec<Word> = short
            .iter()
            .filter(|f| !w.contains_factor(f))
            .map(|f| (*f).clone())
            .collect();
        if !missing.is_empty() {
            holds = false;
            if gaps.len() < MAX_REPORTED_GAPS {
                gaps.push(RecurrenceGap {
                    window: w.clone(),
                    missing,
                });
            }
        }
    }
    Ok(RecurrenceReport {
        factor_len: m,
        window,
        holds,
        gaps,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::language::{factors, DirectiveSequence};
    use crate::words::Morphism;

    fn fib_lang(len: usize) -> FactorLanguage {
        let fib = Morphism::from_rules(&[('a', "ab"), ('b', "a")]).unwrap();
        factors(&DirectiveSequence::stationary(&fib, 'a', 40).unwrap(), len).unwrap()
    }

    #[test]
    fn fibonacci_short_window_has_gap() {
        let r = recurrence_probe(&fib_lang(10), 2, 3).unwrap();
        assert!(!r.holds);
        let bab = r.gaps.iter().find(|g| g.window.as_str() == "bab").unwrap();
        assert!(bab.missing.iter().any(|w| w.as_str() == "aa"));
    }

    #[test]
    fn fibonacci_long_window_holds() {
        assert!(recurrence_probe(&fib_lang(10), 2, 10).unwrap().holds);
    }

    #[test]
    fn periodic_holds() {
        let m = Morphism::from_rules(&[('a', "ab"), ('b', "ab")]).unwrap();
        let lang = factors(&DirectiveSequence::stationary(&m, 'a', 20).unwrap(), 4).unwrap();
        assert!(recurrence_probe(&lang, 2, 4).unwrap().holds);
    }

    #[test]
    fn equal_lengths() {
        let lang = fib_lang(4);
        // p(3) = 4 > 1
        assert!(!recurrence_probe(&lang, 3, 3).unwrap().holds);
        let m = Morphism::from_rules(&[('a', "aa")]).unwrap();
        let lang = factors(&DirectiveSequence::stationary(&m, 'a', 10).unwrap(), 3).unwrap();
        assert!(recurrence_probe(&lang, 3, 3).unwrap().holds);
    }

    #[test]
    fn insufficient() {
        assert!(matches!(
            recurrence_probe(&fib_lang(4), 2, 5),
            Err(LanguageError::InsufficientLanguage { have: 4, need: 5 })
        ));
    }
}
