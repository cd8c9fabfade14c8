use std::collections::HashMap;

use crate::language::{FactorLanguage, LanguageError};
use crate::words::{Morphism, Word};

use super::AdicError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Injectivity {
    /// Distinct words `u ≠ v` of the source language with `σ(u) = σ(v)`.
    NotInjective { u: Word, v: Word, image: Word },
    /// No collision among letters or among words of length `≤ L`.
    InjectiveAtScale(usize),
    /// Not produced by the exhaustive check.
    Unknown,
}

impl Injectivity {
    pub fn is_injective(&self) -> bool {
        matches!(self, Injectivity::InjectiveAtScale(_))
    }
}

/// Exhaustively compares `σ` on the letters of its domain and on every word
/// of `lang` of length `≤ scale`. `lang` must be the language of the
/// source subshift, i.e. words over the domain of `σ`.
///
/// Witnesses are the first collision in (length, lexicographic) order.
pub fn check_injectivity(m: &Morphism, lang: &FactorLanguage, scale: usize) -> Result<Injectivity, AdicError> {
    if scale > lang.max_len() {
        return Err(LanguageError::InsufficientLanguage {
            have: lang.max_len(),
            need: scale,
        }
        .into());
    }

    let mut seen: HashMap<Word, Word> = HashMap::new();
    let letters = m.domain().iter().map(Word::from_letter);
    let words = (1..=scale).flat_map(|k| lang.of_len(k).cloned());
    for w in letters.chain(words) {
        let image = m.apply(&w)?;
        match seen.get(&image) {
            Some(u) if *u != w => {
                return Ok(Injectivity::NotInjective {
                    u: u.clone(),
                    v: w,
                    image,
                })
            }
            Some(_) => {}
            None => {
                seen.insert(image, w);
            }
        }
    }
    Ok(Injectivity::InjectiveAtScale(scale))
}
