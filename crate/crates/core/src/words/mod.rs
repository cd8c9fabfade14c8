//! Alphabets, words and non-erasing morphisms.

mod alphabet;
mod incidence;
mod mor_format;
mod morphism;
mod proper;
pub mod random;
mod word;

use thiserror::Error;

pub use alphabet::Alphabet;
pub use incidence::{primitivity_exponent_bound, IncidenceMatrix};
pub use mor_format::{parse_morphism, to_mor_string};
pub use morphism::Morphism;
pub use proper::{
    proper_products, verify_conjugacy_identity, ConjugacyReport, IteratedMismatch,
    IteratedOutcome, ProperProducts, Properness, Side,
};
pub use word::Word;

pub(crate) use incidence::BoolMatrix;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("ParseError: line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("ErasingImage: letter `{0}` has an empty image")]
    ErasingImage(char),
    #[error("UnknownLetter: `{0}` is not in the alphabet")]
    UnknownLetter(char),
    #[error("InvalidLetter: `{0}` is not an ASCII alphanumeric")]
    InvalidLetter(char),
    #[error("DuplicateLetter: `{0}` appears twice")]
    DuplicateLetter(char),
    #[error("DuplicateRule: letter `{0}` has two rules")]
    DuplicateRule(char),
    #[error("EmptyAlphabet")]
    EmptyAlphabet,
    #[error("MissingImage: letter `{0}` has no image")]
    MissingImage(char),
    #[error("AlphabetMismatch: expected {{{expected}}}, found {{{found}}}")]
    AlphabetMismatch { expected: String, found: String },
    #[error("NotEndomorphism: domain and codomain differ")]
    NotEndomorphism,
    #[error("NotLeftProper: images do not share a first letter")]
    NotLeftProper,
    #[error("NotRightProper: images do not share a last letter")]
    NotRightProper,
    #[error("NotProperEnough: morphism is neither left nor right proper")]
    NotProperEnough,
    #[error("NotPrimitive: no power of the incidence matrix is positive")]
    NotPrimitive,
}

impl WordError {
    pub fn is_parse_error(&self) -> bool {
        matches!(
            self,
            WordError::Parse { .. }
                | WordError::InvalidLetter(_)
                | WordError::DuplicateLetter(_)
                | WordError::DuplicateRule(_)
                | WordError::EmptyAlphabet
                | WordError::MissingImage(_)
                | WordError::ErasingImage(_)
                | WordError::UnknownLetter(_)
        )
    }
}
