//! Factor languages of S-adic subshifts.
//!
//! A [`DirectiveSequence`] `(σ_n, a_n)_{n≥2}` generates the subshift whose
//! words all occur in some `σ_2 σ_3 ⋯ σ_n(a_n)`. At finite scale we keep
//! the words of length `≤ L` and measure their complexity.

mod complexity;
mod dir_format;
mod directive;
mod factors;
mod recurrence;

use thiserror::Error;

use crate::words::WordError;

pub use complexity::{complexity, eventual_period, morse_hedlund_witness, ComplexityProfile};
pub use dir_format::{parse_directive, read_directive_file};
pub use directive::{DirectiveEntry, DirectiveSequence, FIRST_LEVEL};
pub use factors::{factors, FactorLanguage, WORD_BUDGET};
pub use recurrence::{recurrence_probe, RecurrenceGap, RecurrenceReport, MAX_REPORTED_GAPS};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LanguageError {
    #[error(transparent)]
    Word(#[from] WordError),
    #[error("ParseError: line {line}: {message}")]
    DirectiveParse { line: usize, message: String },
    #[error("IoError: {path}: {message}")]
    Io { path: String, message: String },
    #[error("EmptyDirective: no entries")]
    EmptyDirective,
    #[error("AlphabetMismatch at level {level}: expected codomain {{{expected}}}, found {{{found}}}")]
    AlphabetMismatch {
        level: usize,
        expected: String,
        found: String,
    },
    #[error("SeedNotInAlphabet: seed `{seed}` at level {level}")]
    SeedNotInAlphabet { level: usize, seed: char },
    #[error("InvalidMarks: {0}")]
    InvalidMarks(String),
    #[error("LevelOutOfRange: level {level}")]
    LevelOutOfRange { level: usize },
    #[error("ZeroLength: factor length must be at least 1")]
    ZeroLength,
    #[error("NonGrowing: generated words stay at length {longest} up to level {depth}")]
    NonGrowing { depth: usize, longest: usize },
    #[error("NotStabilized: the factor language did not stabilize on this prefix")]
    NotStabilized,
    #[error("InsufficientLanguage: language known up to length {have}, need {need}")]
    InsufficientLanguage { have: usize, need: usize },
    #[error("LengthBeyondLanguage: requested {requested}, language known up to {max_len}")]
    LengthBeyondLanguage { requested: usize, max_len: usize },
}

impl LanguageError {
    pub fn is_parse_error(&self) -> bool {
        match self {
            LanguageError::Word(e) => e.is_parse_error(),
            LanguageError::DirectiveParse { .. }
            | LanguageError::Io { .. }
            | LanguageError::EmptyDirective
            | LanguageError::AlphabetMismatch { .. }
            | LanguageError::SeedNotInAlphabet { .. }
            | LanguageError::InvalidMarks(_) => true,
            _ => false,
        }
    }
}
