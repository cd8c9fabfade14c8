//! Bratteli–Vershik representations of S-adic subshifts.
//!
//! From a directive sequence of proper (or alternately left/right proper)
//! morphisms that are injective on their source subshifts and generate a
//! non-periodic language, the diagram whose level-`n` morphism is `σ_n`
//! represents the subshift; its largest level bounds the topological rank.
//! Every hypothesis is re-checked at an explicit finite scale.

mod build;
mod coding;
mod conjugates;
mod injectivity;
mod towers;

use std::fmt;

use thiserror::Error;

use crate::bratteli::BratteliError;
use crate::language::LanguageError;
use crate::words::{Properness, Word, WordError};

pub use build::{build_bv, BuildMode, BuildOptions, RankReport, Verdict};
pub use coding::{coding_vs_diagram, coding_vs_language, CodingReport};
pub use conjugates::alternate_conjugates;
pub use injectivity::{check_injectivity, Injectivity};
pub use towers::{check_nested, check_partitions_nested, tower_partition, NestedReport, TowerPartition};

/// One failed hypothesis of the construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HypothesisFailure {
    NotProper { level: usize, properness: Properness },
    NotInjective { level: usize, u: Word, v: Word, image: Word },
    PeriodicLanguage { witness: usize },
}

impl fmt::Display for HypothesisFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HypothesisFailure::NotProper { level, properness } => {
                write!(f, "NotProper at level {level}: properness is {properness}")
            }
            HypothesisFailure::NotInjective { level, u, v, image } => write!(
                f,
                "NotInjective at level {level}: `{u}` and `{v}` both map to `{image}`"
            ),
            HypothesisFailure::PeriodicLanguage { witness } => write!(
                f,
                "PeriodicLanguage: p({witness}) <= {witness} (Morse-Hedlund witness n0 = {witness})"
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AdicError {
    #[error("NotProperEnough at level {level}: morphism is neither left nor right proper")]
    NotProperEnough { level: usize },
    #[error("{}", .0.iter().map(ToString::to_string).collect::<Vec<_>>().join("; "))]
    Rejected(Vec<HypothesisFailure>),
    #[error("NotStabilized: factor language of the directive from level {level} did not stabilize")]
    NotStabilized { level: usize },
    #[error("InsufficientDirective: depth {depth} needs {need} entries, directive has {have}")]
    InsufficientDirective { depth: usize, need: usize, have: usize },
    #[error("AlphabetMismatch: level {level} expects {{{expected}}}, found {{{found}}}")]
    AlphabetMismatch {
        level: usize,
        expected: String,
        found: String,
    },
    #[error(transparent)]
    Word(#[from] WordError),
    #[error(transparent)]
    Language(#[from] LanguageError),
    #[error(transparent)]
    Bratteli(#[from] BratteliError),
}

impl AdicError {
    /// Hypothesis failures, empty for other errors.
    pub fn failures(&self) -> &[HypothesisFailure] {
        match self {
            AdicError::Rejected(f) => f,
            _ => &[],
        }
    }

    /// True when the input was well formed but a mathematical hypothesis
    /// failed; false for malformed or too-short input.
    pub fn is_rejection(&self) -> bool {
        match self {
            AdicError::Rejected(_) | AdicError::NotProperEnough { .. } | AdicError::NotStabilized { .. } => true,
            AdicError::InsufficientDirective { .. } | AdicError::AlphabetMismatch { .. } => false,
            AdicError::Language(e) => !e.is_parse_error(),
            AdicError::Word(e) => !e.is_parse_error(),
            AdicError::Bratteli(e) => e.is_rejection(),
        }
    }
}
