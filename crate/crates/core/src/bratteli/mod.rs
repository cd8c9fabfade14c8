//! Ordered Bratteli diagrams and the Vershik map.
//!
//! Level `n ≥ 2` of a diagram is stored as a morphism `σ_n: V_n → V_{n-1}`;
//! the fibre of `v ∈ V_n` is the word `σ_n(v)`, read left to right as the
//! ordered list of edges entering `v` from below. `V_1` sits on the root
//! `v₀` with one edge per vertex.

mod diagram;
mod dot;
mod path;

use thiserror::Error;

use crate::words::WordError;

pub use diagram::{BratteliDiagram, ROOT_LABEL};
pub use dot::export_dot;
pub use path::{EdgeId, ExtremaReport, OrbitCoding, Path};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BratteliError {
    #[error("EmptyInput: no levels to build from")]
    EmptyInput,
    #[error("AlphabetMismatch at level {level}: expected {{{expected}}}, found {{{found}}}")]
    AlphabetMismatch {
        level: usize,
        expected: String,
        found: String,
    },
    #[error("UnreachedVertex: `{vertex}` at level {level} has no edge from above")]
    UnreachedVertex { level: usize, vertex: char },
    #[error("LevelOutOfRange: level {level}")]
    LevelOutOfRange { level: usize },
    #[error("InvalidCuts: {0}")]
    InvalidCuts(String),
    #[error("DepthOutOfRange: depth {depth}, diagram has {max}")]
    DepthOutOfRange { depth: usize, max: usize },
    #[error("InvalidPath: {0}")]
    InvalidPath(String),
    #[error("MaximalPath: the path has no successor")]
    MaximalPath,
    #[error(transparent)]
    Word(#[from] WordError),
}

impl BratteliError {
    /// True for structural failures of well-formed input, as opposed to
    /// bad levels, depths, cuts or paths.
    pub fn is_rejection(&self) -> bool {
        match self {
            BratteliError::UnreachedVertex { .. } | BratteliError::MaximalPath => true,
            BratteliError::Word(e) => !e.is_parse_error(),
            _ => false,
        }
    }
}
