//! Morphisms of free monoids, S-adic factor languages and ordered
//! Bratteli–Vershik diagrams.
//!
//! The crate is organised bottom-up:
//!
//! - [`words`]: alphabets, words, morphisms, incidence matrices, properness
//!   and conjugate morphisms.
//! - [`language`]: directive sequences `(σ_n, a_n)_{n≥2}`, the factor
//!   language they generate, word complexity and periodicity detection.
//! - [`bratteli`]: ordered Bratteli diagrams, telescoping, the Vershik
//!   successor and orbit codings.
//! - [`adic`]: Bratteli–Vershik representations built from directive
//!   sequences of left/right proper morphisms, Kakutani–Rokhlin towers and
//!   rank reports.
//! - [`s5`]: the five-morphism set `{D, G, E_ab, E_bc, M}` over `{a, b, c}`,
//!   block validation and the rank-3 construction.
//!
//! Everything is computed at finite ("desk") scale: infinite objects are
//! truncated at an explicit depth or word length, and every result that
//! depends on a truncation says so.

pub mod adic;
pub mod bratteli;
pub mod language;
pub mod s5;
pub mod words;

pub use words::{Alphabet, Morphism, Word, WordError};
