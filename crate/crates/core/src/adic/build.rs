use std::fmt;

use crate::bratteli::BratteliDiagram;
use crate::language::{complexity, factors, morse_hedlund_witness, DirectiveSequence, LanguageError, FIRST_LEVEL};
use crate::words::Morphism;

use super::conjugates::alternate_from_first;
use super::{check_injectivity, AdicError, HypothesisFailure, Injectivity};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BuildMode {
    /// Every `σ_n` proper; level `n` reads `σ_n`.
    Strict,
    /// Every `σ_n` left or right proper; level `n` reads `σ_n` or its
    /// conjugate, left proper on even levels and right proper on odd ones.
    Alternating,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BuildOptions {
    pub mode: BuildMode,
    /// Word length up to which injectivity is checked.
    pub scale: usize,
    /// Factor length used for the periodicity check.
    pub periodicity_len: usize,
}

impl Default for BuildOptions {
    fn default() -> Self {
        BuildOptions {
            mode: BuildMode::Strict,
            scale: 8,
            periodicity_len: 12,
        }
    }
}

impl BuildOptions {
    pub fn with_mode(mode: BuildMode) -> Self {
        BuildOptions {
            mode,
            ..Self::default()
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// Aperiodic language on at least two vertices per level somewhere.
    ExpansiveSubshift,
    /// One vertex per level: an odometer.
    Equicontinuous,
    Unknown,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::ExpansiveSubshift => "expansive-subshift evidence",
            Verdict::Equicontinuous => "equicontinuous evidence",
            Verdict::Unknown => "unknown",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankReport {
    pub depth: usize,
    pub mode: BuildMode,
    /// `max |V_n|` over the built levels: an upper bound for the rank.
    pub max_vertices: usize,
    pub vertex_counts: Vec<usize>,
    pub periodic_tail_detected: bool,
    pub morse_hedlund_witness: Option<usize>,
    pub verdict: Verdict,
    /// Injectivity was verified on words up to this length.
    pub injectivity_scale: usize,
    /// Complexity `p(1..=periodicity_len)` of the generated language.
    pub complexity: Vec<usize>,
}

/// Builds the diagram with levels `2..=depth+1` read from `d` and checks
/// the hypotheses that make it a representation of the subshift:
///
/// - properness of every `σ_n` (both sides, or one side in alternating
///   mode);
/// - injectivity of `σ_n` on the language of `(σ_k, a_k)_{k>n}`, at
///   `opts.scale`;
/// - aperiodicity of the language of `d`, by Morse–Hedlund at
///   `opts.periodicity_len`. A periodic language on a single-vertex
///   diagram is accepted as an odometer.
///
/// All failing hypotheses are collected into [`AdicError::Rejected`].
/// The directive needs `depth + 1` entries so that the source language of
/// the top level is defined.
pub fn build_bv(
    d: &DirectiveSequence,
    depth: usize,
    opts: &BuildOptions,
) -> Result<(BratteliDiagram, RankReport), AdicError> {
    let need = depth + 1;
    if depth == 0 || d.len() < need {
        return Err(AdicError::InsufficientDirective {
            depth,
            need,
            have: d.len(),
        });
    }
    let top = depth + FIRST_LEVEL - 1;
    let mut failures = Vec::new();

    for level in FIRST_LEVEL..=top {
        let p = d.morphism(level)?.properness();
        let ok = match opts.mode {
            BuildMode::Strict => p.is_proper(),
            BuildMode::Alternating => p.is_left() || p.is_right(),
        };
        if !ok {
            failures.push(HypothesisFailure::NotProper { level, properness: p });
        }
    }

    for level in FIRST_LEVEL..=top {
        let source = d.tail(level + 1)?;
        let lang = source_language(&source, opts.scale, level + 1)?;
        if let Injectivity::NotInjective { u, v, image } =
            check_injectivity(d.morphism(level)?, &lang, opts.scale)?
        {
            failures.push(HypothesisFailure::NotInjective { level, u, v, image });
        }
    }

    let lang = source_language(d, opts.periodicity_len, FIRST_LEVEL)?;
    let profile = complexity(&lang, opts.periodicity_len)?;
    let witness = morse_hedlund_witness(&profile);

    let max_vertices = (1..=top)
        .map(|level| d.alphabet(level).map(|a| a.len()))
        .collect::<Result<Vec<_>, _>>()?
        .into_iter()
        .max()
        .unwrap_or(1);
    if let Some(w) = witness {
        if max_vertices > 1 {
            failures.push(HypothesisFailure::PeriodicLanguage { witness: w });
        }
    }
    if !failures.is_empty() {
        return Err(AdicError::Rejected(failures));
    }

    let morphisms: Vec<Morphism> = d.morphisms().take(depth).cloned().collect();
    let morphisms = match opts.mode {
        BuildMode::Strict => morphisms,
        BuildMode::Alternating => alternate_from_first(&morphisms)?,
    };
    let diagram = BratteliDiagram::build_from_morphisms(&morphisms)?;
    debug_assert_eq!(diagram.max_vertices(), max_vertices);

    let last_difference = profile.differences().last().copied();
    let verdict = match (witness, max_vertices) {
        (Some(_), 1) => Verdict::Equicontinuous,
        (None, k) if k >= 2 && last_difference != Some(0) => Verdict::ExpansiveSubshift,
        _ => Verdict::Unknown,
    };
    let report = RankReport {
        depth,
        mode: opts.mode,
        max_vertices,
        vertex_counts: diagram.vertex_counts(),
        periodic_tail_detected: witness.is_some(),
        morse_hedlund_witness: witness,
        verdict,
        injectivity_scale: opts.scale,
        complexity: profile.values().to_vec(),
    };
    Ok((diagram, report))
}

fn source_language(
    d: &DirectiveSequence,
    len: usize,
    level: usize,
) -> Result<crate::language::FactorLanguage, AdicError> {
    match factors(d, len) {
        Ok(lang) if lang.is_stabilized() => Ok(lang),
        Ok(_) | Err(LanguageError::NonGrowing { .. }) => Err(AdicError::NotStabilized { level }),
        Err(e) => Err(e.into()),
    }
}
