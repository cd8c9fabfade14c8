use std::collections::BTreeSet;

use crate::bratteli::BratteliDiagram;
use crate::language::{factors, DirectiveSequence, FactorLanguage};
use crate::words::{Morphism, Word};

use super::AdicError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodingReport {
    pub max_len: usize,
    /// The orbit coding read from the minimal path.
    pub coding: Word,
    /// False when the maximal path was hit before `steps` letters.
    pub complete: bool,
    pub equal: bool,
    pub only_in_coding: BTreeSet<Word>,
    pub only_in_language: BTreeSet<Word>,
    /// Largest `k ≤ max_len` such that both factor sets agree on all
    /// lengths `≤ k`.
    pub match_len: usize,
}

/// Compares the factors of the Vershik orbit coding of the minimal path of
/// the diagram read from `d` (levels `2..=depth+1`) with `factors(d, L)`.
///
/// The orbit is not wrapped: a truncated diagram stops at its maximal path
/// and the report says so.
pub fn coding_vs_language(
    d: &DirectiveSequence,
    depth: usize,
    steps: usize,
    max_len: usize,
) -> Result<CodingReport, AdicError> {
    let ms: Vec<Morphism> = d.morphisms().take(depth).cloned().collect();
    let diag = BratteliDiagram::build_from_morphisms(&ms)?;
    let lang = factors(d, max_len)?;
    coding_vs_diagram(&diag, &lang, steps)
}

/// As [`coding_vs_language`] for an already built diagram.
pub fn coding_vs_diagram(
    diag: &BratteliDiagram,
    lang: &FactorLanguage,
    steps: usize,
) -> Result<CodingReport, AdicError> {
    let max_len = lang.max_len();
    let start = diag.min_path(diag.depth())?;
    let orbit = diag.orbit_coding(&start, steps)?;
    let coding_lang = FactorLanguage::from_words(
        lang.alphabet().clone(),
        max_len,
        [orbit.word.clone()],
        orbit.complete,
    );
    let mine = coding_lang.up_to(max_len);
    let theirs = lang.up_to(max_len);
    let only_in_coding: BTreeSet<Word> = mine.difference(&theirs).cloned().collect();
    let only_in_language: BTreeSet<Word> = theirs.difference(&mine).cloned().collect();
    let first_diff = only_in_coding
        .iter()
        .chain(&only_in_language)
        .map(Word::len)
        .min();
    Ok(CodingReport {
        max_len,
        coding: orbit.word,
        complete: orbit.complete,
        equal: first_diff.is_none(),
        match_len: first_diff.map_or(max_len, |k| k - 1),
        only_in_coding,
        only_in_language,
    })
}
