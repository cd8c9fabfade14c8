//! The five morphisms `D, G, E_ab, E_bc, M` on `{a, b, c}`.
//!
//! A directive sequence whose morphisms (from level 3 on) are drawn from
//! this set, and whose products over consecutive blocks `[n_i, n_{i+1})`
//! are proper with every letter in every image, generates a subshift with
//! `p(n+1) − p(n) ≤ 2` eventually, and telescoping along the blocks gives a
//! Bratteli–Vershik representation with at most three vertices per level.
//!
//! `σ_2` is free: any morphism with domain `{a, b, c}` may head the
//! sequence. Blocks must then start at level 3 or later.

use thiserror::Error;

use crate::adic::{build_bv, AdicError, BuildMode, BuildOptions, RankReport};
use crate::bratteli::BratteliDiagram;
use crate::language::{
    complexity, factors, morse_hedlund_witness, DirectiveEntry, DirectiveSequence, LanguageError,
    FIRST_LEVEL,
};
use crate::words::{Alphabet, IncidenceMatrix, Morphism, Properness};

pub const NAMES: [&str; 5] = ["D", "G", "E_ab", "E_bc", "M"];

const TABLE: [[&str; 3]; 5] = [
    ["ab", "b", "c"],
    ["ba", "b", "c"],
    ["b", "a", "c"],
    ["a", "c", "b"],
    ["a", "b", "b"],
];

/// Default window for [`search_marks`].
pub const DEFAULT_WINDOW: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum S5Error {
    #[error("UnknownName: `{0}` is not one of D, G, E_ab, E_bc, M")]
    UnknownName(String),
    #[error("NonCatalogMorphism at level {level}")]
    NonCatalogMorphism { level: usize },
    #[error("BlockNotProper: block {block} (levels {start}..{end}) is {properness}")]
    BlockNotProper {
        block: usize,
        start: usize,
        end: usize,
        properness: Properness,
    },
    #[error("MissingLetter: block {block}: `{letter}` does not occur in the image of `{of}`")]
    MissingLetter { block: usize, letter: char, of: char },
    #[error("InvalidMarks: {0}")]
    InvalidMarks(String),
    #[error("NoValidMarking: no valid marking found with blocks up to length {window} (stuck at level {level})")]
    NoValidMarking { window: usize, level: usize },
    #[error("NotStabilized: factor language did not stabilize on this prefix")]
    NotStabilized,
    #[error(transparent)]
    Language(#[from] LanguageError),
    #[error(transparent)]
    Adic(#[from] AdicError),
}

impl S5Error {
    pub fn is_parse_error(&self) -> bool {
        match self {
            S5Error::UnknownName(_) | S5Error::InvalidMarks(_) => true,
            S5Error::Language(e) => e.is_parse_error(),
            S5Error::Adic(e) => !e.is_rejection(),
            _ => false,
        }
    }
}

pub fn alphabet() -> Alphabet {
    Alphabet::new("abc".chars()).expect("valid alphabet")
}

/// The catalog morphism called `name`, if any.
pub fn catalog_morphism(name: &str) -> Option<Morphism> {
    let i = NAMES.iter().position(|&n| n == name)?;
    Some(
        Morphism::endomorphism(&alphabet(), &TABLE[i])
            .expect("catalog images are valid")
            .with_name(name),
    )
}

pub fn s5(name: &str) -> Result<Morphism, S5Error> {
    catalog_morphism(name).ok_or_else(|| S5Error::UnknownName(name.to_owned()))
}

pub fn catalog() -> Vec<Morphism> {
    NAMES.iter().map(|n| catalog_morphism(n).expect("known name")).collect()
}

/// Name of the catalog morphism equal to `m`, whatever `m` is called.
pub fn catalog_name(m: &Morphism) -> Option<&'static str> {
    NAMES
        .iter()
        .find(|n| catalog_morphism(n).as_ref() == Some(m))
        .copied()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockReport {
    pub index: usize,
    /// First level of the block.
    pub start: usize,
    /// One past the last level.
    pub end: usize,
    /// `σ_start ⋯ σ_{end-1}`.
    pub product: Morphism,
    pub properness: Properness,
    pub occurrences: IncidenceMatrix,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidatedDirective {
    directive: DirectiveSequence,
    blocks: Vec<BlockReport>,
}

impl ValidatedDirective {
    pub fn directive(&self) -> &DirectiveSequence {
        &self.directive
    }

    pub fn marks(&self) -> &[usize] {
        self.directive.marks()
    }

    pub fn blocks(&self) -> &[BlockReport] {
        &self.blocks
    }

    /// The directive telescoped along the blocks: level 2 reads
    /// `σ_2 ⋯ σ_{n_2 - 1}` (everything before the second mark), level
    /// `k + 1` reads block `k` for `k ≥ 2`. Each level is seeded with the
    /// seed of the last level of its block; levels after the last mark
    /// are dropped.
    pub fn telescoped(&self) -> Result<DirectiveSequence, S5Error> {
        let marks = self.marks();
        let mut entries = Vec::with_capacity(self.blocks.len());
        let mut start = FIRST_LEVEL;
        for &end in &marks[1..] {
            let mut product = self.directive.morphism(start)?.clone();
            for level in start + 1..end {
                product = Morphism::compose(&product, self.directive.morphism(level)?)
                    .map_err(LanguageError::from)?;
            }
            entries.push(DirectiveEntry {
                morphism: product,
                seed: self.directive.entry(end - 1)?.seed,
            });
            start = end;
        }
        Ok(DirectiveSequence::new(entries, Vec::new())?)
    }
}

/// Checks the block conditions for the marks carried by `d`.
pub fn validate_directive(d: &DirectiveSequence) -> Result<ValidatedDirective, S5Error> {
    for (i, m) in d.morphisms().enumerate() {
        let level = i + FIRST_LEVEL;
        let ok = if level == FIRST_LEVEL {
            m.domain() == &alphabet()
        } else {
            catalog_name(m).is_some()
        };
        if !ok {
            return Err(S5Error::NonCatalogMorphism { level });
        }
    }
    let marks = d.marks();
    if marks.len() < 2 {
        return Err(S5Error::InvalidMarks(
            "at least two marks are needed to delimit a block".into(),
        ));
    }
    if marks[0] == FIRST_LEVEL && catalog_name(d.morphism(FIRST_LEVEL)?).is_none() {
        return Err(S5Error::InvalidMarks(format!(
            "a block cannot start at level {FIRST_LEVEL} when that morphism is not in the catalog"
        )));
    }
    let blocks = marks
        .windows(2)
        .enumerate()
        .map(|(i, w)| check_block(d, i, w[0], w[1]))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(ValidatedDirective {
        directive: d.clone(),
        blocks,
    })
}

fn block_product(d: &DirectiveSequence, start: usize, end: usize) -> Result<Morphism, S5Error> {
    let mut product = d.morphism(start)?.clone();
    for level in start + 1..end {
        product = Morphism::compose(&product, d.morphism(level)?).map_err(LanguageError::from)?;
    }
    Ok(product)
}

fn check_block(d: &DirectiveSequence, index: usize, start: usize, end: usize) -> Result<BlockReport, S5Error> {
    let product = block_product(d, start, end)?;
    let properness = product.properness();
    if !properness.is_proper() {
        return Err(S5Error::BlockNotProper {
            block: index,
            start,
            end,
            properness,
        });
    }
    for (of, image) in product.rules() {
        if let Some(letter) = product.codomain().iter().find(|&x| image.count(x) == 0) {
            return Err(S5Error::MissingLetter {
                block: index,
                letter,
                of,
            });
        }
    }
    Ok(BlockReport {
        index,
        start,
        end,
        occurrences: product.incidence_matrix(),
        product,
        properness,
    })
}

fn block_is_valid(d: &DirectiveSequence, start: usize, end: usize) -> bool {
    check_block(d, 0, start, end).is_ok()
}

fn distinct_images(d: &DirectiveSequence, start: usize, end: usize) -> bool {
    block_product(d, start, end).is_ok_and(|p| {
        let images = p.images();
        images
            .iter()
            .enumerate()
            .all(|(i, w)| images[i + 1..].iter().all(|v| v != w))
    })
}

/// Greedy search for marks. From each mark, the next mark closes the
/// shortest valid block of length `≤ window` whose product has pairwise
/// distinct images, or failing that the shortest valid block: a product
/// identifying two letters can never be injective on a subshift using
/// both.
///
/// The first block starts at level 2 when `σ_2` is in the catalog, at
/// level 3 otherwise. The search ends successfully when fewer than
/// `window` levels remain; a failure says only that this bounded search
/// found nothing.
pub fn search_marks(d: &DirectiveSequence, window: usize) -> Result<ValidatedDirective, S5Error> {
    let unmarked = d.clone().with_marks(Vec::new())?;
    let first = if catalog_name(d.morphism(FIRST_LEVEL)?).is_some() {
        FIRST_LEVEL
    } else {
        FIRST_LEVEL + 1
    };
    let end_bound = d.last_level() + 1;
    let mut marks = vec![first];
    let mut at = first;
    loop {
        let valid: Vec<usize> = (1..=window)
            .map(|len| at + len)
            .take_while(|&end| end <= end_bound)
            .filter(|&end| block_is_valid(&unmarked, at, end))
            .collect();
        let found = valid
            .iter()
            .copied()
            .find(|&end| distinct_images(&unmarked, at, end))
            .or(valid.first().copied());
        match found {
            Some(end) => {
                marks.push(end);
                at = end;
            }
            None if at + window > end_bound && marks.len() >= 2 => break,
            None => return Err(S5Error::NoValidMarking { window, level: at }),
        }
    }
    validate_directive(&d.clone().with_marks(marks)?)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HarnessReport {
    pub max_n: usize,
    /// `p(1), …, p(max_n + 1)`.
    pub values: Vec<usize>,
    /// `p(n+1) − p(n)` for `n = 1..=max_n`.
    pub differences: Vec<i64>,
    /// Smallest `n` from which every difference up to `max_n` is `≤ 2`.
    pub n_min: Option<usize>,
    pub morse_hedlund_witness: Option<usize>,
}

impl HarnessReport {
    pub fn bounded(&self) -> bool {
        self.n_min.is_some()
    }

    pub fn max_difference(&self) -> i64 {
        self.differences.iter().copied().max().unwrap_or(0)
    }
}

/// Complexity differences of the language of `d` up to `max_n`.
pub fn complexity_harness(d: &DirectiveSequence, max_n: usize) -> Result<HarnessReport, S5Error> {
    let lang = match factors(d, max_n + 1) {
        Ok(l) if l.is_stabilized() => l,
        Ok(_) | Err(LanguageError::NonGrowing { .. }) => return Err(S5Error::NotStabilized),
        Err(e) => return Err(e.into()),
    };
    let profile = complexity(&lang, max_n + 1)?;
    let differences = profile.differences().to_vec();
    let tail_ok = differences.iter().rev().take_while(|&&x| x <= 2).count();
    let n_min = (tail_ok > 0).then(|| differences.len() - tail_ok + 1);
    Ok(HarnessReport {
        max_n,
        values: profile.values().to_vec(),
        n_min,
        morse_hedlund_witness: morse_hedlund_witness(&profile),
        differences,
    })
}

/// Strict build on the telescoped directive.
pub fn build_rank3_bv(
    vd: &ValidatedDirective,
    depth: usize,
) -> Result<(BratteliDiagram, RankReport), S5Error> {
    let t = vd.telescoped()?;
    Ok(build_bv(&t, depth, &BuildOptions::with_mode(BuildMode::Strict))?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(name: &str) -> Morphism {
        s5(name).unwrap()
    }

    fn directive(names: &[&str], repeat: usize) -> DirectiveSequence {
        let entries = (0..repeat)
            .flat_map(|_| names.iter())
            .map(|n| DirectiveEntry {
                morphism: m(n),
                seed: 'a',
            })
            .collect();
        DirectiveSequence::new(entries, Vec::new()).unwrap()
    }

    #[test]
    fn table() {
        assert_eq!(m("D").apply_str("a").unwrap().as_str(), "ab");
        assert_eq!(m("E_bc").apply_str("abc").unwrap().as_str(), "acb");
        assert_eq!(Morphism::compose(&m("M"), &m("M")).unwrap(), m("M"));
        assert_eq!(s5("F"), Err(S5Error::UnknownName("F".into())));
    }

    #[test]
    fn involutions_and_matrices() {
        let id = Morphism::identity(&alphabet());
        assert_eq!(Morphism::compose(&m("E_ab"), &m("E_ab")).unwrap(), id);
        assert_eq!(Morphism::compose(&m("E_bc"), &m("E_bc")).unwrap(), id);
        assert_eq!(m("D").incidence_matrix(), m("G").incidence_matrix());
    }

    #[test]
    fn d_blocks_are_not_proper() {
        let d = directive(&["D"], 6).with_marks(vec![2, 3, 4]).unwrap();
        assert!(matches!(validate_directive(&d), Err(S5Error::BlockNotProper { block: 0, .. })));
    }

    #[test]
    fn non_catalog_rejected() {
        let fib = Morphism::from_rules(&[('a', "ab"), ('b', "a"), ('c', "c")]).unwrap();
        let mut entries = directive(&["D", "G"], 1).entries().to_vec();
        entries.push(DirectiveEntry { morphism: fib.clone(), seed: 'a' });
        let d = DirectiveSequence::new(entries, vec![2, 4]).unwrap();
        assert_eq!(validate_directive(&d), Err(S5Error::NonCatalogMorphism { level: 4 }));
        // the same morphism heading the sequence is the free slot
        let mut entries = vec![DirectiveEntry { morphism: fib, seed: 'a' }];
        entries.extend(directive(&["D"], 2).entries().iter().cloned());
        let d = DirectiveSequence::new(entries, vec![3, 4]).unwrap();
        assert!(!matches!(validate_directive(&d), Err(S5Error::NonCatalogMorphism { .. })));
    }

    const BLOCK: [&str; 8] = ["D", "E_bc", "D", "E_ab", "G", "M", "E_ab", "D"];

    #[test]
    fn known_block_validates() {
        let d = directive(&BLOCK, 3).with_marks(vec![2, 10, 18, 26]).unwrap();
        let vd = validate_directive(&d).unwrap();
        assert_eq!(vd.blocks().len(), 3);
        let p = &vd.blocks()[0].product;
        assert_eq!(p.image('a').unwrap().as_str(), "abcabcc");
        assert_eq!(p.image('b').unwrap().as_str(), "abcc");
        assert_eq!(p.image('c').unwrap().as_str(), "abc");
        assert!(vd.blocks()[0].occurrences.is_positive());
    }

    #[test]
    fn missing_letter() {
        // D·G·M: a ↦ bab, b ↦ b, c ↦ b is proper but never uses c
        let d = directive(&["D", "G", "M"], 1).with_marks(vec![2, 5]).unwrap();
        assert_eq!(
            validate_directive(&d),
            Err(S5Error::MissingLetter { block: 0, letter: 'c', of: 'a' })
        );
    }

    #[test]
    fn search_finds_blocks() {
        let d = directive(&BLOCK, 6);
        let vd = search_marks(&d, DEFAULT_WINDOW).unwrap();
        assert!(vd.blocks().len() >= 4);
        assert!(vd.blocks().iter().all(|b| b.properness.is_proper()));
        assert!(vd.blocks().iter().all(|b| b.end - b.start <= DEFAULT_WINDOW));
    }

    #[test]
    fn search_fails_on_d() {
        assert!(matches!(
            search_marks(&directive(&["D"], 20), DEFAULT_WINDOW),
            Err(S5Error::NoValidMarking { level: 2, .. })
        ));
    }

    #[test]
    fn telescoped_levels() {
        let d = directive(&BLOCK, 4).with_marks(vec![2, 10, 18, 26]).unwrap();
        let vd = validate_directive(&d).unwrap();
        let t = vd.telescoped().unwrap();
        assert_eq!(t.len(), 3);
        assert_eq!(t.morphism(2).unwrap(), &vd.blocks()[0].product);
        assert_eq!(t.morphism(3).unwrap(), &vd.blocks()[1].product);
    }

    #[test]
    fn harness_on_block() {
        let r = complexity_harness(&directive(&BLOCK, 8), 20).unwrap();
        assert!(r.bounded());
        assert!(r.max_difference() <= 2, "{:?}", r.differences);
        assert_eq!(r.morse_hedlund_witness, None);
    }

    #[test]
    fn harness_on_degenerate() {
        // D^k(a) = ab^k: p(n) = 2 from n = 2 on
        let r = complexity_harness(&directive(&["D"], 60), 10).unwrap();
        assert!(r.bounded());
        assert_eq!(r.n_min, Some(1));
        assert!(r.differences[1..].iter().all(|&x| x == 0));
        assert_eq!(r.morse_hedlund_witness, Some(2));
    }

    #[test]
    fn collapsing_block_is_rejected_by_build() {
        // a ↦ abccabc = σ(bc): valid block, but not injective on words
        let names = ["D", "E_bc", "D", "E_ab", "G", "M", "E_ab", "G"];
        let d = directive(&names, 10);
        let marks: Vec<usize> = (0..=10).map(|k| 2 + 8 * k).collect();
        let vd = validate_directive(&d.with_marks(marks).unwrap()).unwrap();
        let err = build_rank3_bv(&vd, 6).unwrap_err();
        assert!(err.to_string().contains("NotInjective"), "{err}");
    }

    #[test]
    fn rank_three_build() {
        let vd = search_marks(&directive(&BLOCK, 10), DEFAULT_WINDOW).unwrap();
        let (diag, report) = build_rank3_bv(&vd, 6).unwrap();
        assert_eq!(report.max_vertices, 3);
        assert!(diag.vertex_counts()[1..].iter().all(|&n| n == 3));
    }

    #[test]
    fn exhaustive_short_blocks() {
        // every catalog word of length ≤ 6 whose product is proper with all
        // letters in all images
        let cat = catalog();
        let mut found = Vec::new();
        let mut stack: Vec<(Vec<usize>, Morphism)> =
            (0..5).map(|i| (vec![i], cat[i].clone())).collect();
        while let Some((names, product)) = stack.pop() {
            if product.properness().is_proper() && product.all_letters_in_all_images() {
                found.push(names.clone());
            }
            if names.len() < 6 {
                for (i, c) in cat.iter().enumerate() {
                    let mut n = names.clone();
                    n.push(i);
                    stack.push((n, Morphism::compose(&product, c).unwrap()));
                }
            }
        }
        assert_eq!(found.len(), 8);
        for names in &found {
            let entries = names
                .iter()
                .map(|&i| DirectiveEntry { morphism: cat[i].clone(), seed: 'a' })
                .collect();
            let d = DirectiveSequence::new(entries, vec![2, 2 + names.len()]).unwrap();
            assert!(validate_directive(&d).is_ok());
        }
    }
}
