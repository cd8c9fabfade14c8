//! Left/right properness, conjugate morphisms and the conjugation identity.
//!
//! A morphism is *left proper* when every image starts with the same letter
//! `l`, so that `σ(a) = l·u(a)`; its left conjugate is `τ(a) = u(a)·l`.
//! Right properness and the right conjugate are the mirror images.

use std::fmt;

use super::{Morphism, Word, WordError};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Properness {
    Left(char),
    Right(char),
    Both { first: char, last: char },
    Neither,
}

impl Properness {
    pub fn left_letter(self) -> Option<char> {
        match self {
            Properness::Left(l) | Properness::Both { first: l, .. } => Some(l),
            _ => None,
        }
    }

    pub fn right_letter(self) -> Option<char> {
        match self {
            Properness::Right(r) | Properness::Both { last: r, .. } => Some(r),
            _ => None,
        }
    }

    pub fn is_left(self) -> bool {
        self.left_letter().is_some()
    }

    pub fn is_right(self) -> bool {
        self.right_letter().is_some()
    }

    pub fn is_proper(self) -> bool {
        matches!(self, Properness::Both { .. })
    }
}

impl fmt::Display for Properness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Properness::Left(l) => write!(f, "left (l = {l})"),
            Properness::Right(r) => write!(f, "right (r = {r})"),
            Properness::Both { first, last } => write!(f, "both (l = {first}, r = {last})"),
            Properness::Neither => f.write_str("neither"),
        }
    }
}

/// Which side a conjugate strips from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

fn shared(mut it: impl Iterator<Item = Option<char>>) -> Option<char> {
    let first = it.next()??;
    it.all(|c| c == Some(first)).then_some(first)
}

impl Morphism {
    pub fn properness(&self) -> Properness {
        let l = shared(self.images().iter().map(Word::first));
        let r = shared(self.images().iter().map(Word::last));
        match (l, r) {
            (Some(first), Some(last)) => Properness::Both { first, last },
            (Some(l), None) => Properness::Left(l),
            (None, Some(r)) => Properness::Right(r),
            (None, None) => Properness::Neither,
        }
    }

    /// `τ(a) = u(a)·l` where `σ(a) = l·u(a)`. The result is right proper.
    pub fn left_conjugate(&self) -> Result<Morphism, WordError> {
        let l = self.properness().left_letter().ok_or(WordError::NotLeftProper)?;
        self.rotate(|w| {
            let mut t = w.factor(1, w.len() - 1);
            t.push(l);
            t
        })
    }

    /// `τ(a) = r·u(a)` where `σ(a) = u(a)·r`. The result is left proper.
    pub fn right_conjugate(&self) -> Result<Morphism, WordError> {
        let r = self.properness().right_letter().ok_or(WordError::NotRightProper)?;
        self.rotate(|w| {
            let mut t = Word::from_letter(r);
            t.push_word(&w.factor(0, w.len() - 1));
            t
        })
    }

    pub fn conjugate(&self, side: Side) -> Result<Morphism, WordError> {
        match side {
            Side::Left => self.left_conjugate(),
            Side::Right => self.right_conjugate(),
        }
    }

    /// The left conjugate when left proper, otherwise the right conjugate.
    pub fn some_conjugate(&self) -> Result<(Side, Morphism), WordError> {
        match self.properness() {
            p if p.is_left() => Ok((Side::Left, self.left_conjugate()?)),
            p if p.is_right() => Ok((Side::Right, self.right_conjugate()?)),
            _ => Err(WordError::NotProperEnough),
        }
    }

    fn rotate(&self, f: impl Fn(&Word) -> Word) -> Result<Morphism, WordError> {
        Morphism::new(
            self.domain().clone(),
            self.codomain().clone(),
            self.rules().map(|(c, w)| (c, f(w))),
        )
    }
}

/// A word where the literal iterated identity `σⁿ(a)·l = l·τⁿ(a)` fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IteratedMismatch {
    pub n: usize,
    pub letter: char,
    pub lhs: Word,
    pub rhs: Word,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyReport {
    pub side: Side,
    pub witness: char,
    pub conjugate: Morphism,
    pub max_len: usize,
    pub words_checked: u64,
    /// First word `w` with `σ(w)·l ≠ l·τ(w)` (right: `r·σ(w) ≠ τ(w)·r`).
    /// Always `None`: the identity follows from the definition of `τ`.
    pub counterexample: Option<Word>,
    /// Outcome of the iterated form over `n ≤ max_len`; `None` when the
    /// morphism is not an endomorphism and powers are undefined.
    pub iterated: Option<IteratedOutcome>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IteratedOutcome {
    Holds { up_to: usize },
    Fails(IteratedMismatch),
}

impl ConjugacyReport {
    pub fn holds(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// Checks `σ(w)·l = l·τ(w)` for every word `|w| ≤ max_len` (or the mirror
/// identity `r·σ(w) = τ(w)·r` for a right-proper `σ`), and reports whether
/// the iterated form `σⁿ(a)·l = l·τⁿ(a)` holds for `n ≤ max_len`.
pub fn verify_conjugacy_identity(
    m: &Morphism,
    side: Side,
    max_len: usize,
) -> Result<ConjugacyReport, WordError> {
    let (witness, conjugate) = match side {
        Side::Left => (
            m.properness().left_letter().ok_or(WordError::NotLeftProper)?,
            m.left_conjugate()?,
        ),
        Side::Right => (
            m.properness().right_letter().ok_or(WordError::NotRightProper)?,
            m.right_conjugate()?,
        ),
    };

    let mut checker = IdentityChecker {
        m,
        tau: &conjugate,
        side,
        witness: witness as u8,
        max_len,
        lhs: Vec::new(),
        rhs: Vec::new(),
        path: Vec::new(),
        checked: 0,
        counterexample: None,
    };
    checker.visit();

    let iterated = if m.is_endomorphism() {
        Some(check_iterated(m, &conjugate, side, witness, max_len)?)
    } else {
        None
    };

    Ok(ConjugacyReport {
        side,
        witness,
        max_len,
        words_checked: checker.checked,
        counterexample: checker.counterexample,
        conjugate,
        iterated,
    })
}

/// Depth-first walk over all words up to `max_len`, extending both sides
/// of the identity incrementally so shared prefixes are never recomputed.
struct IdentityChecker<'a> {
    m: &'a Morphism,
    tau: &'a Morphism,
    side: Side,
    witness: u8,
    max_len: usize,
    // σ(w) and τ(w), without the witness letter
    lhs: Vec<u8>,
    rhs: Vec<u8>,
    path: Vec<u8>,
    checked: u64,
    counterexample: Option<Word>,
}

impl IdentityChecker<'_> {
    fn holds_here(&self) -> bool {
        let (sigma, tau, x) = (&self.lhs, &self.rhs, self.witness);
        if sigma.len() != tau.len() {
            return false;
        }
        match self.side {
            // σ(w)·l == l·τ(w)
            Side::Left => {
                let n = sigma.len();
                n == 0 || (sigma[0] == x && sigma[1..] == tau[..n - 1] && tau[n - 1] == x)
            }
            // r·σ(w) == τ(w)·r
            Side::Right => {
                let n = sigma.len();
                n == 0 || (tau[0] == x && tau[1..] == sigma[..n - 1] && sigma[n - 1] == x)
            }
        }
    }

    fn visit(&mut self) {
        self.checked += 1;
        if !self.holds_here() {
            self.counterexample = Some(Word::from_string_unchecked(
                String::from_utf8(self.path.clone()).expect("ascii"),
            ));
            return;
        }
        if self.path.len() == self.max_len {
            return;
        }
        for (c, img) in self.m.rules() {
            let timg = self.tau.image(c).expect("same domain");
            let (l0, r0) = (self.lhs.len(), self.rhs.len());
            self.lhs.extend_from_slice(img.as_bytes());
            self.rhs.extend_from_slice(timg.as_bytes());
            self.path.push(c as u8);
            self.visit();
            self.path.pop();
            self.lhs.truncate(l0);
            self.rhs.truncate(r0);
            if self.counterexample.is_some() {
                return;
            }
        }
    }
}

fn check_iterated(
    m: &Morphism,
    tau: &Morphism,
    side: Side,
    witness: char,
    max_n: usize,
) -> Result<IteratedOutcome, WordError> {
    let x = Word::from_letter(witness);
    let mut sigma_n = Morphism::identity(m.domain());
    let mut tau_n = Morphism::identity(m.domain());
    for n in 1..=max_n {
        sigma_n = Morphism::compose(m, &sigma_n)?;
        tau_n = Morphism::compose(tau, &tau_n)?;
        for (letter, s) in sigma_n.rules() {
            let t = tau_n.image(letter).expect("same domain");
            let (lhs, rhs) = match side {
                Side::Left => (s.concat(&x), x.concat(t)),
                Side::Right => (x.concat(s), t.concat(&x)),
            };
            if lhs != rhs {
                return Ok(IteratedOutcome::Fails(IteratedMismatch {
                    n,
                    letter,
                    lhs,
                    rhs,
                }));
            }
        }
    }
    Ok(IteratedOutcome::Holds { up_to: max_n })
}

/// The products `στ` and `τσ` of a left- or right-proper primitive
/// substitution with its conjugate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProperProducts {
    pub conjugate_side: Side,
    pub conjugate: Morphism,
    /// `σ ∘ τ`
    pub sigma_tau: Morphism,
    /// `τ ∘ σ`
    pub tau_sigma: Morphism,
}

impl ProperProducts {
    pub fn both_proper(&self) -> bool {
        self.sigma_tau.properness().is_proper() && self.tau_sigma.properness().is_proper()
    }

    pub fn both_primitive(&self) -> bool {
        self.sigma_tau.is_primitive().unwrap_or(false)
            && self.tau_sigma.is_primitive().unwrap_or(false)
    }
}

pub fn proper_products(m: &Morphism) -> Result<ProperProducts, WordError> {
    if !m.is_endomorphism() {
        return Err(WordError::NotEndomorphism);
    }
    let (conjugate_side, conjugate) = m.some_conjugate()?;
    if !m.is_primitive()? {
        return Err(WordError::NotPrimitive);
    }
    let sigma_tau = Morphism::compose(m, &conjugate)?;
    let tau_sigma = Morphism::compose(&conjugate, m)?;
    let products = ProperProducts {
        conjugate_side,
        conjugate,
        sigma_tau,
        tau_sigma,
    };
    debug_assert!(products.both_proper());
    Ok(products)
}
