use std::fmt;
use std::hash::{Hash, Hasher};

use super::{Alphabet, IncidenceMatrix, Word, WordError};

/// A non-erasing morphism `domain* -> codomain*`.
///
/// Equality and hashing ignore the optional name.
#[derive(Clone)]
pub struct Morphism {
    domain: Alphabet,
    codomain: Alphabet,
    // indexed by position of the letter in `domain`
    images: Vec<Word>,
    name: Option<String>,
}

impl Morphism {
    pub fn new<I>(domain: Alphabet, codomain: Alphabet, rules: I) -> Result<Self, WordError>
    where
        I: IntoIterator<Item = (char, Word)>,
    {
        let mut images: Vec<Option<Word>> = vec![None; domain.len()];
        for (letter, image) in rules {
            let idx = domain
                .index_of(letter)
                .ok_or(WordError::UnknownLetter(letter))?;
            if images[idx].is_some() {
                return Err(WordError::DuplicateRule(letter));
            }
            if image.is_empty() {
                return Err(WordError::ErasingImage(letter));
            }
            image.check_over(&codomain)?;
            images[idx] = Some(image);
        }
        let images = images
            .into_iter()
            .zip(domain.iter())
            .map(|(img, c)| img.ok_or(WordError::MissingImage(c)))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Morphism {
            domain,
            codomain,
            images,
            name: None,
        })
    }

    /// Builds a morphism from `letter -> image` rules, inferring the codomain.
    ///
    /// The codomain is the domain when every image letter lies in it,
    /// otherwise the set of letters used by the images.
    pub fn from_rules(rules: &[(char, &str)]) -> Result<Self, WordError> {
        let domain = Alphabet::new(rules.iter().map(|(c, _)| *c))?;
        let images = rules
            .iter()
            .map(|(c, s)| Ok((*c, Word::new(s)?)))
            .collect::<Result<Vec<_>, WordError>>()?;
        let codomain = infer_codomain(&domain, images.iter().map(|(_, w)| w))?;
        Morphism::new(domain, codomain, images)
    }

    /// Builds an endomorphism of `alphabet` from its images listed in
    /// alphabet order.
    pub fn endomorphism(alphabet: &Alphabet, images: &[&str]) -> Result<Self, WordError> {
        if images.len() != alphabet.len() {
            return Err(WordError::AlphabetMismatch {
                expected: alphabet.to_string(),
                found: format!("{} images", images.len()),
            });
        }
        let rules = alphabet
            .iter()
            .zip(images)
            .map(|(c, s)| Ok((c, Word::new(s)?)))
            .collect::<Result<Vec<_>, WordError>>()?;
        Morphism::new(alphabet.clone(), alphabet.clone(), rules)
    }

    pub fn identity(alphabet: &Alphabet) -> Self {
        Morphism {
            domain: alphabet.clone(),
            codomain: alphabet.clone(),
            images: alphabet.iter().map(Word::from_letter).collect(),
            name: Some("id".to_owned()),
        }
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn domain(&self) -> &Alphabet {
        &self.domain
    }

    pub fn codomain(&self) -> &Alphabet {
        &self.codomain
    }

    pub fn is_endomorphism(&self) -> bool {
        self.domain == self.codomain
    }

    pub fn image(&self, letter: char) -> Option<&Word> {
        self.domain.index_of(letter).map(|i| &self.images[i])
    }

    /// Images in domain order.
    pub fn images(&self) -> &[Word] {
        &self.images
    }

    pub fn rules(&self) -> impl Iterator<Item = (char, &Word)> + '_ {
        self.domain.iter().zip(self.images.iter())
    }

    pub fn max_image_len(&self) -> usize {
        self.images.iter().map(Word::len).max().unwrap_or(0)
    }

    pub fn apply(&self, w: &Word) -> Result<Word, WordError> {
        let mut out = Word::empty();
        for c in w.letters() {
            let img = self.image(c).ok_or(WordError::UnknownLetter(c))?;
            out.push_word(img);
        }
        Ok(out)
    }

    pub fn apply_str(&self, s: &str) -> Result<Word, WordError> {
        self.apply(&Word::new(s)?)
    }

    /// `outer ∘ inner`: apply `inner` first, then `outer`.
    pub fn compose(outer: &Morphism, inner: &Morphism) -> Result<Morphism, WordError> {
        if inner.codomain != outer.domain {
            return Err(WordError::AlphabetMismatch {
                expected: outer.domain.to_string(),
                found: inner.codomain.to_string(),
            });
        }
        let images = inner
            .images
            .iter()
            .map(|w| outer.apply(w))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Morphism {
            domain: inner.domain.clone(),
            codomain: outer.codomain.clone(),
            images,
            name: None,
        })
    }

    /// `self ∘ self ∘ ... ∘ self` (`k` times); `k = 0` gives the identity.
    pub fn power(&self, k: usize) -> Result<Morphism, WordError> {
        if !self.is_endomorphism() {
            return Err(WordError::NotEndomorphism);
        }
        let mut acc = Morphism::identity(&self.domain);
        for _ in 0..k {
            acc = Morphism::compose(&acc, self)?;
        }
        acc.name = None;
        Ok(acc)
    }

    pub fn incidence_matrix(&self) -> IncidenceMatrix {
        let mut entries = vec![vec![0u64; self.domain.len()]; self.codomain.len()];
        for (col, img) in self.images.iter().enumerate() {
            for c in img.letters() {
                // images are validated against the codomain
                let row = self.codomain.index_of(c).expect("image letter in codomain");
                entries[row][col] += 1;
            }
        }
        IncidenceMatrix::from_parts(self.codomain.clone(), self.domain.clone(), entries)
    }

    /// True iff every codomain letter occurs in some image.
    pub fn is_onto_letters(&self) -> bool {
        self.codomain
            .iter()
            .all(|c| self.images.iter().any(|w| w.letters().any(|x| x == c)))
    }

    /// True iff every letter of the codomain occurs in every image.
    pub fn all_letters_in_all_images(&self) -> bool {
        self.images
            .iter()
            .all(|w| self.codomain.iter().all(|c| w.letters().any(|x| x == c)))
    }
}

pub(crate) fn infer_codomain<'a, I>(domain: &Alphabet, images: I) -> Result<Alphabet, WordError>
where
    I: IntoIterator<Item = &'a Word>,
{
    let used: Vec<char> = images.into_iter().flat_map(|w| w.letters()).collect();
    if used.iter().all(|c| domain.contains(*c)) {
        Ok(domain.clone())
    } else {
        Alphabet::from_letters_dedup(used)
    }
}

impl PartialEq for Morphism {
    fn eq(&self, other: &Self) -> bool {
        self.domain == other.domain
            && self.codomain == other.codomain
            && self.images == other.images
    }
}

impl Eq for Morphism {}

impl Hash for Morphism {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.domain.hash(state);
        self.codomain.hash(state);
        self.images.hash(state);
    }
}

impl fmt::Display for Morphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, (c, w)) in self.rules().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}->{w}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for Morphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(name) = &self.name {
            write!(f, "{name}")?;
        }
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d() -> Morphism {
        Morphism::from_rules(&[('a', "ab"), ('b', "b"), ('c', "c")]).unwrap()
    }

    fn g() -> Morphism {
        Morphism::from_rules(&[('a', "ba"), ('b', "b"), ('c', "c")]).unwrap()
    }

    fn m() -> Morphism {
        let abc = Alphabet::new("abc".chars()).unwrap();
        Morphism::endomorphism(&abc, &["a", "b", "b"]).unwrap()
    }

    #[test]
    fn apply_examples() {
        assert_eq!(d().apply_str("abc").unwrap().as_str(), "abbc");
        assert_eq!(m().apply_str("cab").unwrap().as_str(), "bab");
        assert!(d().apply(&Word::empty()).unwrap().is_empty());
        assert_eq!(d().apply_str("ax"), Err(WordError::UnknownLetter('x')));
    }

    #[test]
    fn compose_examples() {
        let dg = Morphism::compose(&d(), &g()).unwrap();
        assert_eq!(dg, Morphism::from_rules(&[('a', "bab"), ('b', "b"), ('c', "c")]).unwrap());

        let id = Morphism::identity(d().domain());
        assert_eq!(Morphism::compose(&id, &d()).unwrap(), d());

        let eab = Morphism::from_rules(&[('a', "b"), ('b', "a"), ('c', "c")]).unwrap();
        assert_eq!(Morphism::compose(&eab, &eab).unwrap(), id);
    }

    #[test]
    fn compose_mismatch() {
        let fib = Morphism::from_rules(&[('a', "ab"), ('b', "a")]).unwrap();
        assert!(matches!(
            Morphism::compose(&fib, &d()),
            Err(WordError::AlphabetMismatch { .. })
        ));
    }

    #[test]
    fn erasing_and_missing_rejected() {
        assert_eq!(
            Morphism::from_rules(&[('a', "")]),
            Err(WordError::ErasingImage('a'))
        );
        let ab = Alphabet::new("ab".chars()).unwrap();
        assert_eq!(
            Morphism::new(ab.clone(), ab, [('a', Word::new("b").unwrap())]),
            Err(WordError::MissingImage('b'))
        );
    }

    #[test]
    fn codomain_inference() {
        let x = Morphism::from_rules(&[('x', "ab"), ('y', "a")]).unwrap();
        assert_eq!(x.codomain().to_string(), "ab");
        assert_eq!(d().codomain().to_string(), "abc");
    }

    #[test]
    fn incidence_of_d() {
        let mat = d().incidence_matrix();
        assert_eq!(mat.entries(), &[vec![1, 0, 0], vec![1, 1, 0], vec![0, 0, 1]]);
    }
}
