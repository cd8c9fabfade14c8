//! Seeded generators for randomized checks.
//!
//! Every generator takes an explicit seed and uses ChaCha8, so a failing
//! case can be replayed from the seed alone.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Alphabet, Morphism, Word};

pub const DEFAULT_SEED: u64 = 0x5AD1C;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// The first `n` letters of `a..z`.
pub fn letters(n: usize) -> Alphabet {
    assert!((1..=26).contains(&n));
    Alphabet::new((b'a'..b'a' + n as u8).map(char::from)).expect("distinct letters")
}

/// A left-proper endomorphism over `2..=4` letters: one shared first letter,
/// image lengths uniform in `1..=4`.
pub fn left_proper_morphism<R: Rng>(rng: &mut R) -> Morphism {
    let alphabet = letters(rng.gen_range(2..=4));
    let l = *alphabet.letters().choose(rng).expect("nonempty");
    let rules = alphabet.iter().map(|c| {
        let len = rng.gen_range(1..=4);
        let mut w = Word::from_letter(l);
        for _ in 1..len {
            w.push(*alphabet.letters().choose(rng).expect("nonempty"));
        }
        (c, w)
    });
    let rules: Vec<_> = rules.collect();
    Morphism::new(alphabet.clone(), alphabet, rules).expect("valid by construction")
}

/// A random morphism between the given alphabets with image lengths in
/// `1..=max_len`. When `onto` is set, every codomain letter is forced to
/// occur in some image (requires enough total image length).
pub fn morphism_between<R: Rng>(
    rng: &mut R,
    domain: &Alphabet,
    codomain: &Alphabet,
    max_len: usize,
    onto: bool,
) -> Morphism {
    let mut images: Vec<Vec<char>> = domain
        .iter()
        .map(|_| {
            let len = rng.gen_range(1..=max_len);
            (0..len)
                .map(|_| *codomain.letters().choose(rng).expect("nonempty"))
                .collect()
        })
        .collect();
    if onto {
        for c in codomain.iter() {
            if images.iter().flatten().any(|x| *x == c) {
                continue;
            }
            let i = rng.gen_range(0..images.len());
            let pos = rng.gen_range(0..=images[i].len());
            images[i].insert(pos, c);
        }
    }
    let rules: Vec<_> = domain
        .iter()
        .zip(images)
        .map(|(c, img)| (c, Word::new(&img.into_iter().collect::<String>()).expect("letters")))
        .collect();
    Morphism::new(domain.clone(), codomain.clone(), rules).expect("valid by construction")
}

pub fn random_word<R: Rng>(rng: &mut R, alphabet: &Alphabet, len: usize) -> Word {
    let s: String = (0..len)
        .map(|_| *alphabet.letters().choose(rng).expect("nonempty"))
        .collect();
    Word::new(&s).expect("letters")
}
