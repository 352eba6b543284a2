//! Seeded generators for semigroups, words and elements, plus exhaustive
//! word enumeration. Shared by tests, the falsifier and the check suites.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::free::FreeElement;
use crate::operator::OperatorElement;
use crate::scalar::GaussianRational;
use crate::semigroup::NumericalSemigroup;
use crate::translation::{Letter, PartialTranslation};

const FIXED: &[&[i64]] = &[&[1], &[2, 3], &[3, 5], &[3, 4, 5]];

/// One of a few fixed semigroups, or random generators `≤ 10` with gcd 1.
pub fn random_semigroup<R: Rng + ?Sized>(rng: &mut R) -> NumericalSemigroup {
    if rng.gen_bool(0.5) {
        let gens = FIXED.choose(rng).expect("non-empty");
        return NumericalSemigroup::build(gens).expect("valid generators");
    }
    loop {
        let count = rng.gen_range(2..=3);
        let gens: Vec<i64> = (0..count).map(|_| rng.gen_range(2..=10)).collect();
        if let Ok(s) = NumericalSemigroup::build(&gens) {
            return s;
        }
    }
}

/// The letters `T_g`, `T_g*` for each minimal generator, ascending.
pub fn alphabet(s: &NumericalSemigroup) -> Vec<Letter> {
    s.generators()
        .iter()
        .flat_map(|&g| [Letter::shift(g), Letter::star(g)])
        .collect()
}

/// A non-empty word of length `≤ max_len` over the generator alphabet.
pub fn random_word<R: Rng + ?Sized>(
    rng: &mut R,
    s: &NumericalSemigroup,
    max_len: usize,
) -> Vec<Letter> {
    let letters = alphabet(s);
    let len = rng.gen_range(1..=max_len.max(1));
    (0..len)
        .map(|_| *letters.choose(rng).expect("non-empty alphabet"))
        .collect()
}

/// Small Gaussian-integer coefficient, never zero.
pub fn random_coefficient<R: Rng + ?Sized>(rng: &mut R) -> GaussianRational {
    loop {
        let re = rng.gen_range(-3..=3);
        let im = if rng.gen_bool(0.3) { rng.gen_range(-2..=2) } else { 0 };
        if re != 0 || im != 0 {
            return GaussianRational::complex(re, im);
        }
    }
}

/// A linear combination of `terms` random words with random coefficients.
pub fn random_combination<R: Rng + ?Sized>(
    rng: &mut R,
    s: &NumericalSemigroup,
    terms: usize,
    max_len: usize,
) -> Vec<(GaussianRational, Vec<Letter>)> {
    let count = rng.gen_range(1..=terms.max(1));
    (0..count)
        .map(|_| (random_coefficient(rng), random_word(rng, s, max_len)))
        .collect()
}

pub fn random_operator_element<R: Rng + ?Sized>(
    rng: &mut R,
    s: &NumericalSemigroup,
    terms: usize,
    max_len: usize,
) -> OperatorElement {
    random_combination(rng, s, terms, max_len)
        .into_iter()
        .fold(OperatorElement::zero(s), |acc, (coef, word)| {
            let v = PartialTranslation::evaluate_word(s, &word).expect("generator letters");
            acc.add(&OperatorElement::from_monomial(&v).scale(&coef))
                .expect("same semigroup")
        })
}

pub fn random_free_element<R: Rng + ?Sized>(
    rng: &mut R,
    s: &NumericalSemigroup,
    terms: usize,
    max_len: usize,
) -> FreeElement {
    let terms = random_combination(rng, s, terms, max_len)
        .into_iter()
        .map(|(coef, word)| {
            let v = PartialTranslation::evaluate_word(s, &word).expect("generator letters");
            (coef, v)
        });
    FreeElement::from_terms(s, terms).expect("same semigroup")
}

/// All non-empty words of length `≤ max_len` in length-then-lexicographic order over
/// [`alphabet`].
pub fn enumerate_words(s: &NumericalSemigroup, max_len: usize) -> Vec<Vec<Letter>> {
    let letters = alphabet(s);
    let mut out = Vec::new();
    let mut layer: Vec<Vec<Letter>> = vec![Vec::new()];
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|w| {
                letters.iter().map(move |&l| {
                    let mut next = w.clone();
                    next.push(l);
                    next
                })
            })
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}
