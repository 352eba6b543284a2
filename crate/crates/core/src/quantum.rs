//! Coalgebra on `ℂ[Σ]`: the diagonal comultiplication, the weak antipode,
//! group-like elements, the commutator coideal identity, the circle coaction,
//! and the probes that test whether `Δ` descends to operators.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::free::{FreeElement, FreeTensor, FreeTriple};
use crate::laurent::LaurentPolynomial;
use crate::operator::OperatorElement;
use crate::scalar::{Coefficient, GaussianRational};
use crate::translation::PartialTranslation;

type Gr = GaussianRational;

/// Passage to operators: `Σ λ_V · V`.
pub fn rep(x: &FreeElement) -> OperatorElement {
    x.terms()
        .fold(OperatorElement::zero(x.semigroup()), |acc, (v, c)| {
            acc.add(&OperatorElement::from_monomial(v).scale(c))
                .expect("same semigroup")
        })
}

/// `Δ(Σ λ V) = Σ λ V ⊗ V`.
pub fn coproduct(x: &FreeElement) -> FreeTensor {
    FreeTensor::from_terms(
        x.semigroup(),
        x.terms().map(|(v, c)| (c.clone(), v.clone(), v.clone())),
    )
    .expect("same semigroup")
}

/// Linear map `V ↦ V*` with coefficients unchanged.
pub fn weak_antipode(x: &FreeElement) -> FreeElement {
    FreeElement::from_terms(x.semigroup(), x.terms().map(|(v, c)| (c.clone(), v.adjoint())))
        .expect("same semigroup")
}

/// `(Δ ⊗ id)Δ(x)`.
pub fn coproduct_left(x: &FreeElement) -> FreeTriple {
    let mut out = FreeTriple::zero(x.semigroup());
    for (v, w, c) in coproduct(x).terms() {
        for (u, u2, d) in coproduct(&FreeElement::monomial(v)).terms() {
            out.push((u.clone(), u2.clone(), w.clone()), c.clone() * d.clone());
        }
    }
    out
}

/// `(id ⊗ Δ)Δ(x)`.
pub fn coproduct_right(x: &FreeElement) -> FreeTriple {
    let mut out = FreeTriple::zero(x.semigroup());
    for (v, w, c) in coproduct(x).terms() {
        for (u, u2, d) in coproduct(&FreeElement::monomial(w)).terms() {
            out.push((v.clone(), u.clone(), u2.clone()), c.clone() * d.clone());
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq)]
pub struct WeakHopfOutcome {
    /// `m(id ⊗ T ⊗ id)(Δ ⊗ id)Δ(x)`.
    pub first: FreeElement,
    /// `m(T ⊗ id ⊗ T)(Δ ⊗ id)Δ(x)`.
    pub second: FreeElement,
    pub first_holds: bool,
    pub second_holds: bool,
}

impl WeakHopfOutcome {
    pub fn pass(&self) -> bool {
        self.first_holds && self.second_holds
    }
}

pub fn weak_hopf_check(x: &FreeElement) -> WeakHopfOutcome {
    let triple = coproduct_left(x);
    let id = |v: &PartialTranslation| v.clone();
    let t = |v: &PartialTranslation| v.adjoint();
    let first = triple.fold_multiply(id, t, id).expect("same semigroup");
    let second = triple.fold_multiply(t, id, t).expect("same semigroup");
    WeakHopfOutcome {
        first_holds: &first == x,
        second_holds: second == weak_antipode(x),
        first,
        second,
    }
}

pub fn coassociativity_check(x: &FreeElement) -> bool {
    coproduct_left(x) == coproduct_right(x)
}

/// The index `c` when `x` is a group-like isometry.
pub fn group_like_detect(x: &FreeElement) -> Option<i64> {
    if x.is_zero() || coproduct(x) != FreeTensor::outer(x, x).expect("same semigroup") {
        return None;
    }
    if !rep(x).is_isometry() {
        return None;
    }
    let mut terms = x.terms();
    let (v, c) = terms.next().expect("non-zero");
    assert!(terms.next().is_none(), "group-like elements are single monomials");
    assert_eq!(c, &Gr::one());
    assert!(v.is_total(), "isometric monomials have full domain");
    assert!(v.semigroup().contains(v.index()));
    Some(v.index())
}

#[derive(Debug, Clone, PartialEq)]
pub struct CoidealDecomposition {
    pub commutator: FreeElement,
    /// `(VW − WV) ⊗ VW`.
    pub left: FreeTensor,
    /// `WV ⊗ (VW − WV)`.
    pub right: FreeTensor,
    /// `Δ(VW − WV) = left + right`.
    pub exact: bool,
    pub in_ideal: bool,
}

pub fn coideal_decomposition(v: &PartialTranslation, w: &PartialTranslation) -> Result<CoidealDecomposition> {
    let vw = FreeElement::monomial(&v.compose(w)?);
    let wv = FreeElement::monomial(&w.compose(v)?);
    let commutator = vw.sub(&wv)?;
    let left = FreeTensor::outer(&commutator, &vw)?;
    let right = FreeTensor::outer(&wv, &commutator)?;
    let exact = coproduct(&commutator) == left.add(&right)?;
    let in_ideal = rep(&commutator).in_ideal();
    Ok(CoidealDecomposition {
        commutator,
        left,
        right,
        exact,
        in_ideal,
    })
}

/// `δ(Σ λ V) = Σ V ⊗ λ χ^{ind V}`, keyed by basis monomial.
pub fn delta_coaction(x: &FreeElement) -> BTreeMap<PartialTranslation, (Gr, LaurentPolynomial)> {
    x.terms()
        .map(|(v, c)| {
            (
                v.clone(),
                (c.clone(), LaurentPolynomial::monomial(v.index(), c.clone())),
            )
        })
        .collect()
}

/// `(δ ⊗ id)δ(x) = (id ⊗ Δ_G)δ(x)` with `Δ_G(χ^k) = χ^k ⊗ χ^k`.
pub fn coaction_axiom_check(x: &FreeElement) -> bool {
    let mut lhs: BTreeMap<(PartialTranslation, i64, i64), Gr> = BTreeMap::new();
    let mut rhs: BTreeMap<(PartialTranslation, i64, i64), Gr> = BTreeMap::new();
    for (v, (_, f)) in delta_coaction(x) {
        for (k, coef) in f.terms() {
            for (u, (_, g)) in delta_coaction(&FreeElement::monomial(&v)) {
                for (j, c2) in g.terms() {
                    let e = lhs.entry((u.clone(), j, k)).or_insert_with(Gr::zero);
                    *e = e.clone() + c2.clone() * coef.clone();
                }
            }
            let e = rhs.entry((v.clone(), k, k)).or_insert_with(Gr::zero);
            *e = e.clone() + coef.clone();
        }
    }
    lhs.retain(|_, c| !c.is_zero());
    rhs.retain(|_, c| !c.is_zero());
    lhs == rhs
}

/// `δ(x) = x ⊗ 1`.
pub fn is_coaction_fixed(x: &FreeElement) -> bool {
    let fixed = delta_coaction(x)
        .into_iter()
        .all(|(_, (c, f))| f == LaurentPolynomial::constant(c));
    debug_assert_eq!(fixed, x.terms().all(|(v, _)| v.index() == 0));
    fixed
}

#[derive(Debug, Clone, PartialEq)]
pub struct DescentWitness {
    pub pair: (i64, i64),
    pub values: BTreeMap<(i64, i64), Gr>,
}

/// For `x` with `rep(x) = 0`, the first member pair `(c, d)` with
/// `c, d ≤ window` where `Δ(x)(e_c ⊗ e_d) ≠ 0`.
pub fn descent_witness(x: &FreeElement, window: i64) -> Result<Option<DescentWitness>> {
    if !rep(x).is_zero() {
        return Err(Error::Precondition("rep(x) must vanish".into()));
    }
    let s = x.semigroup();
    let dx = coproduct(x);
    for c in s.members_in(0, window + 1) {
        for d in s.members_in(0, window + 1) {
            let values = dx.apply((c, d))?;
            if !values.is_empty() {
                return Ok(Some(DescentWitness {
                    pair: (c, d),
                    values,
                }));
            }
        }
    }
    Ok(None)
}

#[derive(Debug, Clone, PartialEq)]
pub struct CornerFailure {
    pub pair: (i64, i64),
    /// First leg of the `a`-class part of `Δ(x)(e_c ⊗ e_{c+a})`.
    pub tensor_side: BTreeMap<i64, Gr>,
    /// `P_a x e_c`, where `P_a` projects onto `{e_u : u + a ∈ S}`.
    pub operator_side: BTreeMap<i64, Gr>,
}

/// Compares the two routes around the corner diagram on pairs
/// `(c, c + a)` with `c ≤ window`; returns the first failing pair.
pub fn corner_diagram_check(x: &FreeElement, a: i64, window: i64) -> Result<Option<CornerFailure>> {
    let s = x.semigroup();
    let dx = coproduct(x);
    let op = rep(x);
    for c in s.members_in(0, window + 1) {
        if !s.contains(c + a) {
            continue;
        }
        let mut tensor_side: BTreeMap<i64, Gr> = BTreeMap::new();
        for ((u, v), coef) in dx.apply((c, c + a))? {
            if v - u == a {
                let e = tensor_side.entry(u).or_insert_with(Gr::zero);
                *e = e.clone() + coef;
            }
        }
        tensor_side.retain(|_, v| !v.is_zero());
        let operator_side: BTreeMap<i64, Gr> = op
            .apply(c)?
            .into_iter()
            .filter(|(u, _)| s.contains(u + a))
            .collect();
        if tensor_side != operator_side {
            return Ok(Some(CornerFailure {
                pair: (c, c + a),
                tensor_side,
                operator_side,
            }));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{enumerate_words, random_free_element, random_semigroup};
    use crate::semigroup::NumericalSemigroup;
    use crate::translation::Letter;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn sg(gens: &[i64]) -> NumericalSemigroup {
        NumericalSemigroup::build(gens).unwrap()
    }

    fn q(n: i64) -> Gr {
        Gr::integer(n)
    }

    fn word(s: &NumericalSemigroup, letters: &[Letter]) -> PartialTranslation {
        PartialTranslation::evaluate_word(s, letters).unwrap()
    }

    fn t(s: &NumericalSemigroup, a: i64) -> PartialTranslation {
        PartialTranslation::elementary(s, a, false).unwrap()
    }

    fn ts(s: &NumericalSemigroup, a: i64) -> PartialTranslation {
        PartialTranslation::elementary(s, a, true).unwrap()
    }

    fn mono(v: &PartialTranslation) -> FreeElement {
        FreeElement::monomial(v)
    }

    /// `1_{2+S} + 1_{3+S} − 1_{S∖{0}} − 1_{{d≥5}}` over ⟨2,3⟩.
    fn inclusion_exclusion(s: &NumericalSemigroup) -> FreeElement {
        let a = word(s, &[Letter::shift(2), Letter::star(2)]);
        let b = word(s, &[Letter::shift(3), Letter::star(3)]);
        let c = word(s, &[Letter::star(3), Letter::shift(2), Letter::star(2), Letter::shift(3)]);
        let d = a.compose(&b).unwrap();
        assert_eq!(d.domain().threshold(), 5);
        assert_eq!(d.domain().members_below(), &[] as &[i64]);
        assert_eq!(c.domain().threshold(), 1);
        FreeElement::from_terms(s, [(q(1), a), (q(1), b), (q(-1), c), (q(-1), d)]).unwrap()
    }

    #[test]
    fn rep_examples() {
        let s = sg(&[2, 3]);
        let x = inclusion_exclusion(&s);
        assert_eq!(x.len(), 4);
        let r = rep(&x);
        assert!(r.is_zero());
        // Basis oracle: count domain memberships term by term.
        for d in s.members_in(0, 11) {
            let total: i64 = [(2, 1), (3, 1)]
                .iter()
                .map(|&(g, sign)| if s.contains(d - g) { sign } else { 0 })
                .sum::<i64>()
                - i64::from(d != 0)
                - i64::from(d >= 5);
            assert_eq!(total, 0, "at e_{d}");
        }
        assert!(!rep(&mono(&ts(&s, 3))).is_zero());
    }

    #[test]
    fn coproduct_examples() {
        let s = sg(&[2, 3]);
        let dx = coproduct(&mono(&t(&s, 2)));
        assert_eq!(dx, FreeTensor::from_terms(&s, [(q(1), t(&s, 2), t(&s, 2))]).unwrap());
        assert!(coproduct(&FreeElement::zero(&s)).is_zero());
        let x = mono(&t(&s, 2)).scale(&q(3)).add(&mono(&ts(&s, 3)).scale(&Gr::complex(0, 1))).unwrap();
        assert_eq!(
            coproduct(&x),
            FreeTensor::from_terms(&s, [(q(3), t(&s, 2), t(&s, 2)), (Gr::complex(0, 1), ts(&s, 3), ts(&s, 3))]).unwrap()
        );
    }

    #[test]
    fn tensor_apply_examples() {
        let s = sg(&[2, 3]);
        let proj = word(&s, &[Letter::star(3), Letter::shift(2), Letter::star(2), Letter::shift(3)]);
        assert_eq!(
            coproduct(&mono(&proj)).apply((2, 3)).unwrap(),
            BTreeMap::from([((2, 3), q(1))])
        );
    }

    #[test]
    fn weak_antipode_examples() {
        let s = sg(&[2, 3]);
        assert_eq!(weak_antipode(&mono(&t(&s, 2))), mono(&ts(&s, 2)));
        assert_eq!(weak_antipode(&FreeElement::identity(&s)), FreeElement::identity(&s));
        let x = mono(&t(&s, 2)).scale(&Gr::complex(2, 1));
        assert_eq!(weak_antipode(&weak_antipode(&x)), x);
        // Linear, unlike the adjoint.
        assert_eq!(weak_antipode(&x), mono(&ts(&s, 2)).scale(&Gr::complex(2, 1)));
        assert_ne!(weak_antipode(&x), x.adjoint());
    }

    #[test]
    fn weak_hopf_examples() {
        let s = sg(&[2, 3]);
        assert!(weak_hopf_check(&mono(&word(&s, &[Letter::star(2), Letter::shift(3)]))).pass());
        let x = mono(&t(&s, 2))
            .scale(&q(2))
            .sub(&mono(&word(&s, &[Letter::star(2), Letter::shift(3)])).scale(&q(3)))
            .unwrap();
        assert!(weak_hopf_check(&x).pass());
        assert!(weak_hopf_check(&FreeElement::zero(&s)).pass());
        assert!(coassociativity_check(&x));
    }

    #[test]
    fn group_like_examples() {
        let s = sg(&[2, 3]);
        assert_eq!(group_like_detect(&mono(&t(&s, 3))), Some(3));
        let m1 = mono(&PartialTranslation::max_translation(&s, 1));
        assert_eq!(coproduct(&m1), FreeTensor::outer(&m1, &m1).unwrap());
        assert_eq!(group_like_detect(&m1), None);
        let sum = mono(&t(&s, 2)).add(&mono(&t(&s, 3))).unwrap();
        assert_eq!(FreeTensor::outer(&sum, &sum).unwrap().len(), 4);
        assert_eq!(group_like_detect(&sum), None);
        assert_eq!(group_like_detect(&mono(&t(&s, 2)).scale(&q(2))), None);
    }

    #[test]
    fn coideal_examples() {
        let s = sg(&[2, 3]);
        let d = coideal_decomposition(&t(&s, 2), &ts(&s, 2)).unwrap();
        assert!(d.exact && d.in_ideal);
        assert!(!d.commutator.is_zero());
        let d = coideal_decomposition(&t(&s, 2), &t(&s, 3)).unwrap();
        assert!(d.exact && d.commutator.is_zero());
        let d = coideal_decomposition(&ts(&s, 3), &t(&s, 2)).unwrap();
        assert!(d.exact && d.in_ideal);
    }

    #[test]
    fn coaction_examples() {
        let s = sg(&[2, 3]);
        let x = mono(&t(&s, 2));
        let delta = delta_coaction(&x);
        assert_eq!(delta[&t(&s, 2)].1, LaurentPolynomial::character(2));
        assert!(!is_coaction_fixed(&x));
        let p = mono(&word(&s, &[Letter::shift(2), Letter::star(2)]));
        assert!(is_coaction_fixed(&p));
        assert!(coaction_axiom_check(&x.add(&p).unwrap()));
    }

    #[test]
    fn descent_examples() {
        let s = sg(&[2, 3]);
        let x = inclusion_exclusion(&s);
        let w = descent_witness(&x, 10).unwrap().unwrap();
        assert_eq!(w.pair, (2, 3));
        assert_eq!(w.values, BTreeMap::from([((2, 3), q(-1))]));
        for a in s.members_in(0, 11) {
            assert!(coproduct(&x).apply((a, a)).unwrap().is_empty());
        }
        assert!(matches!(
            descent_witness(&mono(&t(&s, 2)), 10),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn corner_examples() {
        let s = sg(&[2, 3]);
        let x = mono(&word(&s, &[Letter::shift(2), Letter::star(2)]));
        assert_eq!(corner_diagram_check(&x, 0, 12).unwrap(), None);
        let fail = corner_diagram_check(&x, 1, 12).unwrap().unwrap();
        assert_eq!(fail.pair, (2, 3));
        assert!(fail.tensor_side.is_empty());
        assert_eq!(fail.operator_side, BTreeMap::from([(2, q(1))]));

        let z = sg(&[1]);
        for w in enumerate_words(&z, 4) {
            let x = mono(&PartialTranslation::evaluate_word(&z, &w).unwrap());
            for a in 0..=4 {
                assert_eq!(corner_diagram_check(&x, a, 12).unwrap(), None);
            }
        }
    }

    #[test]
    fn corner_fails_for_negative_offsets_over_naturals() {
        let z = sg(&[1]);
        let x = mono(&word(&z, &[Letter::shift(1), Letter::star(1)]));
        let fail = corner_diagram_check(&x, -1, 12).unwrap().unwrap();
        assert_eq!(fail.pair, (1, 0));
        assert!(fail.tensor_side.is_empty());
        assert_eq!(fail.operator_side, BTreeMap::from([(1, q(1))]));
    }

    #[test]
    fn random_elements_satisfy_coalgebra_laws() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..100 {
            let s = random_semigroup(&mut rng);
            let x = random_free_element(&mut rng, &s, 5, 6);
            let y = random_free_element(&mut rng, &s, 3, 4);
            assert!(weak_hopf_check(&x).pass());
            assert!(coassociativity_check(&x));
            assert!(coaction_axiom_check(&x));
            assert_eq!(
                coproduct(&x.multiply(&y).unwrap()),
                coproduct(&x).multiply(&coproduct(&y)).unwrap()
            );
            let r = rep(&x);
            for a in s.members_in(0, 15) {
                let diagonal: BTreeMap<i64, Gr> = coproduct(&x)
                    .apply((a, a))
                    .unwrap()
                    .into_iter()
                    .map(|((u, v), c)| {
                        assert_eq!(u, v);
                        (u, c)
                    })
                    .collect();
                assert_eq!(diagonal, r.apply(a).unwrap());
            }
        }
    }
}
