//! Faithful canonical form for the dense subalgebra `P(S)` of the reduced
//! semigroup C*-algebra.
//!
//! An element is stored as a finite family of weighted translations:
//! `A e_d = Σ_c w_c(d) e_{d+c}`, where each weight `w_c` is eventually
//! constant on `S`. Monomial indicators are linearly dependent as soon as `S`
//! has gaps, so operator equality is decided on this form rather than on
//! linear combinations of words.

use std::collections::BTreeMap;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::laurent::LaurentPolynomial;
use crate::scalar::{Coefficient, GaussianRational};
use crate::semigroup::NumericalSemigroup;
use crate::translation::PartialTranslation;

/// A function on `S` that is constant (`tail`) from `threshold` on.
///
/// `exceptional` lists the value at every member below the threshold; the
/// threshold is minimal, so the member just below it differs from the tail.
#[derive(Debug, Clone, PartialEq)]
pub struct EventualWeight<K> {
    exceptional: BTreeMap<i64, K>,
    threshold: i64,
    tail: K,
}

impl<K: Coefficient> EventualWeight<K> {
    /// Tabulates `f` on `S`; `f` must be constant on members `≥ bound`.
    pub fn tabulate(s: &NumericalSemigroup, bound: i64, f: impl Fn(i64) -> K) -> Self {
        let bound = bound.max(s.conductor());
        let tail = f(bound);
        let values: Vec<(i64, K)> = s.members_in(0, bound).map(|d| (d, f(d))).collect();
        let threshold = values
            .iter()
            .rev()
            .find(|(_, v)| *v != tail)
            .map_or(0, |(d, _)| d + 1);
        let exceptional = values.into_iter().filter(|(d, _)| *d < threshold).collect();
        Self {
            exceptional,
            threshold,
            tail,
        }
    }

    pub fn constant(value: K) -> Self {
        Self {
            exceptional: BTreeMap::new(),
            threshold: 0,
            tail: value,
        }
    }

    /// Value at a member `d` of `S`.
    pub fn value(&self, d: i64) -> K {
        if d >= self.threshold {
            self.tail.clone()
        } else {
            self.exceptional
                .get(&d)
                .cloned()
                .expect("weights are evaluated on members only")
        }
    }

    pub fn threshold(&self) -> i64 {
        self.threshold
    }

    pub fn tail(&self) -> &K {
        &self.tail
    }

    pub fn exceptional(&self) -> &BTreeMap<i64, K> {
        &self.exceptional
    }

    pub fn is_zero(&self) -> bool {
        self.tail.is_zero() && self.exceptional.values().all(Coefficient::is_zero)
    }
}

/// An element of `P(S)` in weighted-translation form.
#[derive(Debug, Clone, PartialEq)]
pub struct OperatorElement<K = GaussianRational> {
    semigroup: NumericalSemigroup,
    components: BTreeMap<i64, EventualWeight<K>>,
}

/// Complex-double elements produced by the gauge action and Fourier averaging.
pub type NumericElement = OperatorElement<Complex64>;

impl<K: Coefficient> OperatorElement<K> {
    pub fn zero(s: &NumericalSemigroup) -> Self {
        Self {
            semigroup: s.clone(),
            components: BTreeMap::new(),
        }
    }

    pub fn identity(s: &NumericalSemigroup) -> Self {
        let mut a = Self::zero(s);
        a.components.insert(0, EventualWeight::constant(K::one()));
        a
    }

    fn insert(&mut self, index: i64, weight: EventualWeight<K>) {
        if !weight.is_zero() {
            self.components.insert(index, weight);
        }
    }

    /// Indicator weight of the monomial's domain at its index.
    pub fn from_monomial(v: &PartialTranslation) -> Self {
        let s = v.semigroup();
        let weight = EventualWeight::tabulate(s, v.domain().threshold(), |d| {
            if v.in_domain(d) {
                K::one()
            } else {
                K::zero()
            }
        });
        let mut a = Self::zero(s);
        a.insert(v.index(), weight);
        a
    }

    pub fn semigroup(&self) -> &NumericalSemigroup {
        &self.semigroup
    }

    pub fn is_zero(&self) -> bool {
        self.components.is_empty()
    }

    pub fn components(&self) -> impl Iterator<Item = (i64, &EventualWeight<K>)> {
        self.components.iter().map(|(&c, w)| (c, w))
    }

    pub fn component(&self, index: i64) -> Option<&EventualWeight<K>> {
        self.components.get(&index)
    }

    pub fn indices(&self) -> impl Iterator<Item = i64> + '_ {
        self.components.keys().copied()
    }

    /// Largest `|c|` over stored indices.
    pub fn index_span(&self) -> i64 {
        self.components.keys().map(|c| c.abs()).max().unwrap_or(0)
    }

    /// `w_c(d) = 0` whenever `d + c ∉ S`, checked on a window past every
    /// threshold.
    pub fn support_condition_holds(&self) -> bool {
        let s = &self.semigroup;
        self.components.iter().all(|(&c, w)| {
            let limit = w.threshold() + s.conductor() + c.abs() + 1;
            s.members_in(0, limit)
                .all(|d| s.contains(d + c) || w.value(d).is_zero())
        })
    }

    fn same_semigroup(&self, other: &Self) -> Result<()> {
        if self.semigroup == other.semigroup {
            Ok(())
        } else {
            Err(Error::MixedSemigroups)
        }
    }

    fn combine(&self, other: &Self, op: impl Fn(K, K) -> K) -> Result<Self> {
        self.same_semigroup(other)?;
        let s = &self.semigroup;
        let zero = EventualWeight::constant(K::zero());
        let indices: std::collections::BTreeSet<i64> =
            self.indices().chain(other.indices()).collect();
        let mut out = Self::zero(s);
        for c in indices {
            let u = self.components.get(&c).unwrap_or(&zero);
            let v = other.components.get(&c).unwrap_or(&zero);
            let bound = u.threshold().max(v.threshold());
            out.insert(
                c,
                EventualWeight::tabulate(s, bound, |d| op(u.value(d), v.value(d))),
            );
        }
        Ok(out)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.combine(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.combine(other, |a, b| a - b)
    }

    pub fn scale(&self, lambda: &K) -> Self {
        let s = &self.semigroup;
        let mut out = Self::zero(s);
        for (&c, w) in &self.components {
            out.insert(
                c,
                EventualWeight::tabulate(s, w.threshold(), |d| lambda.clone() * w.value(d)),
            );
        }
        out
    }

    /// Operator product `self · other` (`other` acts first). The index-`c₁+c₂`
    /// component accumulates `d ↦ w₂(d) · w₁(d + c₂)`.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.same_semigroup(other)?;
        let s = &self.semigroup;
        let mut grouped: BTreeMap<i64, Vec<(&EventualWeight<K>, i64, &EventualWeight<K>)>> =
            BTreeMap::new();
        for (&c1, w1) in &self.components {
            for (&c2, w2) in &other.components {
                grouped.entry(c1 + c2).or_default().push((w1, c2, w2));
            }
        }
        let mut out = Self::zero(s);
        for (c, terms) in grouped {
            let bound = terms
                .iter()
                .map(|(w1, c2, w2)| w2.threshold().max(w1.threshold() - c2).max(s.conductor() - c2))
                .max()
                .unwrap_or(0);
            let weight = EventualWeight::tabulate(s, bound, |d| {
                terms.iter().fold(K::zero(), |acc, (w1, c2, w2)| {
                    if s.contains(d + c2) {
                        acc + w2.value(d) * w1.value(d + c2)
                    } else {
                        acc
                    }
                })
            });
            out.insert(c, weight);
        }
        debug_assert!(out.support_condition_holds());
        Ok(out)
    }

    /// Hilbert-space adjoint: the index-`−c` component is
    /// `d ↦ conj(w_c(d − c))` on `{d : d − c ∈ S}`.
    pub fn adjoint(&self) -> Self {
        let s = &self.semigroup;
        let mut out = Self::zero(s);
        for (&c, w) in &self.components {
            let bound = (w.threshold() + c).max(s.conductor() + c);
            let weight = EventualWeight::tabulate(s, bound, |d| {
                if s.contains(d - c) {
                    w.value(d - c).conj()
                } else {
                    K::zero()
                }
            });
            out.insert(-c, weight);
        }
        out
    }

    /// Coefficients of `A e_d` on the basis.
    pub fn apply(&self, d: i64) -> Result<BTreeMap<i64, K>> {
        self.semigroup.ensure_member(d)?;
        Ok(self
            .components
            .iter()
            .filter_map(|(&c, w)| {
                let v = w.value(d);
                (!v.is_zero()).then_some((d + c, v))
            })
            .collect())
    }

    /// The index-`c` component `Q_c(A)`.
    pub fn grade(&self, c: i64) -> Self {
        let mut out = Self::zero(&self.semigroup);
        if let Some(w) = self.components.get(&c) {
            out.components.insert(c, w.clone());
        }
        out
    }

    /// Conditional expectation onto the zero-index subalgebra.
    pub fn expectation(&self) -> Self {
        self.grade(0)
    }

    /// `T_e* · A · T_e`: the weight `w_c` becomes `d ↦ w_c(d + e)` on
    /// `{d : d + c ∈ S}`.
    pub fn conjugate(&self, e: i64) -> Result<Self> {
        let s = &self.semigroup;
        s.ensure_member(e)?;
        let mut out = Self::zero(s);
        for (&c, w) in &self.components {
            let bound = (w.threshold() - e).max(s.conductor() - c);
            let weight = EventualWeight::tabulate(s, bound, |d| {
                if s.contains(d + c) {
                    w.value(d + e)
                } else {
                    K::zero()
                }
            });
            out.insert(c, weight);
        }
        Ok(out)
    }

    /// Every `e ∈ S` with `e ≥` this value conjugates `A` onto its Toeplitz
    /// lift.
    pub fn stabilization_threshold(&self) -> i64 {
        self.components
            .values()
            .map(EventualWeight::threshold)
            .max()
            .unwrap_or(0)
    }

    pub fn is_isometry(&self) -> bool {
        self.adjoint()
            .multiply(self)
            .map(|p| p == Self::identity(&self.semigroup))
            .unwrap_or(false)
    }

    /// Coefficient-wise cast, used to pass from exact to numeric elements.
    pub fn map_coefficients<L: Coefficient>(&self, f: impl Fn(&K) -> L) -> OperatorElement<L> {
        let s = &self.semigroup;
        let mut out = OperatorElement::<L>::zero(s);
        for (&c, w) in &self.components {
            let weight = EventualWeight::tabulate(s, w.threshold(), |d| f(&w.value(d)));
            out.insert(c, weight);
        }
        out
    }

    pub fn to_numeric(&self) -> NumericElement {
        self.map_coefficients(Coefficient::to_complex)
    }

    /// Multiplies each index-`c` component by `phase(c)`.
    pub fn twist_components(&self, phase: impl Fn(i64) -> K) -> Self {
        let s = &self.semigroup;
        let mut out = Self::zero(s);
        for (&c, w) in &self.components {
            let p = phase(c);
            out.insert(
                c,
                EventualWeight::tabulate(s, w.threshold(), |d| p.clone() * w.value(d)),
            );
        }
        out
    }
}

impl NumericElement {
    /// Largest pointwise deviation `|w_c(d) − w'_c(d)|` over all indices and
    /// members (tails included).
    pub fn max_deviation(&self, other: &NumericElement) -> f64 {
        let s = &self.semigroup;
        let zero = EventualWeight::constant(Complex64::new(0.0, 0.0));
        let indices: std::collections::BTreeSet<i64> =
            self.indices().chain(other.indices()).collect();
        indices
            .into_iter()
            .map(|c| {
                let u = self.components.get(&c).unwrap_or(&zero);
                let v = other.components.get(&c).unwrap_or(&zero);
                let limit = u.threshold().max(v.threshold()).max(s.conductor());
                s.members_in(0, limit + 1)
                    .map(|d| (u.value(d) - v.value(d)).norm())
                    .fold(0.0, f64::max)
            })
            .fold(0.0, f64::max)
    }
}

impl OperatorElement<GaussianRational> {
    fn symbol_by_tails(&self) -> LaurentPolynomial {
        LaurentPolynomial::from_terms(self.components.iter().map(|(&c, w)| (c, w.tail().clone())))
    }

    /// The symbol: coefficient of `χ^c` is the eventual value of `w_c`.
    ///
    /// Cross-checked against the stabilised conjugation `T_e* A T_e`.
    pub fn symbol(&self) -> LaurentPolynomial {
        let f = self.symbol_by_tails();
        let e = self.semigroup.next_member(self.stabilization_threshold());
        let conj = self.conjugate(e).expect("e is a member");
        assert_eq!(
            conj,
            Self::toeplitz_lift(&f, &self.semigroup),
            "conjugation must stabilise on the Toeplitz lift of the symbol"
        );
        f
    }

    /// `𝕋_f = Σ_c f_c · T_c` with `T_c` the maximal-domain translation.
    pub fn toeplitz_lift(f: &LaurentPolynomial, s: &NumericalSemigroup) -> Self {
        let mut out = Self::zero(s);
        for (c, v) in f.terms() {
            let weight = EventualWeight::tabulate(s, s.conductor() - c, |d| {
                if s.contains(d + c) {
                    v.clone()
                } else {
                    GaussianRational::zero()
                }
            });
            out.insert(c, weight);
        }
        out
    }

    /// Membership in the commutator ideal: the symbol vanishes.
    pub fn in_ideal(&self) -> bool {
        self.symbol().is_zero()
    }

    /// `A = 𝕋_f + k` with `f` the symbol and `k` in the commutator ideal.
    pub fn split(&self) -> (LaurentPolynomial, Self) {
        let f = self.symbol();
        let k = self
            .sub(&Self::toeplitz_lift(&f, &self.semigroup))
            .expect("same semigroup");
        debug_assert!(k.in_ideal());
        (f, k)
    }
}
