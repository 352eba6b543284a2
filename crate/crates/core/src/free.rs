//! The semigroup algebra `ℂ[Σ]` on the free basis of monomials, together with
//! its two- and three-fold tensor powers.
//!
//! Distinct partial translations are distinct basis vectors here even when
//! their operator combinations coincide; `rep` in [`crate::quantum`] is the
//! (non-injective) passage to operators.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::{Coefficient, GaussianRational};
use crate::semigroup::NumericalSemigroup;
use crate::translation::{Letter, PartialTranslation};

type Gr = GaussianRational;

fn accumulate<T: Ord>(map: &mut BTreeMap<T, Gr>, key: T, value: Gr) {
    if value.is_zero() {
        return;
    }
    let sum = match map.remove(&key) {
        Some(old) => old + value,
        None => value,
    };
    if !sum.is_zero() {
        map.insert(key, sum);
    }
}

fn check_same(a: &NumericalSemigroup, b: &NumericalSemigroup) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::MixedSemigroups)
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct FreeElement {
    semigroup: NumericalSemigroup,
    terms: BTreeMap<PartialTranslation, Gr>,
}

impl FreeElement {
    pub fn zero(s: &NumericalSemigroup) -> Self {
        Self {
            semigroup: s.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn identity(s: &NumericalSemigroup) -> Self {
        Self::monomial(&PartialTranslation::identity(s))
    }

    pub fn monomial(v: &PartialTranslation) -> Self {
        Self::from_terms(v.semigroup(), [(Gr::one(), v.clone())]).expect("single semigroup")
    }

    pub fn from_word(s: &NumericalSemigroup, word: &[Letter]) -> Result<Self> {
        Ok(Self::monomial(&PartialTranslation::evaluate_word(s, word)?))
    }

    pub fn from_terms(
        s: &NumericalSemigroup,
        terms: impl IntoIterator<Item = (Gr, PartialTranslation)>,
    ) -> Result<Self> {
        let mut x = Self::zero(s);
        for (coef, v) in terms {
            check_same(s, v.semigroup())?;
            accumulate(&mut x.terms, v, coef);
        }
        Ok(x)
    }

    pub fn semigroup(&self) -> &NumericalSemigroup {
        &self.semigroup
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PartialTranslation, &Gr)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, v: &PartialTranslation) -> Gr {
        self.terms.get(v).cloned().unwrap_or_else(Gr::zero)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        check_same(&self.semigroup, &other.semigroup)?;
        let mut x = self.clone();
        for (v, c) in &other.terms {
            accumulate(&mut x.terms, v.clone(), c.clone());
        }
        Ok(x)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&Gr::integer(-1)))
    }

    pub fn scale(&self, lambda: &Gr) -> Self {
        let mut x = Self::zero(&self.semigroup);
        for (v, c) in &self.terms {
            accumulate(&mut x.terms, v.clone(), lambda.clone() * c.clone());
        }
        x
    }

    /// Bilinear extension of the monomial product.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        check_same(&self.semigroup, &other.semigroup)?;
        let mut x = Self::zero(&self.semigroup);
        for (v, a) in &self.terms {
            for (w, b) in &other.terms {
                accumulate(&mut x.terms, v.compose(w)?, a.clone() * b.clone());
            }
        }
        Ok(x)
    }

    /// The `*`-operation of `ℂ[Σ]`: conjugate-linear, `V ↦ V*` on the basis.
    pub fn adjoint(&self) -> Self {
        let mut x = Self::zero(&self.semigroup);
        for (v, c) in &self.terms {
            accumulate(&mut x.terms, v.adjoint(), c.conj());
        }
        x
    }
}

impl fmt::Display for FreeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(v, c)| format!("({c})·{v}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for FreeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Finitely supported combination of pairs `V ⊗ W`, i.e. monomials of `S²`.
#[derive(Clone, PartialEq, Eq)]
pub struct FreeTensor {
    semigroup: NumericalSemigroup,
    terms: BTreeMap<(PartialTranslation, PartialTranslation), Gr>,
}

impl FreeTensor {
    pub fn zero(s: &NumericalSemigroup) -> Self {
        Self {
            semigroup: s.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn from_terms(
        s: &NumericalSemigroup,
        terms: impl IntoIterator<Item = (Gr, PartialTranslation, PartialTranslation)>,
    ) -> Result<Self> {
        let mut t = Self::zero(s);
        for (coef, v, w) in terms {
            check_same(s, v.semigroup())?;
            check_same(s, w.semigroup())?;
            accumulate(&mut t.terms, (v, w), coef);
        }
        Ok(t)
    }

    /// `x ⊗ y`.
    pub fn outer(x: &FreeElement, y: &FreeElement) -> Result<Self> {
        check_same(&x.semigroup, &y.semigroup)?;
        let mut t = Self::zero(&x.semigroup);
        for (v, a) in &x.terms {
            for (w, b) in &y.terms {
                accumulate(&mut t.terms, (v.clone(), w.clone()), a.clone() * b.clone());
            }
        }
        Ok(t)
    }

    pub fn semigroup(&self) -> &NumericalSemigroup {
        &self.semigroup
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PartialTranslation, &PartialTranslation, &Gr)> {
        self.terms.iter().map(|((v, w), c)| (v, w, c))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        check_same(&self.semigroup, &other.semigroup)?;
        let mut t = self.clone();
        for (k, c) in &other.terms {
            accumulate(&mut t.terms, k.clone(), c.clone());
        }
        Ok(t)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&Gr::integer(-1)))
    }

    pub fn scale(&self, lambda: &Gr) -> Self {
        let mut t = Self::zero(&self.semigroup);
        for (k, c) in &self.terms {
            accumulate(&mut t.terms, k.clone(), lambda.clone() * c.clone());
        }
        t
    }

    /// `(U⊗V)(U'⊗V') = UU' ⊗ VV'`, extended bilinearly.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        check_same(&self.semigroup, &other.semigroup)?;
        let mut t = Self::zero(&self.semigroup);
        for ((u, v), a) in &self.terms {
            for ((u2, v2), b) in &other.terms {
                accumulate(
                    &mut t.terms,
                    (u.compose(u2)?, v.compose(v2)?),
                    a.clone() * b.clone(),
                );
            }
        }
        Ok(t)
    }

    pub fn adjoint(&self) -> Self {
        let mut t = Self::zero(&self.semigroup);
        for ((v, w), c) in &self.terms {
            accumulate(&mut t.terms, (v.adjoint(), w.adjoint()), c.conj());
        }
        t
    }

    /// Action on `e_c ⊗ e_d`; a term dies if either leg misses its domain.
    pub fn apply(&self, (c, d): (i64, i64)) -> Result<BTreeMap<(i64, i64), Gr>> {
        self.semigroup.ensure_member(c)?;
        self.semigroup.ensure_member(d)?;
        let mut out = BTreeMap::new();
        for ((v, w), coef) in &self.terms {
            if let (Some(x), Some(y)) = (v.apply(c)?, w.apply(d)?) {
                accumulate(&mut out, (x, y), coef.clone());
            }
        }
        Ok(out)
    }
}

impl fmt::Display for FreeTensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|((v, w), c)| format!("({c})·{v}⊗{w}"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for FreeTensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

pub type TripleKey = (PartialTranslation, PartialTranslation, PartialTranslation);

/// Target of the iterated coproducts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreeTriple {
    semigroup: NumericalSemigroup,
    terms: BTreeMap<TripleKey, Gr>,
}

impl FreeTriple {
    pub fn zero(s: &NumericalSemigroup) -> Self {
        Self {
            semigroup: s.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn push(&mut self, key: TripleKey, coef: Gr) {
        accumulate(&mut self.terms, key, coef);
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&TripleKey, &Gr)> {
        self.terms.iter()
    }

    /// `Σ λ · f(U)·g(V)·h(W)` with the three factors multiplied in `ℂ[Σ]`.
    pub fn fold_multiply(
        &self,
        f: impl Fn(&PartialTranslation) -> PartialTranslation,
        g: impl Fn(&PartialTranslation) -> PartialTranslation,
        h: impl Fn(&PartialTranslation) -> PartialTranslation,
    ) -> Result<FreeElement> {
        let mut x = FreeElement::zero(&self.semigroup);
        for ((u, v, w), c) in &self.terms {
            let m = f(u).compose(&g(v))?.compose(&h(w))?;
            accumulate(&mut x.terms, m, c.clone());
        }
        Ok(x)
    }
}
