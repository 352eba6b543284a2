//! Laurent polynomials `f = Σ f_c χ^c` on the circle.

use std::collections::BTreeMap;
use std::fmt;

use num_complex::Complex64;

use crate::scalar::{Coefficient, GaussianRational};

#[derive(Clone, PartialEq, Eq, Default)]
pub struct LaurentPolynomial {
    coefficients: BTreeMap<i64, GaussianRational>,
}

impl LaurentPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: GaussianRational) -> Self {
        Self::monomial(0, c)
    }

    /// `coefficient · χ^exponent`.
    pub fn monomial(exponent: i64, coefficient: GaussianRational) -> Self {
        Self::from_terms([(exponent, coefficient)])
    }

    pub fn character(exponent: i64) -> Self {
        Self::monomial(exponent, GaussianRational::one())
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i64, GaussianRational)>) -> Self {
        let mut f = Self::zero();
        for (c, v) in terms {
            f.accumulate(c, v);
        }
        f
    }

    fn accumulate(&mut self, exponent: i64, value: GaussianRational) {
        if value.is_zero() {
            return;
        }
        let sum = match self.coefficients.remove(&exponent) {
            Some(old) => old + value,
            None => value,
        };
        if !sum.is_zero() {
            self.coefficients.insert(exponent, sum);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    pub fn coefficient(&self, exponent: i64) -> GaussianRational {
        self.coefficients
            .get(&exponent)
            .cloned()
            .unwrap_or_else(GaussianRational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &GaussianRational)> {
        self.coefficients.iter().map(|(&c, v)| (c, v))
    }

    pub fn max_abs_exponent(&self) -> i64 {
        self.coefficients.keys().map(|c| c.abs()).max().unwrap_or(0)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut f = self.clone();
        for (&c, v) in &other.coefficients {
            f.accumulate(c, v.clone());
        }
        f
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&GaussianRational::integer(-1)))
    }

    pub fn scale(&self, lambda: &GaussianRational) -> Self {
        Self::from_terms(
            self.coefficients
                .iter()
                .map(|(&c, v)| (c, lambda.clone() * v.clone())),
        )
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut f = Self::zero();
        for (&a, u) in &self.coefficients {
            for (&b, v) in &other.coefficients {
                f.accumulate(a + b, u.clone() * v.clone());
            }
        }
        f
    }

    /// The pointwise complex conjugate `f̄`, i.e. `c ↦ conj(f_{−c})`.
    pub fn conj_reflect(&self) -> Self {
        Self::from_terms(self.coefficients.iter().map(|(&c, v)| (-c, v.conj())))
    }

    /// `f(e^{iθ})`.
    pub fn eval(&self, theta: f64) -> Complex64 {
        self.coefficients
            .iter()
            .map(|(&c, v)| v.to_complex() * Complex64::from_polar(1.0, c as f64 * theta))
            .sum()
    }

    /// `Σ |f_c|`, an upper bound for the sup norm.
    pub fn l1_norm(&self) -> f64 {
        self.coefficients.values().map(|v| v.to_complex().norm()).sum()
    }
}

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .coefficients
            .iter()
            .map(|(c, v)| format!("({v})·χ^{c}"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn characters_multiply_by_adding_exponents() {
        let f = LaurentPolynomial::character(2).mul(&LaurentPolynomial::character(-3));
        assert_eq!(f, LaurentPolynomial::character(-1));
    }

    #[test]
    fn cancellation_removes_terms() {
        let f = LaurentPolynomial::character(1).sub(&LaurentPolynomial::character(1));
        assert!(f.is_zero());
    }

    #[test]
    fn conj_reflect_is_pointwise_conjugation() {
        let f = LaurentPolynomial::from_terms([
            (2, GaussianRational::complex(1, 1)),
            (-1, GaussianRational::integer(3)),
        ]);
        for k in 0..8 {
            let theta = k as f64 * 0.7;
            let lhs = f.conj_reflect().eval(theta);
            let rhs = f.eval(theta).conj();
            assert!((lhs - rhs).norm() < 1e-12);
        }
    }
}
