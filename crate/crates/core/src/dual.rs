//! Functionals on `ℂ[Σ]` and their convolution `(ξ × η)(x) = (ξ ⊗ η)Δ(x)`.

use std::f64::consts::TAU;
use std::fmt;

use num_complex::Complex64;
use num_rational::Rational64;
use num_traits::ToPrimitive;

use crate::error::Result;
use crate::free::FreeElement;
use crate::scalar::{Coefficient, GaussianRational, Scalar};
use crate::translation::PartialTranslation;

#[derive(Debug, Clone, PartialEq)]
pub enum Functional {
    /// `V ↦ ⟨V e_b, e_a⟩`.
    MatrixCoeff { a: i64, b: i64 },
    LinCombo(Vec<(GaussianRational, Functional)>),
    Convolution(Box<Functional>, Box<Functional>),
    /// `V ↦ weight · e^{i·ind V·2π·turns}`: evaluation of the symbol at a
    /// point of the circle.
    SymbolPointMass { turns: Rational64, weight: Complex64 },
    /// `x ↦ ξ(T_e* x T_e)`.
    Pullback { inner: Box<Functional>, e: i64 },
}

impl Functional {
    pub fn point_mass(turns: Rational64) -> Self {
        Functional::SymbolPointMass {
            turns,
            weight: Complex64::new(1.0, 0.0),
        }
    }

    pub fn angle(turns: Rational64) -> f64 {
        TAU * turns.to_f64().expect("finite ratio")
    }

    fn on_monomial(&self, v: &PartialTranslation) -> Scalar {
        match self {
            Functional::MatrixCoeff { a, b } => {
                let hit = v.semigroup().contains(*b) && v.in_domain(*b) && b + v.index() == *a;
                Scalar::Exact(if hit {
                    GaussianRational::one()
                } else {
                    GaussianRational::zero()
                })
            }
            Functional::LinCombo(terms) => terms.iter().fold(Scalar::zero(), |acc, (c, f)| {
                acc + Scalar::Exact(c.clone()) * f.on_monomial(v)
            }),
            Functional::Convolution(f, g) => f.on_monomial(v) * g.on_monomial(v),
            Functional::SymbolPointMass { turns, weight } => {
                let theta = v.index() as f64 * Self::angle(*turns);
                Scalar::Approx(weight * Complex64::from_polar(1.0, theta))
            }
            Functional::Pullback { inner, e } => {
                let s = v.semigroup();
                let te = PartialTranslation::elementary(s, *e, false).expect("checked member");
                let conj = te
                    .adjoint()
                    .compose(v)
                    .and_then(|w| w.compose(&te))
                    .expect("same semigroup");
                inner.on_monomial(&conj)
            }
        }
    }

    /// Linear extension over the basis expansion of `x`.
    pub fn eval(&self, x: &FreeElement) -> Scalar {
        x.terms().fold(Scalar::zero(), |acc, (v, c)| {
            acc + Scalar::Exact(c.clone()) * self.on_monomial(v)
        })
    }

    /// Whether evaluation stays in exact arithmetic.
    pub fn is_exact(&self) -> bool {
        match self {
            Functional::MatrixCoeff { .. } => true,
            Functional::LinCombo(terms) => terms.iter().all(|(_, f)| f.is_exact()),
            Functional::Convolution(f, g) => f.is_exact() && g.is_exact(),
            Functional::SymbolPointMass { .. } => false,
            Functional::Pullback { inner, .. } => inner.is_exact(),
        }
    }
}

impl fmt::Display for Functional {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Functional::MatrixCoeff { a: 0, b: 0 } => write!(f, "haar"),
            Functional::MatrixCoeff { a, b } => write!(f, "w[{a},{b}]"),
            Functional::LinCombo(terms) => {
                let parts: Vec<String> = terms.iter().map(|(c, g)| format!("({c})*{g}")).collect();
                write!(f, "lin({})", parts.join(" + "))
            }
            Functional::Convolution(g, h) => write!(f, "conv({g},{h})"),
            Functional::SymbolPointMass { turns, weight } => {
                if *weight == Complex64::new(1.0, 0.0) {
                    write!(f, "pm({turns})")
                } else {
                    write!(f, "{weight}*pm({turns})")
                }
            }
            Functional::Pullback { inner, e } => write!(f, "pullback({inner},{e})"),
        }
    }
}

pub fn convolve(xi: &Functional, eta: &Functional) -> Functional {
    Functional::Convolution(Box::new(xi.clone()), Box::new(eta.clone()))
}

/// `h(A) = ⟨A e_0, e_0⟩`.
pub fn haar() -> Functional {
    Functional::MatrixCoeff { a: 0, b: 0 }
}

/// `h × φ = φ(I)·h` and `φ × h = φ(I)·h` on `x`.
pub fn haar_property_check(phi: &Functional, x: &FreeElement, tol: f64) -> bool {
    let h = haar();
    let phi_one = phi.eval(&FreeElement::identity(x.semigroup()));
    let expected = phi_one * h.eval(x);
    convolve(&h, phi).eval(x).agrees(&expected, tol) && convolve(phi, &h).eval(x).agrees(&expected, tol)
}

/// `(Φ_e* ξ)(x) = ξ(T_e* x T_e)`.
pub fn phi_star(xi: &Functional, e: i64, s: &crate::semigroup::NumericalSemigroup) -> Result<Functional> {
    s.ensure_member(e)?;
    Ok(Functional::Pullback {
        inner: Box::new(xi.clone()),
        e,
    })
}

/// `δ_α × δ_β = δ_{α+β}` on `x`.
pub fn measure_convolution_check(alpha: Rational64, beta: Rational64, x: &FreeElement, tol: f64) -> bool {
    let lhs = convolve(&Functional::point_mass(alpha), &Functional::point_mass(beta)).eval(x);
    let rhs = Functional::point_mass(alpha + beta).eval(x);
    lhs.agrees(&rhs, tol)
}
