//! Floating-point side: finite compressions, operator norms by power
//! iteration, sup norms of symbols, the gauge action and Fourier recovery of
//! graded components, and the unilateral-shift example over ⟨2,3⟩.

use std::collections::BTreeMap;
use std::f64::consts::{PI, TAU};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::free::FreeElement;
use crate::laurent::LaurentPolynomial;
use crate::operator::{NumericElement, OperatorElement};
use crate::quantum::{coproduct, rep};
use crate::scalar::{Coefficient, GaussianRational};
use crate::semigroup::NumericalSemigroup;
use crate::translation::{Letter, PartialTranslation};

pub const MAX_ITERATIONS: usize = 100_000;
pub const DEFAULT_TOLERANCE: f64 = 1e-10;

/// Compression of an operator to the span of the first `N` basis vectors.
#[derive(Debug, Clone, PartialEq)]
pub struct TruncatedMatrix {
    basis: Vec<i64>,
    entries: Vec<Complex64>,
    columns: Vec<Vec<(usize, Complex64)>>,
}

impl TruncatedMatrix {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    /// The members `s_0 < … < s_{N−1}` indexing rows and columns.
    pub fn basis(&self) -> &[i64] {
        &self.basis
    }

    pub fn entry(&self, i: usize, j: usize) -> Complex64 {
        self.entries[i * self.dimension() + j]
    }

    /// Non-zero entries of column `j` as `(row, value)`.
    pub fn column(&self, j: usize) -> &[(usize, Complex64)] {
        &self.columns[j]
    }

    fn matvec(&self, v: &[Complex64]) -> Vec<Complex64> {
        let mut out = vec![Complex64::new(0.0, 0.0); self.dimension()];
        for (j, col) in self.columns.iter().enumerate() {
            for &(i, a) in col {
                out[i] += a * v[j];
            }
        }
        out
    }

    fn adjoint_matvec(&self, w: &[Complex64]) -> Vec<Complex64> {
        self.columns
            .iter()
            .map(|col| col.iter().map(|&(i, a)| a.conj() * w[i]).sum())
            .collect()
    }
}

pub fn truncate<K: Coefficient>(a: &OperatorElement<K>, n: usize) -> Result<TruncatedMatrix> {
    if n == 0 {
        return Err(Error::Precondition("dimension must be at least 1".into()));
    }
    let s = a.semigroup();
    let basis: Vec<i64> = (0..n).map(|i| s.element_at(i)).collect();
    let mut entries = vec![Complex64::new(0.0, 0.0); n * n];
    let mut columns = Vec::with_capacity(n);
    for (j, &d) in basis.iter().enumerate() {
        let mut col = Vec::new();
        for (target, value) in a.apply(d)? {
            if let Some(i) = s.position(target).filter(|&i| i < n) {
                let z = value.to_complex();
                entries[i * n + j] = z;
                col.push((i, z));
            }
        }
        col.sort_by_key(|&(i, _)| i);
        columns.push(col);
    }
    Ok(TruncatedMatrix {
        basis,
        entries,
        columns,
    })
}

fn norm(v: &[Complex64]) -> f64 {
    v.iter().map(Complex64::norm_sqr).sum::<f64>().sqrt()
}

/// Largest singular value by power iteration on `MᴴM` from the normalised
/// all-ones vector, stopped when the Rayleigh quotient changes by less than
/// `tol` relatively.
pub fn operator_norm(m: &TruncatedMatrix, tol: f64) -> Result<f64> {
    if !(tol > 0.0) {
        return Err(Error::Precondition("tolerance must be positive".into()));
    }
    let n = m.dimension();
    let mut v = vec![Complex64::new(1.0 / (n as f64).sqrt(), 0.0); n];
    let mut previous: Option<f64> = None;
    for _ in 0..MAX_ITERATIONS {
        let w = m.matvec(&v);
        let u = m.adjoint_matvec(&w);
        let lambda = w.iter().map(Complex64::norm_sqr).sum::<f64>();
        let size = norm(&u);
        if size == 0.0 {
            return Ok(0.0);
        }
        if let Some(p) = previous {
            if (lambda - p).abs() < tol * lambda {
                return Ok(lambda.sqrt());
            }
        }
        previous = Some(lambda);
        v = u.into_iter().map(|z| z / size).collect();
    }
    Err(Error::NoConvergence(MAX_ITERATIONS))
}

/// `max |f|` over `samples` equally spaced angles, with the a-priori bound
/// `π·max|c|·Σ|f_c| / samples` on the distance to the true supremum.
pub fn laurent_sup_norm(f: &LaurentPolynomial, samples: usize) -> Result<(f64, f64)> {
    if samples < 16 {
        return Err(Error::Precondition("at least 16 samples are required".into()));
    }
    let value = (0..samples)
        .map(|k| f.eval(TAU * k as f64 / samples as f64).norm())
        .fold(0.0, f64::max);
    let bound = PI * f.max_abs_exponent() as f64 * f.l1_norm() / samples as f64;
    Ok((value, bound))
}

#[derive(Debug, Clone, PartialEq)]
pub struct NormConvergence {
    pub dimensions: Vec<usize>,
    pub norms: Vec<f64>,
    pub sup_norm: f64,
    pub sup_error_bound: f64,
    pub monotone: bool,
    /// `|‖f‖_∞ − ‖truncate(𝕋_f, N_last)‖|`.
    pub final_gap: f64,
}

impl NormConvergence {
    pub fn pass(&self, band: f64) -> bool {
        self.monotone && self.final_gap <= band
    }
}

pub fn norm_convergence(
    f: &LaurentPolynomial,
    s: &NumericalSemigroup,
    dimensions: &[usize],
    tol: f64,
) -> Result<NormConvergence> {
    if dimensions.is_empty() || dimensions.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::Precondition("dimensions must increase".into()));
    }
    let lift = OperatorElement::toeplitz_lift(f, s);
    let norms = dimensions
        .iter()
        .map(|&n| operator_norm(&truncate(&lift, n)?, tol))
        .collect::<Result<Vec<f64>>>()?;
    let samples = 4096usize.max(64 * f.max_abs_exponent() as usize);
    let (sup_norm, sup_error_bound) = laurent_sup_norm(f, samples)?;
    let monotone = norms.windows(2).all(|w| w[1] >= w[0] - 2.0 * tol * w[0].max(1.0));
    let final_gap = (sup_norm - norms.last().copied().unwrap_or(0.0)).abs();
    Ok(NormConvergence {
        dimensions: dimensions.to_vec(),
        norms,
        sup_norm,
        sup_error_bound,
        monotone,
        final_gap,
    })
}

/// Multiplies the index-`c` component by `e^{icθ}`.
pub fn gauge_twist<K: Coefficient>(a: &OperatorElement<K>, theta: f64) -> NumericElement {
    a.to_numeric()
        .twist_components(|c| Complex64::from_polar(1.0, c as f64 * theta))
}

/// `(1/M) Σ_k e^{−i·index·2πk/M} · τ(2πk/M)(A)`.
pub fn fourier_project<K: Coefficient>(
    a: &OperatorElement<K>,
    index: i64,
    samples: usize,
) -> Result<NumericElement> {
    let span = a.index_span();
    if samples as i64 <= 2 * span {
        return Err(Error::TooFewSamples { samples, span });
    }
    let numeric = a.to_numeric();
    let weight = Complex64::new(1.0 / samples as f64, 0.0);
    (0..samples).try_fold(NumericElement::zero(a.semigroup()), |acc, k| {
        let theta = TAU * k as f64 / samples as f64;
        let twisted = numeric.twist_components(|c| {
            weight * Complex64::from_polar(1.0, (c - index) as f64 * theta)
        });
        acc.add(&twisted)
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct TensorMismatch {
    pub pair: (i64, i64),
    pub coproduct_side: BTreeMap<(i64, i64), GaussianRational>,
    pub shift_side: (i64, i64),
}

#[derive(Debug, Clone, PartialEq)]
pub struct ShiftExample {
    /// First `s_i` (with `i < 50`) where the corrected operator is not the
    /// successor map.
    pub corrected_failure: Option<i64>,
    /// Same for the printed factor order, with the image found there.
    pub printed_failure: Option<(i64, BTreeMap<i64, GaussianRational>)>,
    pub tensor_mismatch: Option<TensorMismatch>,
    pub diagonal_agrees: bool,
    pub corrected: FreeElement,
    pub printed: FreeElement,
}

/// The successor map `e_{s_i} ↦ e_{s_{i+1}}` on ⟨2,3⟩ written as
/// `T_2(I − P̃) + T_2*T_3`, against the printed order `(I − P̃)T_2 + T_2*T_3`.
pub fn shift_example_check(window: i64) -> ShiftExample {
    let s = NumericalSemigroup::build(&[2, 3]).expect("valid generators");
    let word = |letters: &[Letter]| FreeElement::from_word(&s, letters).expect("generator letters");
    let p_tilde = word(&[Letter::star(3), Letter::shift(2), Letter::star(2), Letter::shift(3)]);
    let complement = FreeElement::identity(&s).sub(&p_tilde).expect("same semigroup");
    let t2 = word(&[Letter::shift(2)]);
    let tail = word(&[Letter::star(2), Letter::shift(3)]);
    let corrected = t2
        .multiply(&complement)
        .and_then(|x| x.add(&tail))
        .expect("same semigroup");
    let printed = complement
        .multiply(&t2)
        .and_then(|x| x.add(&tail))
        .expect("same semigroup");

    let successor = |d: i64| s.element_at(s.position(d).expect("member") + 1);
    let first_failure = |x: &FreeElement| {
        let op = rep(x);
        (0..50).map(|i| s.element_at(i)).find_map(|d| {
            let image = op.apply(d).expect("member");
            let expected = BTreeMap::from([(successor(d), GaussianRational::one())]);
            (image != expected).then_some((d, image))
        })
    };

    let delta = coproduct(&corrected);
    let members: Vec<i64> = s.members_in(0, window + 1).collect();
    let mut tensor_mismatch = None;
    let mut diagonal_agrees = true;
    for &c in &members {
        for &d in &members {
            let got = delta.apply((c, d)).expect("members");
            let shift_side = (successor(c), successor(d));
            let agrees = got == BTreeMap::from([(shift_side, GaussianRational::one())]);
            if c == d {
                diagonal_agrees &= agrees;
            } else if !agrees && tensor_mismatch.is_none() {
                tensor_mismatch = Some(TensorMismatch {
                    pair: (c, d),
                    coproduct_side: got,
                    shift_side,
                });
            }
        }
    }

    ShiftExample {
        corrected_failure: first_failure(&corrected).map(|(d, _)| d),
        printed_failure: first_failure(&printed),
        tensor_mismatch,
        diagonal_agrees,
        corrected,
        printed,
    }
}

/// The free-basis expansion of the corrected shift, as monomials.
pub fn corrected_shift_terms(example: &ShiftExample) -> Vec<(GaussianRational, PartialTranslation)> {
    example
        .corrected
        .terms()
        .map(|(v, c)| (c.clone(), v.clone()))
        .collect()
}
