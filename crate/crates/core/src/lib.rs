//! Semigroup C*-algebras of numerical semigroups: exact partial translations,
//! the graded dense subalgebra, its symbol map, and the free-algebra quantum
//! structure with its dual convolution algebra.

pub mod corpus;
pub mod dual;
pub mod error;
pub mod expr;
pub mod free;
pub mod laurent;
pub mod morphism;
pub mod numeric;
pub mod operator;
pub mod quantum;
pub mod report;
pub mod scalar;
pub mod semigroup;
pub mod suites;
pub mod translation;

pub use error::{Error, Result};
pub use free::{FreeElement, FreeTensor, FreeTriple};
pub use laurent::LaurentPolynomial;
pub use operator::{EventualWeight, NumericElement, OperatorElement};
pub use scalar::{Coefficient, GaussianRational, Scalar};
pub use semigroup::NumericalSemigroup;
pub use translation::{EventualSet, Letter, PartialTranslation};
