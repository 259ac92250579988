//! Exact coefficient arithmetic.
//!
//! Structure constants live in [`LaurentScalar`]: finite sums of Gaussian
//! rationals times monomials `R^r M^m`, where `R` is the contraction parameter
//! (rational exponents, mass dimension −1) and `M` the mass parameter (integer
//! exponents, mass dimension +1). No floating point is used anywhere.

mod gaussian;
mod laurent;
mod rational;

pub use gaussian::GaussianRational;
pub use laurent::{LaurentScalar, Monomial};
pub use rational::Rational;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("cannot invert non-monomial value `{0}`")]
    InvertNonMonomial(String),
    #[error("divergent term {witness} in R -> infinity limit")]
    Divergent { witness: String },
    #[error("M exponents must be integers, got `{0}`")]
    NonIntegerMExponent(String),
    #[error("parse error: {0}")]
    Parse(String),
}
