//! Exact construction, contraction and verification of D=4 Maxwell
//! superalgebras obtained from `OSp(k;4) ⊕ OSp_R(2N−k;2|C)`.

#![allow(clippy::needless_range_loop)]

pub mod builders;
pub mod clifford;
pub mod contraction;
pub mod scalars;
pub mod superalg;
pub mod verify;

pub use clifford::{canonical, CliffordData, SpinorMatrix};
pub use scalars::{GaussianRational, LaurentScalar, Monomial, Rational, ScalarError};
