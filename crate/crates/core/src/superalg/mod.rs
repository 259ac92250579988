//! Graded Lie algebra engine: sparse structure constants over
//! [`LaurentScalar`](crate::scalars::LaurentScalar), graded Jacobi checks,
//! basis changes, realification and the R → ∞ limit.

mod algebra;
mod basis;
mod generator;
mod jacobi;
pub mod json;
mod lincomb;
mod ops;

pub use algebra::{AlgebraBuilder, SuperAlgebra};
pub use basis::{change_basis, BasisMap};
pub use generator::{Family, Generator, Parity, Tag};
pub use jacobi::{jacobi_expression, super_jacobi_residual, JacobiViolation};
pub use lincomb::LinComb;
pub use ops::{
    adjoint, compare, contract, dimension_check, direct_sum, drop_decoupled, is_closed, realify, subalgebra,
    Correspondence, Diff, DiffEntry, DimensionViolation,
};

use thiserror::Error;

use crate::scalars::ScalarError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("unknown generator {0}")]
    UnknownGenerator(String),
    #[error("inconsistent structure constants: {}", .0.join("; "))]
    InconsistentBracket(Vec<String>),
    #[error("realification needs a complex algebra, got `{0}`")]
    NonComplexInput(String),
    #[error("basis map is singular at column {pivot}")]
    SingularMap { pivot: String },
    #[error("basis map inverse is not Laurent in R at {0}")]
    NonLaurentInverse(String),
    #[error("basis map mixes parities in {generator}")]
    GradingViolation { generator: String },
    #[error("[{left}, {right}] diverges as R -> infinity: {witness}")]
    Divergent {
        left: String,
        right: String,
        witness: String,
    },
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("bad correspondence: {0}")]
    BadCorrespondence(String),
    #[error("generators do not close: {0}")]
    NotClosed(String),
    #[error("json: {0}")]
    Json(String),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}
