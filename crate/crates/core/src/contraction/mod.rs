//! Rescaling schemes and the `R → ∞` contraction pipeline
//! `OSp_R(2N−k;2|C) ⊕ OSp(k;4) → N-extended Maxwell superalgebra`.

mod schemes;

pub use schemes::{
    projector, scheme_case_a, scheme_case_b, scheme_n1_k0, scheme_n1_k1, scheme_n1_k2, select_scheme, SchemeKind,
};

use thiserror::Error;

use crate::builders::{osp_k_4, osp_r_2c_real, MAX_INTERNAL};
use crate::scalars::Rational;
use crate::superalg::{change_basis, contract, direct_sum, drop_decoupled, AlgebraError, SuperAlgebra};
use crate::verify::{classify_supercharges, internal_symmetry_report, InternalSummary, SuperchargeTally, VerifyError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ContractionError {
    #[error("invalid contraction parameters: {0}")]
    BadParams(String),
    #[error("projector has rank {found}, expected {expected}")]
    RankDeficient { expected: usize, found: usize },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Verify(#[from] VerifyError),
}

/// Parameters of one contraction. `beta = 1 − alpha` is implied.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContractionParams {
    pub n: usize,
    pub k: usize,
    pub alpha: Rational,
    /// Exponent of `R` in `B_C = 𝓑_C / R^γ` (N=1, k=2 only).
    pub gamma: Rational,
    /// Exponents of `R` for `T₀`, `T₅` in the k=0 scheme.
    pub c0: Rational,
    pub c5: Rational,
    /// Mixing of `𝓑` into `T₀`; the limit does not depend on it.
    pub alpha_prime: Rational,
}

impl ContractionParams {
    /// Defaults: `α = 1`, `γ = 1`, `c₀ = c₅ = 2`, `α′ = 0`.
    pub fn new(n: usize, k: usize) -> Self {
        ContractionParams {
            n,
            k,
            alpha: Rational::ONE,
            gamma: Rational::ONE,
            c0: Rational::from_int(2),
            c5: Rational::from_int(2),
            alpha_prime: Rational::ZERO,
        }
    }

    pub fn with_alpha(mut self, a: Rational) -> Self {
        self.alpha = a;
        self
    }

    pub fn with_gamma(mut self, g: Rational) -> Self {
        self.gamma = g;
        self
    }

    pub fn with_c(mut self, c0: Rational, c5: Rational) -> Self {
        self.c0 = c0;
        self.c5 = c5;
        self
    }

    pub fn with_alpha_prime(mut self, a: Rational) -> Self {
        self.alpha_prime = a;
        self
    }

    pub fn beta(&self) -> Rational {
        Rational::ONE - self.alpha
    }

    /// `r = 2N − k`.
    pub fn r(&self) -> usize {
        2 * self.n - self.k
    }

    pub fn validate(&self) -> Result<(), ContractionError> {
        let bad = |m: String| Err(ContractionError::BadParams(m));
        if self.n == 0 {
            return bad("N must be positive".into());
        }
        if self.k > 2 * self.n {
            return bad(format!("k = {} exceeds 2N = {}", self.k, 2 * self.n));
        }
        if self.k > MAX_INTERNAL || self.r() > MAX_INTERNAL {
            return bad(format!("k and r = 2N - k are capped at {MAX_INTERNAL}"));
        }
        let two = Rational::from_int(2);
        for (name, v) in [("gamma", self.gamma), ("c0", self.c0), ("c5", self.c5)] {
            if v.is_negative() || v > two {
                return bad(format!("{name} = {v} outside [0, 2]"));
            }
        }
        Ok(())
    }

    fn record(&self, alg: &mut SuperAlgebra) {
        alg.set_param("N", self.n.to_string());
        alg.set_param("k", self.k.to_string());
        alg.set_param("alpha", self.alpha.to_string());
        alg.set_param("gamma", self.gamma.to_string());
        alg.set_param("c0", self.c0.to_string());
        alg.set_param("c5", self.c5.to_string());
        alg.set_param("alpha_prime", self.alpha_prime.to_string());
    }
}

/// The uncontracted input `OSp_R(r;2|C) ⊕ OSp(k;4)` with `𝓟_μ = 𝓜_μ4` split off.
pub fn input_algebra(p: &ContractionParams) -> Result<SuperAlgebra, ContractionError> {
    p.validate()?;
    Ok(direct_sum(&osp_r_2c_real(p.r()), &osp_k_4(p.k, true))?)
}

/// Rescaled algebra at finite `R`, using the given scheme.
pub fn finite_r_with(p: &ContractionParams, kind: SchemeKind) -> Result<SuperAlgebra, ContractionError> {
    let input = input_algebra(p)?;
    let map = kind.basis_map(p, &input)?;
    let mut alg = change_basis(&input, &map)?.with_name(format!("{} (N={}, k={}, finite R)", kind.name(), p.n, p.k));
    p.record(&mut alg);
    alg.set_param("scheme", kind.name());
    Ok(alg)
}

/// Rescaled algebra at finite `R` with the default scheme for `p`.
pub fn finite_r(p: &ContractionParams) -> Result<SuperAlgebra, ContractionError> {
    finite_r_with(p, select_scheme(p))
}

/// Everything produced by one pipeline run.
#[derive(Clone, Debug)]
pub struct ContractionReport {
    pub scheme: SchemeKind,
    pub finite_r: SuperAlgebra,
    /// Contracted algebra with decoupled generators removed.
    pub limit: SuperAlgebra,
    /// Labels of generators that became central and unreachable.
    pub decoupled: Vec<String>,
    pub classification: SuperchargeTally,
    pub internal: InternalSummary,
}

pub fn run(p: &ContractionParams) -> Result<ContractionReport, ContractionError> {
    run_with(p, select_scheme(p))
}

pub fn run_with(p: &ContractionParams, kind: SchemeKind) -> Result<ContractionReport, ContractionError> {
    let finite = finite_r_with(p, kind)?;
    let raw = contract(&finite)?;
    let (mut limit, decoupled) = drop_decoupled(&raw);
    limit = limit.with_name(format!("Maxwell superalgebra (N={}, k={}, {})", p.n, p.k, kind.name()));
    p.record(&mut limit);
    limit.set_param("scheme", kind.name());
    let classification = classify_supercharges(&limit)?;
    let internal = internal_symmetry_report(&limit);
    Ok(ContractionReport {
        scheme: kind,
        finite_r: finite,
        limit,
        decoupled,
        classification,
        internal,
    })
}
