//! Real Majorana representation of Cl(3,1), the derived Cl(3,2) matrices and
//! the certificate that the representation satisfies every identity the
//! algebra builders rely on.
//!
//! Conventions: `η = diag(−1, 1, 1, 1)`, `η̂ = diag(−1, 1, 1, 1, −1)`,
//! `C = γ0`, `γ5 = γ0γ1γ2γ3`, `Γ̂μ = γμγ5`, `Γ̂4 = −γ5`,
//! `P± = ½(1 ± iγ5)`, `Γ±μ̄ = γμ̄γ3P±` for `μ̄ = 0, 1, 2`, and `ε^{012} = 1`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::OnceLock;

use serde::Serialize;
use thiserror::Error;

use crate::scalars::{GaussianRational, Rational};

/// Minkowski metric diagonal, `η_{μμ}`.
pub fn eta(mu: usize) -> i128 {
    if mu == 0 {
        -1
    } else {
        1
    }
}

/// AdS metric diagonal `η̂_{μ̂μ̂}` on indices `0..5`.
pub fn eta_ads(mu: usize) -> i128 {
    if mu == 0 || mu == 4 {
        -1
    } else {
        1
    }
}

/// Three-dimensional metric `(−1, 1, 1)` on `μ̄ = 0, 1, 2`.
pub fn eta3(mu: usize) -> i128 {
    eta(mu)
}

/// `ε^{abc}` with `ε^{012} = 1`.
pub fn epsilon3_upper(a: usize, b: usize, c: usize) -> i128 {
    match (a, b, c) {
        (0, 1, 2) | (1, 2, 0) | (2, 0, 1) => 1,
        (0, 2, 1) | (2, 1, 0) | (1, 0, 2) => -1,
        _ => 0,
    }
}

/// `ε_{ab}^{c}`: first two indices lowered with the three-dimensional metric.
pub fn epsilon3_mixed(a: usize, b: usize, c: usize) -> i128 {
    eta3(a) * eta3(b) * epsilon3_upper(a, b, c)
}

/// 4×4 matrix over the Gaussian rationals.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct SpinorMatrix(pub [[GaussianRational; 4]; 4]);

impl SpinorMatrix {
    pub fn zero() -> Self {
        SpinorMatrix([[GaussianRational::ZERO; 4]; 4])
    }

    pub fn identity() -> Self {
        let mut m = Self::zero();
        for k in 0..4 {
            m.0[k][k] = GaussianRational::ONE;
        }
        m
    }

    pub fn from_ints(rows: [[i128; 4]; 4]) -> Self {
        let mut m = Self::zero();
        for (r, row) in rows.iter().enumerate() {
            for (c, v) in row.iter().enumerate() {
                m.0[r][c] = GaussianRational::int(*v);
            }
        }
        m
    }

    /// Kronecker product of two real 2×2 matrices.
    pub fn kron(a: [[i128; 2]; 2], b: [[i128; 2]; 2]) -> Self {
        let mut m = Self::zero();
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..2 {
                    for l in 0..2 {
                        m.0[2 * i + k][2 * j + l] = GaussianRational::int(a[i][j] * b[k][l]);
                    }
                }
            }
        }
        m
    }

    pub fn get(&self, row: usize, col: usize) -> GaussianRational {
        self.0[row][col]
    }

    pub fn transpose(&self) -> Self {
        let mut m = Self::zero();
        for r in 0..4 {
            for c in 0..4 {
                m.0[c][r] = self.0[r][c];
            }
        }
        m
    }

    pub fn conj(&self) -> Self {
        let mut m = *self;
        m.0.iter_mut().flatten().for_each(|x| *x = x.conj());
        m
    }

    pub fn scale(&self, c: GaussianRational) -> Self {
        let mut m = *self;
        m.0.iter_mut().flatten().for_each(|x| *x = *x * c);
        m
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().flatten().all(|x| x.is_zero())
    }

    pub fn is_real(&self) -> bool {
        self.0.iter().flatten().all(|x| x.is_real())
    }

    pub fn is_symmetric(&self) -> bool {
        *self == self.transpose()
    }

    pub fn is_antisymmetric(&self) -> bool {
        *self == -self.transpose()
    }

    pub fn commutator(&self, other: &Self) -> Self {
        *self * *other - *other * *self
    }

    pub fn anticommutator(&self, other: &Self) -> Self {
        *self * *other + *other * *self
    }

    pub fn rank(&self) -> usize {
        let mut rows: Vec<[GaussianRational; 4]> = self.0.to_vec();
        let mut rank = 0;
        for col in 0..4 {
            let Some(p) = (rank..4).find(|&r| !rows[r][col].is_zero()) else {
                continue;
            };
            rows.swap(rank, p);
            let inv = rows[rank][col].recip().expect("nonzero pivot");
            for r in 0..4 {
                if r != rank && !rows[r][col].is_zero() {
                    let f = rows[r][col] * inv;
                    for c in 0..4 {
                        let v = rows[rank][c];
                        rows[r][c] -= f * v;
                    }
                }
            }
            rank += 1;
        }
        rank
    }
}

impl Add for SpinorMatrix {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let mut m = self;
        for r in 0..4 {
            for c in 0..4 {
                m.0[r][c] += rhs.0[r][c];
            }
        }
        m
    }
}

impl Sub for SpinorMatrix {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for SpinorMatrix {
    type Output = Self;
    fn neg(self) -> Self {
        self.scale(-GaussianRational::ONE)
    }
}

impl Mul for SpinorMatrix {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let mut m = Self::zero();
        for r in 0..4 {
            for c in 0..4 {
                let mut acc = GaussianRational::ZERO;
                for k in 0..4 {
                    acc += self.0[r][k] * rhs.0[k][c];
                }
                m.0[r][c] = acc;
            }
        }
        m
    }
}

impl fmt::Display for SpinorMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, row) in self.0.iter().enumerate() {
            let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            write!(f, "[{}]", cells.join(", "))?;
            if k < 3 {
                writeln!(f)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SpinorMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// All matrices the builders need, derived from one frozen choice of `γμ`.
#[derive(Clone, Debug)]
pub struct CliffordData {
    pub gamma: [SpinorMatrix; 4],
    pub gamma5: SpinorMatrix,
    pub c: SpinorMatrix,
    pub gamma_ads: [SpinorMatrix; 5],
    gamma_mn: [[SpinorMatrix; 4]; 4],
    ads_mn: [[SpinorMatrix; 5]; 5],
    pub p_plus: SpinorMatrix,
    pub p_minus: SpinorMatrix,
    pub gamma_plus: [SpinorMatrix; 3],
    pub gamma_minus: [SpinorMatrix; 3],
}

const ID2: [[i128; 2]; 2] = [[1, 0], [0, 1]];
const EPS2: [[i128; 2]; 2] = [[0, 1], [-1, 0]];
const SIGMA1: [[i128; 2]; 2] = [[0, 1], [1, 0]];
const SIGMA3: [[i128; 2]; 2] = [[1, 0], [0, -1]];

/// Builds the canonical representation
/// `γ0 = 1⊗ε`, `γ1 = 1⊗σ1`, `γ2 = σ1⊗σ3`, `γ3 = σ3⊗σ3`.
pub fn build_majorana_rep() -> CliffordData {
    let gamma = [
        SpinorMatrix::kron(ID2, EPS2),
        SpinorMatrix::kron(ID2, SIGMA1),
        SpinorMatrix::kron(SIGMA1, SIGMA3),
        SpinorMatrix::kron(SIGMA3, SIGMA3),
    ];
    let gamma5 = gamma[0] * gamma[1] * gamma[2] * gamma[3];
    let c = gamma[0];
    let gamma_ads = [
        gamma[0] * gamma5,
        gamma[1] * gamma5,
        gamma[2] * gamma5,
        gamma[3] * gamma5,
        -gamma5,
    ];
    let half = GaussianRational::ratio(1, 2);
    let gamma_mn = std::array::from_fn(|m| std::array::from_fn(|n| gamma[m].commutator(&gamma[n]).scale(half)));
    let ads_mn = std::array::from_fn(|m| std::array::from_fn(|n| gamma_ads[m].commutator(&gamma_ads[n]).scale(half)));
    let i_g5 = gamma5.scale(GaussianRational::I);
    let p_plus = (SpinorMatrix::identity() + i_g5).scale(half);
    let p_minus = (SpinorMatrix::identity() - i_g5).scale(half);
    let gamma_plus = std::array::from_fn(|m| gamma[m] * gamma[3] * p_plus);
    let gamma_minus = std::array::from_fn(|m| gamma[m] * gamma[3] * p_minus);
    CliffordData {
        gamma,
        gamma5,
        c,
        gamma_ads,
        gamma_mn,
        ads_mn,
        p_plus,
        p_minus,
        gamma_plus,
        gamma_minus,
    }
}

/// Shared, certified representation.
pub fn canonical() -> &'static CliffordData {
    static REP: OnceLock<CliffordData> = OnceLock::new();
    REP.get_or_init(|| {
        let rep = build_majorana_rep();
        check_clifford(&rep).expect("canonical representation must certify");
        bilinear_symmetry(&rep).expect("canonical representation must have the expected symmetries");
        rep
    })
}

impl CliffordData {
    /// `γ^μ = η^{μμ} γ_μ`.
    pub fn gamma_upper(&self, mu: usize) -> SpinorMatrix {
        self.gamma[mu].scale(GaussianRational::int(eta(mu)))
    }

    /// `γ_{μν} = ½[γ_μ, γ_ν]`.
    pub fn gamma_mn(&self, mu: usize, nu: usize) -> SpinorMatrix {
        self.gamma_mn[mu][nu]
    }

    pub fn gamma_mn_upper(&self, mu: usize, nu: usize) -> SpinorMatrix {
        self.gamma_mn[mu][nu].scale(GaussianRational::int(eta(mu) * eta(nu)))
    }

    /// `Γ̂_{μ̂ν̂} = ½[Γ̂_μ̂, Γ̂_ν̂]`.
    pub fn ads_mn(&self, mu: usize, nu: usize) -> SpinorMatrix {
        self.ads_mn[mu][nu]
    }

    pub fn ads_mn_upper(&self, mu: usize, nu: usize) -> SpinorMatrix {
        self.ads_mn[mu][nu].scale(GaussianRational::int(eta_ads(mu) * eta_ads(nu)))
    }

    /// `Γ±^{μ̄}` with the index raised by the three-dimensional metric.
    pub fn gamma_plus_upper(&self, mu: usize) -> SpinorMatrix {
        self.gamma_plus[mu].scale(GaussianRational::int(eta3(mu)))
    }

    pub fn gamma_minus_upper(&self, mu: usize) -> SpinorMatrix {
        self.gamma_minus[mu].scale(GaussianRational::int(eta3(mu)))
    }

    /// Every named matrix, in a fixed order, for dumping.
    pub fn named_matrices(&self) -> Vec<(String, SpinorMatrix)> {
        let mut out = Vec::new();
        for (m, g) in self.gamma.iter().enumerate() {
            out.push((format!("gamma_{m}"), *g));
        }
        out.push(("gamma_5".into(), self.gamma5));
        out.push(("C".into(), self.c));
        for (m, g) in self.gamma_ads.iter().enumerate() {
            out.push((format!("Gamma_{m}"), *g));
        }
        for m in 0..4 {
            for n in (m + 1)..4 {
                out.push((format!("gamma_{m}{n}"), self.gamma_mn(m, n)));
            }
        }
        for m in 0..5 {
            for n in (m + 1)..5 {
                out.push((format!("Gamma_{m}{n}"), self.ads_mn(m, n)));
            }
        }
        out.push(("P_plus".into(), self.p_plus));
        out.push(("P_minus".into(), self.p_minus));
        for (m, g) in self.gamma_plus.iter().enumerate() {
            out.push((format!("Gamma_plus_{m}"), *g));
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CliffordError {
    #[error("{} identity violation(s): {}", .0.len(), .0.join("; "))]
    ReportedViolation(Vec<String>),
}

/// Count of identities verified with zero residual.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CliffordCertificate {
    pub identities_checked: usize,
}

struct Checker {
    checked: usize,
    violations: Vec<String>,
}

impl Checker {
    fn new() -> Self {
        Checker {
            checked: 0,
            violations: Vec::new(),
        }
    }

    fn expect(&mut self, name: impl FnOnce() -> String, ok: bool) {
        self.checked += 1;
        if !ok {
            self.violations.push(name());
        }
    }
}

/// Verifies Cl(3,1), Cl(3,2), the Γ̂ ↔ γ relations, the projectors and the
/// `Γ+` commutation rule.
pub fn check_clifford(rep: &CliffordData) -> Result<CliffordCertificate, CliffordError> {
    let mut ck = Checker::new();
    let id = SpinorMatrix::identity();
    for m in 0..4 {
        for n in 0..4 {
            let want = if m == n {
                id.scale(GaussianRational::int(2 * eta(m)))
            } else {
                SpinorMatrix::zero()
            };
            ck.expect(
                || format!("{{gamma_{m}, gamma_{n}}} != 2 eta_{m}{n}"),
                rep.gamma[m].anticommutator(&rep.gamma[n]) == want,
            );
        }
    }
    for m in 0..5 {
        for n in 0..5 {
            let want = if m == n {
                id.scale(GaussianRational::int(2 * eta_ads(m)))
            } else {
                SpinorMatrix::zero()
            };
            ck.expect(
                || format!("{{Gamma_{m}, Gamma_{n}}} != 2 etahat_{m}{n}"),
                rep.gamma_ads[m].anticommutator(&rep.gamma_ads[n]) == want,
            );
        }
    }
    ck.expect(
        || "gamma_0 not real antisymmetric".into(),
        rep.gamma[0].is_real() && rep.gamma[0].is_antisymmetric(),
    );
    for m in 1..4 {
        ck.expect(
            || format!("gamma_{m} not real symmetric"),
            rep.gamma[m].is_real() && rep.gamma[m].is_symmetric(),
        );
    }
    ck.expect(|| "gamma_5^2 != -1".into(), rep.gamma5 * rep.gamma5 == -id);
    ck.expect(|| "gamma_5^T != -gamma_5".into(), rep.gamma5.transpose() == -rep.gamma5);
    ck.expect(|| "C != gamma_0".into(), rep.c == rep.gamma[0]);
    ck.expect(
        || "Gamma_0 Gamma_4 != C".into(),
        rep.gamma_ads[0] * rep.gamma_ads[4] == rep.c,
    );
    for m in 0..4 {
        for n in 0..4 {
            ck.expect(
                || format!("Gamma_{m}{n} != gamma_{m}{n}"),
                rep.ads_mn(m, n) == rep.gamma_mn(m, n),
            );
        }
        ck.expect(|| format!("Gamma_{m}4 != gamma_{m}"), rep.ads_mn(m, 4) == rep.gamma[m]);
    }
    ck.expect(|| "P+ not idempotent".into(), rep.p_plus * rep.p_plus == rep.p_plus);
    ck.expect(|| "P- not idempotent".into(), rep.p_minus * rep.p_minus == rep.p_minus);
    ck.expect(|| "P+ P- != 0".into(), (rep.p_plus * rep.p_minus).is_zero());
    ck.expect(|| "P+ + P- != 1".into(), rep.p_plus + rep.p_minus == id);
    for a in 0..3 {
        for b in 0..3 {
            let mut want = SpinorMatrix::zero();
            for c in 0..3 {
                let e = epsilon3_mixed(a, b, c);
                if e != 0 {
                    want = want + rep.gamma_plus[c].scale(GaussianRational::imag(Rational::from_int(2 * e)));
                }
            }
            ck.expect(
                || format!("[Gamma+_{a}, Gamma+_{b}] != 2i eps_{a}{b}^c Gamma+_c"),
                rep.gamma_plus[a].commutator(&rep.gamma_plus[b]) == want,
            );
        }
    }
    if ck.violations.is_empty() {
        Ok(CliffordCertificate {
            identities_checked: ck.checked,
        })
    } else {
        Err(CliffordError::ReportedViolation(ck.violations))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Symmetry {
    Symmetric,
    Antisymmetric,
    Neither,
}

impl Symmetry {
    pub fn of(m: &SpinorMatrix) -> Symmetry {
        if m.is_symmetric() {
            Symmetry::Symmetric
        } else if m.is_antisymmetric() {
            Symmetry::Antisymmetric
        } else {
            Symmetry::Neither
        }
    }
}

/// Transposition behaviour of the charge-conjugated bilinears.
#[derive(Debug, Clone, Serialize)]
pub struct SymmetryTable {
    pub entries: Vec<(String, Symmetry)>,
}

/// Asserts `Cγμ`, `Cγμν` symmetric and `Cγ5`, `C` antisymmetric.
pub fn bilinear_symmetry(rep: &CliffordData) -> Result<SymmetryTable, CliffordError> {
    let mut entries = Vec::new();
    let mut violations = Vec::new();
    let mut record = |name: String, m: SpinorMatrix, want: Symmetry| {
        let got = Symmetry::of(&m);
        if got != want {
            violations.push(format!("{name} is {got:?}, expected {want:?}"));
        }
        entries.push((name, got));
    };
    for m in 0..4 {
        record(format!("C gamma_{m}"), rep.c * rep.gamma[m], Symmetry::Symmetric);
    }
    for m in 0..4 {
        for n in (m + 1)..4 {
            record(
                format!("C gamma_{m}{n}"),
                rep.c * rep.gamma_mn(m, n),
                Symmetry::Symmetric,
            );
        }
    }
    record("C gamma_5".into(), rep.c * rep.gamma5, Symmetry::Antisymmetric);
    record("C".into(), rep.c, Symmetry::Antisymmetric);
    if violations.is_empty() {
        Ok(SymmetryTable { entries })
    } else {
        Err(CliffordError::ReportedViolation(violations))
    }
}
