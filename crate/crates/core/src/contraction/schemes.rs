use crate::clifford::canonical;
use crate::scalars::{GaussianRational, LaurentScalar, Rational};
use crate::superalg::{AlgebraError, BasisMap, Family, Generator, LinComb, SuperAlgebra};

use super::{ContractionError, ContractionParams};

/// Which rescaling prescription to apply.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SchemeKind {
    /// `N = 1, k = 2`: chiral `B_C` and `Q, Σ` built from `𝓠¹ ± 𝓠²γ₅`.
    N1K2,
    /// `N = 1, k = 1`: `Q = (𝓠 + 𝓢)/√R`, `Σ = 𝓢/R^{3/2}`.
    N1K1,
    /// `k = 0`: purely exotic, `S = 𝓢/R`, `T₀ = 𝓣₀/R^{c₀}`, `T₅ = 𝓣₅/R^{c₅}`.
    K0,
    /// `k ≥ N`.
    CaseA,
    /// `k ≤ N`.
    CaseB,
}

impl SchemeKind {
    pub fn name(&self) -> &'static str {
        match self {
            SchemeKind::N1K2 => "n1-k2",
            SchemeKind::N1K1 => "n1-k1",
            SchemeKind::K0 => "k0",
            SchemeKind::CaseA => "case-a",
            SchemeKind::CaseB => "case-b",
        }
    }

    pub fn basis_map(&self, p: &ContractionParams, input: &SuperAlgebra) -> Result<BasisMap, ContractionError> {
        match self {
            SchemeKind::N1K2 => scheme_n1_k2(p, input),
            SchemeKind::N1K1 => scheme_n1_k1(p, input),
            SchemeKind::K0 => scheme_n1_k0(p, input),
            SchemeKind::CaseA => scheme_case_a(p, input),
            SchemeKind::CaseB => scheme_case_b(p, input),
        }
    }
}

impl std::str::FromStr for SchemeKind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        [
            SchemeKind::N1K2,
            SchemeKind::N1K1,
            SchemeKind::K0,
            SchemeKind::CaseA,
            SchemeKind::CaseB,
        ]
        .into_iter()
        .find(|k| k.name() == s)
        .ok_or_else(|| format!("unknown scheme `{s}`"))
    }
}

/// Default scheme for the given `(N, k)`.
pub fn select_scheme(p: &ContractionParams) -> SchemeKind {
    match (p.n, p.k) {
        (1, 2) => SchemeKind::N1K2,
        (1, 1) => SchemeKind::N1K1,
        (_, 0) => SchemeKind::K0,
        (n, k) if k >= n => SchemeKind::CaseA,
        _ => SchemeKind::CaseB,
    }
}

fn rpow(e: Rational) -> LaurentScalar {
    LaurentScalar::r_pow(e)
}

fn rq(n: i128, d: i128) -> Rational {
    Rational::new(n, d)
}

/// Accumulates new generators as combinations of the input basis.
struct Rows<'a> {
    old: &'a SuperAlgebra,
    gens: Vec<Generator>,
    rows: Vec<LinComb>,
}

impl<'a> Rows<'a> {
    fn new(old: &'a SuperAlgebra) -> Self {
        Rows {
            old,
            gens: Vec::new(),
            rows: Vec::new(),
        }
    }

    fn old(&self, family: Family, ind: &[usize]) -> Result<usize, AlgebraError> {
        let ind: Vec<u8> = ind.iter().map(|&x| x as u8).collect();
        self.old.lookup(&Generator::new(family, &ind).label())
    }

    fn push(&mut self, family: Family, ind: &[usize], lc: LinComb) {
        let ind: Vec<u8> = ind.iter().map(|&x| x as u8).collect();
        self.gens.push(Generator::new(family, &ind));
        self.rows.push(lc);
    }

    fn finish(self) -> Result<BasisMap, ContractionError> {
        Ok(BasisMap::new(self.old.generators(), self.gens, self.rows)?)
    }

    /// `M = 𝓙 + 𝓜`, `P = 𝓟/R`, `Z = (α𝓙 − β𝓜)/(R²M²)`.
    fn maxwell_bosons(&mut self, p: &ContractionParams) -> Result<(), AlgebraError> {
        for mu in 0..4 {
            let lc = LinComb::term(self.old(Family::Pcal, &[mu])?, rpow(-Rational::ONE));
            self.push(Family::P, &[mu], lc);
        }
        let zs = LaurentScalar::monomial(GaussianRational::ONE, Rational::from_int(-2), -2);
        let mut z_rows = Vec::new();
        for mu in 0..4 {
            for nu in (mu + 1)..4 {
                let j = self.old(Family::J, &[mu, nu])?;
                let m = self.old(Family::McalAdS, &[mu, nu])?;
                self.push(
                    Family::Mlorentz,
                    &[mu, nu],
                    LinComb::from_terms([(j, LaurentScalar::one()), (m, LaurentScalar::one())]),
                );
                let z = LinComb::from_terms([
                    (j, zs.scale(GaussianRational::real(p.alpha))),
                    (m, zs.scale(GaussianRational::real(-p.beta()))),
                ]);
                z_rows.push(((mu, nu), z));
            }
        }
        for ((mu, nu), z) in z_rows {
            self.push(Family::Z, &[mu, nu], z);
        }
        Ok(())
    }

    /// `Qⁱ = (𝓠ⁱ + 𝓢ⁱ)/√R` and `Σⁱ = 𝓢ⁱ/R^{3/2}` for `i = 1..=count`.
    fn paired_supercharges(&mut self, count: usize, indexed: bool) -> Result<(), AlgebraError> {
        for i in 1..=count {
            for al in 0..4 {
                let q = self.old(Family::QcalAdS, &[i, al])?;
                let s = self.old(Family::Scal, &[i, al])?;
                let c = rpow(rq(-1, 2));
                let ind: Vec<usize> = if indexed { vec![i, al] } else { vec![al] };
                self.push(Family::Q, &ind, LinComb::from_terms([(q, c.clone()), (s, c)]));
            }
        }
        for i in 1..=count {
            for al in 0..4 {
                let s = self.old(Family::Scal, &[i, al])?;
                let ind: Vec<usize> = if indexed { vec![i, al] } else { vec![al] };
                self.push(Family::Sigma, &ind, LinComb::term(s, rpow(rq(-3, 2))));
            }
        }
        Ok(())
    }

    /// `B_D = 𝓑 + 𝓣₀`, `T₀ = ((1−α′)𝓣₀ − α′𝓑)/R`, `T₅ = 𝓣₅/R` on `1 ≤ i < j ≤ count`.
    fn diagonal_internal(&mut self, p: &ContractionParams, count: usize) -> Result<(), AlgebraError> {
        let pairs: Vec<(usize, usize)> = (1..=count)
            .flat_map(|i| ((i + 1)..=count).map(move |j| (i, j)))
            .collect();
        for &(i, j) in &pairs {
            let b = self.old(Family::Bint, &[i, j])?;
            let t0 = self.old(Family::T0, &[i, j])?;
            self.push(
                Family::BD,
                &[i, j],
                LinComb::from_terms([(b, LaurentScalar::one()), (t0, LaurentScalar::one())]),
            );
        }
        let inv_r = rpow(-Rational::ONE);
        for &(i, j) in &pairs {
            let b = self.old(Family::Bint, &[i, j])?;
            let t0 = self.old(Family::T0, &[i, j])?;
            self.push(
                Family::T0,
                &[i, j],
                LinComb::from_terms([
                    (t0, inv_r.scale(GaussianRational::real(Rational::ONE - p.alpha_prime))),
                    (b, inv_r.scale(GaussianRational::real(-p.alpha_prime))),
                ]),
            );
        }
        for &(i, j) in &pairs {
            let t5 = self.old(Family::T5, &[i, j])?;
            self.push(Family::T5, &[i, j], LinComb::term(t5, inv_r.clone()));
        }
        Ok(())
    }
}

/// `N = 1, k = 2`.
pub fn scheme_n1_k2(p: &ContractionParams, input: &SuperAlgebra) -> Result<BasisMap, ContractionError> {
    if (p.n, p.k) != (1, 2) {
        return Err(ContractionError::BadParams("scheme n1-k2 needs N = 1, k = 2".into()));
    }
    let cl = canonical();
    let mut rows = Rows::new(input);
    rows.maxwell_bosons(p)?;
    let half = GaussianRational::ratio(1, 2);
    for (family, sign, e) in [(Family::Q, 1, rq(-1, 2)), (Family::Sigma, -1, rq(-3, 2))] {
        for al in 0..4 {
            let s = rpow(e).scale(half);
            let mut lc = LinComb::term(rows.old(Family::QcalAdS, &[1, al])?, s.clone());
            for be in 0..4 {
                let g = cl.gamma5.get(be, al) * GaussianRational::int(sign);
                lc.add_term(rows.old(Family::QcalAdS, &[2, be])?, s.scale(g));
            }
            rows.push(family, &[al], lc);
        }
    }
    // B_C = 𝓑_C/R^γ with 𝓑^{12} = −𝓑_C
    let b12 = rows.old(Family::Bint, &[1, 2])?;
    rows.push(Family::BC, &[], LinComb::term(b12, -rpow(-p.gamma)));
    rows.finish()
}

/// `N = 1, k = 1`.
pub fn scheme_n1_k1(p: &ContractionParams, input: &SuperAlgebra) -> Result<BasisMap, ContractionError> {
    if (p.n, p.k) != (1, 1) {
        return Err(ContractionError::BadParams("scheme n1-k1 needs N = 1, k = 1".into()));
    }
    let mut rows = Rows::new(input);
    rows.maxwell_bosons(p)?;
    rows.paired_supercharges(1, false)?;
    rows.finish()
}

/// `k = 0`, any `N`: `S = 𝓢/R`, `T₀ = 𝓣₀/R^{c₀}`, `T₅ = 𝓣₅/R^{c₅}`.
pub fn scheme_n1_k0(p: &ContractionParams, input: &SuperAlgebra) -> Result<BasisMap, ContractionError> {
    if p.k != 0 {
        return Err(ContractionError::BadParams("scheme k0 needs k = 0".into()));
    }
    exotic_split(p, input, p.c0, p.c5)
}

/// `k ≤ N`; the `T^{i″j″}` carry `1/R²`.
pub fn scheme_case_b(p: &ContractionParams, input: &SuperAlgebra) -> Result<BasisMap, ContractionError> {
    if p.k > p.n {
        return Err(ContractionError::BadParams(format!(
            "case b needs k <= N, got k = {}, N = {}",
            p.k, p.n
        )));
    }
    let two = Rational::from_int(2);
    exotic_split(p, input, two, two)
}

fn exotic_split(
    p: &ContractionParams,
    input: &SuperAlgebra,
    c0: Rational,
    c5: Rational,
) -> Result<BasisMap, ContractionError> {
    let (k, r) = (p.k, p.r());
    let mut rows = Rows::new(input);
    rows.maxwell_bosons(p)?;
    rows.paired_supercharges(k, true)?;
    for i in (k + 1)..=r {
        for al in 0..4 {
            let s = rows.old(Family::Scal, &[i, al])?;
            rows.push(Family::S, &[i, al], LinComb::term(s, rpow(-Rational::ONE)));
        }
    }
    rows.diagonal_internal(p, k)?;
    for (family, c) in [(Family::T0, c0), (Family::T5, c5)] {
        for i in 1..=r {
            for j in (i + 1)..=r {
                if j <= k {
                    continue;
                }
                // mixed pairs i ≤ k < j scale with R^{-3/2}, the rest with R^{-c}
                let e = if i <= k { rq(-3, 2) } else { -c };
                let t = rows.old(family, &[i, j])?;
                rows.push(family, &[i, j], LinComb::term(t, rpow(e)));
            }
        }
    }
    rows.finish()
}

/// `Π^±[(j′,β),(i′,α)] = ½(δ^{j′i′}δ_βα ± (γ₅)_βα Ω^{j′i′})` on `2m` internal
/// slots, as a dense `8m × 8m` matrix with row index `4j′ + β`.
pub fn projector(m: usize, sign: i128) -> Vec<Vec<GaussianRational>> {
    let cl = canonical();
    let n = 2 * m;
    let omega = |a: usize, b: usize| -> i128 {
        if a < m && b == a + m {
            1
        } else if a >= m && b + m == a {
            -1
        } else {
            0
        }
    };
    let half = GaussianRational::ratio(1, 2);
    let mut out = vec![vec![GaussianRational::ZERO; 4 * n]; 4 * n];
    for j in 0..n {
        for be in 0..4 {
            for i in 0..n {
                for al in 0..4 {
                    let mut v = GaussianRational::ZERO;
                    if i == j && al == be {
                        v += GaussianRational::ONE;
                    }
                    v += cl.gamma5.get(be, al) * GaussianRational::int(sign * omega(j, i));
                    out[4 * j + be][4 * i + al] = v * half;
                }
            }
        }
    }
    out
}

/// Greedy choice of linearly independent columns, in index order.
fn independent_columns(mat: &[Vec<GaussianRational>]) -> Vec<usize> {
    let rows = mat.len();
    let mut basis: Vec<(usize, Vec<GaussianRational>)> = Vec::new();
    let mut picked = Vec::new();
    for c in 0..mat.first().map_or(0, |r| r.len()) {
        let mut v: Vec<GaussianRational> = (0..rows).map(|r| mat[r][c]).collect();
        for (piv, b) in &basis {
            let f = v[*piv];
            if !f.is_zero() {
                for r in 0..rows {
                    v[r] -= f * b[r];
                }
            }
        }
        if let Some(piv) = (0..rows).find(|&r| !v[r].is_zero()) {
            let inv = v[piv].recip().expect("nonzero pivot");
            let v: Vec<GaussianRational> = v.iter().map(|x| *x * inv).collect();
            for (_, b) in basis.iter_mut() {
                let f = b[piv];
                if !f.is_zero() {
                    for r in 0..rows {
                        b[r] -= f * v[r];
                    }
                }
            }
            basis.push((piv, v));
            picked.push(c);
        }
    }
    picked
}

/// `k ≥ N`.
pub fn scheme_case_a(p: &ContractionParams, input: &SuperAlgebra) -> Result<BasisMap, ContractionError> {
    if p.k < p.n {
        return Err(ContractionError::BadParams(format!(
            "case a needs k >= N, got k = {}, N = {}",
            p.k, p.n
        )));
    }
    let (k, r) = (p.k, p.r());
    let m = k - p.n;
    let mut rows = Rows::new(input);
    rows.maxwell_bosons(p)?;
    rows.paired_supercharges(r, true)?;
    // projected supercharges from 𝓠^{i′}, i′ = r+1..k
    for (family, sign, e) in [(Family::Q, 1, rq(-1, 2)), (Family::Sigma, -1, rq(-3, 2))] {
        let pi = projector(m, sign);
        let cols = independent_columns(&pi);
        if cols.len() != 4 * m {
            return Err(ContractionError::RankDeficient {
                expected: 4 * m,
                found: cols.len(),
            });
        }
        for c in cols {
            let (ip, al) = (r + 1 + c / 4, c % 4);
            let mut lc = LinComb::zero();
            for (row, line) in pi.iter().enumerate() {
                let v = line[c];
                if !v.is_zero() {
                    lc.add_term(
                        rows.old(Family::QcalAdS, &[r + 1 + row / 4, row % 4])?,
                        rpow(e).scale(v),
                    );
                }
            }
            rows.push(family, &[ip, al], lc);
        }
    }
    rows.diagonal_internal(p, r)?;
    // Ω-split of 𝓑^{i′j′}: commuting part unscaled, anticommuting part over R
    let b = |rows: &Rows, x: usize, y: usize| rows.old(Family::Bint, &[r + 1 + x, r + 1 + y]);
    let half = LaurentScalar::ratio(1, 2);
    let mut minus = Vec::new();
    let mut plus = Vec::new();
    for x in 0..m {
        for y in 0..m {
            if x < y {
                // A₀ and A₃ from the diagonal blocks
                let (b1, b2) = (b(&rows, x, y)?, b(&rows, m + x, m + y)?);
                minus.push((
                    [r + 1 + x, r + 1 + y],
                    LinComb::from_terms([(b1, half.clone()), (b2, half.clone())]),
                ));
                plus.push((
                    [r + 1 + x, r + 1 + y],
                    LinComb::from_terms([(b1, half.clone()), (b2, -half.clone())]),
                ));
            }
            // S (symmetric, x ≤ y) and A₁ (antisymmetric, x < y) from the off-diagonal block
            if x <= y {
                let b1 = b(&rows, x, m + y)?;
                let b2 = b(&rows, y, m + x)?;
                let s = if x == y {
                    LinComb::term(b1, LaurentScalar::one())
                } else {
                    LinComb::from_terms([(b1, half.clone()), (b2, half.clone())])
                };
                minus.push(([r + 1 + x, r + 1 + m + y], s));
                if x < y {
                    plus.push((
                        [r + 1 + x, r + 1 + m + y],
                        LinComb::from_terms([(b1, half.clone()), (b2, -half.clone())]),
                    ));
                }
            }
        }
    }
    for (ind, lc) in minus {
        rows.push(Family::Bminus, &ind, lc);
    }
    let inv_r = rpow(-Rational::ONE);
    for (ind, lc) in plus {
        rows.push(Family::Bplus, &ind, lc.scale(&inv_r));
    }
    for i in 1..=r {
        for jp in (r + 1)..=k {
            let bij = rows.old(Family::Bint, &[i, jp])?;
            rows.push(Family::Bmixed, &[i, jp], LinComb::term(bij, inv_r.clone()));
        }
    }
    rows.finish()
}
