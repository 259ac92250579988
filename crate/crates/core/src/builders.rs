//! Constructors for the concrete algebras: Maxwell targets, the Lorentz and
//! AdS inputs, `OSp(k;4)`, complex `OSp(r;2|C)` and its real form.
//!
//! Conventions shared by every builder:
//! * antisymmetric index pairs are stored with the smaller index first;
//!   a sum written over `μ̂ν̂` runs over all ordered pairs;
//! * `(QΓ)_α = Σ_β Q_β Γ_βα`, so `[X, Q_α] = c (QΓ)_α` puts `c Γ_βα` on `Q_β`;
//! * internal indices start at 1, spacetime and spinor indices at 0.

use std::collections::HashMap;

use crate::clifford::{self, canonical, eta, eta_ads, SpinorMatrix};
use crate::scalars::{GaussianRational, LaurentScalar, Rational};
use crate::superalg::{AlgebraBuilder, AlgebraError, BasisMap, Family, Generator, LinComb, SuperAlgebra, Tag};

/// Flags accepted by the command-line `build` subcommand.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct BuilderParams {
    pub k: usize,
    pub r: usize,
    pub with_chiral_bc: bool,
    pub with_central_b: bool,
    pub ads_decomposed: bool,
}

/// Upper bound on `k` and `r`.
pub const MAX_INTERNAL: usize = 8;

/// Algebras reachable through [`build`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BuildFamily {
    Lorentz,
    Maxwell,
    MaxwellN1,
    OspK4,
    OspR2c,
    OspR2cReal,
}

impl BuildFamily {
    pub const ALL: [BuildFamily; 6] = [
        BuildFamily::Lorentz,
        BuildFamily::Maxwell,
        BuildFamily::MaxwellN1,
        BuildFamily::OspK4,
        BuildFamily::OspR2c,
        BuildFamily::OspR2cReal,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BuildFamily::Lorentz => "lorentz",
            BuildFamily::Maxwell => "maxwell",
            BuildFamily::MaxwellN1 => "maxwell-n1",
            BuildFamily::OspK4 => "osp-k4",
            BuildFamily::OspR2c => "osp-r2c",
            BuildFamily::OspR2cReal => "osp-r2c-real",
        }
    }
}

impl std::str::FromStr for BuildFamily {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        BuildFamily::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| AlgebraError::UnknownGenerator(format!("family `{s}`")))
    }
}

/// Builds one algebra; `k` and `r` are capped at [`MAX_INTERNAL`].
pub fn build(family: BuildFamily, p: &BuilderParams) -> Result<SuperAlgebra, AlgebraError> {
    if p.k > MAX_INTERNAL || p.r > MAX_INTERNAL {
        return Err(AlgebraError::DimensionMismatch {
            left: p.k.max(p.r),
            right: MAX_INTERNAL,
        });
    }
    Ok(match family {
        BuildFamily::Lorentz => lorentz_o31(),
        BuildFamily::Maxwell => maxwell_algebra(),
        BuildFamily::MaxwellN1 => maxwell_superalgebra_n1(MaxwellN1Params {
            with_chiral_bc: p.with_chiral_bc,
            with_central_b: p.with_central_b,
        }),
        BuildFamily::OspK4 => osp_k_4(p.k, p.ads_decomposed),
        BuildFamily::OspR2c => osp_r_2c(p.r),
        BuildFamily::OspR2cReal => osp_r_2c_real(p.r),
    })
}

fn cst(c: GaussianRational) -> LaurentScalar {
    LaurentScalar::constant(c)
}

fn i_times(n: i128) -> LaurentScalar {
    cst(GaussianRational::imag(Rational::from_int(n)))
}

/// `[X_ab, X_cd] = i Σ coeff · X_xy` for the orthogonal algebra with diagonal
/// metric `g`, in the convention
/// `[X_ab, X_cd] = −i(g_cb X_ad − g_ca X_bd) + i(g_db X_ac − g_da X_bc)`.
pub fn so_bracket_terms(
    g: impl Fn(usize) -> i128,
    a: usize,
    b: usize,
    c: usize,
    d: usize,
) -> Vec<(i128, usize, usize)> {
    let mut out = Vec::new();
    if c == b {
        out.push((-g(b), a, d));
    }
    if c == a {
        out.push((g(a), b, d));
    }
    if d == b {
        out.push((g(b), a, c));
    }
    if d == a {
        out.push((-g(a), b, c));
    }
    out
}

/// Index lookup for a family of antisymmetric-pair generators.
#[derive(Clone, Debug, Default)]
pub struct PairFamily {
    index: HashMap<(usize, usize), usize>,
}

impl PairFamily {
    /// Registers `X_ab` for all `lo ≤ a < b < hi`.
    pub fn register(b: &mut AlgebraBuilder, family: Family, lo: usize, hi: usize, massdim: Rational) -> PairFamily {
        let mut index = HashMap::new();
        for x in lo..hi {
            for y in (x + 1)..hi {
                let k = b.add_generator(Generator::new(family, &[x as u8, y as u8]).with_massdim(massdim));
                index.insert((x, y), k);
            }
        }
        PairFamily { index }
    }

    /// `X_ab` as `(sign, index)`; `None` on the diagonal or outside the range.
    pub fn get(&self, a: usize, b: usize) -> Option<(i128, usize)> {
        if a < b {
            self.index.get(&(a, b)).map(|&k| (1, k))
        } else {
            self.index.get(&(b, a)).map(|&k| (-1, k))
        }
    }

    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let mut v: Vec<_> = self.index.keys().copied().collect();
        v.sort();
        v
    }

    /// `c · X_ab` as a linear combination (zero on the diagonal).
    pub fn lc(&self, a: usize, b: usize, c: LaurentScalar) -> LinComb {
        match self.get(a, b) {
            Some((s, k)) => LinComb::term(k, c.scale(GaussianRational::int(s))),
            None => LinComb::zero(),
        }
    }
}

/// Fills `[X_ab, X_cd]` for an orthogonal family, with the right-hand side
/// taken in `target` and multiplied by `factor`.
fn fill_so(
    b: &mut AlgebraBuilder,
    src_a: &PairFamily,
    src_b: &PairFamily,
    target: &PairFamily,
    g: &dyn Fn(usize) -> i128,
    factor: i128,
) {
    for (x, y) in src_a.pairs() {
        for (z, w) in src_b.pairs() {
            let mut lc = LinComb::zero();
            for (c, p, q) in so_bracket_terms(g, x, y, z, w) {
                lc = lc.add(&target.lc(p, q, i_times(c * factor)));
            }
            let (_, i) = src_a.get(x, y).unwrap();
            let (_, j) = src_b.get(z, w).unwrap();
            b.set(i, j, lc);
        }
    }
}

/// Registers a 4-component Majorana spinor family `F[prefix.., α]`.
fn register_spinor(b: &mut AlgebraBuilder, family: Family, prefix: &[u8], massdim: Rational) -> [usize; 4] {
    std::array::from_fn(|a| {
        let mut idx = prefix.to_vec();
        idx.push(a as u8);
        b.add_generator(Generator::new(family, &idx).with_massdim(massdim))
    })
}

/// `c (QΓ)_α` as a combination of the spinor family `q`.
fn spinor_right(q: &[usize; 4], m: &SpinorMatrix, alpha: usize, c: &LaurentScalar) -> LinComb {
    LinComb::from_terms((0..4).map(|beta| (q[beta], c * &cst(m.get(beta, alpha)))))
}

fn lorentz_pairs(b: &mut AlgebraBuilder, family: Family, massdim: Rational) -> PairFamily {
    PairFamily::register(b, family, 0, 4, massdim)
}

/// `D=4` Lorentz algebra of `𝓙_μν` with `η = diag(−1,1,1,1)`.
pub fn lorentz_o31() -> SuperAlgebra {
    let mut b = AlgebraBuilder::new("O(3,1)");
    let j = lorentz_pairs(&mut b, Family::J, Rational::ZERO);
    fill_so(&mut b, &j, &j, &j, &eta, 1);
    b.finish().expect("Lorentz algebra is consistent")
}

/// Orthogonal algebra `O(n)` with Euclidean metric on a chosen family,
/// indices `1..=n`.
pub fn orthogonal(n: usize, family: Family) -> SuperAlgebra {
    let mut b = AlgebraBuilder::new(format!("O({n})"));
    let x = PairFamily::register(&mut b, family, 1, n + 1, Rational::ZERO);
    fill_so(&mut b, &x, &x, &x, &|_| 1, 1);
    b.finish().expect("orthogonal algebra is consistent")
}

struct MaxwellCore {
    p: [usize; 4],
    m: PairFamily,
    z: PairFamily,
}

fn maxwell_core(b: &mut AlgebraBuilder) -> MaxwellCore {
    let p: [usize; 4] =
        std::array::from_fn(|mu| b.add_generator(Generator::new(Family::P, &[mu as u8]).with_massdim(Rational::ONE)));
    let m = lorentz_pairs(b, Family::Mlorentz, Rational::ZERO);
    let z = lorentz_pairs(b, Family::Z, Rational::ZERO);
    fill_so(b, &m, &m, &m, &eta, 1);
    fill_so(b, &m, &z, &z, &eta, 1);
    let m2 = LaurentScalar::monomial(GaussianRational::I, Rational::ZERO, 2);
    for mu in 0..4 {
        for nu in 0..4 {
            b.set(p[mu], p[nu], z.lc(mu, nu, m2.clone()));
        }
        // [P_μ, M_ρσ] = −i(η_μρ P_σ − η_μσ P_ρ)
        for (rho, sigma) in m.pairs() {
            let mut lc = LinComb::zero();
            if mu == rho {
                lc.add_term(p[sigma], i_times(-eta(mu)));
            }
            if mu == sigma {
                lc.add_term(p[rho], i_times(eta(mu)));
            }
            b.set(p[mu], m.get(rho, sigma).unwrap().1, lc);
        }
    }
    MaxwellCore { p, m, z }
}

/// Maxwell algebra: Poincaré `P, M` plus abelian tensor charges `Z` with
/// `[P_μ, P_ν] = i M² Z_μν`.
pub fn maxwell_algebra() -> SuperAlgebra {
    let mut b = AlgebraBuilder::new("Maxwell");
    maxwell_core(&mut b);
    b.finish().expect("Maxwell algebra is consistent")
}

/// Variant flags of the simple Maxwell superalgebra.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct MaxwellN1Params {
    pub with_chiral_bc: bool,
    pub with_central_b: bool,
}

impl MaxwellN1Params {
    pub const MINIMAL: MaxwellN1Params = MaxwellN1Params {
        with_chiral_bc: false,
        with_central_b: false,
    };
}

/// Simple (N=1) Maxwell superalgebra with supercharges `Q`, `Σ`, optional
/// central `B` and chiral `B_C`.
pub fn maxwell_superalgebra_n1(params: MaxwellN1Params) -> SuperAlgebra {
    let cl = canonical();
    let mut b = AlgebraBuilder::new("Maxwell N=1");
    let core = maxwell_core(&mut b);
    let q = register_spinor(&mut b, Family::Q, &[], Rational::half());
    let s = register_spinor(&mut b, Family::Sigma, &[], Rational::new(3, 2));
    let central = params
        .with_central_b
        .then(|| b.add_generator(Generator::new(Family::Bcentral, &[]).with_massdim(Rational::from_int(2))));
    let chiral = params
        .with_chiral_bc
        .then(|| b.add_generator(Generator::new(Family::BC, &[]).with_massdim(Rational::ZERO)));
    let m2 = LaurentScalar::m_pow(2);
    let mhalf_i = cst(GaussianRational::imag(Rational::new(-1, 2)));
    for al in 0..4 {
        for be in 0..4 {
            let mut qq = LinComb::zero();
            for mu in 0..4 {
                qq.add_term(core.p[mu], cst((cl.c * cl.gamma_upper(mu)).get(al, be)));
            }
            b.set(q[al], q[be], qq);
            let mut qs = LinComb::zero();
            for (mu, nu) in core.z.pairs() {
                // (M²/2) Σ over ordered pairs = M² Σ over μ<ν
                let c = cst((cl.c * cl.gamma_mn_upper(mu, nu)).get(al, be));
                qs.add_term(core.z.get(mu, nu).unwrap().1, &m2 * &c);
            }
            if let Some(bk) = central {
                qs.add_term(bk, cst((cl.c * cl.gamma5).get(al, be)));
            }
            b.set(q[al], s[be], qs);
            b.set(s[al], s[be], LinComb::zero());
        }
        for mu in 0..4 {
            b.set(core.p[mu], q[al], spinor_right(&s, &cl.gamma[mu], al, &mhalf_i));
            b.set(core.p[mu], s[al], LinComb::zero());
        }
        for (rho, sigma) in core.m.pairs() {
            let g = cl.gamma_mn(rho, sigma);
            let mk = core.m.get(rho, sigma).unwrap().1;
            b.set(mk, q[al], spinor_right(&q, &g, al, &mhalf_i));
            b.set(mk, s[al], spinor_right(&s, &g, al, &mhalf_i));
        }
        if let Some(bc) = chiral {
            b.set(bc, q[al], spinor_right(&q, &cl.gamma5, al, &LaurentScalar::i()));
            b.set(bc, s[al], spinor_right(&s, &cl.gamma5, al, &-LaurentScalar::i()));
        }
    }
    let mut alg = b.finish().expect("Maxwell superalgebra is consistent");
    if params == MaxwellN1Params::MINIMAL {
        alg = alg.with_name("Maxwell N=1 minimal");
    }
    alg
}

/// `OSp(k;4)`: `𝓜_μ̂ν̂` (or `𝓜_μν`, `𝓟_μ = 𝓜_μ4` when decomposed), `𝓠^i_α`,
/// `𝓑^{ij}`.
pub fn osp_k_4(k: usize, ads_decomposed: bool) -> SuperAlgebra {
    let cl = canonical();
    let mut b = AlgebraBuilder::new(format!("OSp({k};4)"));
    let mut mhat = HashMap::new();
    for x in 0..5 {
        for y in (x + 1)..5 {
            let g = if ads_decomposed && y == 4 {
                Generator::new(Family::Pcal, &[x as u8])
            } else {
                Generator::new(Family::McalAdS, &[x as u8, y as u8])
            };
            mhat.insert((x, y), b.add_generator(g.with_massdim(Rational::ZERO)));
        }
    }
    let mf = PairFamily { index: mhat };
    fill_so(&mut b, &mf, &mf, &mf, &eta_ads, 1);
    let q: Vec<[usize; 4]> = (1..=k)
        .map(|i| register_spinor(&mut b, Family::QcalAdS, &[i as u8], Rational::ZERO))
        .collect();
    let bint = PairFamily::register(&mut b, Family::Bint, 1, k + 1, Rational::ZERO);
    fill_so(&mut b, &bint, &bint, &bint, &|_| 1, 1);
    let mhalf_i = cst(GaussianRational::imag(Rational::new(-1, 2)));
    for i in 0..k {
        for j in 0..k {
            for al in 0..4 {
                for be in 0..4 {
                    let mut lc = LinComb::zero();
                    if i == j {
                        // −Σ_{all μ̂ν̂} (CΓ^{μ̂ν̂}) 𝓜_μ̂ν̂ = −2 Σ_{μ̂<ν̂}
                        for (x, y) in mf.pairs() {
                            let c = (cl.c * cl.ads_mn_upper(x, y)).get(al, be);
                            lc.add_term(mf.get(x, y).unwrap().1, cst(c * GaussianRational::int(-2)));
                        }
                    }
                    let c2 = cl.c.get(al, be) * GaussianRational::int(2);
                    lc = lc.add(&bint.lc(i + 1, j + 1, cst(c2)));
                    b.set(q[i][al], q[j][be], lc);
                }
            }
        }
        for al in 0..4 {
            for (x, y) in mf.pairs() {
                let mk = mf.get(x, y).unwrap().1;
                b.set(mk, q[i][al], spinor_right(&q[i], &cl.ads_mn(x, y), al, &mhalf_i));
            }
            // [𝓑^{ab}, 𝓠^l] = −i(δ^{lb} 𝓠^a − δ^{la} 𝓠^b)
            for (a, bb) in bint.pairs() {
                let l = i + 1;
                let mut lc = LinComb::zero();
                if l == bb {
                    lc.add_term(q[a - 1][al], i_times(-1));
                }
                if l == a {
                    lc.add_term(q[bb - 1][al], i_times(1));
                }
                b.set(bint.get(a, bb).unwrap().1, q[i][al], lc);
            }
        }
    }
    b.finish().expect("OSp(k;4) is consistent")
}

/// Two independent rows `V` of `P+` and a right inverse `W` (`VW = 1₂`),
/// parametrizing `S₊ = s V` by two complex components `s_a`.
pub fn chiral_frame() -> ([[GaussianRational; 4]; 2], [[GaussianRational; 2]; 4]) {
    let p = canonical().p_plus;
    let rows: Vec<[GaussianRational; 4]> = (0..4).map(|r| p.0[r]).collect();
    let mut picked: Vec<[GaussianRational; 4]> = Vec::new();
    for row in rows {
        let mut trial = picked.clone();
        trial.push(row);
        let mut m = SpinorMatrix::zero();
        for (k, r) in trial.iter().enumerate() {
            m.0[k] = *r;
        }
        if m.rank() == trial.len() {
            picked = trial;
        }
        if picked.len() == 2 {
            break;
        }
    }
    let v = [picked[0], picked[1]];
    // invertible 2×2 block from the first independent pair of columns
    for c1 in 0..4 {
        for c2 in (c1 + 1)..4 {
            let det = v[0][c1] * v[1][c2] - v[0][c2] * v[1][c1];
            if let Some(inv) = det.recip() {
                let mut w = [[GaussianRational::ZERO; 2]; 4];
                w[c1] = [v[1][c2] * inv, -(v[0][c2] * inv)];
                w[c2] = [-(v[1][c1] * inv), v[0][c1] * inv];
                return (v, w);
            }
        }
    }
    unreachable!("P+ has rank 2")
}

fn sandwich(
    v: &[[GaussianRational; 4]; 2],
    m: &SpinorMatrix,
    w: &[[GaussianRational; 2]; 4],
    a: usize,
    b: usize,
) -> GaussianRational {
    let mut acc = GaussianRational::ZERO;
    for x in 0..4 {
        for y in 0..4 {
            acc += v[a][x] * m.get(x, y) * w[y][b];
        }
    }
    acc
}

fn wt_f_w(w: &[[GaussianRational; 2]; 4], m: &SpinorMatrix, a: usize, b: usize) -> GaussianRational {
    let mut acc = GaussianRational::ZERO;
    for x in 0..4 {
        for y in 0..4 {
            acc += w[x][a] * m.get(x, y) * w[y][b];
        }
    }
    acc
}

/// Complex `OSp(r;2|C)` on `J̄_μ̄`, `T₊^{ij}` and the independent chiral
/// components `s^i_a` of `S₊^i`.
pub fn osp_r_2c(r: usize) -> SuperAlgebra {
    let cl = canonical();
    let (v, w) = chiral_frame();
    let mut b = AlgebraBuilder::new(format!("OSp({r};2|C)"));
    b.complex(true);
    let jb: [usize; 3] =
        std::array::from_fn(|m| b.add_generator(Generator::new(Family::Jbar, &[m as u8]).with_massdim(Rational::ZERO)));
    let s: Vec<[usize; 2]> = (1..=r)
        .map(|i| {
            std::array::from_fn(|a| {
                b.add_generator(Generator::new(Family::Scal, &[i as u8, a as u8]).with_massdim(Rational::ZERO))
            })
        })
        .collect();
    let tp = PairFamily::register(&mut b, Family::Tplus, 1, r + 1, Rational::ZERO);
    fill_so(&mut b, &tp, &tp, &tp, &|_| 1, 1);
    for m in 0..3 {
        for n in 0..3 {
            let lc = LinComb::from_terms((0..3).map(|c| (jb[c], i_times(clifford::epsilon3_mixed(m, n, c)))));
            b.set(jb[m], jb[n], lc);
        }
    }
    let cp = cl.c * cl.p_plus;
    let half = GaussianRational::ratio(1, 2);
    for i in 0..r {
        for j in 0..r {
            for a in 0..2 {
                for bb in 0..2 {
                    // {S₊^i, S₊^j} = 4i δ^{ij} (CΓ₊^ρ) J̄_ρ + 2 (CP₊) T₊^{ij}
                    let mut lc = LinComb::zero();
                    if i == j {
                        for rho in 0..3 {
                            let c = wt_f_w(&w, &(cl.c * cl.gamma_plus_upper(rho)), a, bb)
                                * GaussianRational::imag(Rational::from_int(4));
                            lc.add_term(jb[rho], cst(c));
                        }
                    }
                    let c2 = wt_f_w(&w, &cp, a, bb) * GaussianRational::int(2);
                    lc = lc.add(&tp.lc(i + 1, j + 1, cst(c2)));
                    b.set(s[i][a], s[j][bb], lc);
                }
            }
        }
        for a in 0..2 {
            for mu in 0..3 {
                // [J̄_μ, s_a] = ½ Σ_b s_b (V Γ₊μ W)_ba
                let lc = LinComb::from_terms(
                    (0..2).map(|bb| (s[i][bb], cst(half * sandwich(&v, &cl.gamma_plus[mu], &w, bb, a)))),
                );
                b.set(jb[mu], s[i][a], lc);
            }
            for (x, y) in tp.pairs() {
                let l = i + 1;
                let mut lc = LinComb::zero();
                if l == y {
                    lc.add_term(s[x - 1][a], i_times(-1));
                }
                if l == x {
                    lc.add_term(s[y - 1][a], i_times(1));
                }
                b.set(tp.get(x, y).unwrap().1, s[i][a], lc);
            }
        }
    }
    b.finish().expect("OSp(r;2|C) is consistent")
}

/// Real form `OSp_R(r;2|C)` on `𝓙_μν`, `𝓢^i_α`, `𝓣₀^{ij}`, `𝓣₅^{ij}`.
pub fn osp_r_2c_real(r: usize) -> SuperAlgebra {
    let cl = canonical();
    let mut b = AlgebraBuilder::new(format!("OSp_R({r};2|C)"));
    let j = lorentz_pairs(&mut b, Family::J, Rational::ZERO);
    fill_so(&mut b, &j, &j, &j, &eta, 1);
    let s: Vec<[usize; 4]> = (1..=r)
        .map(|i| register_spinor(&mut b, Family::Scal, &[i as u8], Rational::ZERO))
        .collect();
    let t0 = PairFamily::register(&mut b, Family::T0, 1, r + 1, Rational::ZERO);
    let t5 = PairFamily::register(&mut b, Family::T5, 1, r + 1, Rational::ZERO);
    fill_so(&mut b, &t0, &t0, &t0, &|_| 1, 1);
    fill_so(&mut b, &t0, &t5, &t5, &|_| 1, 1);
    fill_so(&mut b, &t5, &t5, &t0, &|_| 1, -1);
    let mhalf_i = cst(GaussianRational::imag(Rational::new(-1, 2)));
    let cg5 = cl.c * cl.gamma5;
    let id = SpinorMatrix::identity();
    for i in 0..r {
        for jj in 0..r {
            for al in 0..4 {
                for be in 0..4 {
                    let mut lc = LinComb::zero();
                    if i == jj {
                        for (mu, nu) in j.pairs() {
                            let c = (cl.c * cl.gamma_mn_upper(mu, nu)).get(al, be) * GaussianRational::int(-2);
                            lc.add_term(j.get(mu, nu).unwrap().1, cst(c));
                        }
                    }
                    lc = lc.add(&t0.lc(i + 1, jj + 1, cst(cl.c.get(al, be))));
                    lc = lc.add(&t5.lc(i + 1, jj + 1, cst(-cg5.get(al, be))));
                    b.set(s[i][al], s[jj][be], lc);
                }
            }
        }
        for al in 0..4 {
            for (mu, nu) in j.pairs() {
                b.set(
                    j.get(mu, nu).unwrap().1,
                    s[i][al],
                    spinor_right(&s[i], &cl.gamma_mn(mu, nu), al, &mhalf_i),
                );
            }
            for (x, y) in t0.pairs() {
                let l = i + 1;
                for (fam, m) in [(&t0, &id), (&t5, &cl.gamma5)] {
                    let mut lc = LinComb::zero();
                    if l == y {
                        lc = lc.add(&spinor_right(&s[x - 1], m, al, &i_times(-1)));
                    }
                    if l == x {
                        lc = lc.add(&spinor_right(&s[y - 1], m, al, &i_times(1)));
                    }
                    b.set(fam.get(x, y).unwrap().1, s[i][al], lc);
                }
            }
        }
    }
    b.finish().expect("OSp_R(r;2|C) is consistent")
}

/// Basis change from `realify(osp_r_2c(r))` to the generators of
/// [`osp_r_2c_real`], in that builder's order.
pub fn real_form_map(realified: &SuperAlgebra, r: usize) -> Result<BasisMap, AlgebraError> {
    let (v, _) = chiral_frame();
    let target = osp_r_2c_real(r);
    let idx = |fam: Family, tag: Tag, ind: &[u8]| realified.lookup(&Generator::new(fam, ind).with_tag(tag).label());
    let mut rows = Vec::with_capacity(target.dim());
    for g in target.generators() {
        let lc = match g.family {
            Family::J => {
                let (mu, nu) = (g.indices[0] as usize, g.indices[1] as usize);
                if nu == 3 {
                    LinComb::term(idx(Family::Jbar, Tag::Im, &[mu as u8])?, LaurentScalar::int(2))
                } else {
                    let (rho, c) = match (mu, nu) {
                        (1, 2) => (0, -2),
                        (0, 2) => (1, -2),
                        _ => (2, 2),
                    };
                    LinComb::term(idx(Family::Jbar, Tag::Re, &[rho as u8])?, LaurentScalar::int(c))
                }
            }
            Family::T0 => LinComb::term(idx(Family::Tplus, Tag::Re, &g.indices)?, LaurentScalar::int(2)),
            Family::T5 => LinComb::term(idx(Family::Tplus, Tag::Im, &g.indices)?, LaurentScalar::int(2)),
            Family::Scal => {
                let (i, al) = (g.indices[0], g.indices[1] as usize);
                let mut lc = LinComb::zero();
                for (a, row) in v.iter().enumerate() {
                    let re = GaussianRational::real(row[al].re * Rational::from_int(2));
                    let im = GaussianRational::real(row[al].im * Rational::from_int(-2));
                    lc.add_term(idx(Family::Scal, Tag::Re, &[i, a as u8])?, cst(re));
                    lc.add_term(idx(Family::Scal, Tag::Im, &[i, a as u8])?, cst(im));
                }
                lc
            }
            _ => unreachable!("real form has only J, Scal, T0, T5"),
        };
        rows.push(lc);
    }
    let gens = target.generators().to_vec();
    BasisMap::new(realified.generators(), gens, rows)
}
