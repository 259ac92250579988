//! Independent reference data shared by the integration tests: a literal
//! transcription of the displayed finite-R table for `N = 1, k = 2`, and a
//! supermatrix realization of `OSp(k;4)` built from its own gamma matrices.

#![allow(clippy::needless_range_loop)]
#![allow(dead_code)]

use std::collections::BTreeSet;

use maxsusy_core::superalg::{AlgebraBuilder, Family, Generator, LinComb, SuperAlgebra};
use maxsusy_core::{GaussianRational, LaurentScalar, Rational};

pub type Mat = Vec<Vec<GaussianRational>>;

pub fn g(n: i128) -> GaussianRational {
    GaussianRational::int(n)
}

pub fn gi(n: i128, d: i128) -> GaussianRational {
    GaussianRational::imag(Rational::new(n, d))
}

pub fn zeros(n: usize) -> Mat {
    vec![vec![GaussianRational::ZERO; n]; n]
}

pub fn mul(a: &Mat, b: &Mat) -> Mat {
    let n = a.len();
    let mut out = zeros(n);
    for i in 0..n {
        for l in 0..n {
            if a[i][l].is_zero() {
                continue;
            }
            for j in 0..n {
                out[i][j] += a[i][l] * b[l][j];
            }
        }
    }
    out
}

pub fn lin(a: &Mat, ca: GaussianRational, b: &Mat, cb: GaussianRational) -> Mat {
    a.iter()
        .zip(b)
        .map(|(ra, rb)| ra.iter().zip(rb).map(|(x, y)| *x * ca + *y * cb).collect())
        .collect()
}

pub fn transpose(a: &Mat) -> Mat {
    let n = a.len();
    (0..n).map(|i| (0..n).map(|j| a[j][i]).collect()).collect()
}

fn kron2(a: [[i128; 2]; 2], b: [[i128; 2]; 2]) -> Mat {
    let mut out = zeros(4);
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                for l in 0..2 {
                    out[2 * i + k][2 * j + l] = g(a[i][j] * b[k][l]);
                }
            }
        }
    }
    out
}

/// Majorana gamma matrices `γ_0..γ_3`, `γ_5 = γ_0γ_1γ_2γ_3`, `C = γ_0`.
pub struct Gammas {
    pub gamma: [Mat; 4],
    pub gamma5: Mat,
    pub c: Mat,
}

pub fn gammas() -> Gammas {
    let id = [[1, 0], [0, 1]];
    let eps = [[0, 1], [-1, 0]];
    let s1 = [[0, 1], [1, 0]];
    let s3 = [[1, 0], [0, -1]];
    let gamma = [kron2(id, eps), kron2(id, s1), kron2(s1, s3), kron2(s3, s3)];
    let gamma5 = mul(&mul(&gamma[0], &gamma[1]), &mul(&gamma[2], &gamma[3]));
    let c = gamma[0].clone();
    Gammas { gamma, gamma5, c }
}

pub fn eta(mu: usize) -> i128 {
    if mu == 0 {
        -1
    } else {
        1
    }
}

pub fn eta_hat(mu: usize) -> i128 {
    if mu == 0 || mu == 4 {
        -1
    } else {
        1
    }
}

impl Gammas {
    /// `Γ̂_μ = γ_μγ_5` (μ < 4), `Γ̂_4 = −γ_5`.
    pub fn gamma_hat(&self, mu: usize) -> Mat {
        if mu < 4 {
            mul(&self.gamma[mu], &self.gamma5)
        } else {
            lin(&self.gamma5, g(-1), &self.gamma5, g(0))
        }
    }

    /// `½[Γ̂_a, Γ̂_b]`.
    pub fn gamma_hat_ab(&self, a: usize, b: usize) -> Mat {
        let (x, y) = (self.gamma_hat(a), self.gamma_hat(b));
        lin(
            &mul(&x, &y),
            GaussianRational::ratio(1, 2),
            &mul(&y, &x),
            GaussianRational::ratio(-1, 2),
        )
    }

    pub fn gamma_ab(&self, a: usize, b: usize) -> Mat {
        let (x, y) = (&self.gamma[a], &self.gamma[b]);
        lin(
            &mul(x, y),
            GaussianRational::ratio(1, 2),
            &mul(y, x),
            GaussianRational::ratio(-1, 2),
        )
    }
}

fn label(f: Family, ind: &[usize]) -> String {
    let ind: Vec<u8> = ind.iter().map(|&x| x as u8).collect();
    Generator::new(f, &ind).label()
}

/// Exact Gaussian elimination: coordinates of `v` in the span of `cols`.
fn solve(cols: &[Vec<GaussianRational>], v: &[GaussianRational]) -> Option<Vec<GaussianRational>> {
    let rows = v.len();
    let n = cols.len();
    let mut a: Vec<Vec<GaussianRational>> = (0..rows)
        .map(|r| {
            let mut row: Vec<GaussianRational> = cols.iter().map(|c| c[r]).collect();
            row.push(v[r]);
            row
        })
        .collect();
    let mut piv_cols = Vec::new();
    let mut r = 0;
    for c in 0..n {
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].recip().unwrap();
        for x in a[r].iter_mut() {
            *x = *x * inv;
        }
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c];
                for j in 0..=n {
                    let t = a[r][j];
                    a[i][j] -= f * t;
                }
            }
        }
        piv_cols.push(c);
        r += 1;
    }
    if (r..rows).any(|i| !a[i][n].is_zero()) {
        return None;
    }
    let mut x = vec![GaussianRational::ZERO; n];
    for (i, &c) in piv_cols.iter().enumerate() {
        x[c] = a[i][n];
    }
    Some(x)
}

/// Structure constants of `OSp(k;4)` computed as supercommutators of
/// `(4|k) × (4|k)` supermatrices:
/// `𝓜_ab ↦ −(i/2)Γ̂_ab ⊕ 0`, `𝓑^{ij} ↦ 0 ⊕ −i(E_ij − E_ji)`,
/// `𝓠^i_α ↦` column `i` carrying `e_α` and row `i` carrying `−2i C_{α·}`.
pub fn supermatrix_osp(k: usize) -> SuperAlgebra {
    let gm = gammas();
    let n = 4 + k;
    let mut images: Vec<(Generator, Mat)> = Vec::new();
    for a in 0..5 {
        for b in (a + 1)..5 {
            let mut m = zeros(n);
            let gab = gm.gamma_hat_ab(a, b);
            for x in 0..4 {
                for y in 0..4 {
                    m[x][y] = gab[x][y] * gi(-1, 2);
                }
            }
            images.push((Generator::new(Family::McalAdS, &[a as u8, b as u8]), m));
        }
    }
    for i in 1..=k {
        for al in 0..4 {
            let mut m = zeros(n);
            m[al][3 + i] = g(1);
            for be in 0..4 {
                m[3 + i][be] = gm.c[al][be] * gi(-2, 1);
            }
            images.push((Generator::new(Family::QcalAdS, &[i as u8, al as u8]), m));
        }
    }
    for i in 1..=k {
        for j in (i + 1)..=k {
            let mut m = zeros(n);
            m[3 + i][3 + j] = gi(-1, 1);
            m[3 + j][3 + i] = gi(1, 1);
            images.push((Generator::new(Family::Bint, &[i as u8, j as u8]), m));
        }
    }
    let flat: Vec<Vec<GaussianRational>> = images
        .iter()
        .map(|(_, m)| m.iter().flatten().copied().collect())
        .collect();
    let mut b = AlgebraBuilder::new(format!("supermatrix OSp({k};4)"));
    for (gen, _) in &images {
        b.add_generator(gen.clone());
    }
    for x in 0..images.len() {
        for y in x..images.len() {
            let (gx, mx) = &images[x];
            let (gy, my) = &images[y];
            let sign = if gx.is_odd() && gy.is_odd() { g(1) } else { g(-1) };
            let br = lin(&mul(mx, my), g(1), &mul(my, mx), sign);
            let v: Vec<GaussianRational> = br.iter().flatten().copied().collect();
            let coords = solve(&flat, &v)
                .unwrap_or_else(|| panic!("[{}, {}] leaves the representation", gx.label(), gy.label()));
            let lc = LinComb::from_terms(
                coords
                    .into_iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(i, c)| (i, LaurentScalar::constant(c))),
            );
            b.set(x, y, lc);
        }
    }
    b.finish().expect("supermatrix brackets are consistent")
}

fn cst(c: GaussianRational) -> LaurentScalar {
    LaurentScalar::constant(c)
}

fn mono(c: GaussianRational, r: Rational, m: i32) -> LaurentScalar {
    LaurentScalar::monomial(c, r, m)
}

/// `[X_μν, Y_ρσ] = c · (−i η_ρ[ν W_μ]σ + i η_σ[ν W_μ]ρ)` on the `W` family.
fn lorentz_form(
    w: &dyn Fn(usize, usize) -> LinComb,
    mu: usize,
    nu: usize,
    rho: usize,
    sigma: usize,
    c: &LaurentScalar,
) -> LinComb {
    let i = cst(GaussianRational::I);
    let mut out = LinComb::zero();
    let mut add = |e: i128, x: usize, y: usize, s: i128| {
        if e != 0 {
            out = out.add(&w(x, y).scale(&(&(c * &i) * &LaurentScalar::int(e * s))));
        }
    };
    // −i(η_ρν W_μσ − η_ρμ W_νσ) + i(η_σν W_μρ − η_σμ W_νρ)
    add(if rho == nu { eta(nu) } else { 0 }, mu, sigma, -1);
    add(if rho == mu { eta(mu) } else { 0 }, nu, sigma, 1);
    add(if sigma == nu { eta(nu) } else { 0 }, mu, rho, 1);
    add(if sigma == mu { eta(mu) } else { 0 }, nu, rho, -1);
    out
}

/// The displayed finite-R relations for `N = 1, k = 2`, taken literally with
/// `β = 1 − α` and exponent `γ`.
pub fn displayed_k2_table(alpha: Rational, gamma: Rational) -> SuperAlgebra {
    let gm = gammas();
    let beta = Rational::ONE - alpha;
    let mut b = AlgebraBuilder::new("displayed N=1 k=2 finite-R table");
    let p: Vec<usize> = (0..4)
        .map(|mu| b.add_generator(Generator::new(Family::P, &[mu as u8])))
        .collect();
    let mut pairs = Vec::new();
    for mu in 0..4 {
        for nu in (mu + 1)..4 {
            pairs.push((mu, nu));
        }
    }
    let m: Vec<usize> = pairs
        .iter()
        .map(|&(x, y)| b.add_generator(Generator::new(Family::Mlorentz, &[x as u8, y as u8])))
        .collect();
    let z: Vec<usize> = pairs
        .iter()
        .map(|&(x, y)| b.add_generator(Generator::new(Family::Z, &[x as u8, y as u8])))
        .collect();
    let q: Vec<usize> = (0..4)
        .map(|a| b.add_generator(Generator::new(Family::Q, &[a as u8])))
        .collect();
    let s: Vec<usize> = (0..4)
        .map(|a| b.add_generator(Generator::new(Family::Sigma, &[a as u8])))
        .collect();
    let bc = b.add_generator(Generator::new(Family::BC, &[]));
    let pair_lc = |ids: &Vec<usize>, x: usize, y: usize| -> LinComb {
        if x == y {
            return LinComb::zero();
        }
        let (lo, hi, sg) = if x < y { (x, y, 1) } else { (y, x, -1) };
        let k = pairs.iter().position(|&pp| pp == (lo, hi)).unwrap();
        LinComb::term(ids[k], LaurentScalar::int(sg))
    };
    let mf = |x: usize, y: usize| pair_lc(&m, x, y);
    let zf = |x: usize, y: usize| pair_lc(&z, x, y);
    let pf = |x: usize| LinComb::term(p[x], LaurentScalar::one());
    let i = GaussianRational::I;
    let r = |e: i128| Rational::from_int(e);
    let alpha_g = GaussianRational::real(alpha);
    let beta_g = GaussianRational::real(beta);

    for (a, &(mu, nu)) in pairs.iter().enumerate() {
        for (c, &(rho, sigma)) in pairs.iter().enumerate() {
            let one = LaurentScalar::one();
            b.set(m[a], m[c], lorentz_form(&mf, mu, nu, rho, sigma, &one));
            b.set(m[a], z[c], lorentz_form(&zf, mu, nu, rho, sigma, &one));
            // [Z,Z] = (β−α)/(M²R²)·L(Z) + βα/(M⁴R⁴)·L(M)
            let cz = mono(beta_g - alpha_g, r(-2), -2);
            let cm = mono(beta_g * alpha_g, r(-4), -4);
            b.set(
                z[a],
                z[c],
                lorentz_form(&zf, mu, nu, rho, sigma, &cz).add(&lorentz_form(&mf, mu, nu, rho, sigma, &cm)),
            );
        }
    }
    for mu in 0..4 {
        for nu in 0..4 {
            // [P,P] = iM²Z − iβ/R² M
            let lc = zf(mu, nu)
                .scale(&mono(i, r(0), 2))
                .add(&mf(mu, nu).scale(&mono(-i * beta_g, r(-2), 0)));
            b.set(p[mu], p[nu], lc);
        }
        for (a, &(rho, sigma)) in pairs.iter().enumerate() {
            // −i η_μ[ρ P_σ]
            let eta_part = |c: LaurentScalar| -> LinComb {
                let mut lc = LinComb::zero();
                if mu == rho {
                    lc = lc.add(&pf(sigma).scale(&(&c * &LaurentScalar::int(eta(mu)))));
                }
                if mu == sigma {
                    lc = lc.add(&pf(rho).scale(&(&c * &LaurentScalar::int(-eta(mu)))));
                }
                lc
            };
            b.set(p[mu], m[a], eta_part(cst(-i)));
            b.set(p[mu], z[a], eta_part(mono(i * alpha_g, r(-2), 0)));
        }
        b.set(p[mu], bc, LinComb::zero());
    }
    let right = |fam: &Vec<usize>, mat: &Mat, al: usize, c: LaurentScalar| -> LinComb {
        LinComb::from_terms((0..4).map(|be| (fam[be], &c * &cst(mat[be][al]))))
    };
    let cg = |mu: usize| mul(&gm.c, &lin(&gm.gamma[mu], g(eta(mu)), &gm.gamma[mu], g(0)));
    for al in 0..4 {
        for be in 0..4 {
            let mut qq = LinComb::zero();
            for mu in 0..4 {
                qq.add_term(p[mu], cst(cg(mu)[al][be]));
            }
            b.set(q[al], q[be], qq.clone());
            b.set(s[al], s[be], qq.scale(&LaurentScalar::r_pow(r(-2))));
            // {Q,Σ} = (M²/2)(Cγ^{μν})Z_μν + R^{γ−2}(Cγ5)B_C over all ordered μν
            let mut qs = LinComb::zero();
            for mu in 0..4 {
                for nu in 0..4 {
                    if mu == nu {
                        continue;
                    }
                    let up = lin(&gm.gamma_ab(mu, nu), g(eta(mu) * eta(nu)), &gm.gamma_ab(mu, nu), g(0));
                    let c = mul(&gm.c, &up)[al][be];
                    qs = qs.add(&zf(mu, nu).scale(&mono(c * GaussianRational::ratio(1, 2), r(0), 2)));
                }
            }
            qs.add_term(bc, mono(mul(&gm.c, &gm.gamma5)[al][be], gamma - r(2), 0));
            b.set(q[al], s[be], qs);
        }
        for mu in 0..4 {
            b.set(p[mu], q[al], right(&s, &gm.gamma[mu], al, cst(gi(-1, 2))));
            b.set(p[mu], s[al], right(&q, &gm.gamma[mu], al, mono(gi(-1, 4), r(-2), 0)));
        }
        for (a, &(mu, nu)) in pairs.iter().enumerate() {
            let gmn = gm.gamma_ab(mu, nu);
            b.set(z[a], q[al], right(&q, &gmn, al, mono(gi(1, 2), r(-2), -2)));
            b.set(z[a], s[al], right(&s, &gmn, al, mono(gi(1, 2), r(-2), -2)));
            b.set(m[a], q[al], right(&q, &gmn, al, cst(gi(-1, 2))));
            b.set(m[a], s[al], right(&s, &gmn, al, cst(gi(-1, 2))));
        }
        b.set(bc, q[al], right(&q, &gm.gamma5, al, mono(i, -gamma, 0)));
        b.set(bc, s[al], right(&s, &gm.gamma5, al, mono(-i, -gamma, 0)));
    }
    b.finish().expect("displayed table is internally consistent")
}

/// Unordered family pairs `(X, Y)` whose brackets disagree between the
/// computed finite-R algebra and the displayed table, derived by hand from the
/// rescalings: `[P,Z]` lacks `M²` and `[P,Σ]` carries `1/4` for `1/2`;
/// `[P,P]` and `[Z,Z]` swap `α ↔ β`; `[Z,Q]`, `[Z,Σ]` and `{Q,Σ}` drop the
/// `α`-dependent pieces.
pub fn expected_k2_mismatches(alpha: Rational) -> BTreeSet<(String, String)> {
    let mut out = BTreeSet::new();
    let mut add = |a: &str, b: &str| {
        let (x, y) = if a <= b { (a, b) } else { (b, a) };
        out.insert((x.to_string(), y.to_string()));
    };
    add("P", "Z");
    add("P", "Sigma");
    if alpha != Rational::half() {
        add("P", "P");
        add("Z", "Z");
    }
    if !alpha.is_zero() {
        add("Z", "Q");
        add("Z", "Sigma");
        add("Q", "Sigma");
    }
    out
}

/// Family pairs appearing in a diff rendered with labels like `[P[0], Z[0,1]]`.
pub fn mismatched_families(entries: &[String]) -> BTreeSet<(String, String)> {
    entries
        .iter()
        .map(|br| {
            let inner = br.trim_start_matches('[').trim_end_matches(']');
            let fams: Vec<String> = split_top(inner)
                .iter()
                .map(|l| l.split(['[', '.']).next().unwrap().to_string())
                .collect();
            let (a, b) = (fams[0].clone(), fams[1].clone());
            if a <= b {
                (a, b)
            } else {
                (b, a)
            }
        })
        .collect()
}

fn split_top(s: &str) -> Vec<String> {
    let mut depth = 0;
    let mut out = vec![String::new()];
    for ch in s.chars() {
        match ch {
            '[' => depth += 1,
            ']' => depth -= 1,
            ',' if depth == 0 => {
                out.push(String::new());
                continue;
            }
            _ => {}
        }
        out.last_mut().unwrap().push(ch);
    }
    out.into_iter().map(|x| x.trim().to_string()).collect()
}

pub fn lbl(f: Family, ind: &[usize]) -> String {
    label(f, ind)
}
