use serde::Serialize;

use super::{change_basis, AlgebraBuilder, AlgebraError, BasisMap, Generator, LinComb, SuperAlgebra, Tag};
use crate::scalars::{GaussianRational, LaurentScalar, Rational, ScalarError};

/// Disjoint union with vanishing cross brackets.
pub fn direct_sum(a: &SuperAlgebra, b: &SuperAlgebra) -> Result<SuperAlgebra, AlgebraError> {
    let mut out = AlgebraBuilder::new(format!("{} + {}", a.name(), b.name()));
    out.complex(a.is_complex() || b.is_complex());
    for g in a.generators().iter().chain(b.generators()) {
        out.add_generator(g.clone());
    }
    let shift = a.dim();
    for (i, j, lc) in a.brackets() {
        out.set(i, j, lc.clone());
    }
    for (i, j, lc) in b.brackets() {
        out.set(i + shift, j + shift, lc.reindex(|k| k + shift));
    }
    out.finish()
}

/// The hermitian-conjugate algebra: generators `g†` with
/// `[g_i†, g_j†] = −c̄ g_k†` when either is even and `{g_i†, g_j†} = c̄ g_k†`
/// for two odd generators.
pub fn adjoint(alg: &SuperAlgebra) -> Result<SuperAlgebra, AlgebraError> {
    if !alg.is_complex() {
        return Err(AlgebraError::NonComplexInput(alg.name().to_string()));
    }
    let mut out = AlgebraBuilder::new(format!("{}^dagger", alg.name()));
    out.complex(true);
    for g in alg.generators() {
        out.add_generator(conjugate_generator(g));
    }
    for (i, j, lc) in alg.brackets() {
        let both_odd = alg.parity(i).is_odd() && alg.parity(j).is_odd();
        let conj = lc.map_coeffs(|c| if both_odd { c.conj() } else { -c.conj() });
        out.set(i, j, conj);
    }
    out.finish()
}

fn conjugate_generator(g: &Generator) -> Generator {
    let mut h = g.clone();
    match g.family.conjugate() {
        Some(f) => h.family = f,
        None => {
            h.tag = match g.tag {
                Tag::Plain => Tag::Conj,
                Tag::Conj => Tag::Plain,
                t => t,
            }
        }
    }
    h
}

/// Real form of twice the dimension: `g⁽¹⁾ = ½(g + g†)`, `g⁽²⁾ = −(i/2)(g − g†)`,
/// computed inside `alg ⊕ alg†`.
pub fn realify(alg: &SuperAlgebra) -> Result<SuperAlgebra, AlgebraError> {
    let conj = adjoint(alg)?;
    let sum = direct_sum(alg, &conj)?;
    let n = alg.dim();
    let half = LaurentScalar::ratio(1, 2);
    let mhalf_i = LaurentScalar::constant(GaussianRational::imag(Rational::new(-1, 2)));
    let mut gens = Vec::with_capacity(2 * n);
    let mut rows = Vec::with_capacity(2 * n);
    for (k, g) in alg.generators().iter().enumerate() {
        gens.push(g.clone().with_tag(Tag::Re));
        rows.push(LinComb::from_terms([(k, half.clone()), (k + n, half.clone())]));
        gens.push(g.clone().with_tag(Tag::Im));
        rows.push(LinComb::from_terms([(k, mhalf_i.clone()), (k + n, -mhalf_i.clone())]));
    }
    let map = BasisMap::new(sum.generators(), gens, rows)?;
    let real = change_basis(&sum, &map)?;
    let mut b = AlgebraBuilder::from_algebra(&real);
    b.complex(false);
    Ok(b.finish()?.with_name(format!("realify({})", alg.name())))
}

/// Applies the R → ∞ limit to every structure constant.
pub fn contract(alg: &SuperAlgebra) -> Result<SuperAlgebra, AlgebraError> {
    let mut b = AlgebraBuilder::new(format!("lim {}", alg.name()));
    b.complex(alg.is_complex());
    for (k, v) in alg.params() {
        b.param(k.clone(), v.clone());
    }
    for g in alg.generators() {
        b.add_generator(g.clone());
    }
    for (i, j, lc) in alg.brackets() {
        let mut lim = LinComb::zero();
        for (k, c) in lc.iter() {
            match c.limit_r_infinity() {
                Ok(v) => lim.add_term(*k, v),
                Err(ScalarError::Divergent { witness }) => {
                    return Err(AlgebraError::Divergent {
                        left: alg.label(i),
                        right: alg.label(j),
                        witness: format!("{witness} on {}", alg.label(*k)),
                    })
                }
                Err(e) => return Err(e.into()),
            }
        }
        b.set(i, j, lim);
    }
    b.finish()
}

/// Generator identification `a_i ↔ s_i · b_σ(i)` used by [`compare`].
#[derive(Clone, Debug)]
pub struct Correspondence {
    map: Vec<(usize, LaurentScalar)>,
}

impl Correspondence {
    pub fn identity(n: usize) -> Self {
        Correspondence {
            map: (0..n).map(|k| (k, LaurentScalar::one())).collect(),
        }
    }

    /// Matches generators with equal labels.
    pub fn by_label(a: &SuperAlgebra, b: &SuperAlgebra) -> Result<Self, AlgebraError> {
        let map = a
            .generators()
            .iter()
            .map(|g| {
                let l = g.label();
                b.index_of(&l)
                    .map(|k| (k, LaurentScalar::one()))
                    .ok_or(AlgebraError::BadCorrespondence(format!("{l} has no partner")))
            })
            .collect::<Result<_, _>>()?;
        Ok(Correspondence { map })
    }

    pub fn from_pairs(map: Vec<(usize, LaurentScalar)>) -> Self {
        Correspondence { map }
    }

    /// Sets the scale of `a_i`.
    pub fn scale(&mut self, i: usize, s: LaurentScalar) -> &mut Self {
        self.map[i].1 = s;
        self
    }

    /// Scales every generator of `a` matching `pred`.
    pub fn scale_where<F: Fn(&Generator) -> bool>(&mut self, a: &SuperAlgebra, pred: F, s: LaurentScalar) -> &mut Self {
        for (i, g) in a.generators().iter().enumerate() {
            if pred(g) {
                self.map[i].1 = s.clone();
            }
        }
        self
    }

    pub fn target(&self, i: usize) -> (usize, &LaurentScalar) {
        (self.map[i].0, &self.map[i].1)
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    /// `b_l ↔ s⁻¹ a_i`; scales must be monomials.
    pub fn inverse(&self) -> Result<Self, AlgebraError> {
        let mut map = vec![(usize::MAX, LaurentScalar::zero()); self.map.len()];
        for (i, (l, s)) in self.map.iter().enumerate() {
            if *l >= map.len() || map[*l].0 != usize::MAX {
                return Err(AlgebraError::BadCorrespondence("not a bijection".into()));
            }
            map[*l] = (i, s.invert_monomial()?);
        }
        Ok(Correspondence { map })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DiffEntry {
    pub bracket: String,
    pub left: String,
    pub right: String,
}

/// Brackets whose constants differ under a correspondence, rendered in the
/// second algebra's basis.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Diff {
    pub entries: Vec<DiffEntry>,
}

impl Diff {
    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }
}

/// Compares structure constants of `a` and `b` under `corr`.
pub fn compare(a: &SuperAlgebra, b: &SuperAlgebra, corr: &Correspondence) -> Result<Diff, AlgebraError> {
    if a.dim() != b.dim() || corr.len() != a.dim() {
        return Err(AlgebraError::DimensionMismatch {
            left: a.dim(),
            right: b.dim(),
        });
    }
    let mut seen = vec![false; b.dim()];
    for i in 0..a.dim() {
        let (l, s) = corr.target(i);
        if l >= b.dim() || std::mem::replace(&mut seen[l], true) {
            return Err(AlgebraError::BadCorrespondence(format!(
                "{} maps outside a bijection",
                a.label(i)
            )));
        }
        if a.parity(i) != b.parity(l) || s.is_zero() {
            return Err(AlgebraError::BadCorrespondence(format!(
                "{} ↔ {} breaks grading",
                a.label(i),
                b.label(l)
            )));
        }
    }
    let to_b = |lc: &LinComb| {
        let mut out = LinComb::zero();
        for (k, c) in lc.iter() {
            let (l, s) = corr.target(*k);
            out.add_term(l, c * s);
        }
        out
    };
    let mut entries = Vec::new();
    for i in 0..a.dim() {
        for j in i..a.dim() {
            let (li, si) = corr.target(i);
            let (lj, sj) = corr.target(j);
            let left = to_b(a.bracket_basis(i, j));
            let right = b.bracket_basis(li, lj).scale(&(si * sj));
            if left != right {
                entries.push(DiffEntry {
                    bracket: format!("[{}, {}]", a.label(i), a.label(j)),
                    left: b.render(&left),
                    right: b.render(&right),
                });
            }
        }
    }
    Ok(Diff { entries })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DimensionViolation {
    pub bracket: String,
    pub detail: String,
}

/// Checks `[X] + [Y] = [c] + [W]` for every monomial term `c·W` of `[X,Y]`,
/// with `[c] = expM − expR`.
pub fn dimension_check(alg: &SuperAlgebra) -> Vec<DimensionViolation> {
    let mut out = Vec::new();
    for (k, g) in alg.generators().iter().enumerate() {
        if g.massdim.is_none() {
            out.push(DimensionViolation {
                bracket: alg.label(k),
                detail: "mass dimension unassigned".into(),
            });
        }
    }
    if !out.is_empty() {
        return out;
    }
    for (i, j, lc) in alg.brackets() {
        let lhs = alg.massdim(i).unwrap() + alg.massdim(j).unwrap();
        for (k, c) in lc.iter() {
            for (mono, _) in c.terms() {
                let rhs = mono.mass_dimension() + alg.massdim(*k).unwrap();
                if rhs != lhs {
                    out.push(DimensionViolation {
                        bracket: format!("[{}, {}]", alg.label(i), alg.label(j)),
                        detail: format!("term {mono} {} has dimension {rhs}, expected {lhs}", alg.label(*k)),
                    });
                }
            }
        }
    }
    out
}

/// True when the span of `keep` is closed under the bracket.
pub fn is_closed(alg: &SuperAlgebra, keep: &[usize]) -> bool {
    let mut inside = vec![false; alg.dim()];
    keep.iter().for_each(|&k| inside[k] = true);
    keep.iter().all(|&i| {
        keep.iter()
            .all(|&j| alg.bracket_basis(i, j).iter().all(|(k, _)| inside[*k]))
    })
}

/// Restriction to a closed subset of generators, in the given order.
pub fn subalgebra(alg: &SuperAlgebra, keep: &[usize], name: &str) -> Result<SuperAlgebra, AlgebraError> {
    if !is_closed(alg, keep) {
        let labels: Vec<String> = keep.iter().map(|&k| alg.label(k)).collect();
        return Err(AlgebraError::NotClosed(labels.join(", ")));
    }
    let mut pos = vec![usize::MAX; alg.dim()];
    for (p, &k) in keep.iter().enumerate() {
        pos[k] = p;
    }
    let mut b = AlgebraBuilder::new(name);
    b.complex(alg.is_complex());
    for &k in keep {
        b.add_generator(alg.generator(k).clone());
    }
    for (p, &i) in keep.iter().enumerate() {
        for (q, &j) in keep.iter().enumerate().skip(p) {
            b.set(p, q, alg.bracket_basis(i, j).reindex(|k| pos[k]));
        }
    }
    b.finish()
}

/// Removes generators that are central and never produced by any bracket.
/// Returns the pruned algebra and the labels removed.
pub fn drop_decoupled(alg: &SuperAlgebra) -> (SuperAlgebra, Vec<String>) {
    let (keep, dropped): (Vec<usize>, Vec<usize>) =
        (0..alg.dim()).partition(|&k| !(alg.is_central(k) && !alg.appears_in_image(k)));
    if dropped.is_empty() {
        return (alg.clone(), Vec::new());
    }
    let mut out = subalgebra(alg, &keep, alg.name()).expect("removing decoupled generators keeps closure");
    for (k, v) in alg.params() {
        out.set_param(k.clone(), v.clone());
    }
    (out, dropped.into_iter().map(|k| alg.label(k)).collect())
}
