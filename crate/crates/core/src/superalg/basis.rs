use std::collections::BTreeMap;

use rayon::prelude::*;

use super::{AlgebraError, Generator, LinComb, SuperAlgebra};
use crate::scalars::{LaurentScalar, Rational};

/// Invertible, grading-preserving redefinition `g′_i = Σ_j A_ij g_j`.
#[derive(Clone, Debug)]
pub struct BasisMap {
    new_generators: Vec<Generator>,
    matrix: Vec<LinComb>,
    inverse: Vec<LinComb>,
}

/// Element of the fraction field of Laurent scalars. Monomial denominators
/// are absorbed into the numerator immediately, so in practice most values
/// stay with `den = 1`.
#[derive(Clone, Debug)]
struct Frac {
    num: LaurentScalar,
    den: LaurentScalar,
}

impl Frac {
    fn new(num: LaurentScalar, den: LaurentScalar) -> Frac {
        if num.is_zero() {
            return Frac::from(LaurentScalar::zero());
        }
        if den.is_monomial() {
            let inv = den.invert_monomial().expect("monomial is invertible");
            return Frac::from(&num * &inv);
        }
        if let Some(q) = num.div_exact(&den) {
            return Frac::from(q);
        }
        Frac { num, den }
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn is_monomial(&self) -> bool {
        self.den.is_one() && self.num.is_monomial()
    }

    fn add(&self, o: &Frac) -> Frac {
        if self.den == o.den {
            return Frac::new(&self.num + &o.num, self.den.clone());
        }
        Frac::new(&(&self.num * &o.den) + &(&o.num * &self.den), &self.den * &o.den)
    }

    fn neg(&self) -> Frac {
        Frac {
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    fn mul(&self, o: &Frac) -> Frac {
        Frac::new(&self.num * &o.num, &self.den * &o.den)
    }

    fn recip(&self) -> Frac {
        Frac::new(self.den.clone(), self.num.clone())
    }

    fn into_laurent(self) -> Option<LaurentScalar> {
        if self.den.is_one() {
            Some(self.num)
        } else {
            self.num.div_exact(&self.den)
        }
    }
}

impl From<LaurentScalar> for Frac {
    fn from(num: LaurentScalar) -> Frac {
        Frac {
            num,
            den: LaurentScalar::one(),
        }
    }
}

type SparseRow = BTreeMap<usize, Frac>;

fn axpy(target: &mut SparseRow, f: &Frac, src: &SparseRow) {
    for (k, v) in src {
        let add = v.mul(f);
        let slot = target.entry(*k).or_insert_with(|| Frac::from(LaurentScalar::zero()));
        *slot = slot.add(&add);
        if slot.is_zero() {
            target.remove(k);
        }
    }
}

/// Exact Gauss–Jordan inverse of the square matrix whose rows are `rows`.
/// Monomial pivots are preferred; `names` labels columns for error reports.
fn invert(rows: &[LinComb], names: &[String]) -> Result<Vec<LinComb>, AlgebraError> {
    let n = rows.len();
    let mut aug: Vec<SparseRow> = rows
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row: SparseRow = r.iter().map(|(k, c)| (*k, Frac::from(c.clone()))).collect();
            row.insert(n + i, Frac::from(LaurentScalar::one()));
            row
        })
        .collect();
    for col in 0..n {
        let candidates: Vec<usize> = (col..n).filter(|&r| aug[r].contains_key(&col)).collect();
        let pivot = candidates
            .iter()
            .copied()
            .find(|&r| aug[r][&col].is_monomial())
            .or_else(|| candidates.first().copied())
            .ok_or_else(|| AlgebraError::SingularMap {
                pivot: names.get(col).cloned().unwrap_or_else(|| format!("#{col}")),
            })?;
        aug.swap(col, pivot);
        let inv = aug[col][&col].recip();
        let scaled: SparseRow = aug[col].iter().map(|(k, v)| (*k, v.mul(&inv))).collect();
        aug[col] = scaled;
        let prow = aug[col].clone();
        for (r, row) in aug.iter_mut().enumerate() {
            if r == col {
                continue;
            }
            if let Some(f) = row.get(&col).cloned() {
                axpy(row, &f.neg(), &prow);
            }
        }
    }
    aug.into_iter()
        .enumerate()
        .map(|(i, row)| {
            let mut lc = LinComb::zero();
            for (k, v) in row {
                if k < n {
                    continue;
                }
                let c = v
                    .into_laurent()
                    .ok_or_else(|| AlgebraError::NonLaurentInverse(names.get(i).cloned().unwrap_or_default()))?;
                lc.add_term(k - n, c);
            }
            Ok(lc)
        })
        .collect()
}

impl BasisMap {
    /// Builds the map, checking grading, computing the exact inverse and
    /// verifying `A·A⁻¹ = 1`. Missing mass dimensions of the new generators
    /// are inferred from the rows when every term agrees.
    pub fn new(
        old: &[Generator],
        mut new_generators: Vec<Generator>,
        rows: Vec<LinComb>,
    ) -> Result<Self, AlgebraError> {
        if new_generators.len() != rows.len() || rows.len() != old.len() {
            return Err(AlgebraError::DimensionMismatch {
                left: old.len(),
                right: rows.len().min(new_generators.len()),
            });
        }
        for (g, row) in new_generators.iter_mut().zip(&rows) {
            if row.max_index().is_some_and(|k| k >= old.len()) {
                return Err(AlgebraError::UnknownGenerator(format!("row of {}", g.label())));
            }
            if row.iter().any(|(k, _)| old[*k].parity != g.parity) {
                return Err(AlgebraError::GradingViolation { generator: g.label() });
            }
            if g.massdim.is_none() {
                g.massdim = infer_massdim(old, row);
            }
        }
        let names: Vec<String> = old.iter().map(|g| g.label()).collect();
        let inverse = invert(&rows, &names)?;
        let map = BasisMap {
            new_generators,
            matrix: rows,
            inverse,
        };
        map.verify()?;
        Ok(map)
    }

    pub fn identity(alg: &SuperAlgebra) -> Self {
        let rows: Vec<LinComb> = (0..alg.dim()).map(LinComb::basis).collect();
        BasisMap {
            new_generators: alg.generators().to_vec(),
            matrix: rows.clone(),
            inverse: rows,
        }
    }

    pub fn dim(&self) -> usize {
        self.matrix.len()
    }

    pub fn new_generators(&self) -> &[Generator] {
        &self.new_generators
    }

    /// Row `i`: the new generator `g′_i` in the old basis.
    pub fn row(&self, i: usize) -> &LinComb {
        &self.matrix[i]
    }

    /// Row `j` of the inverse: the old generator `g_j` in the new basis.
    pub fn inverse_row(&self, j: usize) -> &LinComb {
        &self.inverse[j]
    }

    fn verify(&self) -> Result<(), AlgebraError> {
        for (i, row) in self.matrix.iter().enumerate() {
            let mut back = LinComb::zero();
            for (j, c) in row.iter() {
                back.add_scaled(&self.inverse[*j], c);
            }
            if back != LinComb::basis(i) {
                return Err(AlgebraError::SingularMap {
                    pivot: format!("multiply-back failed at {}", self.new_generators[i].label()),
                });
            }
        }
        Ok(())
    }

    /// Rewrites an old-basis combination in the new basis.
    pub fn to_new(&self, lc: &LinComb) -> LinComb {
        let mut out = LinComb::zero();
        for (j, c) in lc.iter() {
            out.add_scaled(&self.inverse[*j], c);
        }
        out
    }
}

fn infer_massdim(old: &[Generator], row: &LinComb) -> Option<Rational> {
    let mut dims = row.iter().map(|(k, c)| Some(c.mass_dimension()? + old[*k].massdim?));
    let first = dims.next()??;
    for d in dims {
        if d? != first {
            return None;
        }
    }
    Some(first)
}

/// Transforms the structure constants: `[g′_i, g′_j] = A_ia A_jb f_ab^c (A⁻¹)_c·`.
pub fn change_basis(alg: &SuperAlgebra, map: &BasisMap) -> Result<SuperAlgebra, AlgebraError> {
    if map.dim() != alg.dim() {
        return Err(AlgebraError::DimensionMismatch {
            left: alg.dim(),
            right: map.dim(),
        });
    }
    let n = map.dim();
    let entries: Vec<((usize, usize), LinComb)> = (0..n)
        .into_par_iter()
        .flat_map_iter(|i| {
            (i..n)
                .map(|j| {
                    let mut old = LinComb::zero();
                    for (a, ca) in map.row(i).iter() {
                        let left = alg.bracket_left(*a, map.row(j));
                        old.add_scaled(&left, ca);
                    }
                    ((i, j), map.to_new(&old))
                })
                .collect::<Vec<_>>()
        })
        .collect();
    let mut out = SuperAlgebra::from_entries(
        alg.name().to_string(),
        map.new_generators().to_vec(),
        entries,
        alg.is_complex(),
    )?;
    for (k, v) in alg.params() {
        out.set_param(k.clone(), v.clone());
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::GaussianRational;
    use crate::superalg::{super_jacobi_residual, AlgebraBuilder, Family};

    fn heisenberg() -> SuperAlgebra {
        let mut b = AlgebraBuilder::new("h");
        let x = b.add_generator(Generator::new(Family::P, &[0]).with_massdim(Rational::ZERO));
        let y = b.add_generator(Generator::new(Family::P, &[1]).with_massdim(Rational::ZERO));
        let z = b.add_generator(Generator::new(Family::Z, &[0, 1]).with_massdim(Rational::ZERO));
        b.set(x, y, LinComb::term(z, LaurentScalar::i()));
        b.finish().unwrap()
    }

    #[test]
    fn identity_map_is_noop() {
        let h = heisenberg();
        assert_eq!(change_basis(&h, &BasisMap::identity(&h)).unwrap(), h);
    }

    #[test]
    fn scaling_is_covariant() {
        let h = heisenberg();
        let r = LaurentScalar::r_pow(Rational::from_int(-1));
        let rows = vec![LinComb::term(0, r.clone()), LinComb::basis(1), LinComb::basis(2)];
        let map = BasisMap::new(
            h.generators(),
            h.generators()
                .to_vec()
                .into_iter()
                .map(|mut g| {
                    g.massdim = None;
                    g
                })
                .collect(),
            rows,
        )
        .unwrap();
        let h2 = change_basis(&h, &map).unwrap();
        assert_eq!(*h2.bracket_basis(0, 1), LinComb::term(2, &LaurentScalar::i() * &r));
        assert_eq!(h2.massdim(0), Some(Rational::ONE));
        assert!(super_jacobi_residual(&h2).is_empty());
    }

    #[test]
    fn non_monomial_pivots_invert() {
        let h = heisenberg();
        let one_plus_r = LaurentScalar::one() + LaurentScalar::r_pow(Rational::ONE);
        let rows = vec![
            LinComb::from_terms([(0, one_plus_r.clone()), (1, LaurentScalar::int(1))]),
            LinComb::from_terms([
                (0, LaurentScalar::int(1)),
                (1, LaurentScalar::constant(GaussianRational::ZERO)),
            ]),
            LinComb::basis(2),
        ];
        let map = BasisMap::new(h.generators(), h.generators().to_vec(), rows).unwrap();
        assert_eq!(
            map.inverse_row(1),
            &LinComb::from_terms([(0, LaurentScalar::one()), (1, -one_plus_r)])
        );
    }

    #[test]
    fn singular_and_grading_errors() {
        let h = heisenberg();
        let rows = vec![LinComb::basis(0), LinComb::basis(0), LinComb::basis(2)];
        assert!(matches!(
            BasisMap::new(h.generators(), h.generators().to_vec(), rows),
            Err(AlgebraError::SingularMap { .. })
        ));
        let mut b = AlgebraBuilder::new("s");
        b.add_generator(Generator::new(Family::Q, &[0]));
        b.add_generator(Generator::new(Family::P, &[0]));
        let s = b.finish().unwrap();
        let rows = vec![LinComb::basis(1), LinComb::basis(0)];
        assert!(matches!(
            BasisMap::new(s.generators(), s.generators().to_vec(), rows),
            Err(AlgebraError::GradingViolation { .. })
        ));
    }
}
