use rayon::prelude::*;
use serde::Serialize;

use super::{LinComb, SuperAlgebra};
use crate::scalars::LaurentScalar;

/// A basis triple on which the graded Jacobi expression does not vanish.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct JacobiViolation {
    pub a: String,
    pub b: String,
    pub c: String,
    pub residual: String,
}

/// `(−1)^{|a||c|}[a,[b,c]] + (−1)^{|b||a|}[b,[c,a]] + (−1)^{|c||b|}[c,[a,b]]`
/// on basis generators.
pub fn jacobi_expression(alg: &SuperAlgebra, a: usize, b: usize, c: usize) -> LinComb {
    let (pa, pb, pc) = (alg.parity(a), alg.parity(b), alg.parity(c));
    let mut out = LinComb::zero();
    let terms = [(a, b, c, pa.sign(pc)), (b, c, a, pb.sign(pa)), (c, a, b, pc.sign(pb))];
    for (x, y, z, s) in terms {
        let inner = alg.bracket_basis(y, z);
        if inner.is_zero() {
            continue;
        }
        out.add_scaled(&alg.bracket_left(x, inner), &LaurentScalar::int(s));
    }
    out
}

/// Evaluates the graded Jacobi identity on every triple `a ≤ b ≤ c`, which
/// covers all triples by graded cyclicity and antisymmetry. The result is
/// empty iff the identity holds exactly.
pub fn super_jacobi_residual(alg: &SuperAlgebra) -> Vec<JacobiViolation> {
    let n = alg.dim();
    let mut out: Vec<JacobiViolation> = (0..n)
        .into_par_iter()
        .flat_map_iter(|a| {
            let mut local = Vec::new();
            for b in a..n {
                for c in b..n {
                    let r = jacobi_expression(alg, a, b, c);
                    if !r.is_zero() {
                        local.push(JacobiViolation {
                            a: alg.label(a),
                            b: alg.label(b),
                            c: alg.label(c),
                            residual: alg.render(&r),
                        });
                    }
                }
            }
            local
        })
        .collect();
    out.sort_by(|x, y| (&x.a, &x.b, &x.c).cmp(&(&y.a, &y.b, &y.c)));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::superalg::{AlgebraBuilder, Family, Generator};

    fn so3(mutated: bool) -> SuperAlgebra {
        let mut b = AlgebraBuilder::new("so3");
        for a in 0..3u8 {
            b.add_generator(Generator::new(Family::J, &[a]));
        }
        for (x, y, z) in [(0, 1, 2), (1, 2, 0), (2, 0, 1)] {
            // the mutation moves [J0,J1] onto J0 instead of J2
            let target = if mutated && z == 2 { 0 } else { z };
            b.set(x, y, LinComb::term(target, LaurentScalar::i()));
        }
        b.finish().unwrap()
    }

    #[test]
    fn clean_algebra_has_no_violations() {
        assert!(super_jacobi_residual(&so3(false)).is_empty());
    }

    #[test]
    fn flipped_constant_is_detected() {
        let v = super_jacobi_residual(&so3(true));
        assert!(!v.is_empty());
        assert!(v.iter().any(|x| x.a == "J[0]" && x.b == "J[1]" && x.c == "J[2]"));
    }

    #[test]
    fn odd_square_needs_graded_signs() {
        // {Q,Q} = P, P central: Jacobi holds only with graded signs
        let mut b = AlgebraBuilder::new("susy-qm");
        let q = b.add_generator(Generator::new(Family::Q, &[0]));
        let p = b.add_generator(Generator::new(Family::P, &[0]));
        b.set(q, q, LinComb::basis(p));
        let alg = b.finish().unwrap();
        assert!(super_jacobi_residual(&alg).is_empty());
    }
}
