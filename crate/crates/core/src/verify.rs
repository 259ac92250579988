//! Physics classification of contracted algebras.

use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

use crate::builders::{maxwell_algebra, orthogonal};
use crate::superalg::{
    compare, dimension_check, is_closed, subalgebra, super_jacobi_residual, Correspondence, DimensionViolation, Family,
    JacobiViolation, SuperAlgebra,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("algebra has no Maxwell sector (missing {0} generators)")]
    MissingMaxwellSector(&'static str),
}

/// Supercharges counted in Majorana units (four real components each).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SuperchargeTally {
    /// Self-anticommutator contains `(Cγ^μ)P_μ`.
    pub standard: usize,
    /// Self-anticommutator contains `(Cγ^{μν})Z_μν` but no `P_μ`.
    pub exotic: usize,
    /// Neither.
    pub inert: usize,
    /// `Σ` partners, reported separately and not part of the three counts above.
    pub maxwell_partner: usize,
}

/// Key grouping odd generators into Majorana spinors: the family plus the
/// internal index when there is one.
fn spinor_groups(alg: &SuperAlgebra) -> BTreeMap<(Family, Option<u8>), Vec<usize>> {
    let mut groups: BTreeMap<(Family, Option<u8>), Vec<usize>> = BTreeMap::new();
    for (i, g) in alg.generators().iter().enumerate() {
        if g.is_odd() {
            let internal = (g.indices.len() > 1).then(|| g.indices[0]);
            groups.entry((g.family, internal)).or_default().push(i);
        }
    }
    groups
}

pub fn classify_supercharges(alg: &SuperAlgebra) -> Result<SuperchargeTally, VerifyError> {
    let has = |f: Family| alg.generators().iter().any(|g| g.family == f);
    if !has(Family::P) {
        return Err(VerifyError::MissingMaxwellSector("P"));
    }
    if !has(Family::Z) {
        return Err(VerifyError::MissingMaxwellSector("Z"));
    }
    let mut tally = SuperchargeTally::default();
    for ((family, _), members) in spinor_groups(alg) {
        let units = members.len().div_ceil(4);
        if family == Family::Sigma {
            tally.maxwell_partner += units;
            continue;
        }
        let (mut p, mut z) = (false, false);
        for &a in &members {
            for &b in &members {
                for (k, _) in alg.bracket_basis(a, b).iter() {
                    match alg.generator(*k).family {
                        Family::P => p = true,
                        Family::Z => z = true,
                        _ => {}
                    }
                }
            }
        }
        if p {
            tally.standard += units;
        } else if z {
            tally.exotic += units;
        } else {
            tally.inert += units;
        }
    }
    Ok(tally)
}

fn is_internal(f: Family) -> bool {
    matches!(
        f,
        Family::BC
            | Family::Bcentral
            | Family::Bint
            | Family::BD
            | Family::Bminus
            | Family::Bplus
            | Family::Bmixed
            | Family::T0
            | Family::T5
            | Family::Tplus
    )
}

/// Closure data for one internal generator family.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyClosure {
    pub family: String,
    pub dim: usize,
    pub closed: bool,
    pub abelian: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct InternalSummary {
    pub families: Vec<FamilyClosure>,
    /// Closed non-Abelian families with their dimensions.
    pub nonabelian: Vec<(String, usize)>,
    /// Internal generators outside every non-Abelian family.
    pub abelian: usize,
    /// Internal generators commuting with the whole algebra.
    pub central: usize,
    /// Whether the `B_D` family reproduces the orthogonal structure constants.
    pub bd_is_orthogonal: Option<bool>,
}

pub fn internal_symmetry_report(alg: &SuperAlgebra) -> InternalSummary {
    let mut by_family: BTreeMap<Family, Vec<usize>> = BTreeMap::new();
    for (i, g) in alg.generators().iter().enumerate() {
        if is_internal(g.family) {
            by_family.entry(g.family).or_default().push(i);
        }
    }
    let mut out = InternalSummary::default();
    for (family, members) in &by_family {
        let closed = is_closed(alg, members);
        let abelian = members
            .iter()
            .all(|&a| members.iter().all(|&b| alg.bracket_basis(a, b).is_zero()));
        out.families.push(FamilyClosure {
            family: family.symbol().to_string(),
            dim: members.len(),
            closed,
            abelian,
        });
        if closed && !abelian {
            out.nonabelian.push((family.symbol().to_string(), members.len()));
        } else {
            out.abelian += members.len();
        }
        out.central += members.iter().filter(|&&k| alg.is_central(k)).count();
    }
    if let Some(bd) = by_family.get(&Family::BD) {
        let n = bd
            .iter()
            .map(|&k| alg.generator(k).indices[1] as usize)
            .max()
            .unwrap_or(0);
        out.bd_is_orthogonal = Some(
            subalgebra(alg, bd, "BD")
                .ok()
                .and_then(|sub| {
                    let o = orthogonal(n, Family::BD);
                    let corr = Correspondence::by_label(&sub, &o).ok()?;
                    compare(&sub, &o, &corr).ok().map(|d| d.is_empty())
                })
                .unwrap_or(false),
        );
    }
    out
}

/// Whether the `P, M, Z` generators span a copy of the Maxwell algebra with
/// identical labels and constants.
pub fn bosonic_sector_is_maxwell(alg: &SuperAlgebra) -> bool {
    let keep: Vec<usize> = (0..alg.dim())
        .filter(|&i| alg.generator(i).family.is_maxwell_bosonic())
        .collect();
    let Ok(sub) = subalgebra(alg, &keep, "bosonic") else {
        return false;
    };
    let target = maxwell_algebra();
    match Correspondence::by_label(&sub, &target) {
        Ok(corr) => compare(&sub, &target, &corr).map(|d| d.is_empty()).unwrap_or(false),
        Err(_) => false,
    }
}

/// Combined report used by the `verify` command.
#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub name: String,
    pub dim: usize,
    pub jacobi_violations: Vec<JacobiViolation>,
    pub dimension_violations: Vec<DimensionViolation>,
    pub tally: Option<SuperchargeTally>,
    pub tally_error: Option<String>,
    pub bosonic_maxwell: bool,
    pub internal: InternalSummary,
}

impl VerifyReport {
    /// True when Jacobi and dimension checks are clean and the supercharges
    /// could be classified.
    pub fn passed(&self) -> bool {
        self.jacobi_violations.is_empty() && self.dimension_violations.is_empty() && self.tally_error.is_none()
    }
}

pub fn verify_algebra(alg: &SuperAlgebra) -> VerifyReport {
    let all_assigned = alg.generators().iter().all(|g| g.massdim.is_some());
    let (tally, tally_error) = match classify_supercharges(alg) {
        Ok(t) => (Some(t), None),
        Err(e) => (None, Some(e.to_string())),
    };
    VerifyReport {
        name: alg.name().to_string(),
        dim: alg.dim(),
        jacobi_violations: super_jacobi_residual(alg),
        dimension_violations: if all_assigned { dimension_check(alg) } else { Vec::new() },
        tally,
        tally_error,
        bosonic_maxwell: bosonic_sector_is_maxwell(alg),
        internal: internal_symmetry_report(alg),
    }
}
