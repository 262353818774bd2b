//! Reduction of the ordinary correspondence against the mod `ell` one.

use serde::Serialize;

use super::table::{as_decimal, theta_dim, validate_ell, Check};
use crate::characters::{brauer_decompose_dihedral, DihedralIrrep};
use crate::error::{Error, Result};
use crate::field_tower::PrimePower;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReductionRow {
    pub pi: DihedralIrrep,
    /// Mod `ell` constituents of the reduction of `pi`, with multiplicity.
    pub reduction: Vec<(DihedralIrrep, u32)>,
    #[serde(serialize_with = "as_decimal")]
    pub ordinary_dim: u128,
    #[serde(serialize_with = "as_decimal")]
    pub mod_ell_dim: u128,
    /// `dim Theta_ell(reduction) - dim Theta(pi)`.
    #[serde(serialize_with = "as_decimal")]
    pub deficit: u128,
    /// `pi` comes from a character trivial on `mu_r` but not on `mu_{ell^a}`.
    pub exceptional: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ComparisonReport {
    pub n: u32,
    pub q: u32,
    pub ell: u32,
    pub rows: Vec<ReductionRow>,
    pub checks: Vec<Check>,
}

/// Compares `dim Theta(pi)` with `dim Theta_ell` of the semisimplified
/// reduction of `pi`, for every ordinary irreducible `pi`.
pub fn compare_semisimplifications(n: u32, q: u32, ell: u32) -> Result<ComparisonReport> {
    if n < 2 {
        return Err(Error::InvalidArgument("theta tables need n >= 2".into()));
    }
    PrimePower::from_q(q)?;
    let split = validate_ell(q, ell)?;
    let mut rows = Vec::new();
    let mut checks = Vec::new();
    for pi in DihedralIrrep::all(q + 1) {
        let reduction = brauer_decompose_dihedral(q, ell, &pi)?;
        let ordinary_dim = theta_dim(q, n, &pi)?;
        let mut mod_ell_dim = 0;
        for (tau, mult) in &reduction {
            mod_ell_dim += *mult as u128 * theta_dim(q, n, tau)?;
        }
        let chi = pi.character();
        let exceptional = split.divides_q_plus_one()
            && split.prime_to_ell_part_trivial(&chi)
            && !split.ell_part_trivial(&chi);
        let deficit = mod_ell_dim.checked_sub(ordinary_dim).ok_or_else(|| {
            Error::Unsupported(format!("reduction of Theta({pi}) is larger than its target"))
        })?;
        let reduced_dim: u32 = reduction.iter().map(|(t, k)| t.dim() * k).sum();
        checks.push(Check::new(format!("reduction of {pi} keeps dimension"), pi.dim(), reduced_dim));
        checks.push(Check::new(
            format!("deficit of {pi}"),
            if exceptional { "positive" } else { "0" },
            if deficit == 0 { "0" } else { "positive" },
        ));
        rows.push(ReductionRow {
            pi,
            reduction,
            ordinary_dim,
            mod_ell_dim,
            deficit,
            exceptional,
        });
    }
    Ok(ComparisonReport {
        n,
        q,
        ell,
        rows,
        checks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exceptional_family_only() {
        let r = compare_semisimplifications(2, 2, 3).unwrap();
        assert!(r.checks.iter().all(|c| c.pass), "{:?}", r.checks);
        let sigma = r.rows.iter().find(|row| row.pi.dim() == 2).unwrap();
        assert!(sigma.exceptional);
        assert_eq!((sigma.ordinary_dim, sigma.mod_ell_dim, sigma.deficit), (5, 6, 1));

        let r = compare_semisimplifications(2, 3, 5).unwrap();
        assert!(r.rows.iter().all(|row| row.deficit == 0 && !row.exceptional));

        let r = compare_semisimplifications(3, 5, 3).unwrap();
        assert!(r.checks.iter().all(|c| c.pass), "{:?}", r.checks);
        let exceptional: Vec<String> =
            r.rows.iter().filter(|row| row.exceptional).map(|row| row.pi.to_string()).collect();
        assert_eq!(exceptional, vec!["sigma_2"]);
    }
}
