//! Lefschetz traces assembled from enumerated fixed-point counts.

use std::sync::Arc;

use num::{BigInt, BigRational};
use rayon::prelude::*;
use serde::Serialize;

use super::fixed_points::{fixed_points_surface, EndoSpec};
use crate::cyclotomic::{
    evaluate_additive, evaluate_central, gauss_sum, AdditiveCharacter, CentralCharacter,
    CycNumber, CyclotomicField,
};
use crate::error::{Error, Result};
use crate::field_tower::{FieldElement, Level, TowerContext};

/// Closed-form number of fixed points on the surface.
pub fn closed_form_fixed_points(ctx: &TowerContext, endo: &EndoSpec) -> Result<u64> {
    let q = ctx.q() as u64;
    if !endo.with_u {
        return Ok(if endo.eta.is_zero() {
            (q + 1) * (q * q + 1)
        } else {
            q * q + q + 1
        });
    }
    if endo.eta.is_zero() {
        return Ok(q * q + q + 1);
    }
    let nu = CentralCharacter::quadratic(ctx.q() + 1)?;
    let nu_sign = ctx.pow(&endo.zeta, nu.k as u64) == ctx.one(Level::Q2);
    let minus_eta = ctx.neg(&endo.eta);
    let sign = ctx.legendre_symbol(&minus_eta)? * if nu_sign { 1 } else { -1 };
    Ok(if sign == 1 { 2 * q * q + q + 1 } else { q + 1 })
}

#[derive(Clone, Debug, Serialize)]
pub struct GridRow {
    pub eta: u32,
    pub zeta: u32,
    /// Exponent of `zeta` against the fixed generator of `mu_{q+1}`.
    pub zeta_log: u32,
    pub with_u: bool,
    pub total: usize,
    pub sigma_partition: [usize; 3],
    pub verified: usize,
    pub transversal: usize,
    pub expected: u64,
}

impl GridRow {
    pub fn matches(&self) -> bool {
        self.total as u64 == self.expected
            && self.verified == self.total
            && self.transversal == self.total
    }
}

/// Fixed-point counts for every `(eta, zeta)` in `F_q x mu_{q+1}`, ordered by
/// `(eta, zeta)` encodings. Rows are computed in parallel.
pub fn fixed_point_grid(ctx: &TowerContext, with_u: bool) -> Result<Vec<GridRow>> {
    if with_u && ctx.p() == 2 {
        return Err(Error::Characteristic2("quadratic character in the closed form"));
    }
    let mu = ctx.enumerate_mu(ctx.q() + 1)?;
    let pairs: Vec<(FieldElement, FieldElement)> = ctx
        .elements(Level::Q)
        .into_iter()
        .flat_map(|eta| mu.iter().map(move |&zeta| (eta, zeta)))
        .collect();
    pairs
        .par_iter()
        .map(|&(eta, zeta)| {
            let endo = EndoSpec::new(ctx, eta, zeta, with_u)?;
            let report = fixed_points_surface(&endo, ctx, false)?;
            Ok(GridRow {
                eta: eta.code(),
                zeta: zeta.code(),
                zeta_log: ctx.discrete_log_mu(&zeta, ctx.q() + 1)?,
                with_u,
                total: report.total,
                sigma_partition: report.sigma_partition,
                verified: report.verified,
                transversal: report.transversal,
                expected: closed_form_fixed_points(ctx, &endo)?,
            })
        })
        .collect()
}

fn require_nontrivial(psi: &AdditiveCharacter) -> Result<()> {
    if psi.is_trivial() {
        Err(Error::InvalidArgument("the additive character must be nontrivial".into()))
    } else {
        Ok(())
    }
}

/// Trace on the compactly supported cohomology of the plane with the
/// pulled-back Artin-Schreier sheaf, Tate-twisted once:
/// `q^{-2} sum_eta psi(-eta) #Fix`.
pub fn sheaf_trace_a2(
    zeta: &FieldElement,
    with_u: bool,
    psi: &AdditiveCharacter,
    ctx: &TowerContext,
    field: &Arc<CyclotomicField>,
) -> Result<CycNumber> {
    require_nontrivial(psi)?;
    let mut acc = CycNumber::zero(field);
    for eta in ctx.elements(Level::Q) {
        let endo = EndoSpec::new(ctx, eta, *zeta, with_u)?;
        let fix = fixed_points_surface(&endo, ctx, false)?.total;
        let weight = evaluate_additive(ctx, field, psi, &ctx.neg(&eta))?;
        acc = &acc + &weight.scale(&BigRational::from_integer(BigInt::from(fix)));
    }
    Ok(acc.div_power(ctx.q(), 2))
}

/// `(q+1)^{-1} sum_zeta nu(zeta) T_u(zeta)`, with `T_u` the plane trace of the
/// unipotent twist.
pub fn nu_weighted_trace(
    psi: &AdditiveCharacter,
    ctx: &TowerContext,
    field: &Arc<CyclotomicField>,
) -> Result<CycNumber> {
    let parts = plane_traces(psi, ctx, field)?;
    let total: CycNumber = parts.iter().map(|(nu, tu, _)| nu * tu).sum();
    Ok(total.scale(&BigRational::new(1.into(), (ctx.q() as i64 + 1).into())))
}

/// For every `zeta`: `(nu(zeta), T_u(zeta), T(zeta))`.
fn plane_traces(
    psi: &AdditiveCharacter,
    ctx: &TowerContext,
    field: &Arc<CyclotomicField>,
) -> Result<Vec<(CycNumber, CycNumber, CycNumber)>> {
    if ctx.p() == 2 {
        return Err(Error::Characteristic2("quadratic character of mu_{q+1}"));
    }
    require_nontrivial(psi)?;
    let nu = CentralCharacter::quadratic(ctx.q() + 1)?;
    let mu = ctx.enumerate_mu(ctx.q() + 1)?;
    mu.par_iter()
        .map(|zeta| {
            Ok((
                evaluate_central(ctx, field, &nu, zeta)?,
                sheaf_trace_a2(zeta, true, psi, ctx, field)?,
                sheaf_trace_a2(zeta, false, psi, ctx, field)?,
            ))
        })
        .collect()
}

/// The difference of the two `nu`-isotypic traces at `(u, 1, ..., 1)`,
/// assembled as `(q+1)^{-1} sum_zeta nu(zeta) T_u(zeta) T(zeta)^{n-1}`.
pub fn prop433_discrepancy(
    n: u32,
    psi: &AdditiveCharacter,
    ctx: &TowerContext,
    field: &Arc<CyclotomicField>,
) -> Result<CycNumber> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be positive".into()));
    }
    let parts = plane_traces(psi, ctx, field)?;
    let total: CycNumber = parts
        .iter()
        .map(|(nu, tu, t)| &(nu * tu) * &t.pow(n - 1))
        .sum();
    Ok(total.scale(&BigRational::new(1.into(), (ctx.q() as i64 + 1).into())))
}

/// `q^{n-1} G(psi)`.
pub fn prop433_expected(
    n: u32,
    psi: &AdditiveCharacter,
    ctx: &TowerContext,
    field: &Arc<CyclotomicField>,
) -> Result<CycNumber> {
    let g = gauss_sum(ctx, field, psi)?;
    let factor = BigInt::from(ctx.q()).pow(n.saturating_sub(1));
    Ok(g.scale(&BigRational::from_integer(factor)))
}
