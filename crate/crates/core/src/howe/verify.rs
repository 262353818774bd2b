//! One entry point running every consistency check for a parameter set.

use serde::Serialize;

use super::compare::compare_semisimplifications;
use super::table::{theta_mod_ell, theta_ordinary, validate_ell, Check, HoweParams};
use crate::characters::{
    dim_mod_ell_unitary, dim_v_isotypic, dim_w_isotypic, o_minus_table, Coefficients,
    IsotypicLabel,
};
use crate::cyclotomic::{
    gauss_sum, value_field, AdditiveCharacter, CentralCharacter, CycNumber,
};
use crate::error::{Error, Result};
use crate::field_tower::{build_tower, Level, PrimePower, TowerContext};
use crate::varieties::{
    count_points, dickson_quotient_count, fixed_point_grid, nu_weighted_trace,
    prop433_discrepancy, prop433_expected, sheaf_trace_a2, CountOptions, QuotientKind,
    VarietyKind, VarietySpec,
};

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub params: HoweParams,
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }
}

fn prefixed(prefix: &str, checks: Vec<Check>) -> impl Iterator<Item = Check> + '_ {
    checks.into_iter().map(move |mut c| {
        c.name = format!("{prefix}: {}", c.name);
        c
    })
}

fn dimension_checks(n: u32, q: u32, ell: u32) -> Result<Vec<Check>> {
    let m = q + 1;
    let chars: Vec<CentralCharacter> =
        (0..m).map(|k| CentralCharacter::new(k as i64, m)).collect();
    let mut out = Vec::new();
    let mut total_v = 0;
    for chi in &chars {
        total_v += dim_v_isotypic(q, n, chi)?;
    }
    out.push(Check::new("sum of unitary isotypic dims", (q as u128).pow(n), total_v));
    let mut total_w = 0;
    for label in IsotypicLabel::all(q) {
        total_w += dim_w_isotypic(q, n, &label)?;
    }
    out.push(Check::new("sum of symplectic isotypic dims", (q as u128).pow(2 * n), total_w));

    let split = validate_ell(q, ell)?;
    let even = n % 2 == 0;
    for chi in &chars {
        let reduced = dim_mod_ell_unitary(q, n, chi, ell)?;
        let ordinary = dim_v_isotypic(q, n, chi)?;
        // the mod ell cohomology of xi-bar is the reduction of any lift plus
        // the torsion contribution in the next degree
        let torsion = if !split.divides_q_plus_one() || !split.prime_to_ell_part_trivial(chi) {
            0
        } else if chi.is_trivial() {
            u128::from(!even)
        } else {
            u128::from(even)
        };
        out.push(Check::new(
            format!("mod ell unitary dim at chi_{}", chi.k),
            ordinary + torsion,
            reduced,
        ));
    }
    Ok(out)
}

fn table_checks(q: u32, ell: u32) -> Result<Vec<Check>> {
    let ordinary = o_minus_table(q, Coefficients::Ordinary)?;
    let modular = o_minus_table(q, Coefficients::ModEll { ell })?;
    Ok(vec![
        Check::boolean("row orthogonality", ordinary.rows_orthonormal()),
        Check::boolean("column orthogonality", ordinary.columns_orthogonal()),
        Check::new("sum of squared dims", 2 * (q + 1), ordinary.sum_of_squared_dims()),
        Check::new("irreducibles = classes", ordinary.classes.len(), ordinary.rows.len()),
        Check::new(
            "Brauer irreducibles = ell-regular classes",
            modular.classes.len(),
            modular.rows.len(),
        ),
    ])
}

fn variety_checks(n: u32, ctx: &TowerContext) -> Result<Vec<Check>> {
    let q = ctx.q();
    let field = value_field(ctx);
    let mut out = Vec::new();
    let grids: &[bool] = if ctx.p() == 2 { &[false] } else { &[false, true] };
    for &with_u in grids {
        let rows = fixed_point_grid(ctx, with_u)?;
        let bad = rows.iter().filter(|r| !r.matches()).count();
        out.push(Check::new(
            format!("fixed points match closed form (with u: {with_u})"),
            0,
            bad,
        ));
    }
    let psi = AdditiveCharacter::from_code(ctx, 1)?;
    for zeta in ctx.enumerate_mu(q + 1)? {
        let t = sheaf_trace_a2(&zeta, false, &psi, ctx, &field)?;
        out.push(Check::new(
            format!("plane trace without u at zeta {}", zeta.code()),
            CycNumber::integer(&field, q as i64),
            t,
        ));
    }
    if ctx.p() != 2 {
        let g1 = gauss_sum(ctx, &field, &psi)?;
        let minus_one = ctx.integer(Level::Q, -1);
        let sign = ctx.legendre_symbol(&minus_one)? as i64;
        for a in ctx.elements(Level::Q).into_iter().filter(|a| !a.is_zero()) {
            let ga = gauss_sum(ctx, &field, &AdditiveCharacter::new(ctx, a)?)?;
            out.push(Check::new(
                format!("G(psi_{})^2", a.code()),
                CycNumber::integer(&field, sign * q as i64),
                ga.pow(2),
            ));
            let chi_a = ctx.legendre_symbol(&a)? as i64;
            out.push(Check::new(
                format!("G(psi_{}) = (a/q) G(psi_1)", a.code()),
                g1.scale(&num::BigRational::from_integer(chi_a.into())),
                ga,
            ));
        }
        out.push(Check::new(
            "nu-weighted plane trace",
            &g1,
            nu_weighted_trace(&psi, ctx, &field)?,
        ));
        let mut ranks = vec![1, n];
        ranks.dedup();
        for k in ranks {
            out.push(Check::new(
                format!("sign discrepancy at rank {k}"),
                prop433_expected(k, &psi, ctx, &field)?,
                prop433_discrepancy(k, &psi, ctx, &field)?,
            ));
        }
    }
    let opts = CountOptions::default();
    let norm_one = count_points(&VarietySpec::new(VarietyKind::NormOne, n)?, ctx, Level::Q2, &opts)?;
    let complement =
        count_points(&VarietySpec::new(VarietyKind::FermatComplement, n)?, ctx, Level::Q2, &opts)?;
    out.push(Check::new(
        "norm-one points = (q+1) complement points over F_q^2",
        (q as u128 + 1) * complement,
        norm_one,
    ));
    let size = ctx.size(Level::Q2) as u128;
    out.push(Check::new(
        "SL_2 quotient is affine space over F_q^2",
        size.pow(2 * n - 1),
        dickson_quotient_count(n, QuotientKind::Special, ctx, Level::Q2, opts.budget)?,
    ));
    Ok(out)
}

/// Runs the theta tables, the reduction comparison, the dimension and
/// character-table identities, and the variety-side trace checks.
pub fn verify_all(n: u32, q: u32, ell: u32) -> Result<VerifyReport> {
    if n < 2 {
        return Err(Error::InvalidArgument("n must be at least 2".into()));
    }
    let pp = PrimePower::from_q(q)?;
    validate_ell(q, ell)?;
    let ctx = build_tower(pp.p, pp.e)?;
    let mut checks = Vec::new();
    checks.extend(prefixed("theta", theta_ordinary(n, q)?.checks));
    checks.extend(prefixed("theta mod ell", theta_mod_ell(n, q, ell)?.checks));
    checks.extend(prefixed("reduction", compare_semisimplifications(n, q, ell)?.checks));
    checks.extend(prefixed("dimensions", dimension_checks(n, q, ell)?));
    checks.extend(prefixed("O2- tables", table_checks(q, ell)?));
    checks.extend(prefixed("varieties", variety_checks(n, &ctx)?));
    Ok(VerifyReport {
        params: HoweParams {
            n,
            q,
            p: pp.p,
            ell: Some(ell),
        },
        checks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_parameter_sets_pass() {
        for (n, q, ell) in [(2, 3, 5), (2, 2, 3)] {
            let r = verify_all(n, q, ell).unwrap();
            let failures: Vec<_> = r.failures().collect();
            assert!(failures.is_empty(), "{failures:?}");
        }
        assert!(matches!(verify_all(2, 3, 2), Err(Error::Unsupported(_))));
    }
}
