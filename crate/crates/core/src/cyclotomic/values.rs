//! Additive characters of `F_q`, characters of `mu_{q+1}`, and the
//! quadratic Gauss sum, valued in `Q(zeta_m)` with `m = p(q+1)`.

use std::sync::Arc;

use serde::Serialize;

use super::number::{CycNumber, CyclotomicField};
use crate::error::{Error, Result};
use crate::field_tower::{FieldElement, Level, TowerContext};

/// The field `Q(zeta_{p(q+1)})` holding every value attached to a tower.
pub fn value_field(ctx: &TowerContext) -> Arc<CyclotomicField> {
    CyclotomicField::new(ctx.p() * (ctx.q() + 1))
}

/// `zeta_p` inside the value field.
pub fn zeta_p_pow(field: &Arc<CyclotomicField>, ctx: &TowerContext, k: i64) -> CycNumber {
    CycNumber::zeta_pow(field, k * (ctx.q() as i64 + 1))
}

/// `zeta_{q+1}` inside the value field.
pub fn zeta_q1_pow(field: &Arc<CyclotomicField>, ctx: &TowerContext, k: i64) -> CycNumber {
    CycNumber::zeta_pow(field, k * ctx.p() as i64)
}

/// `x -> zeta_p^{Tr(a x)}` for `a` in `F_q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AdditiveCharacter {
    pub a: FieldElement,
}

impl AdditiveCharacter {
    pub fn new(ctx: &TowerContext, a: FieldElement) -> Result<Self> {
        Ok(Self {
            a: ctx.embed(&a, Level::Q)?,
        })
    }

    /// `psi_a` for the element of `F_q` with the given code.
    pub fn from_code(ctx: &TowerContext, code: u32) -> Result<Self> {
        Self::new(ctx, ctx.element(Level::Q, code)?)
    }

    pub fn is_trivial(&self) -> bool {
        self.a.is_zero()
    }
}

/// `zeta -> zeta_{q+1}^{k dlog(zeta)}` on `mu_{q+1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct CentralCharacter {
    pub k: u32,
    pub modulus: u32,
}

impl CentralCharacter {
    pub fn new(k: i64, modulus: u32) -> Self {
        Self {
            k: k.rem_euclid(modulus as i64) as u32,
            modulus,
        }
    }

    pub fn trivial(modulus: u32) -> Self {
        Self::new(0, modulus)
    }

    /// The quadratic character; needs `q + 1` even.
    pub fn quadratic(modulus: u32) -> Result<Self> {
        if modulus % 2 == 1 {
            return Err(Error::Characteristic2("quadratic character of mu_{q+1}"));
        }
        Ok(Self::new(modulus as i64 / 2, modulus))
    }

    pub fn is_trivial(&self) -> bool {
        self.k == 0
    }

    /// `chi^2 = 1`.
    pub fn is_self_dual(&self) -> bool {
        (2 * self.k) % self.modulus == 0
    }

    pub fn inverse(&self) -> Self {
        Self::new(-(self.k as i64), self.modulus)
    }

    /// Order of the character.
    pub fn order(&self) -> u32 {
        self.modulus / gcd(self.k, self.modulus)
    }
}

pub(crate) fn gcd(mut a: u32, mut b: u32) -> u32 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// `psi(x)`; `x` must lie in `F_q`.
pub fn evaluate_additive(
    ctx: &TowerContext,
    field: &Arc<CyclotomicField>,
    psi: &AdditiveCharacter,
    x: &FieldElement,
) -> Result<CycNumber> {
    let x = ctx.embed(x, Level::Q)?;
    let t = ctx.trace_to_prime(&ctx.mul(&psi.a, &x));
    Ok(zeta_p_pow(field, ctx, t as i64))
}

/// `chi(zeta)`; `zeta` must lie in `mu_{q+1}`.
pub fn evaluate_central(
    ctx: &TowerContext,
    field: &Arc<CyclotomicField>,
    chi: &CentralCharacter,
    zeta: &FieldElement,
) -> Result<CycNumber> {
    if chi.modulus != ctx.q() + 1 {
        return Err(Error::InvalidArgument(
            "character is not defined on mu_{q+1}".into(),
        ));
    }
    let j = ctx.discrete_log_mu(zeta, chi.modulus)?;
    let e = chi.k as u64 * j as u64 % chi.modulus as u64;
    Ok(zeta_q1_pow(field, ctx, e as i64))
}

/// `G(psi) = sum_{x != 0} (x / F_q) psi(x)`.
pub fn gauss_sum(
    ctx: &TowerContext,
    field: &Arc<CyclotomicField>,
    psi: &AdditiveCharacter,
) -> Result<CycNumber> {
    if ctx.p() == 2 {
        return Err(Error::Characteristic2("quadratic Gauss sum"));
    }
    if psi.is_trivial() {
        return Err(Error::InvalidArgument(
            "Gauss sum of the trivial character".into(),
        ));
    }
    let mut acc = CycNumber::zero(field);
    for x in ctx.elements(Level::Q).iter().filter(|x| !x.is_zero()) {
        let v = evaluate_additive(ctx, field, psi, x)?;
        acc = match ctx.legendre_symbol(x)? {
            1 => &acc + &v,
            _ => &acc - &v,
        };
    }
    Ok(acc)
}
