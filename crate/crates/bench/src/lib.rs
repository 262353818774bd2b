//! Shared inputs for the kernel benchmarks in `benches/`.

use howe_core::varieties::EndoSpec;
use howe_core::{build_tower, FieldElement, Level, PrimePower, Result, TowerContext};

/// The tower for `q`.
pub fn tower(q: u32) -> Result<TowerContext> {
    let pp = PrimePower::from_q(q)?;
    build_tower(pp.p, pp.e)
}

/// A deterministic sample of nonzero top-field elements.
pub fn sample(ctx: &TowerContext, count: usize) -> Vec<FieldElement> {
    let size = ctx.size(Level::Q4);
    (0..count as u32)
        .map(|i| ctx.element(Level::Q4, 1 + (i * 7919) % (size - 1)).expect("in range"))
        .collect()
}

/// The twist with `eta = 1` and `zeta` the fixed generator of `mu_{q+1}`.
pub fn generic_endo(ctx: &TowerContext, with_u: bool) -> Result<EndoSpec> {
    let zeta = ctx.mu_generator(ctx.q() + 1)?;
    EndoSpec::new(ctx, ctx.one(Level::Q), zeta, with_u)
}
