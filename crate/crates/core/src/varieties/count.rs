//! Exact point counts by value histograms.
//!
//! Every defining equation here is a sum of independent terms in one or two
//! coordinates. The count is read off the additive convolution of the
//! per-term value histograms; projective counts come from the affine cone.

use rayon::prelude::*;
use serde::Serialize;

use super::spec::{VarietyKind, VarietySpec};
use crate::error::{Error, Result};
use crate::field_tower::{Level, SmallField, TowerContext};

pub const DEFAULT_BUDGET: u128 = 1 << 34;

/// Histogram over top-field codes.
type Hist = Vec<u128>;

#[derive(Clone, Copy, Debug)]
pub struct CountOptions {
    /// Upper bound on elementary field operations.
    pub budget: u128,
}

impl Default for CountOptions {
    fn default() -> Self {
        Self {
            budget: DEFAULT_BUDGET,
        }
    }
}

/// One exported row: `(variety, n, level, count)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CountRow {
    pub variety: String,
    pub n: u32,
    pub level: u32,
    pub count: String,
}

impl CountRow {
    pub fn new(spec: &VarietySpec, level: Level, count: u128) -> Self {
        Self {
            variety: spec.kind.name().to_string(),
            n: spec.n,
            level: level.relative_degree(),
            count: count.to_string(),
        }
    }
}

struct Counter<'a> {
    top: &'a SmallField,
    support: &'a [u32],
    q: u64,
}

impl<'a> Counter<'a> {
    fn new(ctx: &'a TowerContext, level: Level) -> Self {
        Self {
            top: ctx.top(),
            support: ctx.top_codes(level),
            q: ctx.q() as u64,
        }
    }

    fn size(&self) -> u128 {
        self.support.len() as u128
    }

    fn single(&self, f: impl Fn(u32) -> u32) -> Hist {
        let mut h = vec![0u128; self.top.size() as usize];
        for &x in self.support {
            h[f(x) as usize] += 1;
        }
        h
    }

    fn pair(&self, f: impl Fn(u32, u32) -> u32 + Sync) -> Hist {
        let len = self.top.size() as usize;
        self.support
            .par_iter()
            .fold(
                || vec![0u128; len],
                |mut h, &x| {
                    for &y in self.support {
                        h[f(x, y) as usize] += 1;
                    }
                    h
                },
            )
            .reduce(|| vec![0u128; len], add_hists)
    }

    fn convolve(&self, a: &Hist, b: &Hist) -> Hist {
        let len = self.top.size() as usize;
        let top = self.top;
        self.support
            .par_iter()
            .filter(|&&u| a[u as usize] != 0)
            .fold(
                || vec![0u128; len],
                |mut h, &u| {
                    let au = a[u as usize];
                    for &v in self.support {
                        let bv = b[v as usize];
                        if bv != 0 {
                            h[top.add(u, v) as usize] += au * bv;
                        }
                    }
                    h
                },
            )
            .reduce(|| vec![0u128; len], add_hists)
    }

    fn power(&self, term: &Hist, n: u32) -> Hist {
        let mut acc = term.clone();
        for _ in 1..n {
            acc = self.convolve(&acc, term);
        }
        acc
    }

    fn norm_term(&self) -> Hist {
        let e = self.q + 1;
        self.single(|x| self.top.pow(x, e))
    }

    /// `(x, y) -> x^q y - x y^q`.
    fn skew_term(&self) -> Hist {
        let q = self.q;
        let top = self.top;
        self.pair(|x, y| top.sub(top.mul(top.pow(x, q), y), top.mul(x, top.pow(y, q))))
    }

    /// `v -> #{z : z^q + sign z = v}`.
    fn artin_schreier(&self, sign: i32) -> Hist {
        let top = self.top;
        let q = self.q;
        self.single(|z| {
            let zq = top.pow(z, q);
            if sign > 0 {
                top.add(zq, z)
            } else {
                top.sub(zq, z)
            }
        })
    }

    fn pair_with(&self, h: &Hist, weights: &Hist) -> u128 {
        self.support
            .iter()
            .map(|&v| h[v as usize] * weights[v as usize])
            .sum()
    }

    fn projective(&self, cone: u128) -> u128 {
        (cone - 1) / (self.size() - 1)
    }

    fn projective_space(&self, dim_plus_one: u32) -> u128 {
        (self.size().pow(dim_plus_one) - 1) / (self.size() - 1)
    }
}

fn add_hists(mut a: Hist, b: Hist) -> Hist {
    for (x, y) in a.iter_mut().zip(b) {
        *x += y;
    }
    a
}

/// Rough number of field operations `count_points` will perform.
pub fn work_estimate(spec: &VarietySpec, ctx: &TowerContext, level: Level) -> u128 {
    let size = ctx.size(level) as u128;
    let terms = match spec.kind {
        VarietyKind::Surface | VarietyKind::SurfaceBoundary => 2,
        _ => spec.n as u128 + 1,
    };
    terms * size * size
}

/// Exact number of `level`-rational points of the variety.
pub fn count_points(
    spec: &VarietySpec,
    ctx: &TowerContext,
    level: Level,
    opts: &CountOptions,
) -> Result<u128> {
    let needed = work_estimate(spec, ctx, level);
    if needed > opts.budget {
        return Err(Error::BudgetExceeded {
            needed,
            budget: opts.budget,
        });
    }
    let c = Counter::new(ctx, level);
    let n = spec.n;
    let size = c.size();
    let one = 1usize;
    let count = match spec.kind {
        VarietyKind::Fermat => c.projective(c.power(&c.norm_term(), n)[0]),
        VarietyKind::FermatComplement => {
            c.projective_space(n) - c.projective(c.power(&c.norm_term(), n)[0])
        }
        VarietyKind::NormOne => c.power(&c.norm_term(), n)[one],
        VarietyKind::HermitianCurveFamily => {
            c.pair_with(&c.power(&c.norm_term(), n), &c.artin_schreier(1))
        }
        VarietyKind::SkewFermat => c.projective(c.power(&c.skew_term(), n)[0]),
        VarietyKind::SkewComplement => {
            c.projective_space(2 * n) - c.projective(c.power(&c.skew_term(), n)[0])
        }
        VarietyKind::SkewNormOne => c.power(&c.skew_term(), n)[one],
        VarietyKind::SkewArtinSchreier => {
            // the right-hand side is minus the skew form
            let h = c.power(&c.skew_term(), n);
            let top = ctx.top();
            let mut negated = vec![0u128; h.len()];
            for &v in c.support {
                negated[top.neg(v) as usize] = h[v as usize];
            }
            c.pair_with(&negated, &c.artin_schreier(-1))
        }
        VarietyKind::Surface => c.projective(c.power(&c.skew_term(), 2)[0]),
        VarietyKind::SurfaceBoundary => c.projective(c.skew_term()[0] * size),
        VarietyKind::ZeroFibre => c.power(&c.skew_term(), n)[0],
        VarietyKind::PuncturedZeroFibre => c.power(&c.skew_term(), n)[0] - 1,
        VarietyKind::UnitFibre => size.pow(2 * n) - c.power(&c.skew_term(), n)[0],
    };
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field_tower::build_tower;

    fn count(ctx: &TowerContext, kind: VarietyKind, n: u32, level: Level) -> u128 {
        count_points(&VarietySpec::new(kind, n).unwrap(), ctx, level, &Default::default()).unwrap()
    }

    #[test]
    fn norm_one_circle() {
        for (p, e) in [(2, 1), (3, 1), (2, 2), (5, 1)] {
            let ctx = build_tower(p, e).unwrap();
            let q = ctx.q() as u128;
            assert_eq!(count(&ctx, VarietyKind::NormOne, 1, Level::Q2), q + 1);
        }
    }

    #[test]
    fn surface_splits_into_affine_part_and_boundary() {
        for (p, e) in [(2, 1), (3, 1)] {
            let ctx = build_tower(p, e).unwrap();
            for level in Level::ALL {
                let whole = count(&ctx, VarietyKind::Surface, 1, level);
                let boundary = count(&ctx, VarietyKind::SurfaceBoundary, 1, level);
                let affine = count(&ctx, VarietyKind::SkewArtinSchreier, 1, level);
                assert_eq!(whole, affine + boundary);
            }
        }
    }

    #[test]
    fn fibres_partition_affine_space() {
        let ctx = build_tower(3, 1).unwrap();
        for n in 1..=2 {
            let total = (ctx.size(Level::Q2) as u128).pow(2 * n);
            let z = count(&ctx, VarietyKind::ZeroFibre, n, Level::Q2);
            let u = count(&ctx, VarietyKind::UnitFibre, n, Level::Q2);
            assert_eq!(z + u, total);
            assert_eq!(count(&ctx, VarietyKind::PuncturedZeroFibre, n, Level::Q2), z - 1);
        }
    }

    #[test]
    fn budget_is_enforced() {
        let ctx = build_tower(2, 2).unwrap();
        let spec = VarietySpec::new(VarietyKind::NormOne, 3).unwrap();
        let err = count_points(&spec, &ctx, Level::Q4, &CountOptions { budget: 10 }).unwrap_err();
        assert!(matches!(err, Error::BudgetExceeded { .. }));
    }
}
