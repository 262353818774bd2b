//! Point counts checked against direct enumeration of every coordinate tuple.

use howe_core::varieties::{
    count_points, dickson_invariants, dickson_quotient_count, CountOptions, QuotientKind,
    VarietyKind, VarietySpec,
};
use howe_core::{build_tower, FieldElement, Level, TowerContext};

/// Largest number of tuples the oracle walks through per case.
const MAX_TUPLES: u64 = 1 << 21;

struct Oracle<'a> {
    ctx: &'a TowerContext,
    els: Vec<FieldElement>,
}

impl<'a> Oracle<'a> {
    fn new(ctx: &'a TowerContext, level: Level) -> Self {
        Self {
            ctx,
            els: ctx.elements(level),
        }
    }

    fn pow_q(&self, x: &FieldElement) -> FieldElement {
        self.ctx.pow(x, self.ctx.q() as u64)
    }

    fn norm_sum(&self, xs: &[FieldElement]) -> FieldElement {
        let q = self.ctx.q() as u64;
        xs.iter()
            .fold(self.ctx.zero(Level::Q), |acc, x| self.ctx.add(&acc, &self.ctx.pow(x, q + 1)))
    }

    /// `sum (x_i^q y_i - x_i y_i^q)` with `xs = (x_1..x_n, y_1..y_n)`.
    fn skew_sum(&self, xs: &[FieldElement]) -> FieldElement {
        let n = xs.len() / 2;
        let c = self.ctx;
        (0..n).fold(c.zero(Level::Q), |acc, i| {
            let (x, y) = (&xs[i], &xs[n + i]);
            let t = c.sub(&c.mul(&self.pow_q(x), y), &c.mul(x, &self.pow_q(y)));
            c.add(&acc, &t)
        })
    }

    /// Visits every tuple of the given length.
    fn for_each(&self, len: usize, mut f: impl FnMut(&[FieldElement])) {
        let mut idx = vec![0usize; len];
        let mut tuple: Vec<FieldElement> = vec![self.els[0]; len];
        loop {
            for (t, &i) in tuple.iter_mut().zip(&idx) {
                *t = self.els[i];
            }
            f(&tuple);
            let mut k = 0;
            loop {
                if k == len {
                    return;
                }
                idx[k] += 1;
                if idx[k] < self.els.len() {
                    break;
                }
                idx[k] = 0;
                k += 1;
            }
        }
    }

    fn affine(&self, len: usize, pred: impl Fn(&[FieldElement]) -> bool) -> u128 {
        let mut count = 0;
        self.for_each(len, |xs| count += u128::from(pred(xs)));
        count
    }

    /// Points of `P^{len-1}`: tuples whose first nonzero coordinate is one.
    fn projective(&self, len: usize, pred: impl Fn(&[FieldElement]) -> bool) -> u128 {
        let one = self.ctx.one(Level::Q);
        self.affine(len, |xs| match xs.iter().find(|x| !x.is_zero()) {
            Some(lead) if lead.top_code() == one.top_code() => pred(xs),
            _ => false,
        })
    }

    fn count(&self, kind: VarietyKind, n: usize) -> u128 {
        let c = self.ctx;
        let is_one = |v: FieldElement| v.top_code() == c.one(Level::Q).top_code();
        match kind {
            VarietyKind::Fermat => self.projective(n, |xs| self.norm_sum(xs).is_zero()),
            VarietyKind::FermatComplement => self.projective(n, |xs| !self.norm_sum(xs).is_zero()),
            VarietyKind::NormOne => self.affine(n, |xs| is_one(self.norm_sum(xs))),
            VarietyKind::HermitianCurveFamily => self.affine(n + 1, |xs| {
                let z = &xs[n];
                c.add(&self.pow_q(z), z) == self.norm_sum(&xs[..n])
            }),
            VarietyKind::SkewFermat => self.projective(2 * n, |xs| self.skew_sum(xs).is_zero()),
            VarietyKind::SkewComplement => {
                self.projective(2 * n, |xs| !self.skew_sum(xs).is_zero())
            }
            VarietyKind::SkewNormOne => self.affine(2 * n, |xs| is_one(self.skew_sum(xs))),
            VarietyKind::SkewArtinSchreier => self.affine(2 * n + 1, |xs| {
                let z = &xs[2 * n];
                let rhs = c.neg(&self.skew_sum(&xs[..2 * n]));
                c.sub(&self.pow_q(z), z) == rhs
            }),
            VarietyKind::Surface => self.projective(4, |z| {
                let lhs = c.sub(&c.mul(&self.pow_q(&z[2]), &z[3]), &c.mul(&z[2], &self.pow_q(&z[3])));
                let rhs = c.sub(&c.mul(&z[0], &self.pow_q(&z[1])), &c.mul(&self.pow_q(&z[0]), &z[1]));
                lhs == rhs
            }),
            VarietyKind::SurfaceBoundary => self.projective(4, |z| {
                let rhs = c.sub(&c.mul(&z[0], &self.pow_q(&z[1])), &c.mul(&self.pow_q(&z[0]), &z[1]));
                z[3].is_zero() && rhs.is_zero()
            }),
            VarietyKind::ZeroFibre => self.affine(2 * n, |xs| self.skew_sum(xs).is_zero()),
            VarietyKind::PuncturedZeroFibre => self.affine(2 * n, |xs| {
                self.skew_sum(xs).is_zero() && xs.iter().any(|x| !x.is_zero())
            }),
            VarietyKind::UnitFibre => self.affine(2 * n, |xs| !self.skew_sum(xs).is_zero()),
        }
    }
}

fn arity(kind: VarietyKind, n: u32) -> u32 {
    match kind {
        VarietyKind::Fermat | VarietyKind::FermatComplement | VarietyKind::NormOne => n,
        VarietyKind::HermitianCurveFamily => n + 1,
        VarietyKind::SkewArtinSchreier => 2 * n + 1,
        VarietyKind::Surface | VarietyKind::SurfaceBoundary => 4,
        _ => 2 * n,
    }
}

#[test]
fn every_kind_matches_enumeration() {
    let mut cases = 0;
    for (p, e) in [(2, 1), (3, 1), (2, 2), (5, 1)] {
        let ctx = build_tower(p, e).unwrap();
        for level in Level::ALL {
            let oracle = Oracle::new(&ctx, level);
            let size = ctx.size(level) as u64;
            for kind in VarietyKind::ALL {
                for n in 1..=3 {
                    if !kind.takes_n() && n > 1 {
                        continue;
                    }
                    if size.checked_pow(arity(kind, n)).map_or(true, |t| t > MAX_TUPLES) {
                        continue;
                    }
                    let spec = VarietySpec::new(kind, n).unwrap();
                    let fast = count_points(&spec, &ctx, level, &CountOptions::default()).unwrap();
                    let slow = oracle.count(kind, n as usize);
                    assert_eq!(fast, slow, "{kind} n={n} q={} level={level:?}", ctx.q());
                    cases += 1;
                }
            }
        }
    }
    assert!(cases > 100, "only {cases} cases ran");
}

#[test]
fn frozen_counts() {
    // values produced by the enumeration oracle above
    let ctx = build_tower(3, 1).unwrap();
    let opts = CountOptions::default();
    let get = |kind, n, level| count_points(&VarietySpec::new(kind, n).unwrap(), &ctx, level, &opts).unwrap();
    assert_eq!(get(VarietyKind::Fermat, 3, Level::Q2), 28);
    assert_eq!(get(VarietyKind::NormOne, 2, Level::Q2), 24);
    assert_eq!(get(VarietyKind::FermatComplement, 2, Level::Q2), 6);
    assert_eq!(get(VarietyKind::Surface, 1, Level::Q), 40);
    assert_eq!(get(VarietyKind::SurfaceBoundary, 1, Level::Q), 13);
}

#[test]
fn quotient_models_match_enumeration() {
    for (p, e) in [(2, 1), (3, 1)] {
        let ctx = build_tower(p, e).unwrap();
        let level = Level::Q2;
        let oracle = Oracle::new(&ctx, level);
        let top = ctx.top();
        for n in 1..=2usize {
            let unipotent = oracle.affine(2 * n, |xs| {
                let dot = (0..n).fold(0, |acc, i| top.add(acc, top.mul(xs[i].top_code(), xs[n + i].top_code())));
                dot == 1
            });
            let special = oracle.affine(2 * n, |xs| {
                xs[..n].iter().fold(0, |acc, s| top.add(acc, s.top_code())) == 1
            });
            for (which, expected) in [(QuotientKind::Unipotent, unipotent), (QuotientKind::Special, special)] {
                let got = dickson_quotient_count(n as u32, which, &ctx, level, u128::MAX).unwrap();
                assert_eq!(got, expected, "{which:?} n={n} q={}", ctx.q());
            }
        }
    }
}

#[test]
fn unipotent_invariants_land_in_the_model() {
    // the invariant map sends the skew norm-one variety into sum s_i t_i = 1,
    // and its fibres are unions of U(F_q)^2 orbits
    let ctx = build_tower(3, 1).unwrap();
    let oracle = Oracle::new(&ctx, Level::Q2);
    let top = ctx.top();
    let fq = ctx.top_codes(Level::Q).to_vec();
    let mut hits = 0;
    oracle.for_each(4, |xs| {
        if oracle.skew_sum(xs).top_code() != 1 {
            return;
        }
        hits += 1;
        let inv = |x: &[FieldElement]| -> Vec<(u32, u32)> {
            (0..2)
                .map(|i| {
                    dickson_invariants(&ctx, QuotientKind::Unipotent, x[i].top_code(), x[2 + i].top_code())
                        .unwrap()
                })
                .collect()
        };
        let st = inv(xs);
        let dot = st.iter().fold(0, |acc, &(s, t)| top.add(acc, top.mul(s, t)));
        assert_eq!(dot, 1);
        for &a in &fq {
            let moved: Vec<FieldElement> = {
                let x0 = top.add(xs[0].top_code(), top.mul(a, xs[2].top_code()));
                let mut v = xs.to_vec();
                v[0] = ctx.from_top(Level::Q4, x0).unwrap();
                v
            };
            assert_eq!(inv(&moved), st);
        }
    });
    let spec = VarietySpec::new(VarietyKind::SkewNormOne, 2).unwrap();
    assert_eq!(hits, count_points(&spec, &ctx, Level::Q2, &CountOptions::default()).unwrap());
}
