//! Fixed points of Frobenius-twisted linear endomorphisms of the surface
//! `Z_2^q Z_3 - Z_2 Z_3^q = Z_0 Z_1^q - Z_0^q Z_1` in `P^3`.
//!
//! The endomorphism is `Z -> A F(Z)` with `F` the coordinatewise `q`-power
//! and `A` upper triangular over `F_{q^2}`. A point is fixed iff it has a
//! representative with `A F(w) = w`; those `w` form a 4-dimensional
//! `F_q`-space (Lang), found as an `F_p`-kernel inside `K^4` where `K` is the
//! splitting field forced by the order of `A A^(q)`. Projective fixed points
//! are the `F_q`-lines of that space, so no search over `P^3` is needed.

use std::collections::HashSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field_tower::linalg::kernel_basis;
use crate::field_tower::{FieldElement, GaloisField, Level, TowerContext};

/// `F eta zeta` (optionally composed with `u`), acting as
/// `[Z] -> [(Z_0 + Z_1)^q : Z_1^q : zeta (Z_2 + eta Z_3)^q : zeta Z_3^q]`
/// with the `Z_1` term in the first slot present only when `with_u` is set.
#[derive(Clone, Copy, Debug)]
pub struct EndoSpec {
    pub frobenius_included: bool,
    pub eta: FieldElement,
    pub zeta: FieldElement,
    pub with_u: bool,
}

impl EndoSpec {
    pub fn new(ctx: &TowerContext, eta: FieldElement, zeta: FieldElement, with_u: bool) -> Result<Self> {
        let eta = ctx.embed(&eta, Level::Q)?;
        let zeta = ctx.embed(&zeta, Level::Q2)?;
        if !ctx.pow(&zeta, ctx.q() as u64 + 1).eq(&ctx.one(Level::Q2)) {
            return Err(Error::NotInSubset("mu_{q+1}".into()));
        }
        Ok(Self {
            frobenius_included: true,
            eta,
            zeta,
            with_u,
        })
    }

    /// The matrix `A`, row-major, over `F_{q^2}`.
    pub fn matrix(&self, ctx: &TowerContext) -> [[FieldElement; 4]; 4] {
        let z = ctx.zero(Level::Q2);
        let o = ctx.one(Level::Q2);
        let zeta = self.zeta;
        let zeta_eta = ctx.mul(&zeta, &self.eta);
        let corner = if self.with_u { o } else { z };
        [
            [o, corner, z, z],
            [z, o, z, z],
            [z, z, zeta, zeta_eta],
            [z, z, z, zeta],
        ]
    }
}

/// A fixed point, normalized so the first nonzero coordinate is 1, with
/// coordinates encoded in the coordinate field.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct FixedPoint {
    pub coords: [String; 4],
    /// `Z_3 != 0`, then `Z_2 != 0`, then the rest.
    pub sigma: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct FixedPointReport {
    pub total: usize,
    /// Counts on `{Z_3 != 0}`, `{Z_3 = 0, Z_2 != 0}`, `{Z_2 = Z_3 = 0}`.
    pub sigma_partition: [usize; 3],
    /// Degree over `F_p` of the field holding every fixed point.
    pub coordinate_field_degree: usize,
    /// Points re-verified by substituting into both equations.
    pub verified: usize,
    /// Points at which `df - id` is invertible on the affine chart.
    pub transversal: usize,
    pub points: Option<Vec<FixedPoint>>,
}

type Vector = Vec<Vec<u32>>;

/// The solver state for one endomorphism.
struct Solver {
    big: GaloisField,
    q_exp: usize,
    /// Matrix of `x -> x^q` on `K` over `F_p`, row-major.
    frob: Vec<Vec<u32>>,
    a: [[Vec<u32>; 4]; 4],
    /// Endomorphism constants for the direct substitution check.
    zeta: Vec<u32>,
    eta: Vec<u32>,
    with_u: bool,
}

fn order_of_twisted_square(ctx: &TowerContext, a: &[[FieldElement; 4]; 4]) -> Result<usize> {
    let conj: Vec<Vec<FieldElement>> = a
        .iter()
        .map(|row| row.iter().map(|x| ctx.frobenius_q(x)).collect())
        .collect();
    let mul = |x: &[Vec<FieldElement>], y: &[Vec<FieldElement>]| -> Vec<Vec<FieldElement>> {
        (0..4)
            .map(|i| {
                (0..4)
                    .map(|j| {
                        (0..4).fold(ctx.zero(Level::Q2), |acc, k| {
                            ctx.add(&acc, &ctx.mul(&x[i][k], &y[k][j]))
                        })
                    })
                    .collect()
            })
            .collect()
    };
    let a_rows: Vec<Vec<FieldElement>> = a.iter().map(|r| r.to_vec()).collect();
    let b = mul(&a_rows, &conj);
    let identity: Vec<Vec<FieldElement>> = (0..4)
        .map(|i| {
            (0..4)
                .map(|j| if i == j { ctx.one(Level::Q2) } else { ctx.zero(Level::Q2) })
                .collect()
        })
        .collect();
    let mut power = b.clone();
    let limit = 4 * (ctx.q() as usize + 1) * ctx.p() as usize;
    for k in 1..=limit {
        if power == identity {
            return Ok(k);
        }
        power = mul(&power, &b);
    }
    Err(Error::Unsupported("twisted square has unexpectedly large order".into()))
}

impl Solver {
    fn new(ctx: &TowerContext, endo: &EndoSpec) -> Result<Self> {
        let a_small = endo.matrix(ctx);
        let k = order_of_twisted_square(ctx, &a_small)?;
        let e = ctx.prime_power().e as usize;
        let big = GaloisField::new(ctx.p(), 2 * e * k);
        let emb = big.embedding_from(ctx.field(Level::Q2));
        let lift = |x: &FieldElement| {
            let x2 = ctx.embed(x, Level::Q2).expect("entries lie in F_{q^2}");
            emb.apply(&big, &ctx.coefficients(&x2))
        };
        let a = a_small.map(|row| row.map(|x| lift(&x)));
        let d = big.degree();
        let cols: Vec<Vec<u32>> = (0..d)
            .map(|j| big.frobenius_iter(&big.basis(j), e))
            .collect();
        let frob = (0..d).map(|i| cols.iter().map(|c| c[i]).collect()).collect();
        Ok(Self {
            zeta: lift(&endo.zeta),
            eta: lift(&endo.eta),
            with_u: endo.with_u,
            big,
            q_exp: e,
            frob,
            a,
        })
    }

    fn frob_q(&self, x: &[u32]) -> Vec<u32> {
        let p = self.big.characteristic() as u64;
        self.frob
            .iter()
            .map(|row| {
                (row.iter()
                    .zip(x)
                    .map(|(&a, &b)| a as u64 * b as u64)
                    .sum::<u64>()
                    % p) as u32
            })
            .collect()
    }

    /// `w -> A F(w)` on `K^4`.
    fn apply(&self, w: &Vector) -> Vector {
        let fw: Vec<Vec<u32>> = w.iter().map(|x| self.frob_q(x)).collect();
        (0..4)
            .map(|i| {
                (0..4).fold(self.big.zero(), |acc, j| {
                    self.big.add(&acc, &self.big.mul(&self.a[i][j], &fw[j]))
                })
            })
            .collect()
    }

    /// `F_p`-basis of `{w in K^4 : A F(w) = w}`.
    fn lang_kernel(&self) -> Vec<Vector> {
        let d = self.big.degree();
        let p = self.big.characteristic();
        let n = 4 * d;
        // column c is the image of the c-th F_p basis vector of K^4
        let cols: Vec<Vec<u32>> = (0..n)
            .map(|c| {
                let mut w: Vector = vec![self.big.zero(); 4];
                w[c / d][c % d] = 1;
                let img = self.apply(&w);
                let diff: Vec<u32> = img
                    .iter()
                    .zip(&w)
                    .flat_map(|(x, y)| self.big.sub(x, y))
                    .collect();
                diff
            })
            .collect();
        let rows: Vec<Vec<u32>> = (0..n).map(|r| cols.iter().map(|c| c[r]).collect()).collect();
        kernel_basis(&rows, n, p)
            .into_iter()
            .map(|v| v.chunks(d).map(|c| c.to_vec()).collect())
            .collect()
    }

    fn add_vec(&self, x: &Vector, y: &Vector) -> Vector {
        x.iter().zip(y).map(|(a, b)| self.big.add(a, b)).collect()
    }

    fn scale_vec(&self, c: &[u32], x: &Vector) -> Vector {
        x.iter().map(|a| self.big.mul(c, a)).collect()
    }

    fn encode_vec(&self, x: &Vector) -> Vec<u128> {
        x.iter().map(|a| self.big.encode(a)).collect()
    }

    /// Greedy `F_q`-basis of the kernel.
    fn fq_basis(&self, kernel: &[Vector], scalars: &[Vec<u32>]) -> Vec<Vector> {
        let zero: Vector = vec![self.big.zero(); 4];
        let mut span = vec![zero.clone()];
        let mut seen: HashSet<Vec<u128>> = HashSet::from([self.encode_vec(&zero)]);
        let mut basis = Vec::new();
        for b in kernel {
            if seen.contains(&self.encode_vec(b)) {
                continue;
            }
            let mut next = Vec::with_capacity(span.len() * scalars.len());
            for s in &span {
                for c in scalars {
                    let v = self.add_vec(s, &self.scale_vec(c, b));
                    seen.insert(self.encode_vec(&v));
                    next.push(v);
                }
            }
            span = next;
            basis.push(b.clone());
        }
        basis
    }

    fn skew(&self, x: &[u32], y: &[u32]) -> Vec<u32> {
        let k = &self.big;
        k.sub(&k.mul(&self.frob_q(x), y), &k.mul(x, &self.frob_q(y)))
    }

    /// `Z_2^q Z_3 - Z_2 Z_3^q - (Z_0 Z_1^q - Z_0^q Z_1)`.
    fn surface_equation(&self, w: &Vector) -> Vec<u32> {
        self.big.add(&self.skew(&w[2], &w[3]), &self.skew(&w[0], &w[1]))
    }

    /// The endomorphism evaluated straight from its coordinate formula.
    fn formula(&self, w: &Vector) -> Vector {
        let k = &self.big;
        let first = if self.with_u { k.add(&w[0], &w[1]) } else { w[0].clone() };
        let third = k.add(&w[2], &k.mul(&self.eta, &w[3]));
        vec![
            self.frob_q(&first),
            self.frob_q(&w[1]),
            k.mul(&self.zeta, &self.frob_q(&third)),
            k.mul(&self.zeta, &self.frob_q(&w[3])),
        ]
    }

    fn normalize(&self, w: &Vector) -> Vector {
        let lead = w.iter().find(|x| !self.big.is_zero(x)).expect("nonzero vector");
        let inv = self.big.inv(lead).expect("nonzero");
        self.scale_vec(&inv, w)
    }

    fn is_proportional(&self, x: &Vector, y: &Vector) -> bool {
        let k = &self.big;
        (0..4).all(|i| (i + 1..4).all(|j| k.mul(&x[i], &y[j]) == k.mul(&x[j], &y[i])))
    }

    /// Invertibility of `J - I` for the chart map at a normalized point,
    /// with `J` computed on dual numbers.
    fn is_transversal(&self, point: &Vector) -> bool {
        let chart = point.iter().position(|x| !self.big.is_zero(x)).unwrap();
        let others: Vec<usize> = (0..4).filter(|&i| i != chart).collect();
        let dual = DualField { k: &self.big };
        let mut jac = vec![vec![self.big.zero(); 3]; 3];
        for (col, &dir) in others.iter().enumerate() {
            let w: Vec<Dual> = (0..4)
                .map(|i| Dual {
                    re: point[i].clone(),
                    eps: if i == dir { self.big.one() } else { self.big.zero() },
                })
                .collect();
            let image = self.formula_dual(&dual, &w);
            let denom_inv = dual.inv(&image[chart]);
            for (row, &i) in others.iter().enumerate() {
                jac[row][col] = dual.mul(&image[i], &denom_inv).eps;
            }
        }
        for (i, row) in jac.iter_mut().enumerate() {
            row[i] = self.big.sub(&row[i], &self.big.one());
        }
        !self.big.is_zero(&det3(&self.big, &jac))
    }

    fn formula_dual(&self, dual: &DualField, w: &[Dual]) -> Vec<Dual> {
        let q = (self.big.characteristic() as u128).pow(self.q_exp as u32);
        let first = if self.with_u { dual.add(&w[0], &w[1]) } else { w[0].clone() };
        let eta = dual.constant(&self.eta);
        let zeta = dual.constant(&self.zeta);
        let third = dual.add(&w[2], &dual.mul(&eta, &w[3]));
        vec![
            dual.pow(&first, q),
            dual.pow(&w[1], q),
            dual.mul(&zeta, &dual.pow(&third, q)),
            dual.mul(&zeta, &dual.pow(&w[3], q)),
        ]
    }
}

#[derive(Clone)]
struct Dual {
    re: Vec<u32>,
    eps: Vec<u32>,
}

struct DualField<'a> {
    k: &'a GaloisField,
}

impl DualField<'_> {
    fn constant(&self, c: &[u32]) -> Dual {
        Dual {
            re: c.to_vec(),
            eps: self.k.zero(),
        }
    }

    fn add(&self, x: &Dual, y: &Dual) -> Dual {
        Dual {
            re: self.k.add(&x.re, &y.re),
            eps: self.k.add(&x.eps, &y.eps),
        }
    }

    fn mul(&self, x: &Dual, y: &Dual) -> Dual {
        Dual {
            re: self.k.mul(&x.re, &y.re),
            eps: self.k.add(&self.k.mul(&x.re, &y.eps), &self.k.mul(&x.eps, &y.re)),
        }
    }

    fn pow(&self, x: &Dual, mut e: u128) -> Dual {
        let mut acc = self.constant(&self.k.one());
        let mut base = x.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    fn inv(&self, x: &Dual) -> Dual {
        let r = self.k.inv(&x.re).expect("unit");
        let r2 = self.k.mul(&r, &r);
        Dual {
            eps: self.k.neg(&self.k.mul(&x.eps, &r2)),
            re: r,
        }
    }
}

fn det3(k: &GaloisField, m: &[Vec<Vec<u32>>]) -> Vec<u32> {
    let t = |a: usize, b: usize, c: usize| {
        k.mul(&m[0][a], &k.mul(&m[1][b], &m[2][c]))
    };
    let pos = k.add(&k.add(&t(0, 1, 2), &t(1, 2, 0)), &t(2, 0, 1));
    let neg = k.add(&k.add(&t(2, 1, 0), &t(0, 2, 1)), &t(1, 0, 2));
    k.sub(&pos, &neg)
}

/// All fixed points of the endomorphism on the surface, with the zero-pattern
/// partition and per-point verification.
pub fn fixed_points_surface(
    endo: &EndoSpec,
    ctx: &TowerContext,
    with_points: bool,
) -> Result<FixedPointReport> {
    if !endo.frobenius_included {
        return Err(Error::Unsupported(
            "fixed points are finite only for Frobenius-twisted maps".into(),
        ));
    }
    let solver = Solver::new(ctx, endo)?;
    let kernel = solver.lang_kernel();
    let e = ctx.prime_power().e as usize;
    if kernel.len() != 4 * e {
        return Err(Error::Unsupported(format!(
            "fixed-vector space has F_p-dimension {} instead of {}",
            kernel.len(),
            4 * e
        )));
    }
    let scalars = solver.big.subfield_elements(e);
    let basis = solver.fq_basis(&kernel, &scalars);
    debug_assert_eq!(basis.len(), 4);

    // multiples c * b_i for every F_q scalar c
    let multiples: Vec<Vec<Vector>> = basis
        .iter()
        .map(|b| scalars.iter().map(|c| solver.scale_vec(c, b)).collect())
        .collect();
    let one_index = scalars
        .iter()
        .position(|c| *c == solver.big.one())
        .expect("1 lies in F_q");
    let q = scalars.len();

    let mut report = FixedPointReport {
        total: 0,
        sigma_partition: [0; 3],
        coordinate_field_degree: solver.big.degree(),
        verified: 0,
        transversal: 0,
        points: with_points.then(Vec::new),
    };
    // P^3(F_q) in the coordinates of the basis: leading coefficient 1
    for lead in 0..4 {
        let free = 3 - lead;
        for idx in 0..q.pow(free as u32) {
            let mut w = multiples[lead][one_index].clone();
            let mut rest = idx;
            for j in lead + 1..4 {
                w = solver.add_vec(&w, &multiples[j][rest % q]);
                rest /= q;
            }
            if !solver.big.is_zero(&solver.surface_equation(&w)) {
                continue;
            }
            let sigma = if !solver.big.is_zero(&w[3]) {
                0
            } else if !solver.big.is_zero(&w[2]) {
                1
            } else {
                2
            };
            report.total += 1;
            report.sigma_partition[sigma] += 1;

            let point = solver.normalize(&w);
            let on_surface = solver.big.is_zero(&solver.surface_equation(&point));
            let fixed = solver.apply(&w) == w
                && solver.is_proportional(&solver.formula(&point), &point);
            if on_surface && fixed {
                report.verified += 1;
            }
            if solver.is_transversal(&point) {
                report.transversal += 1;
            }
            if let Some(points) = report.points.as_mut() {
                points.push(FixedPoint {
                    coords: std::array::from_fn(|i| solver.big.encode(&point[i]).to_string()),
                    sigma,
                });
            }
        }
    }
    if let Some(points) = report.points.as_mut() {
        points.sort_by(|a, b| {
            let key = |p: &FixedPoint| {
                p.coords
                    .iter()
                    .map(|c| c.parse::<u128>().unwrap())
                    .collect::<Vec<_>>()
            };
            key(a).cmp(&key(b))
        });
    }
    Ok(report)
}
