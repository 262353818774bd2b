//! The tower `F_p ⊂ F_q ⊂ F_{q^2} ⊂ F_{q^4}`.
//!
//! Every level is a [`GaloisField`] over its own least irreducible modulus.
//! Arithmetic runs in the table-driven top field; each level keeps a
//! code-translation table to and from the top.

use serde::Serialize;

use super::galois::{Embedding, GaloisField};
use super::poly::{is_prime, prime_factors};
use super::small::{SmallField, MAX_TABLE_SIZE};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct PrimePower {
    pub p: u32,
    pub e: u32,
    pub q: u32,
}

impl PrimePower {
    pub fn new(p: u32, e: u32) -> Result<Self> {
        if !is_prime(p as u64) {
            return Err(Error::NotPrime(p as u64));
        }
        if e == 0 {
            return Err(Error::InvalidArgument("exponent must be positive".into()));
        }
        let q = (p as u64)
            .checked_pow(e)
            .filter(|&q| q <= u32::MAX as u64)
            .ok_or(Error::EnumerationBound {
                size: u128::MAX,
                bound: MAX_TABLE_SIZE,
            })?;
        Ok(Self { p, e, q: q as u32 })
    }

    /// Splits `q` into `p^e`.
    pub fn from_q(q: u32) -> Result<Self> {
        let factors = prime_factors(q as u128);
        match factors.as_slice() {
            [p] => {
                let p = *p as u32;
                let e = (q as f64).log(p as f64).round() as u32;
                Self::new(p, e)
            }
            _ => Err(Error::InvalidArgument(format!("{q} is not a prime power"))),
        }
    }

    pub fn is_odd(&self) -> bool {
        self.p != 2
    }
}

/// One of the three levels `F_q`, `F_{q^2}`, `F_{q^4}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Level {
    Q,
    Q2,
    Q4,
}

impl Level {
    pub const ALL: [Level; 3] = [Level::Q, Level::Q2, Level::Q4];

    /// Degree over `F_q`.
    pub fn relative_degree(self) -> u32 {
        match self {
            Level::Q => 1,
            Level::Q2 => 2,
            Level::Q4 => 4,
        }
    }

    pub fn from_relative_degree(k: u32) -> Result<Self> {
        match k {
            1 => Ok(Level::Q),
            2 => Ok(Level::Q2),
            4 => Ok(Level::Q4),
            _ => Err(Error::InvalidArgument(format!(
                "level must be 1, 2 or 4 (got {k})"
            ))),
        }
    }

    fn index(self) -> usize {
        self as usize
    }
}

/// An element of one level. `code` is the level-local encoding
/// `sum c_i p^i`; `top` is the code of its image in `F_{q^4}`.
#[derive(Clone, Copy, Debug)]
pub struct FieldElement {
    level: Level,
    code: u32,
    top: u32,
}

impl FieldElement {
    pub fn level(&self) -> Level {
        self.level
    }

    pub fn code(&self) -> u32 {
        self.code
    }

    pub fn top_code(&self) -> u32 {
        self.top
    }

    pub fn is_zero(&self) -> bool {
        self.top == 0
    }
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.top == other.top
    }
}

impl Eq for FieldElement {}

impl std::hash::Hash for FieldElement {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.top.hash(state);
    }
}

const NOT_IN_LEVEL: u32 = u32::MAX;

#[derive(Clone, Debug)]
pub struct TowerContext {
    prime_power: PrimePower,
    levels: [GaloisField; 3],
    top: SmallField,
    /// `to_top[l][code]` is the top code of a level-`l` element.
    to_top: [Vec<u32>; 3],
    /// `from_top[l][top]` is the level-`l` code, or `NOT_IN_LEVEL`.
    from_top: [Vec<u32>; 3],
}

/// Builds the tower for `q = p^e`. Fails for non-prime `p` and when `F_{q^4}`
/// has more than 2^16 elements.
pub fn build_tower(p: u32, e: u32) -> Result<TowerContext> {
    TowerContext::new(PrimePower::new(p, e)?)
}

impl TowerContext {
    pub fn new(prime_power: PrimePower) -> Result<Self> {
        let PrimePower { p, e, .. } = prime_power;
        let top_size = (p as u128).pow(4 * e);
        if top_size > MAX_TABLE_SIZE {
            return Err(Error::EnumerationBound {
                size: top_size,
                bound: MAX_TABLE_SIZE,
            });
        }
        let e = e as usize;
        let levels = [
            GaloisField::new(p, e),
            GaloisField::new(p, 2 * e),
            GaloisField::new(p, 4 * e),
        ];
        let low_mid = levels[1].embedding_from(&levels[0]);
        let mid_top = levels[2].embedding_from(&levels[1]);

        let table = |src: &GaloisField, f: &dyn Fn(&[u32]) -> Vec<u32>| -> Vec<u32> {
            (0..src.order())
                .map(|c| levels[2].encode(&f(&src.decode(c))) as u32)
                .collect()
        };
        let apply = |emb: &Embedding, target: &GaloisField, a: &[u32]| emb.apply(target, a);
        let to_top = [
            table(&levels[0], &|a| {
                let mid = apply(&low_mid, &levels[1], a);
                apply(&mid_top, &levels[2], &mid)
            }),
            table(&levels[1], &|a| apply(&mid_top, &levels[2], a)),
            (0..top_size as u32).collect(),
        ];
        let from_top = std::array::from_fn(|l| {
            let mut inv = vec![NOT_IN_LEVEL; top_size as usize];
            for (code, &t) in to_top[l].iter().enumerate() {
                inv[t as usize] = code as u32;
            }
            inv
        });
        let top = SmallField::new(levels[2].clone());
        Ok(Self {
            prime_power,
            levels,
            top,
            to_top,
            from_top,
        })
    }

    pub fn prime_power(&self) -> PrimePower {
        self.prime_power
    }

    pub fn p(&self) -> u32 {
        self.prime_power.p
    }

    pub fn q(&self) -> u32 {
        self.prime_power.q
    }

    pub fn field(&self, level: Level) -> &GaloisField {
        &self.levels[level.index()]
    }

    /// Defining polynomial of a level, low-degree-first.
    pub fn modulus(&self, level: Level) -> &[u32] {
        self.levels[level.index()].modulus()
    }

    /// Table arithmetic of `F_{q^4}` on raw codes, for enumeration kernels.
    pub fn top(&self) -> &SmallField {
        &self.top
    }

    pub fn size(&self, level: Level) -> u32 {
        self.to_top[level.index()].len() as u32
    }

    pub fn element(&self, level: Level, code: u32) -> Result<FieldElement> {
        let top = *self.to_top[level.index()]
            .get(code as usize)
            .ok_or_else(|| Error::InvalidArgument(format!("code {code} out of range")))?;
        Ok(FieldElement { level, code, top })
    }

    /// The element of `level` with top code `top`, if it lies in that level.
    pub fn from_top(&self, level: Level, top: u32) -> Option<FieldElement> {
        match self.from_top[level.index()][top as usize] {
            NOT_IN_LEVEL => None,
            code => Some(FieldElement { level, code, top }),
        }
    }

    /// Least level containing the top code.
    pub fn smallest_level(&self, top: u32) -> Level {
        Level::ALL
            .into_iter()
            .find(|&l| self.from_top[l.index()][top as usize] != NOT_IN_LEVEL)
            .unwrap_or(Level::Q4)
    }

    pub fn zero(&self, level: Level) -> FieldElement {
        FieldElement { level, code: 0, top: 0 }
    }

    pub fn one(&self, level: Level) -> FieldElement {
        FieldElement { level, code: 1, top: 1 }
    }

    /// The image of an integer in the prime field.
    pub fn integer(&self, level: Level, n: i64) -> FieldElement {
        let c = n.rem_euclid(self.p() as i64) as u32;
        FieldElement { level, code: c, top: c }
    }

    pub fn coefficients(&self, x: &FieldElement) -> Vec<u32> {
        self.field(x.level).decode(x.code as u128)
    }

    pub fn from_coefficients(&self, level: Level, coeffs: &[u32]) -> Result<FieldElement> {
        let f = self.field(level);
        if coeffs.len() != f.degree() || coeffs.iter().any(|&c| c >= self.p()) {
            return Err(Error::InvalidArgument(
                "coefficient vector does not match the level".into(),
            ));
        }
        self.element(level, f.encode(coeffs) as u32)
    }

    /// Re-expresses `x` at a level containing it.
    pub fn embed(&self, x: &FieldElement, level: Level) -> Result<FieldElement> {
        self.from_top(level, x.top)
            .ok_or_else(|| Error::NotInSubset(format!("{level:?}")))
    }

    fn wrap(&self, level: Level, top: u32) -> FieldElement {
        let code = self.from_top[level.index()][top as usize];
        debug_assert_ne!(code, NOT_IN_LEVEL);
        FieldElement { level, code, top }
    }

    pub fn add(&self, x: &FieldElement, y: &FieldElement) -> FieldElement {
        self.wrap(x.level.max(y.level), self.top.add(x.top, y.top))
    }

    pub fn sub(&self, x: &FieldElement, y: &FieldElement) -> FieldElement {
        self.wrap(x.level.max(y.level), self.top.sub(x.top, y.top))
    }

    pub fn mul(&self, x: &FieldElement, y: &FieldElement) -> FieldElement {
        self.wrap(x.level.max(y.level), self.top.mul(x.top, y.top))
    }

    pub fn neg(&self, x: &FieldElement) -> FieldElement {
        self.wrap(x.level, self.top.neg(x.top))
    }

    pub fn inv(&self, x: &FieldElement) -> Option<FieldElement> {
        self.top.inv(x.top).map(|t| self.wrap(x.level, t))
    }

    pub fn pow(&self, x: &FieldElement, e: u64) -> FieldElement {
        self.wrap(x.level, self.top.pow(x.top, e))
    }

    /// `x -> x^q`, at the same level.
    pub fn frobenius_q(&self, x: &FieldElement) -> FieldElement {
        self.pow(x, self.q() as u64)
    }

    /// All elements of a level, sorted by encoding.
    pub fn elements(&self, level: Level) -> Vec<FieldElement> {
        (0..self.size(level))
            .map(|code| FieldElement {
                level,
                code,
                top: self.to_top[level.index()][code as usize],
            })
            .collect()
    }

    /// Top codes of a level's elements, sorted by level encoding.
    pub fn top_codes(&self, level: Level) -> &[u32] {
        &self.to_top[level.index()]
    }

    /// Absolute trace to `F_p`, as an integer in `[0, p)`.
    pub fn trace_to_prime(&self, x: &FieldElement) -> u32 {
        let degree = self.field(x.level).degree();
        let mut acc = 0u32;
        let mut cur = x.top;
        for _ in 0..degree {
            acc = self.top.add(acc, cur);
            cur = self.top.pow(cur, self.p() as u64);
        }
        debug_assert!(acc < self.p());
        acc
    }

    /// Norm `F_{q^2} -> F_q`, `x -> x^{q+1}`.
    pub fn norm_q2_to_q(&self, x: &FieldElement) -> Result<FieldElement> {
        if x.level > Level::Q2 {
            self.embed(x, Level::Q2)?;
        }
        let n = self.top.pow(x.top, self.q() as u64 + 1);
        Ok(self.wrap(Level::Q, n))
    }

    /// `mu_m` inside `F_{q^2}`, sorted by encoding.
    pub fn enumerate_mu(&self, m: u32) -> Result<Vec<FieldElement>> {
        let q = self.q() as u64;
        let group = q * q - 1;
        if m == 0 || group % m as u64 != 0 {
            return Err(Error::InvalidArgument(format!(
                "{m} does not divide q^2 - 1 = {group}"
            )));
        }
        let top_order = self.top.size() as u64 - 1;
        let step = top_order / m as u64;
        let mut out: Vec<FieldElement> = (0..m as u64)
            .map(|j| self.wrap(Level::Q2, self.top.exp(j * step)))
            .collect();
        out.sort_by_key(|x| x.code);
        Ok(out)
    }

    /// Least element of `mu_m` (by encoding) of exact order `m`.
    pub fn mu_generator(&self, m: u32) -> Result<FieldElement> {
        let factors = prime_factors(m as u128);
        Ok(self
            .enumerate_mu(m)?
            .into_iter()
            .find(|x| {
                factors
                    .iter()
                    .all(|&r| self.top.pow(x.top, (m as u128 / r) as u64) != 1)
            })
            .expect("mu_m is cyclic"))
    }

    /// `k` in `[0, m)` with `zeta = g^k` for the generator `g` of `mu_m`.
    pub fn discrete_log_mu(&self, zeta: &FieldElement, m: u32) -> Result<u32> {
        let g = self.mu_generator(m)?;
        let top_order = self.top.size() as u64 - 1;
        let step = top_order / m as u64;
        let log = self
            .top
            .log(zeta.top)
            .ok_or_else(|| Error::NotInSubset(format!("mu_{m}")))? as u64;
        if log % step != 0 {
            return Err(Error::NotInSubset(format!("mu_{m}")));
        }
        let j = log / step;
        let jg = self.top.log(g.top).expect("nonzero") as u64 / step;
        let jg_inv = mod_inverse(jg, m as u64).expect("generator exponent is a unit");
        Ok((j * jg_inv % m as u64) as u32)
    }

    /// `{a in F_{q^2} : a + eps a^q = 0}`, sorted by encoding.
    pub fn f_q_epsilon_set(&self, eps: i32) -> Result<Vec<FieldElement>> {
        if eps != 1 && eps != -1 {
            return Err(Error::InvalidArgument("epsilon must be 1 or -1".into()));
        }
        Ok(self
            .elements(Level::Q2)
            .into_iter()
            .filter(|a| {
                let aq = self.frobenius_q(a);
                let t = if eps == 1 { self.add(a, &aq) } else { self.sub(a, &aq) };
                t.is_zero()
            })
            .collect())
    }

    /// Quadratic residue symbol `a^{(q-1)/2}` of a nonzero `a` in `F_q`.
    pub fn legendre_symbol(&self, a: &FieldElement) -> Result<i32> {
        if self.p() == 2 {
            return Err(Error::Characteristic2("quadratic residue symbol"));
        }
        if a.is_zero() {
            return Err(Error::InvalidArgument("symbol of zero".into()));
        }
        self.embed(a, Level::Q)?;
        let s = self.top.pow(a.top, (self.q() as u64 - 1) / 2);
        Ok(if s == 1 { 1 } else { -1 })
    }
}

pub(crate) fn mod_inverse(a: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(0);
    }
    let (mut r0, mut r1) = (m as i128, (a % m) as i128);
    let (mut s0, mut s1) = (0i128, 1i128);
    while r1 != 0 {
        let quo = r0 / r1;
        (r0, r1) = (r1, r0 - quo * r1);
        (s0, s1) = (s1, s0 - quo * s1);
    }
    (r0 == 1).then(|| s0.rem_euclid(m as i128) as u64)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes_of_levels() {
        let ctx = build_tower(3, 1).unwrap();
        assert_eq!(
            Level::ALL.map(|l| ctx.size(l)),
            [3, 9, 81]
        );
        let ctx = build_tower(2, 2).unwrap();
        assert_eq!(Level::ALL.map(|l| ctx.size(l)), [4, 16, 256]);
    }

    #[test]
    fn rejects_bad_parameters() {
        assert_eq!(build_tower(4, 1).unwrap_err(), Error::NotPrime(4));
        assert!(matches!(
            build_tower(17, 1),
            Err(Error::EnumerationBound { .. })
        ));
        assert!(build_tower(2, 4).is_ok());
    }

    #[test]
    fn embeddings_are_homomorphisms_and_commute() {
        for (p, e) in [(2, 1), (3, 1), (2, 2), (5, 1)] {
            let ctx = build_tower(p, e).unwrap();
            for level in [Level::Q, Level::Q2] {
                let f = ctx.field(level);
                let elems = ctx.elements(level);
                for x in &elems {
                    for y in &elems {
                        let direct = f.mul(&ctx.coefficients(x), &ctx.coefficients(y));
                        let via_top = ctx.mul(x, y);
                        assert_eq!(ctx.coefficients(&via_top), direct);
                    }
                }
            }
            // F_q seen inside F_{q^2} then inside F_{q^4} agrees with the direct map
            for x in ctx.elements(Level::Q) {
                let mid = ctx.embed(&x, Level::Q2).unwrap();
                assert_eq!(mid.top_code(), x.top_code());
                assert_eq!(ctx.frobenius_q(&x), x);
            }
        }
    }

    #[test]
    fn frobenius_fixes_exactly_f_q() {
        for (p, e) in [(3, 1), (5, 1), (2, 2)] {
            let ctx = build_tower(p, e).unwrap();
            let fixed = ctx
                .elements(Level::Q2)
                .into_iter()
                .filter(|x| ctx.frobenius_q(x) == *x)
                .count();
            assert_eq!(fixed as u32, ctx.q());
            for x in ctx.elements(Level::Q4) {
                let mut y = x;
                for _ in 0..4 {
                    y = ctx.frobenius_q(&y);
                }
                assert_eq!(y, x);
            }
        }
    }

    #[test]
    fn mu_sets() {
        let ctx = build_tower(3, 1).unwrap();
        let mu4 = ctx.enumerate_mu(4).unwrap();
        assert_eq!(mu4.len(), 4);
        let minus_one = ctx.integer(Level::Q2, -1);
        assert_eq!(ctx.discrete_log_mu(&minus_one, 4).unwrap(), 2);
        let g = ctx.mu_generator(4).unwrap();
        assert_eq!(ctx.discrete_log_mu(&g, 4).unwrap(), 1);
        assert_eq!(ctx.discrete_log_mu(&ctx.one(Level::Q2), 4).unwrap(), 0);
        assert_eq!(ctx.enumerate_mu(1).unwrap(), vec![ctx.one(Level::Q2)]);
        assert!(ctx.enumerate_mu(5).is_err());

        let ctx = build_tower(2, 1).unwrap();
        assert_eq!(ctx.enumerate_mu(3).unwrap().len(), 3);
    }

    #[test]
    fn epsilon_sets() {
        let ctx = build_tower(3, 1).unwrap();
        let minus = ctx.f_q_epsilon_set(-1).unwrap();
        assert_eq!(minus, ctx.elements(Level::Q).iter().map(|x| ctx.embed(x, Level::Q2).unwrap()).collect::<Vec<_>>());
        // brute force a + a^3 = 0 over F_9
        let plus = ctx.f_q_epsilon_set(1).unwrap();
        let brute: Vec<_> = ctx
            .elements(Level::Q2)
            .into_iter()
            .filter(|a| ctx.add(a, &ctx.pow(a, 3)).is_zero())
            .collect();
        assert_eq!(plus, brute);
        assert_eq!(plus.len(), 3);

        let ctx = build_tower(2, 1).unwrap();
        assert_eq!(ctx.f_q_epsilon_set(1).unwrap(), ctx.f_q_epsilon_set(-1).unwrap());
        assert_eq!(ctx.f_q_epsilon_set(1).unwrap().len(), 2);
    }

    #[test]
    fn legendre_values() {
        let ctx = build_tower(3, 1).unwrap();
        assert_eq!(ctx.legendre_symbol(&ctx.integer(Level::Q, 1)).unwrap(), 1);
        assert_eq!(ctx.legendre_symbol(&ctx.integer(Level::Q, 2)).unwrap(), -1);
        let ctx = build_tower(5, 1).unwrap();
        assert_eq!(ctx.legendre_symbol(&ctx.integer(Level::Q, 4)).unwrap(), 1);
        let ctx = build_tower(2, 1).unwrap();
        assert!(ctx.legendre_symbol(&ctx.one(Level::Q)).is_err());
    }

    #[test]
    fn trace_and_norm() {
        let ctx = build_tower(3, 2).unwrap();
        // the trace F_9 -> F_3 is onto and each fibre has 3 elements
        let mut hist = [0; 3];
        for x in ctx.elements(Level::Q) {
            hist[ctx.trace_to_prime(&x) as usize] += 1;
        }
        assert_eq!(hist, [3, 3, 3]);
        for x in ctx.elements(Level::Q2) {
            let n = ctx.norm_q2_to_q(&x).unwrap();
            assert_eq!(ctx.frobenius_q(&n), n);
        }
    }
}
