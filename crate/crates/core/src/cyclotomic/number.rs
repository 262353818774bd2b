//! `Q(zeta_m)` as `Q[x]/(Phi_m)`, with exact rational coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num::{BigInt, BigRational, One, Signed, Zero};
use serde::ser::{Serialize, SerializeSeq, Serializer};

use crate::error::{Error, Result};

/// Integer polynomial, low-degree-first.
type IntPoly = Vec<i64>;

fn int_poly_div_exact(num: &[i64], den: &[i64]) -> IntPoly {
    // den is monic
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let mut quo = vec![0i64; rem.len() - dd];
    for k in (0..quo.len()).rev() {
        let c = rem[k + dd];
        quo[k] = c;
        for (j, &b) in den.iter().enumerate() {
            rem[k + j] -= c * b;
        }
    }
    debug_assert!(rem.iter().all(|&c| c == 0));
    quo
}

/// The `m`-th cyclotomic polynomial.
pub fn cyclotomic_polynomial(m: u32) -> IntPoly {
    let mut num = vec![0i64; m as usize + 1];
    num[0] = -1;
    num[m as usize] = 1;
    let mut out = num;
    for d in 1..m {
        if m % d == 0 {
            out = int_poly_div_exact(&out, &cyclotomic_polynomial(d));
        }
    }
    out
}

#[derive(Debug)]
pub struct CyclotomicField {
    m: u32,
    degree: usize,
    /// `powers[k]` is `zeta^k` in the power basis, `k < m`.
    powers: Vec<Vec<i64>>,
}

impl CyclotomicField {
    pub fn new(m: u32) -> Arc<Self> {
        assert!(m >= 1);
        let phi = cyclotomic_polynomial(m);
        let degree = phi.len() - 1;
        let mut powers = Vec::with_capacity(m as usize);
        let mut cur = vec![0i64; degree];
        cur[0] = 1;
        for _ in 0..m {
            powers.push(cur.clone());
            // multiply by x and reduce with x^degree = -sum phi_j x^j
            let top = cur[degree - 1];
            let mut next = vec![0i64; degree];
            for j in (1..degree).rev() {
                next[j] = cur[j - 1];
            }
            for j in 0..degree {
                next[j] -= top * phi[j];
            }
            cur = next;
        }
        Arc::new(Self { m, degree, powers })
    }

    pub fn conductor(&self) -> u32 {
        self.m
    }

    /// `phi(m)`, the dimension over `Q`.
    pub fn degree(&self) -> usize {
        self.degree
    }
}

/// An exact element of `Q(zeta_m)` in the power basis `1, zeta, ..., zeta^{phi(m)-1}`.
#[derive(Clone)]
pub struct CycNumber {
    field: Arc<CyclotomicField>,
    coeffs: Vec<BigRational>,
}

impl PartialEq for CycNumber {
    fn eq(&self, other: &Self) -> bool {
        self.field.m == other.field.m && self.coeffs == other.coeffs
    }
}

impl Eq for CycNumber {}

impl CycNumber {
    pub fn zero(field: &Arc<CyclotomicField>) -> Self {
        Self {
            field: field.clone(),
            coeffs: vec![BigRational::zero(); field.degree],
        }
    }

    pub fn one(field: &Arc<CyclotomicField>) -> Self {
        Self::rational(field, BigRational::one())
    }

    pub fn integer(field: &Arc<CyclotomicField>, n: i64) -> Self {
        Self::rational(field, BigRational::from_integer(BigInt::from(n)))
    }

    pub fn rational(field: &Arc<CyclotomicField>, r: BigRational) -> Self {
        let mut out = Self::zero(field);
        out.coeffs[0] = r;
        out
    }

    /// `zeta_m^k` for any integer `k`.
    pub fn zeta_pow(field: &Arc<CyclotomicField>, k: i64) -> Self {
        let idx = k.rem_euclid(field.m as i64) as usize;
        Self {
            field: field.clone(),
            coeffs: field.powers[idx]
                .iter()
                .map(|&c| BigRational::from_integer(BigInt::from(c)))
                .collect(),
        }
    }

    pub fn field(&self) -> &Arc<CyclotomicField> {
        &self.field
    }

    pub fn conductor(&self) -> u32 {
        self.field.m
    }

    pub fn coefficients(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs[1..].iter().all(Zero::is_zero)
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        self.is_rational().then(|| self.coeffs[0].clone())
    }

    /// True when every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        Self {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    /// Exact division by `base^t`; used for Tate-twist denominators.
    pub fn div_power(&self, base: u32, t: u32) -> Self {
        let d = BigInt::from(base).pow(t);
        self.scale(&BigRational::new(BigInt::one(), d))
    }

    /// Complex conjugation `zeta -> zeta^{-1}`.
    pub fn conjugate(&self) -> Self {
        let mut out = Self::zero(&self.field);
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let k = (self.field.m as usize - i) % self.field.m as usize;
            for (j, &b) in self.field.powers[k].iter().enumerate() {
                if b != 0 {
                    out.coeffs[j] += c * BigRational::from_integer(BigInt::from(b));
                }
            }
        }
        out
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut acc = Self::one(&self.field);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Multiplicative inverse, by the extended Euclidean algorithm against
    /// `Phi_m` in `Q[x]`.
    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::InvalidArgument("inverse of zero".into()));
        }
        let phi: Vec<BigRational> = cyclotomic_polynomial(self.field.m)
            .into_iter()
            .map(|c| BigRational::from_integer(BigInt::from(c)))
            .collect();
        let (mut r0, mut r1) = (phi, qtrim(self.coeffs.clone()));
        let (mut s0, mut s1) = (Vec::new(), vec![BigRational::one()]);
        while !r1.is_empty() {
            let (quo, rem) = qdiv_rem(&r0, &r1);
            let s2 = qsub(&s0, &qmul(&quo, &s1));
            r0 = std::mem::replace(&mut r1, rem);
            s0 = std::mem::replace(&mut s1, s2);
        }
        let c = r0[0].recip();
        let mut out = Self::zero(&self.field);
        for (i, s) in s0.into_iter().enumerate() {
            out.coeffs[i] = s * &c;
        }
        Ok(out)
    }

    /// Coefficients rendered as decimal strings (`"a"` or `"a/b"`).
    pub fn coefficient_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }
}

fn qtrim(mut f: Vec<BigRational>) -> Vec<BigRational> {
    while f.last().is_some_and(Zero::is_zero) {
        f.pop();
    }
    f
}

fn qsub(f: &[BigRational], g: &[BigRational]) -> Vec<BigRational> {
    let n = f.len().max(g.len());
    let zero = BigRational::zero();
    qtrim(
        (0..n)
            .map(|i| f.get(i).unwrap_or(&zero) - g.get(i).unwrap_or(&zero))
            .collect(),
    )
}

fn qmul(f: &[BigRational], g: &[BigRational]) -> Vec<BigRational> {
    if f.is_empty() || g.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); f.len() + g.len() - 1];
    for (i, a) in f.iter().enumerate() {
        for (j, b) in g.iter().enumerate() {
            out[i + j] += a * b;
        }
    }
    qtrim(out)
}

fn qdiv_rem(f: &[BigRational], g: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let dg = g.len() - 1;
    let lead = g[dg].recip();
    let mut rem = qtrim(f.to_vec());
    let mut quo = vec![BigRational::zero(); rem.len().saturating_sub(dg).max(1)];
    while rem.len() > dg {
        let shift = rem.len() - 1 - dg;
        let c = rem.last().unwrap() * &lead;
        for (j, b) in g.iter().enumerate() {
            rem[shift + j] -= &c * b;
        }
        quo[shift] = c;
        rem = qtrim(rem);
    }
    (qtrim(quo), rem)
}

impl<'a> Add<&'a CycNumber> for &'a CycNumber {
    type Output = CycNumber;
    fn add(self, rhs: &CycNumber) -> CycNumber {
        debug_assert_eq!(self.field.m, rhs.field.m);
        CycNumber {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
        }
    }
}

impl<'a> Sub<&'a CycNumber> for &'a CycNumber {
    type Output = CycNumber;
    fn sub(self, rhs: &CycNumber) -> CycNumber {
        debug_assert_eq!(self.field.m, rhs.field.m);
        CycNumber {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect(),
        }
    }
}

impl<'a> Mul<&'a CycNumber> for &'a CycNumber {
    type Output = CycNumber;
    fn mul(self, rhs: &CycNumber) -> CycNumber {
        debug_assert_eq!(self.field.m, rhs.field.m);
        let d = self.field.degree;
        let m = self.field.m as usize;
        let mut raw = vec![BigRational::zero(); 2 * d - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    raw[i + j] += a * b;
                }
            }
        }
        let mut out = CycNumber::zero(&self.field);
        for (k, c) in raw.into_iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if k < d {
                out.coeffs[k] += c;
            } else {
                for (j, &b) in self.field.powers[k % m].iter().enumerate() {
                    if b != 0 {
                        out.coeffs[j] += &c * BigRational::from_integer(BigInt::from(b));
                    }
                }
            }
        }
        out
    }
}

impl Neg for &CycNumber {
    type Output = CycNumber;
    fn neg(self) -> CycNumber {
        CycNumber {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr<CycNumber> for CycNumber {
            type Output = CycNumber;
            fn $method(self, rhs: CycNumber) -> CycNumber {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl std::iter::Sum for CycNumber {
    fn sum<I: Iterator<Item = CycNumber>>(mut iter: I) -> CycNumber {
        let first = iter.next().expect("sum of an empty sequence has no field");
        iter.fold(first, |acc, x| &acc + &x)
    }
}

impl fmt::Debug for CycNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for CycNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            let body = match (i, mag.is_one()) {
                (0, _) => mag.to_string(),
                (1, true) => "z".to_string(),
                (1, false) => format!("{mag}*z"),
                (_, true) => format!("z^{i}"),
                (_, false) => format!("{mag}*z^{i}"),
            };
            terms.push((sign, body));
        }
        if terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (sign, body)) in terms.iter().enumerate() {
            match (k, *sign) {
                (0, "-") => write!(f, "-{body}")?,
                (0, _) => write!(f, "{body}")?,
                (_, s) => write!(f, " {s} {body}")?,
            }
        }
        Ok(())
    }
}

/// Serialized as the array of coefficient strings.
impl Serialize for CycNumber {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.coeffs.len()))?;
        for c in &self.coeffs {
            seq.serialize_element(&c.to_string())?;
        }
        seq.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(30).len() - 1, 8);
    }

    #[test]
    fn roots_of_unity_behave() {
        let f = CyclotomicField::new(12);
        let z = CycNumber::zeta_pow(&f, 1);
        assert_eq!(z.pow(12), CycNumber::one(&f));
        assert_ne!(z.pow(6), CycNumber::one(&f));
        assert_eq!(z.pow(6), CycNumber::integer(&f, -1));
        assert_eq!(&z * &z.conjugate(), CycNumber::one(&f));
        let total: CycNumber = (0..12).map(|k| CycNumber::zeta_pow(&f, k)).sum();
        assert!(total.is_zero());
    }

    #[test]
    fn inverse_and_display() {
        let f = CyclotomicField::new(5);
        let x = &CycNumber::integer(&f, 2) + &CycNumber::zeta_pow(&f, 2);
        let inv = x.inverse().unwrap();
        assert_eq!(&x * &inv, CycNumber::one(&f));
        assert!(CycNumber::zero(&f).inverse().is_err());
        assert_eq!(x.to_string(), "2 + z^2");
        assert_eq!(CycNumber::integer(&f, 3).div_power(3, 1), CycNumber::one(&f));
    }
}
