//! Arithmetic in `F_{p^d} = F_p[t]/(m(t))` on coefficient vectors.
//!
//! This is the slow, table-free representation. It is used to build the
//! table-driven levels of the tower and, on its own, for the larger fields in
//! which twisted-Frobenius fixed points live.

use super::linalg::kernel_basis;
use super::poly;

/// Coefficients over `F_p` in the basis `1, t, ..., t^{d-1}`.
pub type Coeffs = Vec<u32>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaloisField {
    p: u32,
    degree: usize,
    /// Monic, low-degree-first, length `degree + 1`.
    modulus: Vec<u32>,
}

impl GaloisField {
    /// `F_{p^d}` modulo the lexicographically least monic irreducible of
    /// degree `d`.
    pub fn new(p: u32, degree: usize) -> Self {
        Self::with_modulus(p, poly::least_irreducible(p, degree))
    }

    pub fn with_modulus(p: u32, modulus: Vec<u32>) -> Self {
        let degree = modulus.len() - 1;
        debug_assert_eq!(modulus[degree], 1);
        Self { p, degree, modulus }
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn order(&self) -> u128 {
        (self.p as u128).pow(self.degree as u32)
    }

    pub fn zero(&self) -> Coeffs {
        vec![0; self.degree]
    }

    pub fn one(&self) -> Coeffs {
        self.constant(1)
    }

    pub fn constant(&self, c: u32) -> Coeffs {
        let mut v = self.zero();
        v[0] = c % self.p;
        v
    }

    /// The basis element `t^i`.
    pub fn basis(&self, i: usize) -> Coeffs {
        let mut v = self.zero();
        v[i] = 1;
        v
    }

    pub fn is_zero(&self, a: &[u32]) -> bool {
        a.iter().all(|&c| c == 0)
    }

    fn pad(&self, mut v: Vec<u32>) -> Coeffs {
        v.resize(self.degree, 0);
        v
    }

    pub fn add(&self, a: &[u32], b: &[u32]) -> Coeffs {
        a.iter().zip(b).map(|(&x, &y)| (x + y) % self.p).collect()
    }

    pub fn sub(&self, a: &[u32], b: &[u32]) -> Coeffs {
        a.iter()
            .zip(b)
            .map(|(&x, &y)| (x + self.p - y) % self.p)
            .collect()
    }

    pub fn neg(&self, a: &[u32]) -> Coeffs {
        a.iter().map(|&x| (self.p - x) % self.p).collect()
    }

    pub fn scale(&self, a: &[u32], c: u32) -> Coeffs {
        let p = self.p as u64;
        a.iter()
            .map(|&x| (x as u64 * (c as u64 % p) % p) as u32)
            .collect()
    }

    pub fn mul(&self, a: &[u32], b: &[u32]) -> Coeffs {
        let d = self.degree;
        let p = self.p as u64;
        let mut acc = vec![0u64; 2 * d - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                acc[i + j] += x as u64 * y as u64;
            }
            // keep accumulators bounded for large p and degree
            if i % 16 == 15 {
                for c in acc.iter_mut() {
                    *c %= p;
                }
            }
        }
        for c in acc.iter_mut() {
            *c %= p;
        }
        // reduce by the monic modulus from the top down
        for k in (d..2 * d - 1).rev() {
            let c = acc[k];
            if c == 0 {
                continue;
            }
            acc[k] = 0;
            for j in 0..d {
                let t = c * self.modulus[j] as u64 % p;
                acc[k - d + j] = (acc[k - d + j] + p - t) % p;
            }
        }
        acc.truncate(d);
        acc.into_iter().map(|c| c as u32).collect()
    }

    pub fn pow(&self, a: &[u32], mut e: u128) -> Coeffs {
        let mut acc = self.one();
        let mut base = a.to_vec();
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

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: &[u32]) -> Option<Coeffs> {
        if self.is_zero(a) {
            return None;
        }
        // extended Euclid: track s with s * a = r (mod modulus)
        let p = self.p;
        let (mut r0, mut r1) = (self.modulus.clone(), poly::trim(a.to_vec()));
        let (mut s0, mut s1): (Vec<u32>, Vec<u32>) = (Vec::new(), vec![1]);
        while !r1.is_empty() {
            let (quo, rem) = poly::div_rem(&r0, &r1, p);
            let s2 = poly::sub(&s0, &poly::mul(&quo, &s1, p), p);
            r0 = std::mem::replace(&mut r1, rem);
            s0 = std::mem::replace(&mut s1, s2);
        }
        // r0 is a nonzero constant
        let c = poly::inv_mod_p(r0[0], p);
        let inv: Vec<u32> = s0
            .iter()
            .map(|&x| (x as u64 * c as u64 % p as u64) as u32)
            .collect();
        Some(self.pad(inv))
    }

    /// Absolute Frobenius `x -> x^p`.
    pub fn frobenius(&self, a: &[u32]) -> Coeffs {
        self.pow(a, self.p as u128)
    }

    /// `x -> x^(p^k)`.
    pub fn frobenius_iter(&self, a: &[u32], k: usize) -> Coeffs {
        (0..k).fold(a.to_vec(), |x, _| self.frobenius(&x))
    }

    /// Integer encoding `sum c_i p^i`.
    pub fn encode(&self, a: &[u32]) -> u128 {
        a.iter()
            .rev()
            .fold(0u128, |acc, &c| acc * self.p as u128 + c as u128)
    }

    pub fn decode(&self, mut code: u128) -> Coeffs {
        let mut v = Vec::with_capacity(self.degree);
        for _ in 0..self.degree {
            v.push((code % self.p as u128) as u32);
            code /= self.p as u128;
        }
        v
    }

    /// Evaluates a polynomial with `F_p` coefficients at `x`.
    pub fn eval_fp_poly(&self, f: &[u32], x: &[u32]) -> Coeffs {
        f.iter().rev().fold(self.zero(), |acc, &c| {
            let shifted = self.mul(&acc, x);
            self.add(&shifted, &self.constant(c))
        })
    }

    /// All elements of the unique subfield of size `p^sub_degree`, sorted by
    /// encoding. Computed as the `F_p`-kernel of `x -> x^(p^k) - x`.
    pub fn subfield_elements(&self, sub_degree: usize) -> Vec<Coeffs> {
        assert!(
            self.degree % sub_degree == 0,
            "F_p^{sub_degree} is not a subfield of F_p^{}",
            self.degree
        );
        let d = self.degree;
        // column j is the image of t^j
        let cols: Vec<Coeffs> = (0..d)
            .map(|j| {
                let b = self.basis(j);
                self.sub(&self.frobenius_iter(&b, sub_degree), &b)
            })
            .collect();
        let rows: Vec<Vec<u32>> = (0..d).map(|i| cols.iter().map(|c| c[i]).collect()).collect();
        let ker = kernel_basis(&rows, d, self.p);
        debug_assert_eq!(ker.len(), sub_degree);
        let size = (self.p as usize).pow(ker.len() as u32);
        let mut out: Vec<Coeffs> = (0..size)
            .map(|idx| {
                let mut rest = idx;
                let mut v = self.zero();
                for b in &ker {
                    let c = (rest % self.p as usize) as u32;
                    rest /= self.p as usize;
                    v = self.add(&v, &self.scale(b, c));
                }
                v
            })
            .collect();
        out.sort_by_key(|v| self.encode(v));
        out
    }

    /// Embedding of `small` into `self` sending `small`'s generator to the
    /// least-encoded root of its modulus.
    pub fn embedding_from(&self, small: &GaloisField) -> Embedding {
        assert_eq!(small.p, self.p);
        let root = self
            .subfield_elements(small.degree)
            .into_iter()
            .find(|x| self.is_zero(&self.eval_fp_poly(&small.modulus, x)))
            .expect("a subfield contains every root of its defining polynomial");
        let mut images = Vec::with_capacity(small.degree);
        let mut power = self.one();
        for _ in 0..small.degree {
            images.push(power.clone());
            power = self.mul(&power, &root);
        }
        Embedding { images }
    }
}

/// An `F_p`-linear field embedding, stored as the images of the source basis.
#[derive(Clone, Debug)]
pub struct Embedding {
    images: Vec<Coeffs>,
}

impl Embedding {
    pub fn apply(&self, target: &GaloisField, a: &[u32]) -> Coeffs {
        a.iter()
            .zip(&self.images)
            .fold(target.zero(), |acc, (&c, img)| {
                target.add(&acc, &target.scale(img, c))
            })
    }

}
