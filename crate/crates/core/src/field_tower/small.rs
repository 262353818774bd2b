//! Log/antilog table arithmetic for fields of at most 2^16 elements.
//!
//! Elements are `u32` codes identical to [`GaloisField::encode`]. Addition
//! goes through Zech logarithms, so every operation is a few table lookups.

use super::galois::GaloisField;
use super::poly::prime_factors;

const NO_LOG: u32 = u32::MAX;

#[derive(Clone, Debug)]
pub struct SmallField {
    base: GaloisField,
    size: u32,
    /// `exp[i] = g^i`, stored for `i < 2(size - 1)` so sums of logs need no reduction.
    exp: Vec<u32>,
    log: Vec<u32>,
    /// `zech[i] = log(1 + g^i)`, or `NO_LOG` when `1 + g^i = 0`.
    zech: Vec<u32>,
    neg: Vec<u32>,
}

pub const MAX_TABLE_SIZE: u128 = 1 << 16;

impl SmallField {
    pub fn new(base: GaloisField) -> Self {
        let size = base.order();
        assert!(size <= MAX_TABLE_SIZE, "field too large for tables");
        let size = size as u32;
        let group = (size - 1) as u128;
        let factors = prime_factors(group);
        let generator = (1..size)
            .map(|c| base.decode(c as u128))
            .find(|g| {
                factors
                    .iter()
                    .all(|&r| base.pow(g, group / r) != base.one())
            })
            .expect("the multiplicative group is cyclic");

        let order = (size - 1) as usize;
        let mut exp = vec![0u32; 2 * order.max(1)];
        let mut log = vec![NO_LOG; size as usize];
        let mut cur = base.one();
        for i in 0..order {
            let code = base.encode(&cur) as u32;
            exp[i] = code;
            exp[i + order] = code;
            log[code as usize] = i as u32;
            cur = base.mul(&cur, &generator);
        }

        let neg = (0..size)
            .map(|c| base.encode(&base.neg(&base.decode(c as u128))) as u32)
            .collect();
        let one = base.one();
        let zech = (0..order)
            .map(|i| {
                let s = base.add(&one, &base.decode(exp[i] as u128));
                match base.encode(&s) as u32 {
                    0 => NO_LOG,
                    c => log[c as usize],
                }
            })
            .collect();

        Self {
            base,
            size,
            exp,
            log,
            zech,
            neg,
        }
    }

    pub fn base(&self) -> &GaloisField {
        &self.base
    }

    pub fn size(&self) -> u32 {
        self.size
    }

    pub fn characteristic(&self) -> u32 {
        self.base.characteristic()
    }

    /// The primitive element used for the tables: the least code of order
    /// `size - 1`.
    pub fn generator(&self) -> u32 {
        self.exp[1 % (self.size as usize - 1).max(1)]
    }

    #[inline]
    pub fn log(&self, a: u32) -> Option<u32> {
        match self.log[a as usize] {
            NO_LOG => None,
            l => Some(l),
        }
    }

    #[inline]
    pub fn exp(&self, i: u64) -> u32 {
        self.exp[(i % (self.size as u64 - 1)) as usize]
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        self.exp[(self.log[a as usize] + self.log[b as usize]) as usize]
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        if a == 0 {
            return b;
        }
        if b == 0 {
            return a;
        }
        let order = self.size - 1;
        let la = self.log[a as usize];
        let lb = self.log[b as usize];
        let d = if lb >= la { lb - la } else { lb + order - la };
        match self.zech[d as usize] {
            NO_LOG => 0,
            z => self.exp[(la + z) as usize],
        }
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        self.neg[a as usize]
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg[b as usize])
    }

    pub fn inv(&self, a: u32) -> Option<u32> {
        let order = self.size - 1;
        self.log(a).map(|l| self.exp[((order - l) % order) as usize])
    }

    #[inline]
    pub fn pow(&self, a: u32, e: u64) -> u32 {
        if e == 0 {
            return 1;
        }
        match self.log(a) {
            None => 0,
            Some(l) => self.exp(l as u64 * e),
        }
    }

    /// `a * c` for `c` in the prime field, given as an integer.
    pub fn scale(&self, a: u32, c: u32) -> u32 {
        self.mul(a, c % self.characteristic())
    }
}
