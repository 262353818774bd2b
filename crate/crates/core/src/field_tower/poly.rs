//! Dense polynomials over a prime field `F_p`.
//!
//! Coefficients are stored low-degree-first and kept trimmed, so the zero
//! polynomial is the empty vector. Only the handful of operations the tower
//! construction needs are provided.

/// Drops trailing zero coefficients.
pub fn trim(mut f: Vec<u32>) -> Vec<u32> {
    while f.last() == Some(&0) {
        f.pop();
    }
    f
}

/// Degree of `f`, or `None` for the zero polynomial.
pub fn degree(f: &[u32]) -> Option<usize> {
    f.iter().rposition(|&c| c != 0)
}

pub fn inv_mod_p(a: u32, p: u32) -> u32 {
    debug_assert!(a % p != 0);
    pow_mod_p(a, p - 2, p)
}

pub fn pow_mod_p(mut a: u32, mut e: u32, p: u32) -> u32 {
    let p64 = p as u64;
    let mut acc = 1u64;
    let mut base = a as u64 % p64;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p64;
        }
        base = base * base % p64;
        e >>= 1;
    }
    a = acc as u32;
    a
}

pub fn add(f: &[u32], g: &[u32], p: u32) -> Vec<u32> {
    let n = f.len().max(g.len());
    let out = (0..n)
        .map(|i| (f.get(i).copied().unwrap_or(0) + g.get(i).copied().unwrap_or(0)) % p)
        .collect();
    trim(out)
}

pub fn sub(f: &[u32], g: &[u32], p: u32) -> Vec<u32> {
    let n = f.len().max(g.len());
    let out = (0..n)
        .map(|i| (f.get(i).copied().unwrap_or(0) + p - g.get(i).copied().unwrap_or(0)) % p)
        .collect();
    trim(out)
}

pub fn mul(f: &[u32], g: &[u32], p: u32) -> Vec<u32> {
    if f.is_empty() || g.is_empty() {
        return Vec::new();
    }
    let p64 = p as u64;
    let mut acc = vec![0u64; f.len() + g.len() - 1];
    for (i, &a) in f.iter().enumerate() {
        if a == 0 {
            continue;
        }
        for (j, &b) in g.iter().enumerate() {
            acc[i + j] = (acc[i + j] + a as u64 * b as u64) % p64;
        }
    }
    trim(acc.into_iter().map(|c| c as u32).collect())
}

/// Quotient and remainder of `f` by a nonzero `g`.
pub fn div_rem(f: &[u32], g: &[u32], p: u32) -> (Vec<u32>, Vec<u32>) {
    let dg = degree(g).expect("division by the zero polynomial");
    let mut r = trim(f.to_vec());
    let lead_inv = inv_mod_p(g[dg], p) as u64;
    let p64 = p as u64;
    let mut quot = vec![0u32; r.len().saturating_sub(dg).max(1)];
    while let Some(dr) = degree(&r) {
        if dr < dg {
            break;
        }
        let shift = dr - dg;
        let c = (r[dr] as u64 * lead_inv % p64) as u32;
        quot[shift] = c;
        for (j, &b) in g.iter().enumerate().take(dg + 1) {
            let t = (c as u64 * b as u64) % p64;
            r[shift + j] = ((r[shift + j] as u64 + p64 - t) % p64) as u32;
        }
        r = trim(r);
    }
    (trim(quot), r)
}

pub fn rem(f: &[u32], g: &[u32], p: u32) -> Vec<u32> {
    div_rem(f, g, p).1
}

/// Monic greatest common divisor.
pub fn gcd(f: &[u32], g: &[u32], p: u32) -> Vec<u32> {
    let mut a = trim(f.to_vec());
    let mut b = trim(g.to_vec());
    while !b.is_empty() {
        let r = rem(&a, &b, p);
        a = b;
        b = r;
    }
    make_monic(a, p)
}

pub fn make_monic(f: Vec<u32>, p: u32) -> Vec<u32> {
    match degree(&f) {
        None => f,
        Some(d) => {
            let inv = inv_mod_p(f[d], p) as u64;
            f.into_iter()
                .map(|c| (c as u64 * inv % p as u64) as u32)
                .collect()
        }
    }
}

pub fn mul_mod(f: &[u32], g: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    rem(&mul(f, g, p), m, p)
}

/// `f^e mod m`.
pub fn pow_mod(f: &[u32], mut e: u128, m: &[u32], p: u32) -> Vec<u32> {
    let mut acc = vec![1u32];
    let mut base = rem(f, m, p);
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(&acc, &base, m, p);
        }
        e >>= 1;
        if e > 0 {
            base = mul_mod(&base, &base, m, p);
        }
    }
    rem(&acc, m, p)
}

/// Evaluates `f` at `x` in `F_p`.
pub fn eval(f: &[u32], x: u32, p: u32) -> u32 {
    let p64 = p as u64;
    f.iter()
        .rev()
        .fold(0u64, |acc, &c| (acc * x as u64 + c as u64) % p64) as u32
}

pub fn prime_factors(mut n: u128) -> Vec<u128> {
    let mut out = Vec::new();
    let mut d = 2u128;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Rabin's irreducibility test for a monic `f` of degree `d >= 1`.
pub fn is_irreducible(f: &[u32], p: u32) -> bool {
    let d = match degree(f) {
        Some(d) if d >= 1 => d,
        _ => return false,
    };
    if d == 1 {
        return true;
    }
    let x = vec![0u32, 1];
    // frob[i] = x^(p^i) mod f
    let mut frob = Vec::with_capacity(d + 1);
    frob.push(x.clone());
    for i in 1..=d {
        let next = pow_mod(&frob[i - 1], p as u128, f, p);
        frob.push(next);
    }
    if frob[d] != rem(&x, f, p) {
        return false;
    }
    prime_factors(d as u128).into_iter().all(|r| {
        let h = sub(&frob[d / r as usize], &x, p);
        degree(&gcd(&h, f, p)) == Some(0)
    })
}

/// The lexicographically least monic irreducible polynomial of degree `d`
/// over `F_p`, comparing coefficient vectors `(c_0, ..., c_{d-1})` with the
/// constant term most significant.
pub fn least_irreducible(p: u32, d: usize) -> Vec<u32> {
    assert!(d >= 1);
    let total = (p as u128).pow(d as u32);
    // a zero constant term means x divides f, so start at c_0 = 1
    let start = if d > 1 { total / p as u128 } else { 0 };
    for idx in start..total {
        // big-endian digits of idx map to c_0 .. c_{d-1}
        let mut f = vec![0u32; d + 1];
        let mut rest = idx;
        for slot in (0..d).rev() {
            f[slot] = (rest % p as u128) as u32;
            rest /= p as u128;
        }
        f[d] = 1;
        if is_irreducible(&f, p) {
            return f;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn least_irreducibles_small_cases() {
        assert_eq!(least_irreducible(2, 1), vec![0, 1]);
        assert_eq!(least_irreducible(3, 1), vec![0, 1]);
        // x^2 + x + 1 is the only irreducible quadratic over F_2
        assert_eq!(least_irreducible(2, 2), vec![1, 1, 1]);
        // x^2 + 1 over F_3
        assert_eq!(least_irreducible(3, 2), vec![1, 0, 1]);
        // over F_5, x^2 + 1 splits (-1 = 2^2) but x^2 + x + 1 has discriminant 2
        assert_eq!(least_irreducible(5, 2), vec![1, 1, 1]);
        // over F_2, x^4 + 1 = (x + 1)^4 and x^4 + x^3 + 1 is irreducible
        assert_eq!(least_irreducible(2, 4), vec![1, 0, 0, 1, 1]);
    }

    #[test]
    fn irreducibility_matches_root_and_factor_search() {
        // brute force over all monic cubics and quartics over F_3
        for d in [2usize, 3, 4] {
            let total = 3u32.pow(d as u32);
            let mut count = 0;
            for idx in 0..total {
                let mut f = vec![0u32; d + 1];
                let mut rest = idx;
                for c in f.iter_mut().take(d) {
                    *c = rest % 3;
                    rest /= 3;
                }
                f[d] = 1;
                let reducible = (1..=d / 2).any(|k| has_monic_factor_of_degree(&f, k, 3));
                assert_eq!(is_irreducible(&f, 3), !reducible, "{f:?}");
                if !reducible {
                    count += 1;
                }
            }
            // number of monic irreducibles of degree d over F_3
            let expected = match d {
                2 => 3,
                3 => 8,
                _ => 18,
            };
            assert_eq!(count, expected);
        }
    }

    fn has_monic_factor_of_degree(f: &[u32], k: usize, p: u32) -> bool {
        let total = p.pow(k as u32);
        (0..total).any(|idx| {
            let mut g = vec![0u32; k + 1];
            let mut rest = idx;
            for c in g.iter_mut().take(k) {
                *c = rest % p;
                rest /= p;
            }
            g[k] = 1;
            rem(f, &g, p).is_empty()
        })
    }

    #[test]
    fn div_rem_reconstructs() {
        let f = vec![4, 0, 3, 1, 2];
        let g = vec![1, 2, 1];
        let (quo, r) = div_rem(&f, &g, 5);
        assert_eq!(add(&mul(&quo, &g, 5), &r, 5), trim(f));
        assert!(degree(&r).map_or(true, |d| d < 2));
    }
}
