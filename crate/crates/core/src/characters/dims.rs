//! Dimensions of the isotypic parts of the unitary and symplectic Weil
//! cohomology, over characteristic zero and mod `ell` coefficients.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::cyclotomic::CentralCharacter;
use crate::error::{Error, Result};
use crate::field_tower::poly::is_prime;
use crate::field_tower::PrimePower;

/// Frobenius eigenvalue sign on a self-dual isotypic part.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub const BOTH: [Sign; 2] = [Sign::Plus, Sign::Minus];

    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

impl Serialize for Sign {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// A character of `mu_{q+1}` together with an optional sign.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct IsotypicLabel {
    pub chi: CentralCharacter,
    pub sign: Option<Sign>,
}

impl IsotypicLabel {
    /// A sign is only allowed on self-dual characters.
    pub fn new(chi: CentralCharacter, sign: Option<Sign>) -> Result<Self> {
        if sign.is_some() && !chi.is_self_dual() {
            return Err(Error::InvalidArgument(format!(
                "a sign needs chi^2 = 1, got chi_{} of order {}",
                chi.k,
                chi.order()
            )));
        }
        Ok(Self { chi, sign })
    }

    /// Every label of the decomposition: self-dual characters split by sign,
    /// the others appear once each.
    pub fn all(q: u32) -> Vec<Self> {
        let m = q + 1;
        let mut out = Vec::new();
        for k in 0..m {
            let chi = CentralCharacter::new(k as i64, m);
            if chi.is_self_dual() {
                out.extend(Sign::BOTH.map(|s| Self { chi, sign: Some(s) }));
            } else {
                out.push(Self { chi, sign: None });
            }
        }
        out
    }
}

impl fmt::Display for IsotypicLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = character_name(&self.chi);
        match self.sign {
            Some(s) => write!(f, "({name},{s})"),
            None => f.write_str(&name),
        }
    }
}

/// `1`, `nu`, or `chi_k`.
pub fn character_name(chi: &CentralCharacter) -> String {
    if chi.is_trivial() {
        "1".into()
    } else if chi.is_self_dual() {
        "nu".into()
    } else {
        format!("chi_{}", chi.k)
    }
}

fn checked_pow(q: u32, n: u32) -> Result<i128> {
    (q as i128)
        .checked_pow(n)
        .filter(|v| v.checked_mul(2 * (q as i128 + 1)).is_some())
        .ok_or_else(|| Error::InvalidArgument(format!("q^{n} overflows")))
}

fn exact_div(num: i128, den: i128) -> Result<u128> {
    if den == 0 || num % den != 0 || num / den < 0 {
        return Err(Error::InvalidArgument(format!("{num}/{den} is not a natural number")));
    }
    Ok((num / den) as u128)
}

fn check_modulus(q: u32, chi: &CentralCharacter) -> Result<()> {
    if chi.modulus != q + 1 {
        return Err(Error::InvalidArgument(format!(
            "character modulus {} does not match q + 1 = {}",
            chi.modulus,
            q + 1
        )));
    }
    Ok(())
}

fn minus_one_pow(n: u32) -> i128 {
    if n % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Dimension of the `chi`-part of the unitary Weil cohomology in rank `n`.
pub fn dim_v_isotypic(q: u32, n: u32, chi: &CentralCharacter) -> Result<u128> {
    check_modulus(q, chi)?;
    if n < 2 {
        return Err(Error::InvalidArgument("n must be at least 2".into()));
    }
    let qn = checked_pow(q, n)?;
    let s = minus_one_pow(n);
    let num = if chi.is_trivial() { qn + s * q as i128 } else { qn - s };
    exact_div(num, q as i128 + 1)
}

/// Dimension of the labelled part of the symplectic Weil cohomology in rank
/// `n`. An unsigned self-dual label gives the sum over both signs.
pub fn dim_w_isotypic(q: u32, n: u32, label: &IsotypicLabel) -> Result<u128> {
    let chi = &label.chi;
    check_modulus(q, chi)?;
    if n < 1 {
        return Err(Error::InvalidArgument("n must be positive".into()));
    }
    let p = PrimePower::from_q(q)?.p;
    if p == 2 && chi.is_self_dual() && !chi.is_trivial() {
        return Err(Error::Characteristic2("the quadratic character label"));
    }
    let qn = checked_pow(q, n)?;
    let q = q as i128;
    let q2n = qn * qn;
    match (chi.is_trivial(), chi.is_self_dual(), label.sign) {
        (true, _, Some(s)) => {
            let k = s.value() as i128;
            exact_div((qn + k) * (qn + k * q), 2 * (q + 1))
        }
        (true, _, None) => exact_div(q2n + q, q + 1),
        (false, true, Some(_)) => exact_div(q2n - 1, 2 * (q + 1)),
        (false, _, _) => exact_div(q2n - 1, q + 1),
    }
}

/// `q + 1 = ell^a r` with `ell` prime to `r`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct EllSplit {
    pub ell: u32,
    pub a: u32,
    pub ell_power: u32,
    pub r: u32,
}

impl EllSplit {
    /// Requires `ell` prime and different from the characteristic.
    pub fn new(q: u32, ell: u32) -> Result<Self> {
        if !is_prime(ell as u64) {
            return Err(Error::NotPrime(ell as u64));
        }
        let p = PrimePower::from_q(q)?.p;
        if ell == p {
            return Err(Error::Unsupported(format!("ell = {ell} equals the characteristic")));
        }
        let mut r = q + 1;
        let mut a = 0;
        while r % ell == 0 {
            r /= ell;
            a += 1;
        }
        Ok(Self {
            ell,
            a,
            ell_power: ell.pow(a),
            r,
        })
    }

    pub fn divides_q_plus_one(&self) -> bool {
        self.a > 0
    }

    /// Whether the restriction of `chi` to `mu_r` is trivial.
    pub fn prime_to_ell_part_trivial(&self, chi: &CentralCharacter) -> bool {
        chi.k % self.r == 0
    }

    /// Whether the restriction of `chi` to `mu_{ell^a}` is trivial.
    pub fn ell_part_trivial(&self, chi: &CentralCharacter) -> bool {
        chi.k % self.ell_power == 0
    }

    /// The lift of the reduction of `chi`: same restriction to `mu_r`,
    /// trivial on `mu_{ell^a}`.
    pub fn reduce(&self, chi: &CentralCharacter) -> CentralCharacter {
        let m = self.ell_power * self.r;
        let k = (0..m)
            .step_by(self.ell_power as usize)
            .find(|j| j % self.r == chi.k % self.r)
            .expect("ell^a and r are coprime");
        CentralCharacter::new(k as i64, m)
    }

    /// Characters of `mu_{q+1}` that are lifts of mod `ell` characters.
    pub fn reduced_characters(&self) -> Vec<CentralCharacter> {
        let m = self.ell_power * self.r;
        (0..m)
            .step_by(self.ell_power as usize)
            .map(|k| CentralCharacter::new(k as i64, m))
            .collect()
    }
}

/// Mod `ell` dimension of the `xi`-part of the unitary Weil cohomology.
/// `xi` is given by any lift; only its restriction to `mu_r` matters.
pub fn dim_mod_ell_unitary(q: u32, n: u32, xi: &CentralCharacter, ell: u32) -> Result<u128> {
    check_modulus(q, xi)?;
    let split = EllSplit::new(q, ell)?;
    if !split.divides_q_plus_one() {
        return dim_v_isotypic(q, n, xi);
    }
    if n < 2 {
        return Err(Error::InvalidArgument("n must be at least 2".into()));
    }
    let qn = checked_pow(q, n)?;
    let s = minus_one_pow(n);
    let base = exact_div(qn - s, q as i128 + 1)?;
    Ok(if split.prime_to_ell_part_trivial(xi) {
        base + ((1 + s) / 2) as u128
    } else {
        base
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chi(k: i64, q: u32) -> CentralCharacter {
        CentralCharacter::new(k, q + 1)
    }

    fn label(k: i64, q: u32, sign: Option<Sign>) -> IsotypicLabel {
        IsotypicLabel::new(chi(k, q), sign).unwrap()
    }

    #[test]
    fn unitary_values() {
        assert_eq!(dim_v_isotypic(2, 3, &chi(0, 2)).unwrap(), 2);
        assert_eq!(dim_v_isotypic(2, 3, &chi(1, 2)).unwrap(), 3);
        assert!(dim_v_isotypic(2, 1, &chi(0, 2)).is_err());
    }

    #[test]
    fn unitary_total_is_q_to_the_n() {
        for q in [2u32, 3, 4, 5, 7, 8, 9] {
            for n in 2..=5 {
                let total: u128 = (0..=q as i64)
                    .map(|k| dim_v_isotypic(q, n, &chi(k, q)).unwrap())
                    .sum();
                assert_eq!(total, (q as u128).pow(n));
            }
        }
    }

    #[test]
    fn symplectic_values() {
        assert_eq!(dim_w_isotypic(3, 2, &label(0, 3, Some(Sign::Plus))).unwrap(), 15);
        assert_eq!(dim_w_isotypic(3, 2, &label(0, 3, Some(Sign::Minus))).unwrap(), 6);
        for s in Sign::BOTH {
            assert_eq!(dim_w_isotypic(3, 2, &label(2, 3, Some(s))).unwrap(), 10);
        }
        assert_eq!(dim_w_isotypic(3, 2, &label(1, 3, None)).unwrap(), 20);
        assert_eq!(dim_w_isotypic(2, 2, &label(0, 2, Some(Sign::Plus))).unwrap(), 5);
        assert_eq!(dim_w_isotypic(2, 2, &label(0, 2, Some(Sign::Minus))).unwrap(), 1);
    }

    #[test]
    fn signs_need_self_dual_characters() {
        assert!(IsotypicLabel::new(chi(1, 3), Some(Sign::Plus)).is_err());
        assert_eq!(IsotypicLabel::all(3).len(), 6);
        assert_eq!(IsotypicLabel::all(4).len(), 6);
    }

    #[test]
    fn ell_split() {
        let s = EllSplit::new(5, 3).unwrap();
        assert_eq!((s.a, s.r), (1, 2));
        assert_eq!(s.reduce(&chi(1, 5)), chi(3, 5));
        assert_eq!(s.reduce(&chi(2, 5)), chi(0, 5));
        assert_eq!(s.reduced_characters(), vec![chi(0, 5), chi(3, 5)]);
        assert!(EllSplit::new(9, 3).is_err());
        assert!(EllSplit::new(9, 4).is_err());
    }

    #[test]
    fn mod_ell_unitary_cases() {
        // ell does not divide q + 1
        for k in 0..4 {
            assert_eq!(
                dim_mod_ell_unitary(3, 3, &chi(k, 3), 5).unwrap(),
                dim_v_isotypic(3, 3, &chi(k, 3)).unwrap()
            );
        }
        // q = 2, ell = 3: every character reduces to the trivial one
        assert_eq!(dim_mod_ell_unitary(2, 2, &chi(0, 2), 3).unwrap(), 1 + 1);
        assert_eq!(dim_mod_ell_unitary(2, 3, &chi(0, 2), 3).unwrap(), 3);
        assert_eq!(dim_mod_ell_unitary(2, 3, &chi(1, 2), 3).unwrap(), 3);
        // q = 5, ell = 3: chi_3 = nu survives reduction
        assert_eq!(dim_mod_ell_unitary(5, 2, &chi(3, 5), 3).unwrap(), 4);
        assert_eq!(dim_mod_ell_unitary(5, 2, &chi(0, 5), 3).unwrap(), 5);
    }
}
