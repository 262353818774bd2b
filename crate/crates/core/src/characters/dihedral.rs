//! Ordinary and mod `ell` character theory of `O_2^-(F_q)`, realised as
//! `mu_{q+1} x| Z/2` with the nontrivial element acting by inversion.

use std::fmt;
use std::sync::Arc;

use num::{BigRational, Signed, ToPrimitive, Zero};
use serde::Serialize;

use super::dims::{EllSplit, Sign};
use crate::cyclotomic::{gcd, CentralCharacter, CycNumber, CyclotomicField};
use crate::error::{Error, Result};
use crate::field_tower::PrimePower;

/// `(k, i)` stands for `zeta^k F^i`, with `zeta` the fixed generator of
/// `mu_{q+1}` and `F` the `q`-power map.
pub type GroupElement = (u32, u8);

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DihedralGroup {
    pub m: u32,
}

impl DihedralGroup {
    pub fn new(q: u32) -> Self {
        Self { m: q + 1 }
    }

    pub fn order(&self) -> u32 {
        2 * self.m
    }

    pub fn mul(&self, a: GroupElement, b: GroupElement) -> GroupElement {
        let m = self.m as i64;
        let sign = if a.1 == 0 { 1 } else { -1 };
        let k = (a.0 as i64 + sign * b.0 as i64).rem_euclid(m);
        (k as u32, (a.1 + b.1) % 2)
    }

    pub fn inverse(&self, a: GroupElement) -> GroupElement {
        if a.1 == 1 {
            a
        } else {
            ((self.m - a.0) % self.m, 0)
        }
    }

    pub fn elements(&self) -> Vec<GroupElement> {
        (0..2u8).flat_map(|i| (0..self.m).map(move |k| (k, i))).collect()
    }

    pub fn element_order(&self, a: GroupElement) -> u32 {
        if a.1 == 1 {
            2
        } else {
            self.m / gcd(a.0, self.m)
        }
    }

    /// Conjugacy classes: rotation pairs `{k, -k}` for `k <= m/2`, then
    /// reflections by the parity of `k` (one class when `m` is odd).
    pub fn classes(&self) -> Vec<ConjugacyClass> {
        let m = self.m;
        let mut out: Vec<ConjugacyClass> = (0..=m / 2)
            .map(|k| ConjugacyClass {
                representative: (k, 0),
                size: if 2 * k % m == 0 { 1 } else { 2 },
                order: self.element_order((k, 0)),
            })
            .collect();
        let reflection_classes = if m % 2 == 0 { 2 } else { 1 };
        for k in 0..reflection_classes {
            out.push(ConjugacyClass {
                representative: (k, 1),
                size: m / reflection_classes,
                order: 2,
            });
        }
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ConjugacyClass {
    pub representative: GroupElement,
    pub size: u32,
    pub order: u32,
}

impl ConjugacyClass {
    pub fn label(&self) -> String {
        match self.representative {
            (k, 0) => format!("r^{k}"),
            (k, _) => format!("r^{k}F"),
        }
    }
}

/// An irreducible representation of `O_2^-(F_q)`, indexed by exponents of
/// characters of `mu_{q+1}`. For mod `ell` coefficients the exponent is
/// that of the lift trivial on `mu_{ell^a}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DihedralIrrep {
    /// `(xi, kappa)` with `xi^2 = 1`.
    OneDim { xi: CentralCharacter, sign: Sign },
    /// `Ind xi` with `xi^2 != 1`; `xi.k` is the smaller exponent of the orbit.
    TwoDim { xi: CentralCharacter },
}

impl DihedralIrrep {
    pub fn one_dim(xi: CentralCharacter, sign: Sign) -> Result<Self> {
        if !xi.is_self_dual() {
            return Err(Error::InvalidArgument(format!("chi_{} is not self-dual", xi.k)));
        }
        Ok(Self::OneDim { xi, sign })
    }

    /// `sigma_xi`, normalised so that `sigma_xi` and `sigma_{xi^-1}` agree.
    pub fn two_dim(xi: CentralCharacter) -> Result<Self> {
        if xi.is_self_dual() {
            return Err(Error::InvalidArgument(format!("chi_{} is self-dual", xi.k)));
        }
        let k = xi.k.min(xi.modulus - xi.k);
        Ok(Self::TwoDim {
            xi: CentralCharacter::new(k as i64, xi.modulus),
        })
    }

    pub fn character(&self) -> CentralCharacter {
        match *self {
            DihedralIrrep::OneDim { xi, .. } | DihedralIrrep::TwoDim { xi } => xi,
        }
    }

    pub fn dim(&self) -> u32 {
        match self {
            DihedralIrrep::OneDim { .. } => 1,
            DihedralIrrep::TwoDim { .. } => 2,
        }
    }

    /// Every ordinary irreducible for `mu_m x| Z/2`.
    pub fn all(m: u32) -> Vec<Self> {
        Self::from_characters((0..m).map(|k| CentralCharacter::new(k as i64, m)))
    }

    /// The irreducibles built from a set of characters closed under inversion.
    fn from_characters(chars: impl IntoIterator<Item = CentralCharacter>) -> Vec<Self> {
        let mut out = Vec::new();
        for xi in chars {
            if xi.is_self_dual() {
                out.extend(Sign::BOTH.map(|sign| Self::OneDim { xi, sign }));
            } else if 2 * xi.k < xi.modulus {
                out.push(Self::TwoDim { xi });
            }
        }
        out.sort();
        out
    }

    /// Character value at a group element.
    pub fn value(&self, field: &Arc<CyclotomicField>, g: GroupElement) -> CycNumber {
        let xi = self.character();
        let step = (field.conductor() / xi.modulus) as i64;
        let rot = |k: u32| CycNumber::zeta_pow(field, step * (xi.k as i64) * k as i64);
        match (*self, g) {
            (DihedralIrrep::OneDim { sign, .. }, (k, i)) => {
                let v = rot(k);
                if i == 1 && sign == Sign::Minus {
                    -&v
                } else {
                    v
                }
            }
            (DihedralIrrep::TwoDim { .. }, (k, 0)) => {
                &rot(k) + &rot(k).conjugate()
            }
            (DihedralIrrep::TwoDim { .. }, _) => CycNumber::zero(field),
        }
    }
}

impl fmt::Display for DihedralIrrep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DihedralIrrep::OneDim { xi, sign } => {
                let name = if xi.is_trivial() { "1" } else { "nu" };
                write!(f, "({name},{sign})")
            }
            DihedralIrrep::TwoDim { xi } => write!(f, "sigma_{}", xi.k),
        }
    }
}

impl Serialize for DihedralIrrep {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "mode", rename_all = "snake_case")]
pub enum Coefficients {
    Ordinary,
    ModEll { ell: u32 },
}

#[derive(Clone, Debug, Serialize)]
pub struct TableRow {
    pub irrep: DihedralIrrep,
    pub dim: u32,
    pub values: Vec<CycNumber>,
}

/// Character table of `O_2^-(F_q)`; in mod `ell` mode the columns are the
/// `ell`-regular classes and the rows are Brauer characters.
#[derive(Clone, Debug, Serialize)]
pub struct CharacterTable {
    pub q: u32,
    pub coefficients: Coefficients,
    pub group_order: u32,
    pub classes: Vec<ConjugacyClass>,
    pub rows: Vec<TableRow>,
    #[serde(skip)]
    pub field: Arc<CyclotomicField>,
}

fn check_ell(q: u32, ell: u32) -> Result<EllSplit> {
    if ell == 2 {
        return Err(Error::Unsupported("ell = 2".into()));
    }
    EllSplit::new(q, ell)
}

/// Character table over the given coefficients.
pub fn o_minus_table(q: u32, coefficients: Coefficients) -> Result<CharacterTable> {
    PrimePower::from_q(q)?;
    let group = DihedralGroup::new(q);
    let field = CyclotomicField::new(group.m);
    let (classes, irreps) = match coefficients {
        Coefficients::Ordinary => (group.classes(), DihedralIrrep::all(group.m)),
        Coefficients::ModEll { ell } => {
            let split = check_ell(q, ell)?;
            let classes = group
                .classes()
                .into_iter()
                .filter(|c| c.order % ell != 0)
                .collect();
            let irreps = DihedralIrrep::from_characters(split.reduced_characters());
            (classes, irreps)
        }
    };
    let rows = irreps
        .into_iter()
        .map(|irrep| TableRow {
            irrep,
            dim: irrep.dim(),
            values: classes
                .iter()
                .map(|c: &ConjugacyClass| irrep.value(&field, c.representative))
                .collect(),
        })
        .collect();
    Ok(CharacterTable {
        q,
        coefficients,
        group_order: group.order(),
        classes,
        rows,
        field,
    })
}

impl CharacterTable {
    fn class_sum(&self, a: &[CycNumber], b: &[CycNumber]) -> CycNumber {
        self.classes
            .iter()
            .zip(a.iter().zip(b))
            .map(|(c, (x, y))| (x * &y.conjugate()).scale(&int(c.size as i64)))
            .sum()
    }

    /// `<chi_i, chi_j> = delta_ij` for all rows.
    pub fn rows_orthonormal(&self) -> bool {
        let order = int(self.group_order as i64);
        self.rows.iter().enumerate().all(|(i, a)| {
            self.rows.iter().enumerate().all(|(j, b)| {
                let ip = self.class_sum(&a.values, &b.values);
                let expected = if i == j { order.clone() } else { BigRational::zero() };
                ip.as_rational() == Some(expected)
            })
        })
    }

    /// `sum_chi chi(g) conj chi(h) = delta |C(g)|` over class pairs.
    pub fn columns_orthogonal(&self) -> bool {
        let n = self.classes.len();
        (0..n).all(|a| {
            (0..n).all(|b| {
                let s: CycNumber = self
                    .rows
                    .iter()
                    .map(|r| &r.values[a] * &r.values[b].conjugate())
                    .sum();
                let expected = if a == b {
                    int((self.group_order / self.classes[a].size) as i64)
                } else {
                    BigRational::zero()
                };
                s.as_rational() == Some(expected)
            })
        })
    }

    pub fn sum_of_squared_dims(&self) -> u32 {
        self.rows.iter().map(|r| r.dim * r.dim).sum()
    }
}

fn int(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

/// Solves `x A = b` for square `A` over the cyclotomic field.
fn solve_left(rows: &[Vec<CycNumber>], rhs: &[CycNumber]) -> Result<Vec<CycNumber>> {
    let n = rows.len();
    // transpose into an augmented system A^T x = b
    let mut m: Vec<Vec<CycNumber>> = (0..n)
        .map(|c| {
            let mut line: Vec<CycNumber> = rows.iter().map(|r| r[c].clone()).collect();
            line.push(rhs[c].clone());
            line
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !m[r][col].is_zero())
            .ok_or_else(|| Error::Unsupported("singular Brauer character table".into()))?;
        m.swap(col, pivot);
        let inv = m[col][col].inverse()?;
        let line: Vec<CycNumber> = m[col].iter().map(|x| x * &inv).collect();
        m[col] = line;
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                let line: Vec<CycNumber> =
                    m[r].iter().zip(&m[col]).map(|(x, y)| x - &(&f * y)).collect();
                m[r] = line;
            }
        }
    }
    Ok(m.into_iter().map(|mut line| line.pop().expect("augmented")).collect())
}

/// Multiplicities of the mod `ell` irreducibles in the reduction of an
/// ordinary irreducible, by solving against the Brauer character table.
pub fn brauer_decompose_dihedral(
    q: u32,
    ell: u32,
    rho: &DihedralIrrep,
) -> Result<Vec<(DihedralIrrep, u32)>> {
    if rho.character().modulus != q + 1 || !DihedralIrrep::all(q + 1).contains(rho) {
        return Err(Error::InvalidArgument(format!("{rho} is not an irreducible for q = {q}")));
    }
    let table = o_minus_table(q, Coefficients::ModEll { ell })?;
    let restricted: Vec<CycNumber> = table
        .classes
        .iter()
        .map(|c| rho.value(&table.field, c.representative))
        .collect();
    let values: Vec<Vec<CycNumber>> = table.rows.iter().map(|r| r.values.clone()).collect();
    let coeffs = solve_left(&values, &restricted)?;
    let mut out = Vec::new();
    for (row, c) in table.rows.iter().zip(coeffs) {
        let c = c
            .as_rational()
            .filter(|c| c.is_integer() && !c.is_negative())
            .and_then(|c| c.to_integer().to_u32())
            .ok_or_else(|| {
                Error::Unsupported(format!("non-integral multiplicity of {} in {rho}", row.irrep))
            })?;
        if c > 0 {
            out.push((row.irrep, c));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chi(k: i64, q: u32) -> CentralCharacter {
        CentralCharacter::new(k, q + 1)
    }

    #[test]
    fn group_law() {
        let g = DihedralGroup::new(3);
        let els = g.elements();
        assert_eq!(els.len(), 8);
        for &a in &els {
            assert_eq!(g.mul(a, g.inverse(a)), (0, 0));
            for &b in &els {
                for &c in &els {
                    assert_eq!(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)));
                }
            }
        }
        // the reflection inverts rotations
        assert_eq!(g.mul(g.mul((0, 1), (1, 0)), (0, 1)), (3, 0));
    }

    #[test]
    fn class_sizes_sum_to_order() {
        for q in [2, 3, 4, 5, 7, 8, 9] {
            let g = DihedralGroup::new(q);
            let total: u32 = g.classes().iter().map(|c| c.size).sum();
            assert_eq!(total, g.order());
        }
    }

    #[test]
    fn small_tables() {
        let t = o_minus_table(3, Coefficients::Ordinary).unwrap();
        assert_eq!(t.rows.iter().filter(|r| r.dim == 1).count(), 4);
        assert_eq!(t.rows.iter().filter(|r| r.dim == 2).count(), 1);
        assert_eq!(t.sum_of_squared_dims(), 8);
        assert!(t.rows_orthonormal() && t.columns_orthogonal());
        let t = o_minus_table(2, Coefficients::Ordinary).unwrap();
        assert_eq!(t.rows.len(), 3);
        assert_eq!(t.sum_of_squared_dims(), 6);
    }

    #[test]
    fn brauer_rows_match_regular_classes() {
        for (q, ell, expected) in [(2, 3, 2), (4, 5, 2), (5, 3, 4), (3, 5, 5), (8, 3, 2), (7, 3, 7)] {
            let t = o_minus_table(q, Coefficients::ModEll { ell }).unwrap();
            assert_eq!(t.rows.len(), expected, "q={q} ell={ell}");
            assert_eq!(t.classes.len(), expected);
        }
    }

    #[test]
    fn mod_ell_rejections() {
        assert!(o_minus_table(3, Coefficients::ModEll { ell: 2 }).is_err());
        assert!(o_minus_table(3, Coefficients::ModEll { ell: 3 }).is_err());
    }

    #[test]
    fn decompositions() {
        let sigma = DihedralIrrep::two_dim(chi(1, 2)).unwrap();
        let plus = DihedralIrrep::one_dim(chi(0, 2), Sign::Plus).unwrap();
        let minus = DihedralIrrep::one_dim(chi(0, 2), Sign::Minus).unwrap();
        assert_eq!(
            brauer_decompose_dihedral(2, 3, &sigma).unwrap(),
            vec![(plus, 1), (minus, 1)]
        );
        assert_eq!(brauer_decompose_dihedral(2, 3, &plus).unwrap(), vec![(plus, 1)]);
        let nu_plus = DihedralIrrep::one_dim(chi(3, 5), Sign::Plus).unwrap();
        let nu_minus = DihedralIrrep::one_dim(chi(3, 5), Sign::Minus).unwrap();
        let sigma1 = DihedralIrrep::two_dim(chi(1, 5)).unwrap();
        let sigma2 = DihedralIrrep::two_dim(chi(2, 5)).unwrap();
        assert_eq!(
            brauer_decompose_dihedral(5, 3, &sigma1).unwrap(),
            vec![(nu_plus, 1), (nu_minus, 1)]
        );
        let one = |s| DihedralIrrep::one_dim(chi(0, 5), s).unwrap();
        assert_eq!(
            brauer_decompose_dihedral(5, 3, &sigma2).unwrap(),
            vec![(one(Sign::Plus), 1), (one(Sign::Minus), 1)]
        );
        // ell prime to the group order: reduction stays irreducible
        for rho in DihedralIrrep::all(4) {
            assert_eq!(brauer_decompose_dihedral(3, 5, &rho).unwrap(), vec![(rho, 1)]);
        }
    }
}
