//! Reductions of dihedral irreducibles recomputed in floating point.
//!
//! The group is realised by explicit complex matrices, element orders by
//! repeated multiplication, and the simple modules mod `ell` as the inflations
//! from the quotient by the normal Sylow `ell`-subgroup of the rotations.

use std::f64::consts::PI;

use howe_core::characters::{brauer_decompose_dihedral, o_minus_table, Coefficients, DihedralIrrep, Sign};
use num::complex::Complex64;

type Mat = [[Complex64; 2]; 2];

fn mat_mul(a: &Mat, b: &Mat) -> Mat {
    let mut c = [[Complex64::new(0.0, 0.0); 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                c[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    c
}

fn close(a: &Mat, b: &Mat) -> bool {
    (0..2).all(|i| (0..2).all(|j| (a[i][j] - b[i][j]).norm() < 1e-9))
}

fn identity() -> Mat {
    let (o, z) = (Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0));
    [[o, z], [z, o]]
}

/// A representation key: dimension, rotation exponent in `[0, m/2]`, sign.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct Key {
    dim: u32,
    exponent: u32,
    sign: i8,
}

struct Oracle {
    m: u32,
    /// `(k, i)` standing for `r^k s^i`, with its faithful real matrix.
    elements: Vec<((u32, u8), Mat)>,
}

impl Oracle {
    fn new(m: u32) -> Self {
        let t = 2.0 * PI / m as f64;
        let c = |x: f64| Complex64::new(x, 0.0);
        let r: Mat = [[c(t.cos()), c(-t.sin())], [c(t.sin()), c(t.cos())]];
        let s: Mat = [[c(1.0), c(0.0)], [c(0.0), c(-1.0)]];
        let mut elements = Vec::new();
        let mut rk = identity();
        for k in 0..m {
            elements.push(((k, 0), rk));
            elements.push(((k, 1), mat_mul(&rk, &s)));
            rk = mat_mul(&rk, &r);
        }
        Self { m, elements }
    }

    fn order(&self, g: &Mat) -> u32 {
        let mut power = *g;
        let mut n = 1;
        while !close(&power, &identity()) {
            power = mat_mul(&power, g);
            n += 1;
        }
        n
    }

    fn irreps(&self) -> Vec<Key> {
        let m = self.m;
        let mut out = Vec::new();
        for j in 0..=m / 2 {
            if 2 * j % m == 0 {
                out.extend([1, -1].map(|sign| Key { dim: 1, exponent: j, sign }));
            } else {
                out.push(Key { dim: 2, exponent: j, sign: 0 });
            }
        }
        out
    }

    /// Character of a representation on `r^k s^i`, as the trace of its matrix.
    fn character(&self, key: Key, (k, i): (u32, u8)) -> Complex64 {
        let w = Complex64::from_polar(1.0, 2.0 * PI * (key.exponent * k) as f64 / self.m as f64);
        match (key.dim, i) {
            (1, 0) => w,
            (1, _) => w * key.sign as f64,
            // diag(w, w^-1) times the swap has zero trace
            (_, 0) => w + w.conj(),
            _ => Complex64::new(0.0, 0.0),
        }
    }

    /// Decompositions of `rho` on `ell`-regular elements over the simple
    /// modules; the result must be unique.
    fn reduce(&self, rho: Key, ell: u32) -> Vec<(Key, u32)> {
        let mut ell_part = 1;
        while self.m % (ell_part * ell) == 0 {
            ell_part *= ell;
        }
        let simple: Vec<Key> = self
            .irreps()
            .into_iter()
            .filter(|k| k.exponent % ell_part == 0)
            .collect();
        let regular: Vec<(u32, u8)> = self
            .elements
            .iter()
            .filter(|(_, g)| self.order(g) % ell != 0)
            .map(|(e, _)| *e)
            .collect();
        let mut found = Vec::new();
        // every multiplicity vector of total dimension dim(rho)
        let bound = rho.dim + 1;
        for code in 0..bound.pow(simple.len() as u32) {
            let mut mult = Vec::new();
            let mut rest = code;
            for _ in &simple {
                mult.push(rest % bound);
                rest /= bound;
            }
            let dim: u32 = simple.iter().zip(&mult).map(|(k, c)| k.dim * c).sum();
            if dim != rho.dim {
                continue;
            }
            let matches = regular.iter().all(|&g| {
                let sum: Complex64 = simple
                    .iter()
                    .zip(&mult)
                    .map(|(k, &c)| self.character(*k, g) * c as f64)
                    .sum();
                (sum - self.character(rho, g)).norm() < 1e-9
            });
            if matches {
                found.push(
                    simple
                        .iter()
                        .zip(&mult)
                        .filter(|(_, &c)| c > 0)
                        .map(|(k, &c)| (*k, c))
                        .collect::<Vec<_>>(),
                );
            }
        }
        assert_eq!(found.len(), 1, "decomposition of {rho:?} mod {ell} not unique");
        found.pop().unwrap()
    }

    fn regular_class_count(&self, ell: u32) -> usize {
        // conjugacy classes by brute force over the matrices
        let mut seen = vec![false; self.elements.len()];
        let mut count = 0;
        for (i, (_, g)) in self.elements.iter().enumerate() {
            if seen[i] {
                continue;
            }
            for (_, h) in &self.elements {
                let h_inv = self.inverse(h);
                let conj = mat_mul(&mat_mul(h, g), &h_inv);
                let j = self.elements.iter().position(|(_, x)| close(x, &conj)).unwrap();
                seen[j] = true;
            }
            if self.order(g) % ell != 0 {
                count += 1;
            }
        }
        count
    }

    fn inverse(&self, g: &Mat) -> Mat {
        let mut power = *g;
        for _ in 1..self.order(g) - 1 {
            power = mat_mul(&power, g);
        }
        if self.order(g) == 1 {
            identity()
        } else {
            power
        }
    }
}

fn key_of(irrep: &DihedralIrrep) -> Key {
    match *irrep {
        DihedralIrrep::OneDim { xi, sign } => Key {
            dim: 1,
            exponent: xi.k,
            sign: if sign == Sign::Plus { 1 } else { -1 },
        },
        DihedralIrrep::TwoDim { xi } => Key { dim: 2, exponent: xi.k, sign: 0 },
    }
}

const CASES: [(u32, u32); 10] = [
    (2, 3),
    (4, 5),
    (5, 3),
    (3, 5),
    (8, 3),
    (7, 3),
    (9, 5),
    (11, 3),
    (17, 3),
    (13, 7),
];

#[test]
fn reductions_match_the_float_oracle() {
    for (q, ell) in CASES {
        let oracle = Oracle::new(q + 1);
        let irreps = DihedralIrrep::all(q + 1);
        let mut keys: Vec<Key> = irreps.iter().map(key_of).collect();
        keys.sort();
        let mut expected_keys = oracle.irreps();
        expected_keys.sort();
        assert_eq!(keys, expected_keys);
        for rho in &irreps {
            let mut got: Vec<(Key, u32)> = brauer_decompose_dihedral(q, ell, rho)
                .unwrap()
                .iter()
                .map(|(t, c)| (key_of(t), *c))
                .collect();
            got.sort();
            let mut expected = oracle.reduce(key_of(rho), ell);
            expected.sort();
            assert_eq!(got, expected, "q={q} ell={ell} rho={rho}");
        }
    }
}

#[test]
fn brauer_rows_are_the_regular_classes() {
    for (q, ell) in CASES {
        let table = o_minus_table(q, Coefficients::ModEll { ell }).unwrap();
        let oracle = Oracle::new(q + 1);
        assert_eq!(table.rows.len(), oracle.regular_class_count(ell), "q={q} ell={ell}");
        assert_eq!(table.classes.len(), table.rows.len());
    }
}

#[test]
fn frozen_reductions() {
    // the oracle's decompositions of selected irreducibles, as labels
    let show = |q: u32, ell: u32, rho: DihedralIrrep| -> String {
        brauer_decompose_dihedral(q, ell, &rho)
            .unwrap()
            .iter()
            .map(|(t, c)| if *c == 1 { t.to_string() } else { format!("{c}{t}") })
            .collect::<Vec<_>>()
            .join("+")
    };
    let sigma = |k: i64, q: u32| DihedralIrrep::two_dim(howe_core::cyclotomic::CentralCharacter::new(k, q + 1)).unwrap();
    assert_eq!(show(2, 3, sigma(1, 2)), "(1,+)+(1,-)");
    assert_eq!(show(4, 5, sigma(1, 4)), "(1,+)+(1,-)");
    assert_eq!(show(4, 5, sigma(2, 4)), "(1,+)+(1,-)");
    assert_eq!(show(5, 3, sigma(1, 5)), "(nu,+)+(nu,-)");
    assert_eq!(show(5, 3, sigma(2, 5)), "(1,+)+(1,-)");
    assert_eq!(show(3, 5, sigma(1, 3)), "sigma_1");
    assert_eq!(show(17, 3, sigma(3, 17)), "(nu,+)+(nu,-)");
    assert_eq!(show(17, 3, sigma(1, 17)), "(nu,+)+(nu,-)");
    assert_eq!(show(17, 3, sigma(2, 17)), "(1,+)+(1,-)");
}
