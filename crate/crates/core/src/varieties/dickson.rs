//! Quotients of `sum (x_i^q y_i - x_i y_i^q) = 1` by `U(F_q)^n` and
//! `SL_2(F_q)^n`, through their Dickson-invariant models.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field_tower::{Level, TowerContext};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum QuotientKind {
    /// `{sum s_i t_i = 1}` in `A^{2n}`.
    Unipotent,
    /// `{sum s_i = 1}` in `A^{2n}`.
    Special,
}

/// Points of the quotient model over a level. The model equations are
/// counted by enumerating `s` and solving for `t` coordinatewise.
pub fn dickson_quotient_count(
    n: u32,
    which: QuotientKind,
    ctx: &TowerContext,
    level: Level,
    budget: u128,
) -> Result<u128> {
    if level == Level::Q {
        return Err(Error::InvalidArgument(
            "quotient models are defined over F_{q^2} and its extensions".into(),
        ));
    }
    if n == 0 {
        return Err(Error::InvalidArgument("n must be positive".into()));
    }
    let size = ctx.size(level) as u128;
    let needed = size.pow(n) * n as u128;
    if needed > budget {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    let top = ctx.top();
    let support = ctx.top_codes(level);
    let mut total = 0u128;
    // enumerate s in L^n; count t in L^n satisfying the equation
    let mut s = vec![0usize; n as usize];
    loop {
        total += match which {
            QuotientKind::Special => {
                let sum = s.iter().fold(0u32, |acc, &i| top.add(acc, support[i]));
                if sum == 1 {
                    size.pow(n)
                } else {
                    0
                }
            }
            QuotientKind::Unipotent => {
                // sum s_i t_i = 1 is an affine hyperplane in t unless s = 0
                if s.iter().all(|&i| support[i] == 0) {
                    0
                } else {
                    size.pow(n - 1)
                }
            }
        };
        let mut k = 0;
        loop {
            if k == s.len() {
                return Ok(total);
            }
            s[k] += 1;
            if s[k] < support.len() {
                break;
            }
            s[k] = 0;
            k += 1;
        }
    }
}

/// Dickson invariants of one coordinate pair:
/// `(x^q - x y^{q-1}, y)` for `U`, and
/// `(x^q y - x y^q, (x^{q^2} y - x y^{q^2}) / (x^q y - x y^q))` for `SL_2`.
/// Returns top-field codes; `None` when the `SL_2` denominator vanishes.
pub fn dickson_invariants(
    ctx: &TowerContext,
    which: QuotientKind,
    x: u32,
    y: u32,
) -> Option<(u32, u32)> {
    let top = ctx.top();
    let q = ctx.q() as u64;
    match which {
        QuotientKind::Unipotent => {
            let s = top.sub(top.pow(x, q), top.mul(x, top.pow(y, q - 1)));
            Some((s, y))
        }
        QuotientKind::Special => {
            let d = top.sub(top.mul(top.pow(x, q), y), top.mul(x, top.pow(y, q)));
            let num = top.sub(top.mul(top.pow(x, q * q), y), top.mul(x, top.pow(y, q * q)));
            top.inv(d).map(|inv| (d, top.mul(num, inv)))
        }
    }
}
