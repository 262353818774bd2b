//! Exact arithmetic in cyclotomic fields and the character values that live
//! there.

mod number;
mod values;

pub use number::{cyclotomic_polynomial, CycNumber, CyclotomicField};
pub use values::{
    evaluate_additive, evaluate_central, gauss_sum, value_field, zeta_p_pow, zeta_q1_pow,
    AdditiveCharacter, CentralCharacter,
};
pub(crate) use values::gcd;
