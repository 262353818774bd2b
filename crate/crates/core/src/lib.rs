//! Exact finite-field, cyclotomic and character computations around the
//! Weil representations of unitary and symplectic groups and the Howe
//! correspondence for `(Sp_2n, O_2^-)`.

pub mod error;
pub mod characters;
pub mod cyclotomic;
pub mod field_tower;
pub mod howe;
pub mod varieties;

pub use error::{Error, Result};
pub use field_tower::{build_tower, FieldElement, Level, PrimePower, TowerContext};
