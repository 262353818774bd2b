//! Finite-field tower `F_p ⊂ F_q ⊂ F_{q^2} ⊂ F_{q^4}` and the generic
//! extension arithmetic it is built from.

pub mod galois;
pub mod linalg;
pub mod poly;
pub mod small;
mod tower;

pub use galois::{Embedding, GaloisField};
pub use small::SmallField;
pub use tower::{build_tower, FieldElement, Level, PrimePower, TowerContext};
