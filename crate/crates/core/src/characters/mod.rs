//! Isotypic dimension formulas and the character theory of `O_2^-(F_q)`.

mod dihedral;
mod dims;

pub use dihedral::{
    brauer_decompose_dihedral, o_minus_table, CharacterTable, Coefficients, ConjugacyClass,
    DihedralGroup, DihedralIrrep, GroupElement, TableRow,
};
pub use dims::{
    character_name, dim_mod_ell_unitary, dim_v_isotypic, dim_w_isotypic, EllSplit,
    IsotypicLabel, Sign,
};
