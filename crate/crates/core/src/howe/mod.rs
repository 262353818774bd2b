//! Theta correspondence tables for `(Sp_2n, O_2^-)` over characteristic zero
//! and mod `ell` coefficients, with their consistency checks.

mod compare;
mod report;
mod table;
mod verify;

pub use compare::{compare_semisimplifications, ComparisonReport, ReductionRow};
pub use table::{
    theta_mod_ell, theta_ordinary, Check, Constituent, EntryProvenance, HoweEntry, HoweParams,
    HoweStatus, HoweTable, Provenance,
};
pub use verify::{verify_all, VerifyReport};
