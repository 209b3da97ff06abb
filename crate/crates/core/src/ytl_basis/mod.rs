//! Cycle patterns, their weights, the counts `Z_n(m)` and the basis `S_{d,n}`.

mod monomials;
mod pattern;
mod zcount;

pub use monomials::{
    enumerate_basis, exponent_set_size, monomial_set, monomial_set_identity,
    relabelled_variables, BasisElement, ExponentSet,
};
pub use pattern::{enumerate_hn, enumerate_tn, CyclePattern, IndexSet};
pub use zcount::{z_count, z_row_enumerated, z_row_recursive, z_row_sums, ZMethod};
