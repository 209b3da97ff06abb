//! Exact combinatorics and algebra for the Yokonuma–Temperley–Lieb algebra
//! `YTL_{d,n}(u)`.
//!
//! The crate is split along the lines of the computation:
//!
//! * [`combinatorics`]: partitions, d-partitions, skew shapes, tableaux and
//!   standard tableau counts.
//! * [`lr_rule`]: Littlewood–Richardson tableaux and coefficients, the chained
//!   restriction multiplicities from `G(d,1,n)` to the symmetric group, and
//!   Pieri's rule.
//! * [`rep_theory`]: the labels of the irreducible representations of
//!   `YTL_{d,n}(u)` and the two routes to its dimension.
//! * [`ytl_basis`]: cycle patterns, weights, the counts `Z_n(m)` and the
//!   explicit basis `S_{d,n}`.
//! * [`yokonuma`]: exact multiplication in `Y_{d,n}(u)`, the defining ideal of
//!   the quotient and brute-force verification of the basis.

pub mod combinatorics;
pub mod error;
pub mod lr_rule;
pub mod rep_theory;
pub mod ytl_basis;
pub mod yokonuma;

pub use error::{Error, Result};
