//! Partitions, d-partitions, skew shapes and tableaux.

mod counting;
mod partition;
mod skew;

pub use counting::{
    binomial, factorial, multinomial, standard_d_tableaux_count, standard_tableaux_count,
};
pub use partition::{enumerate_d_partitions, enumerate_partitions, DPartition, Partition};
pub use skew::{enumerate_skew_semistandard, SkewShape, SkewTableau};
