use num_bigint::BigUint;
use num_traits::One;

use super::partition::{DPartition, Partition};

pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * k)
}

pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::default();
    }
    let k = k.min(n - k);
    // Each prefix product is itself a binomial coefficient, so the division is exact.
    (0..k).fold(BigUint::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// `(Σ k_i)! / Π k_i!`
pub fn multinomial(ks: &[usize]) -> BigUint {
    let mut total = 0;
    let mut acc = BigUint::one();
    for &k in ks {
        total += k;
        acc *= binomial(total, k);
    }
    acc
}

/// Number of standard tableaux of shape `λ`, by the hook-length formula.
pub fn standard_tableaux_count(lambda: &Partition) -> BigUint {
    let hooks = lambda
        .cells()
        .fold(BigUint::one(), |acc, (r, c)| acc * lambda.hook(r, c));
    factorial(lambda.size()) / hooks
}

/// Number of standard `d`-tableaux of shape `λ`: the multinomial choosing
/// which of `1..n` go into each component, times the standard counts of the
/// components. This is `dim E^λ` for the irreducible `G(d,1,n)`-module.
pub fn standard_d_tableaux_count(lambda: &DPartition) -> BigUint {
    let sizes: Vec<usize> = lambda.components().iter().map(Partition::size).collect();
    lambda
        .components()
        .iter()
        .fold(multinomial(&sizes), |acc, c| acc * standard_tableaux_count(c))
}
