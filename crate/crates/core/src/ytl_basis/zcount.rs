use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::pattern::visit;
use crate::error::{Error, Result};
use crate::rep_theory::catalan;

/// How to obtain `Z_n(m)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ZMethod {
    /// Walk every Temperley–Lieb pattern of rank `n` and bucket by weight.
    Enumeration,
    /// The convolution recursion with base `Z_n(n-1) = C_{n-1}`.
    Recursion,
}

/// `Z_n(m)` for `m = 0, …, n-1`, counted over the patterns directly.
pub fn z_row_enumerated(n: usize) -> Vec<BigUint> {
    let mut row = vec![0u64; n];
    visit(n, true, &mut |_, used| row[used.count_ones() as usize] += 1);
    row.into_iter().map(BigUint::from).collect()
}

/// `Z_n(m)` for `m = 0, …, n-1`, from the recursion
/// `Z_n(m) = Σ_{j=n-m-1}^{n-1} Z_j(m-n+j+1) Z_{n-j}(n-j-1)` for `m ≤ n-2`.
pub fn z_row_recursive(n: usize) -> Vec<BigUint> {
    // table[r][m] = Z_r(m)
    let mut table: Vec<Vec<BigUint>> = vec![Vec::new()];
    for r in 1..=n {
        let mut row = vec![BigUint::zero(); r];
        for m in 0..r - 1 {
            let mut sum = BigUint::zero();
            for j in r - m - 1..r {
                sum += &table[j][m + j + 1 - r] * &table[r - j][r - j - 1];
            }
            row[m] = sum;
        }
        row[r - 1] = catalan(r - 1);
        table.push(row);
    }
    table.pop().unwrap_or_default()
}

/// The number of Temperley–Lieb patterns of rank `n` and weight `m`.
pub fn z_count(n: usize, m: usize, method: ZMethod) -> Result<BigUint> {
    if n == 0 || m >= n {
        return Err(Error::WeightOutOfRange { n, m });
    }
    let row = match method {
        ZMethod::Enumeration => z_row_enumerated(n),
        ZMethod::Recursion => z_row_recursive(n),
    };
    Ok(row[m].clone())
}

/// `Σ_m Z_n(m)` and `Σ_m 2^{n-m} Z_n(m)` for a row of counts.
pub fn z_row_sums(row: &[BigUint]) -> (BigUint, BigUint) {
    let n = row.len();
    let plain = row.iter().sum();
    let weighted = row
        .iter()
        .enumerate()
        .map(|(m, z)| (BigUint::one() << (n - m)) * z)
        .sum();
    (plain, weighted)
}
