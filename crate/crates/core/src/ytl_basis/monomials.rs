use num_bigint::BigUint;
use num_traits::One;
use serde::Serialize;

use super::pattern::{enumerate_tn, CyclePattern};
use crate::error::{Error, Result};
use crate::rep_theory::{require_d, require_ytl_rank};

/// Exponent vectors `r ∈ {0,…,d-1}^n` of the monomials `x_1^{r_1} ⋯ x_n^{r_n}`
/// attached to a pattern, sorted lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExponentSet {
    pub pattern: CyclePattern,
    pub exponents: Vec<Vec<usize>>,
}

impl ExponentSet {
    pub fn len(&self) -> usize {
        self.exponents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exponents.is_empty()
    }
}

/// Monomials `y_i^a y_{i+1}^b Π_{j≥i+2} y_j^{ε_j}` with `start ≤ i < N`,
/// `1 ≤ a < d`, `0 ≤ b < d`, `ε_j ∈ {0,1}`, together with the powers `y_N^b`,
/// in the variables `y_1 … y_N`. Each monomial is written into a vector of
/// length `n` through `vars` (1-based original indices).
fn ladder_monomials(d: usize, vars: &[usize], start: usize, n: usize, out: &mut Vec<Vec<usize>>) {
    let big_n = vars.len();
    for i in start..big_n {
        let tail = big_n - i - 1;
        for a in 1..d {
            for b in 0..d {
                for eps in 0u64..(1 << tail) {
                    let mut r = vec![0; n];
                    r[vars[i - 1] - 1] = a;
                    r[vars[i] - 1] = b;
                    for t in 0..tail {
                        r[vars[i + 1 + t] - 1] = ((eps >> t) & 1) as usize;
                    }
                    out.push(r);
                }
            }
        }
    }
    for b in 0..d {
        let mut r = vec![0; n];
        r[vars[big_n - 1] - 1] = b;
        out.push(r);
    }
}

/// The set attached to the identity word. For `d = 2` this is every vector
/// in `{0,1}^n`; for `d = 1` it is the zero vector alone.
pub fn monomial_set_identity(d: usize, n: usize) -> Result<ExponentSet> {
    require_d(d)?;
    if n == 0 {
        return Err(Error::InvalidParameter("n must be at least 1".into()));
    }
    let vars: Vec<usize> = (1..=n).collect();
    let mut exponents = Vec::new();
    ladder_monomials(d, &vars, 1, n, &mut exponents);
    exponents.sort();
    Ok(ExponentSet { pattern: CyclePattern::identity(n), exponents })
}

/// The relabelled variables `x̃_1, …, x̃_N` of a nonempty pattern, as original
/// indices: `x̃_1 = x_{i_1}`, `x̃_2 = x_{i_{L(1)}+1}`, then the remaining
/// unused indices in increasing order.
pub fn relabelled_variables(pattern: &CyclePattern) -> Result<Vec<usize>> {
    if pattern.is_empty() {
        return Err(Error::InvalidPattern("the identity has no relabelling".into()));
    }
    let used = pattern.index_set();
    let first = pattern.pairs()[0].0;
    let second = pattern.pairs()[pattern.ladder_end(0)?].0 + 1;
    let mut vars = vec![first, second];
    vars.extend((1..=pattern.n()).filter(|&s| !used.contains(s) && s != second));
    Ok(vars)
}

/// The set attached to a pattern of `T_n`; dispatches to
/// [`monomial_set_identity`] for the empty pattern.
pub fn monomial_set(d: usize, pattern: &CyclePattern) -> Result<ExponentSet> {
    let n = pattern.n();
    if pattern.is_empty() {
        return monomial_set_identity(d, n);
    }
    require_d(d)?;
    if !pattern.is_temperley_lieb() {
        return Err(Error::InvalidPattern(format!("{pattern} is not a Temperley–Lieb pattern")));
    }
    let vars = relabelled_variables(pattern)?;
    let mut exponents = Vec::new();
    ladder_monomials(d, &vars, 2, n, &mut exponents);
    for a in 1..d {
        for b in 0..d {
            let mut r = vec![0; n];
            r[vars[0] - 1] = a;
            r[vars[1] - 1] = b;
            exponents.push(r);
        }
    }
    exponents.sort();
    Ok(ExponentSet { pattern: pattern.clone(), exponents })
}

/// `2^{n-m-1}d² - (2^{n-m-1}-1)d - δ_{m,0}(d²-d)`, the size of the set for
/// any pattern of weight `m`.
pub fn exponent_set_size(d: usize, n: usize, m: usize) -> Result<BigUint> {
    if n == 0 || m >= n {
        return Err(Error::WeightOutOfRange { n, m });
    }
    let d = BigUint::from(d);
    let pairs = &d * &d - &d;
    let mut doublings = BigUint::one() << (n - m - 1);
    if m == 0 {
        doublings -= 1u32;
    }
    Ok(doublings * pairs + d)
}

/// One element `t^r g` of the basis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BasisElement {
    pub framing: Vec<usize>,
    pub pattern: CyclePattern,
}

/// `S_{d,n}`: for every `g ∈ T_n` (in [`enumerate_tn`] order) the framings of
/// its exponent set, lexicographically.
pub fn enumerate_basis(d: usize, n: usize) -> Result<Vec<BasisElement>> {
    require_ytl_rank(n)?;
    require_d(d)?;
    let mut out = Vec::new();
    for g in enumerate_tn(n) {
        let set = monomial_set(d, &g)?;
        out.extend(set.exponents.into_iter().map(|framing| BasisElement {
            framing,
            pattern: g.clone(),
        }));
    }
    Ok(out)
}
