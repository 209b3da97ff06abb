//! Independent reference implementations. Nothing here calls into the
//! library's algorithms; inputs and outputs are plain vectors.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

/// `p(n)` by the usual coin-change table over part sizes.
pub fn partition_count(n: usize) -> u64 {
    let mut ways = vec![0u64; n + 1];
    ways[0] = 1;
    for part in 1..=n {
        for total in part..=n {
            ways[total] += ways[total - part];
        }
    }
    ways[n]
}

/// Every partition of `n`, found by sorting all `2^{n-1}` compositions.
pub fn brute_partitions(n: usize) -> BTreeSet<Vec<usize>> {
    let mut out = BTreeSet::new();
    if n == 0 {
        out.insert(Vec::new());
        return out;
    }
    for cuts in 0u64..(1 << (n - 1)) {
        let mut parts = Vec::new();
        let mut run = 1;
        for b in 0..n - 1 {
            if cuts >> b & 1 == 1 {
                parts.push(run);
                run = 1;
            } else {
                run += 1;
            }
        }
        parts.push(run);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        out.insert(parts);
    }
    out
}

/// Number of `d`-tuples of partitions with total size `n`.
pub fn d_partition_count(d: usize, n: usize) -> u64 {
    fn rec(d: usize, n: usize) -> u64 {
        if d == 1 {
            return partition_count(n);
        }
        (0..=n).map(|k| partition_count(k) * rec(d - 1, n - k)).sum()
    }
    rec(d, n)
}

/// Counts standard fillings by placing `1, 2, …` one at a time into every
/// cell whose left and upper neighbours are already filled.
pub fn standard_fillings(shape: &[usize]) -> u64 {
    fn rec(shape: &[usize], filled: &mut Vec<usize>) -> u64 {
        if filled.iter().zip(shape).all(|(f, s)| f == s) {
            return 1;
        }
        let mut total = 0;
        for r in 0..shape.len() {
            let c = filled[r];
            let room = c < shape[r];
            let above_ok = r == 0 || filled[r - 1] > c;
            if room && above_ok {
                filled[r] += 1;
                total += rec(shape, filled);
                filled[r] -= 1;
            }
        }
        total
    }
    rec(shape, &mut vec![0; shape.len()])
}

/// Whether `rows` (entries of the skew shape `outer / inner`, row by row,
/// left to right) form a semistandard tableau.
pub fn is_semistandard(outer: &[usize], inner: &[usize], rows: &[Vec<usize>]) -> bool {
    let at = |r: usize, c: usize| -> Option<usize> {
        let start = inner.get(r).copied().unwrap_or(0);
        if r < outer.len() && c >= start && c < outer[r] {
            Some(rows[r][c - start])
        } else {
            None
        }
    };
    for r in 0..outer.len() {
        let start = inner.get(r).copied().unwrap_or(0);
        if rows[r].len() != outer[r] - start {
            return false;
        }
        for c in start..outer[r] {
            let v = at(r, c).unwrap();
            if v == 0 {
                return false;
            }
            if let Some(left) = (c > start).then(|| at(r, c - 1)).flatten() {
                if left > v {
                    return false;
                }
            }
            if r > 0 {
                if let Some(up) = at(r - 1, c) {
                    if up >= v {
                        return false;
                    }
                }
            }
        }
    }
    true
}

type Poly = BTreeMap<Vec<usize>, i64>;

/// `s_λ(x_1, …, x_vars)` as a map from exponent vectors to coefficients,
/// summed over semistandard fillings.
pub fn schur_polynomial(shape: &[usize], vars: usize) -> Poly {
    fn rec(
        vars: usize,
        cell: usize,
        cells: &[(usize, usize)],
        grid: &mut Vec<Vec<usize>>,
        exps: &mut Vec<usize>,
        out: &mut Poly,
    ) {
        if cell == cells.len() {
            *out.entry(exps.clone()).or_insert(0) += 1;
            return;
        }
        let (r, c) = cells[cell];
        let lo = if c > 0 { grid[r][c - 1] } else { 1 };
        let lo = if r > 0 { lo.max(grid[r - 1][c] + 1) } else { lo };
        for v in lo..=vars {
            grid[r][c] = v;
            exps[v - 1] += 1;
            rec(vars, cell + 1, cells, grid, exps, out);
            exps[v - 1] -= 1;
        }
        grid[r][c] = 0;
    }
    let cells: Vec<(usize, usize)> =
        shape.iter().enumerate().flat_map(|(r, &len)| (0..len).map(move |c| (r, c))).collect();
    let mut grid: Vec<Vec<usize>> = shape.iter().map(|&len| vec![0; len]).collect();
    let mut out = Poly::new();
    rec(vars, 0, &cells, &mut grid, &mut vec![0; vars], &mut out);
    out
}

fn multiply(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e: Vec<usize> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            *out.entry(e).or_insert(0) += ca * cb;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

fn as_partition(e: &[usize]) -> Option<Vec<usize>> {
    if e.windows(2).any(|w| w[0] < w[1]) {
        return None;
    }
    Some(e.iter().copied().filter(|&x| x > 0).collect())
}

/// Writes a symmetric polynomial in the Schur basis by repeatedly peeling
/// off the lexicographically largest dominant monomial.
pub fn schur_expand(mut poly: Poly, vars: usize) -> BTreeMap<Vec<usize>, i64> {
    let mut out = BTreeMap::new();
    while let Some((lead, c)) = poly
        .iter()
        .rev()
        .find_map(|(e, c)| as_partition(e).map(|p| (p, *c)))
    {
        out.insert(lead.clone(), c);
        for (e, k) in schur_polynomial(&lead, vars) {
            let entry = poly.entry(e).or_insert(0);
            *entry -= c * k;
        }
        poly.retain(|_, x| *x != 0);
    }
    assert!(poly.is_empty(), "leftover terms: not symmetric");
    out
}

/// `s_λ · s_μ` expanded in Schur functions, in `|λ| + |μ|` variables.
pub fn schur_product(lambda: &[usize], mu: &[usize]) -> BTreeMap<Vec<usize>, i64> {
    let vars = (lambda.iter().sum::<usize>() + mu.iter().sum::<usize>()).max(1);
    let p = multiply(&schur_polynomial(lambda, vars), &schur_polynomial(mu, vars));
    schur_expand(p, vars)
}

/// Images `w(1..=n)` of the product `s_{a_1} s_{a_2} ⋯` of simple
/// transpositions, composed as functions (rightmost acts first).
pub fn word_permutation(n: usize, word: &[usize]) -> Vec<usize> {
    let mut images: Vec<usize> = (1..=n).collect();
    for &a in word {
        images.swap(a - 1, a);
    }
    images
}

/// Whether `w` contains a decreasing subsequence of length three.
pub fn contains_321(w: &[usize]) -> bool {
    let n = w.len();
    (0..n).any(|a| (a + 1..n).any(|b| w[a] > w[b] && (b + 1..n).any(|c| w[b] > w[c])))
}

/// All permutations of `1..=n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                cur.push(v + 1);
                rec(cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// All vectors in `{0, …, d-1}^len`.
pub fn exponent_vectors(d: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..d).map(move |r| {
                    let mut w = v.clone();
                    w.push(r);
                    w
                })
            })
            .collect();
    }
    out
}

/// The basis monomials for the identity pattern, as the divisibility
/// characterization: every monomial when `d = 2`, otherwise those not
/// divisible by `x_i x_k²` with `k - i ≥ 2`.
pub fn identity_monomials(d: usize, n: usize) -> BTreeSet<Vec<usize>> {
    exponent_vectors(d, n)
        .into_iter()
        .filter(|e| {
            d == 2
                || !(0..n).any(|i| e[i] >= 1 && (i + 2..n).any(|k| e[k] >= 2))
        })
        .collect()
}

/// The basis monomials for a nonempty Temperley–Lieb pattern given by its
/// `(i, k)` pairs: the identity characterization in the relabelled
/// variables, minus monomials divisible by `x̃_1 x̃_j` for `j > 2`, written
/// back into the original `n` variables.
pub fn pattern_monomials(d: usize, n: usize, pairs: &[(usize, usize)]) -> BTreeSet<Vec<usize>> {
    let covered: BTreeSet<usize> = pairs.iter().flat_map(|&(i, k)| i - k..=i).collect();
    let tops: Vec<usize> = pairs.iter().map(|p| p.0).collect();
    let ladder = (0..tops.len())
        .find(|&l| !covered.contains(&(tops[l] + 1)))
        .expect("the last top index is never followed by a covered one");
    let second = tops[ladder] + 1;
    let mut vars = vec![tops[0], second];
    vars.extend((1..=n).filter(|s| !covered.contains(s) && *s != second));
    let big_n = vars.len();
    identity_monomials(d, big_n)
        .into_iter()
        .filter(|e| !(e[0] >= 1 && e[2..].iter().any(|&x| x >= 1)))
        .map(|e| {
            let mut full = vec![0; n];
            for (slot, &v) in vars.iter().enumerate() {
                full[v - 1] = e[slot];
            }
            full
        })
        .collect()
}
