//! Littlewood–Richardson tableaux and coefficients, restriction from
//! `G(d,1,n)` to the symmetric group, and Pieri's rule.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::combinatorics::{enumerate_partitions, DPartition, Partition, SkewShape, SkewTableau};

/// `row_counts[r][l - 1]` is the number of entries `l` in row `r` of the
/// tableau (rows 0-based, entries 1-based).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RowCounts {
    counts: Vec<Vec<usize>>,
}

impl RowCounts {
    pub fn get(&self, row: usize, entry: usize) -> usize {
        if entry == 0 {
            return 0;
        }
        self.counts
            .get(row)
            .and_then(|r| r.get(entry - 1))
            .copied()
            .unwrap_or(0)
    }

    /// Nonzero `(row, entry, count)` triples, row-major.
    pub fn nonzero(&self) -> Vec<(usize, usize, usize)> {
        self.counts
            .iter()
            .enumerate()
            .flat_map(|(r, row)| {
                row.iter()
                    .enumerate()
                    .filter(|(_, &c)| c > 0)
                    .map(move |(l, &c)| (r, l + 1, c))
            })
            .collect()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.iter().flatten().all(|&c| c == 0)
    }
}

pub fn row_counts(t: &SkewTableau) -> RowCounts {
    let max = t.rows().iter().flatten().copied().max().unwrap_or(0);
    let counts = t
        .rows()
        .iter()
        .map(|row| {
            let mut c = vec![0; max];
            for &e in row {
                c[e - 1] += 1;
            }
            c
        })
        .collect();
    RowCounts { counts }
}

/// The straight-shape filling whose row `l` holds `k` repeated `T^l_k` times,
/// or `None` if its row lengths do not form a partition.
fn companion_rows(t: &SkewTableau) -> Option<Vec<Vec<usize>>> {
    let counts = row_counts(t);
    let weight = t.weight();
    if weight.windows(2).any(|w| w[0] < w[1]) || weight.contains(&0) {
        return None;
    }
    let rows = (1..=weight.len())
        .map(|l| {
            (0..t.rows().len())
                .flat_map(|k| std::iter::repeat_n(k + 1, counts.get(k, l)))
                .collect()
        })
        .collect();
    Some(rows)
}

/// Whether `t` is a Littlewood–Richardson tableau, i.e. it has a semistandard
/// companion of straight shape.
pub fn is_littlewood_richardson(t: &SkewTableau) -> bool {
    let Some(rows) = companion_rows(t) else {
        return false;
    };
    let shape = SkewShape::straight(
        Partition::new(rows.iter().map(Vec::len).collect()).expect("weight is a partition"),
    );
    // Rows of the companion are sorted by construction; columns decide.
    SkewTableau::new(shape, rows).is_ok()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LrQuery {
    pub lambda: Partition,
    pub mu: Partition,
    pub nu: Partition,
}

impl LrQuery {
    pub fn new(lambda: Partition, mu: Partition, nu: Partition) -> Self {
        LrQuery { lambda, mu, nu }
    }

    pub fn coefficient(&self) -> u64 {
        lr_coefficient(&self.lambda, &self.mu, &self.nu)
    }
}

/// Backtracking over the cells of `ν/λ` in row-major order.
///
/// Placing entry `v ≥ 2` in row `r` is allowed only while the number of `v`s
/// placed so far stays within the number of `v - 1`s in rows strictly above
/// `r`; this is the column condition of the companion tableau, checked as the
/// filling grows.
struct LrSearch<'a> {
    shape: &'a SkewShape,
    cells: Vec<(usize, usize)>,
    grid: Vec<Vec<usize>>,
    remaining: Vec<usize>,
    placed: Vec<usize>,
    above: Vec<usize>,
    current_row: usize,
}

impl<'a> LrSearch<'a> {
    fn new(shape: &'a SkewShape, weight: &Partition) -> Self {
        LrSearch {
            shape,
            cells: shape.cells().collect(),
            grid: (0..shape.rows()).map(|r| vec![0; shape.outer().part(r)]).collect(),
            remaining: weight.parts().to_vec(),
            placed: vec![0; weight.len()],
            above: vec![0; weight.len()],
            current_row: 0,
        }
    }

    fn run(&mut self, idx: usize, visit: &mut dyn FnMut(&Self)) {
        if idx == self.cells.len() {
            visit(self);
            return;
        }
        let (r, c) = self.cells[idx];
        let saved_above = if r != self.current_row {
            let saved = (self.current_row, self.above.clone());
            self.above.clone_from(&self.placed);
            self.current_row = r;
            Some(saved)
        } else {
            None
        };

        let mut lo = 1;
        if self.shape.contains_cell(r, c.wrapping_sub(1)) {
            lo = lo.max(self.grid[r][c - 1]);
        }
        if r > 0 && self.shape.contains_cell(r - 1, c) {
            lo = lo.max(self.grid[r - 1][c] + 1);
        }
        // Entry v only fits in rows r ≥ v - 1.
        let hi = self.remaining.len().min(r + 1);
        for v in lo..=hi {
            if self.remaining[v - 1] == 0 {
                continue;
            }
            if v >= 2 && self.placed[v - 1] + 1 > self.above[v - 2] {
                continue;
            }
            self.remaining[v - 1] -= 1;
            self.placed[v - 1] += 1;
            self.grid[r][c] = v;
            self.run(idx + 1, visit);
            self.grid[r][c] = 0;
            self.placed[v - 1] -= 1;
            self.remaining[v - 1] += 1;
        }

        if let Some((row, above)) = saved_above {
            self.current_row = row;
            self.above = above;
        }
    }

    fn tableau(&self) -> SkewTableau {
        let rows = (0..self.shape.rows())
            .map(|r| self.grid[r][self.shape.row_range(r)].to_vec())
            .collect();
        SkewTableau::new_unchecked(self.shape.clone(), rows)
    }
}

/// All Littlewood–Richardson tableaux of shape `ν/λ` and weight `μ`.
pub fn lr_tableaux(shape: &SkewShape, weight: &Partition) -> Vec<SkewTableau> {
    if shape.size() != weight.size() {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut search = LrSearch::new(shape, weight);
    search.run(0, &mut |s| out.push(s.tableau()));
    out
}

/// `c^ν_{λ,μ}`: the number of LR tableaux of shape `ν/λ` and weight `μ`.
/// Zero whenever `ν/λ` is not a skew shape or the sizes disagree.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if lambda.size() + mu.size() != nu.size() || !nu.contains(lambda) {
        return 0;
    }
    let shape = SkewShape::new(nu.clone(), lambda.clone()).expect("containment checked");
    let mut count = 0u64;
    let mut search = LrSearch::new(&shape, mu);
    search.run(0, &mut |_| count += 1);
    count
}

/// All `ν ⊢ |λ| + |μ|` with `c^ν_{λ,μ} > 0`, together with the coefficient.
pub fn lr_product(lambda: &Partition, mu: &Partition) -> BTreeMap<Partition, u64> {
    enumerate_partitions(lambda.size() + mu.size())
        .into_iter()
        .filter(|nu| nu.contains(lambda) && nu.contains(mu))
        .filter_map(|nu| {
            let c = lr_coefficient(lambda, mu, &nu);
            (c > 0).then_some((nu, c))
        })
        .collect()
}

/// Multiplicities `c^ν_λ` of the irreducible `S_n`-modules in the restriction
/// of `E^λ` from `G(d,1,n)`: the sum over chains
/// `ν^(1), …, ν^(d-1) = ν` of `c^{ν^(1)}_{λ^(0),λ^(1)} ⋯ c^{ν^(d-1)}_{ν^(d-2),λ^(d-1)}`.
///
/// Only `ν` with a positive multiplicity appear in the map.
pub fn restriction_multiplicities(lambda: &DPartition) -> BTreeMap<Partition, u64> {
    let mut current: BTreeMap<Partition, u64> = BTreeMap::new();
    current.insert(lambda.component(0).clone(), 1);
    for next in &lambda.components()[1..] {
        let mut acc: BTreeMap<Partition, u64> = BTreeMap::new();
        for (sigma, mult) in &current {
            for (nu, c) in lr_product(sigma, next) {
                *acc.entry(nu).or_default() += mult * c;
            }
        }
        current = acc;
    }
    current
}

/// Horizontal strips: every `λ ⊇ μ` with `|λ/μ| = l` and no two added boxes
/// in one column, i.e. `λ_1 ≥ μ_1 ≥ λ_2 ≥ μ_2 ≥ …`.
fn horizontal_strips(mu: &Partition, l: usize) -> Vec<Partition> {
    fn rec(
        row: usize,
        mu: &Partition,
        rest: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        let base = mu.part(row);
        if row == mu.len() {
            // The new bottom row sits below the old last row.
            let bound = if row == 0 { usize::MAX } else { mu.part(row - 1) };
            if rest <= bound {
                let mut parts = cur.clone();
                parts.push(rest);
                out.push(Partition::new(parts).expect("interlacing keeps order"));
            }
            return;
        }
        let cap = if row == 0 { rest } else { (mu.part(row - 1) - base).min(rest) };
        for add in (0..=cap).rev() {
            cur.push(base + add);
            rec(row + 1, mu, rest - add, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, mu, l, &mut Vec::new(), &mut out);
    out
}

/// Every `λ ∈ P(d, |μ| + l)` whose Young d-diagram is `μ`'s with `l` boxes
/// added, no two in the same column of the same component.
pub fn pieri_summands(mu: &DPartition, l: usize) -> Vec<DPartition> {
    fn rec(
        slot: usize,
        mu: &DPartition,
        rest: usize,
        cur: &mut Vec<Partition>,
        out: &mut Vec<DPartition>,
    ) {
        if slot + 1 == mu.d() {
            for p in horizontal_strips(mu.component(slot), rest) {
                cur.push(p);
                out.push(DPartition::new(cur.clone()).expect("nonempty"));
                cur.pop();
            }
            return;
        }
        for take in (0..=rest).rev() {
            for p in horizontal_strips(mu.component(slot), take) {
                cur.push(p);
                rec(slot + 1, mu, rest - take, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(0, mu, l, &mut Vec::new(), &mut out);
    out
}
