use std::fmt;

use serde::{Deserialize, Serialize};

use super::partition::Partition;
use crate::error::{Error, Result};

/// The skew shape `ν/λ`: cells of `Y(ν)` not in `Y(λ)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::NotASkewShape {
                outer: outer.to_string(),
                inner: inner.to_string(),
            });
        }
        Ok(SkewShape { outer, inner })
    }

    /// The straight shape `ν/∅`.
    pub fn straight(outer: Partition) -> Self {
        SkewShape { outer, inner: Partition::empty() }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    /// Number of rows of the outer shape (some may be empty in the skew).
    pub fn rows(&self) -> usize {
        self.outer.len()
    }

    /// Column range of row `r`.
    pub fn row_range(&self, r: usize) -> std::ops::Range<usize> {
        self.inner.part(r)..self.outer.part(r)
    }

    pub fn contains_cell(&self, r: usize, c: usize) -> bool {
        self.row_range(r).contains(&c)
    }

    /// Cells in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.rows()).flat_map(move |r| self.row_range(r).map(move |c| (r, c)))
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.outer, self.inner)
    }
}

/// A semistandard filling of a skew shape with positive integers.
///
/// `rows[r]` lists the entries of row `r` from left to right, covering the
/// columns `inner_r..outer_r`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SkewTableau {
    shape: SkewShape,
    rows: Vec<Vec<usize>>,
}

impl SkewTableau {
    /// Validates row lengths, positivity and both ordering conditions.
    pub fn new(shape: SkewShape, rows: Vec<Vec<usize>>) -> Result<Self> {
        if rows.len() != shape.rows() {
            return Err(Error::InvalidTableau(format!(
                "{} rows given for a shape with {} rows",
                rows.len(),
                shape.rows()
            )));
        }
        for (r, row) in rows.iter().enumerate() {
            if row.len() != shape.row_range(r).len() {
                return Err(Error::InvalidTableau(format!("row {r} has the wrong length")));
            }
            if row.contains(&0) {
                return Err(Error::InvalidTableau("entries must be positive".into()));
            }
        }
        let t = SkewTableau { shape, rows };
        if !t.is_semistandard() {
            return Err(Error::InvalidTableau("not semistandard".into()));
        }
        Ok(t)
    }

    pub(crate) fn new_unchecked(shape: SkewShape, rows: Vec<Vec<usize>>) -> Self {
        SkewTableau { shape, rows }
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// Entry at absolute cell `(r, c)`, if the cell belongs to the shape.
    pub fn get(&self, r: usize, c: usize) -> Option<usize> {
        if !self.shape.contains_cell(r, c) {
            return None;
        }
        Some(self.rows[r][c - self.shape.inner.part(r)])
    }

    /// `weight[i]` is the number of entries equal to `i + 1`.
    pub fn weight(&self) -> Vec<usize> {
        let max = self.rows.iter().flatten().copied().max().unwrap_or(0);
        let mut w = vec![0; max];
        for &e in self.rows.iter().flatten() {
            w[e - 1] += 1;
        }
        w
    }

    /// Rows weakly increase, columns strictly increase.
    pub fn is_semistandard(&self) -> bool {
        let rows_ok = self.rows.iter().all(|row| row.windows(2).all(|w| w[0] <= w[1]));
        let cols_ok = self.shape.cells().all(|(r, c)| {
            r == 0
                || match self.get(r - 1, c) {
                    Some(above) => above < self.get(r, c).unwrap(),
                    None => true,
                }
        });
        rows_ok && cols_ok
    }
}

/// All semistandard tableaux of the given skew shape whose weight is exactly
/// `weight`, in lexicographic order of their row-major reading.
pub fn enumerate_skew_semistandard(
    shape: &SkewShape,
    weight: &Partition,
) -> Result<Vec<SkewTableau>> {
    if shape.size() != weight.size() {
        return Err(Error::SizeMismatch { shape: shape.size(), weight: weight.size() });
    }
    let cells: Vec<(usize, usize)> = shape.cells().collect();
    let mut grid: Vec<Vec<usize>> =
        (0..shape.rows()).map(|r| vec![0; shape.outer.part(r)]).collect();
    let mut remaining: Vec<usize> = weight.parts().to_vec();
    let mut out = Vec::new();

    fn rec(
        idx: usize,
        cells: &[(usize, usize)],
        shape: &SkewShape,
        grid: &mut Vec<Vec<usize>>,
        remaining: &mut Vec<usize>,
        out: &mut Vec<SkewTableau>,
    ) {
        if idx == cells.len() {
            let rows = (0..shape.rows())
                .map(|r| grid[r][shape.row_range(r)].to_vec())
                .collect();
            out.push(SkewTableau::new_unchecked(shape.clone(), rows));
            return;
        }
        let (r, c) = cells[idx];
        let mut lo = 1;
        if shape.contains_cell(r, c.wrapping_sub(1)) {
            lo = lo.max(grid[r][c - 1]);
        }
        if r > 0 && shape.contains_cell(r - 1, c) {
            lo = lo.max(grid[r - 1][c] + 1);
        }
        for v in lo..=remaining.len() {
            if remaining[v - 1] == 0 {
                continue;
            }
            remaining[v - 1] -= 1;
            grid[r][c] = v;
            rec(idx + 1, cells, shape, grid, remaining, out);
            remaining[v - 1] += 1;
        }
        grid[r][c] = 0;
    }

    rec(0, &cells, shape, &mut grid, &mut remaining, &mut out);
    Ok(out)
}
