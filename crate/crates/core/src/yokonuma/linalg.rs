use num_rational::BigRational;
use num_traits::{One, Zero};

/// An incrementally built basis of a subspace of `Q^dim`.
///
/// Rows are kept in insertion order; each row is zero at the pivot columns
/// of every earlier row and has a 1 at its own pivot. Reducing a vector
/// against the rows in insertion order therefore clears every pivot column.
#[derive(Clone, Debug)]
pub struct RowEchelon {
    dim: usize,
    rows: Vec<(usize, Vec<(usize, BigRational)>)>,
}

impl RowEchelon {
    pub fn new(dim: usize) -> Self {
        RowEchelon { dim, rows: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.dim
    }

    /// Subtracts multiples of the stored rows until every pivot column of `v`
    /// is zero. Returns whether anything is left.
    pub fn reduce(&self, v: &mut [BigRational]) -> bool {
        assert_eq!(v.len(), self.dim, "vector length differs from the ambient dimension");
        for (pivot, row) in &self.rows {
            if v[*pivot].is_zero() {
                continue;
            }
            let factor = v[*pivot].clone();
            for (col, x) in row {
                v[*col] -= &factor * x;
            }
        }
        v.iter().any(|x| !x.is_zero())
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, mut v: Vec<BigRational>) -> bool {
        if self.is_full() || !self.reduce(&mut v) {
            return false;
        }
        let pivot = v.iter().position(|x| !x.is_zero()).expect("nonzero after reduction");
        let inv = v[pivot].recip();
        let row = v
            .into_iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(c, x)| if c == pivot { (c, BigRational::one()) } else { (c, x * &inv) })
            .collect();
        self.rows.push((pivot, row));
        true
    }

    pub fn contains(&self, v: &[BigRational]) -> bool {
        let mut v = v.to_vec();
        !self.reduce(&mut v)
    }
}
