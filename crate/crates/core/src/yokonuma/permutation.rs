use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ytl_basis::CyclePattern;

/// A permutation of `{1, …, n}`, stored by its images. Composition is as
/// functions: `(a ∘ b)(j) = a(b(j))`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { images: (1..=n).collect() }
    }

    /// Builds from the images of `1, …, n`.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x == 0 || x > n || seen[x - 1] {
                return Err(Error::InvalidParameter(format!("{images:?} is not a permutation")));
            }
            seen[x - 1] = true;
        }
        Ok(Permutation { images })
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `w(j)` for `1 ≤ j ≤ n`.
    pub fn apply(&self, j: usize) -> usize {
        self.images[j - 1]
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.n()];
        for (j, &x) in self.images.iter().enumerate() {
            inv[x - 1] = j + 1;
        }
        Permutation { images: inv }
    }

    pub fn compose(&self, other: &Permutation) -> Self {
        Permutation { images: other.images.iter().map(|&j| self.apply(j)).collect() }
    }

    /// `w ∘ s_i`.
    pub fn times_transposition(&self, i: usize) -> Self {
        let mut images = self.images.clone();
        images.swap(i - 1, i);
        Permutation { images }
    }

    /// Whether `ℓ(w s_i) < ℓ(w)`, i.e. `w(i) > w(i+1)`.
    pub fn has_right_descent(&self, i: usize) -> bool {
        self.images[i - 1] > self.images[i]
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let n = self.n();
        (0..n)
            .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
            .filter(|&(a, b)| self.images[a] > self.images[b])
            .count()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, x) in self.images.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "]")
    }
}

/// The permutation `s_{i_1,k_1} ∘ ⋯ ∘ s_{i_p,k_p}` of a pattern.
pub fn pattern_to_permutation(pattern: &CyclePattern) -> Permutation {
    pattern
        .word()
        .into_iter()
        .fold(Permutation::identity(pattern.n()), |w, i| w.times_transposition(i))
}

/// Inverse of [`pattern_to_permutation`].
///
/// The last cycle `s_{i,k}` sends `i-k` to `i+1`, the largest point the
/// whole permutation moves, so peeling it off determines `(i, k)`.
pub fn permutation_to_pattern(w: &Permutation) -> CyclePattern {
    let n = w.n();
    let mut w = w.clone();
    let mut pairs = Vec::new();
    while let Some(m) = (1..=n).rev().find(|&m| w.apply(m) != m) {
        let j = w.inverse().apply(m);
        let (i, k) = (m - 1, m - 1 - j);
        pairs.push((i, k));
        // w ← w ∘ s_{i,k}^{-1} = w ∘ s_{i-k} ∘ ⋯ ∘ s_i
        for g in i - k..=i {
            w = w.times_transposition(g);
        }
    }
    pairs.reverse();
    CyclePattern::new(n.max(1), pairs).expect("peeled cycles form a valid pattern")
}
