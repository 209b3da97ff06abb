use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An integer partition, stored without trailing zeros.
///
/// Indexing past the last part reads as zero, so `part(i)` is defined for
/// every `i`.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition from weakly decreasing parts. Trailing zeros are
    /// dropped; a zero followed by a positive part is rejected.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has an interior zero")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    /// The one-row partition `(n)`, or `∅` for `n = 0`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition { parts: vec![n] }
        }
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The `i`-th part (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// First part, i.e. the number of columns of the Young diagram.
    pub fn first(&self) -> usize {
        self.part(0)
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Whether `Y(other) ⊆ Y(self)`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && (0..other.len()).all(|i| other.parts[i] <= self.parts[i])
    }

    pub fn conjugate(&self) -> Partition {
        let parts = (0..self.first())
            .map(|c| self.parts.iter().take_while(|&&p| p > c).count())
            .collect();
        Partition { parts }
    }

    /// Cells `(row, col)` of the Young diagram, 0-based, in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
    }

    /// Hook length of the cell `(row, col)`.
    pub fn hook(&self, row: usize, col: usize) -> usize {
        let arm = self.part(row) - col - 1;
        let leg = self.parts[row + 1..].iter().take_while(|&&p| p > col).count();
        arm + leg + 1
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "∅");
        }
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Parses comma-separated parts such as `"3,2,2"`. The empty string, `"-"`
/// and `"∅"` denote the empty partition.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let s = s
            .strip_prefix('(')
            .and_then(|s| s.strip_suffix(')'))
            .unwrap_or(s)
            .trim();
        if s.is_empty() || s == "-" || s == "∅" {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|e| Error::InvalidPartition(format!("{t:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// All partitions of `n` in decreasing lexicographic order.
pub fn enumerate_partitions(n: usize) -> Vec<Partition> {
    fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            rec(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// A `d`-tuple of partitions `(λ^(0), …, λ^(d-1))`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Partition>", into = "Vec<Partition>")]
pub struct DPartition {
    components: Vec<Partition>,
}

impl DPartition {
    pub fn new(components: Vec<Partition>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::InvalidDPartition("needs at least one component".into()));
        }
        Ok(DPartition { components })
    }

    /// `((n), ∅, …, ∅)`, the label of the trivial representation.
    pub fn trivial(d: usize, n: usize) -> Self {
        let mut components = vec![Partition::empty(); d.max(1)];
        components[0] = Partition::row(n);
        DPartition { components }
    }

    pub fn d(&self) -> usize {
        self.components.len()
    }

    pub fn size(&self) -> usize {
        self.components.iter().map(Partition::size).sum()
    }

    pub fn components(&self) -> &[Partition] {
        &self.components
    }

    pub fn component(&self, i: usize) -> &Partition {
        &self.components[i]
    }

    /// `Σ_i λ^(i)_1`, the total number of columns across all components.
    pub fn first_row_sum(&self) -> usize {
        self.components.iter().map(Partition::first).sum()
    }
}

impl TryFrom<Vec<Partition>> for DPartition {
    type Error = Error;

    fn try_from(components: Vec<Partition>) -> Result<Self> {
        DPartition::new(components)
    }
}

impl From<DPartition> for Vec<Partition> {
    fn from(p: DPartition) -> Self {
        p.components
    }
}

impl fmt::Display for DPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.components.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Parses semicolon-separated components, e.g. `"2,1;;1"` is
/// `((2,1), ∅, (1))`.
impl FromStr for DPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let components = s
            .split(';')
            .map(|c| c.parse::<Partition>())
            .collect::<Result<Vec<_>>>()
            .map_err(|e| Error::InvalidDPartition(e.to_string()))?;
        DPartition::new(components)
    }
}

/// All `d`-partitions of `n`.
///
/// Ordered by the size of component 0 descending, then component 1, and so
/// on; within a fixed size vector each component runs through
/// [`enumerate_partitions`] order. `((n), ∅, …, ∅)` comes first.
pub fn enumerate_d_partitions(d: usize, n: usize) -> Result<Vec<DPartition>> {
    if d == 0 {
        return Err(Error::InvalidParameter("d must be at least 1".into()));
    }
    let tables: Vec<Vec<Partition>> = (0..=n).map(enumerate_partitions).collect();

    fn rec(
        slot: usize,
        d: usize,
        rest: usize,
        tables: &[Vec<Partition>],
        cur: &mut Vec<Partition>,
        out: &mut Vec<DPartition>,
    ) {
        if slot + 1 == d {
            for p in &tables[rest] {
                cur.push(p.clone());
                out.push(DPartition { components: cur.clone() });
                cur.pop();
            }
            return;
        }
        for size in (0..=rest).rev() {
            for p in &tables[size] {
                cur.push(p.clone());
                rec(slot + 1, d, rest - size, tables, cur, out);
                cur.pop();
            }
        }
    }

    let mut out = Vec::new();
    rec(0, d, n, &tables, &mut Vec::with_capacity(d), &mut out);
    Ok(out)
}
