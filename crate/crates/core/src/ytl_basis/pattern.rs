use std::collections::BTreeSet;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A product of descending cycles
/// `(g_{i_1} g_{i_1-1} ⋯ g_{i_1-k_1}) ⋯ (g_{i_p} ⋯ g_{i_p-k_p})`
/// in the braid generators of rank `n`, stored as the pairs `(i_j, k_j)`.
///
/// Construction enforces `1 ≤ i_1 < ⋯ < i_p ≤ n-1` and `i_j - k_j ≥ 1`,
/// so every value is a reduced word and the patterns of rank `n` are in
/// bijection with the symmetric group.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CyclePattern {
    n: usize,
    pairs: Vec<(usize, usize)>,
}

impl CyclePattern {
    pub fn new(n: usize, pairs: Vec<(usize, usize)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidPattern("rank must be at least 1".into()));
        }
        for (j, &(i, k)) in pairs.iter().enumerate() {
            if i == 0 || i >= n {
                return Err(Error::InvalidPattern(format!("top index {i} outside 1..{n}")));
            }
            if k >= i {
                return Err(Error::InvalidPattern(format!("cycle ({i},{k}) runs below g_1")));
            }
            if j > 0 && pairs[j - 1].0 >= i {
                return Err(Error::InvalidPattern("top indices must increase".into()));
            }
        }
        Ok(CyclePattern { n, pairs })
    }

    /// The empty word.
    pub fn identity(n: usize) -> Self {
        CyclePattern { n, pairs: Vec::new() }
    }

    pub(crate) fn from_pairs_unchecked(n: usize, pairs: Vec<(usize, usize)>) -> Self {
        CyclePattern { n, pairs }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Bottom indices `i_j - k_j` strictly increase: the Jones basis words.
    pub fn is_temperley_lieb(&self) -> bool {
        self.pairs.windows(2).all(|w| w[0].0 - w[0].1 < w[1].0 - w[1].1)
    }

    /// Generator indices of the word, left to right.
    pub fn word(&self) -> Vec<usize> {
        self.pairs
            .iter()
            .flat_map(|&(i, k)| (i - k..=i).rev())
            .collect()
    }

    /// Length of the word (its degree).
    pub fn degree(&self) -> usize {
        self.pairs.iter().map(|&(_, k)| k + 1).sum()
    }

    pub fn index_set(&self) -> IndexSet {
        IndexSet {
            indices: self.pairs.iter().flat_map(|&(i, k)| i - k..=i).collect(),
        }
    }

    /// Number of distinct generators in the word.
    pub fn weight(&self) -> usize {
        self.index_set().weight()
    }

    /// The first cycle (0-based) whose interval `[i_l - k_l, i_l]` contains
    /// `j`.
    pub fn first_cycle_covering(&self, j: usize) -> Result<usize> {
        self.pairs
            .iter()
            .position(|&(i, k)| i - k <= j && j <= i)
            .ok_or(Error::IndexOutOfPattern { index: j })
    }

    /// Starting from cycle `l` (0-based), the first cycle `L ≥ l` whose top
    /// index plus one is not used by the word. Always exists because
    /// `i_p + 1` is never used.
    pub fn ladder_end(&self, l: usize) -> Result<usize> {
        if l >= self.pairs.len() {
            return Err(Error::InvalidPattern(format!(
                "cycle {l} out of range for a pattern with {} cycles",
                self.pairs.len()
            )));
        }
        let used = self.index_set();
        Ok((l..self.pairs.len())
            .find(|&ll| !used.contains(self.pairs[ll].0 + 1))
            .expect("the last top index plus one is never used"))
    }

    /// Parses whitespace- or comma-separated `i:k` pairs, e.g. `"2:1 4:2"`.
    /// `"1"` and the empty string are the identity.
    pub fn parse(n: usize, s: &str) -> Result<Self> {
        if s.trim() == "1" {
            return Ok(CyclePattern::identity(n));
        }
        let pairs = s
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| {
                let (i, k) = t
                    .split_once(':')
                    .ok_or_else(|| Error::InvalidPattern(format!("{t:?} is not i:k")))?;
                let parse = |x: &str| {
                    x.trim()
                        .parse::<usize>()
                        .map_err(|e| Error::InvalidPattern(format!("{x:?}: {e}")))
                };
                Ok((parse(i)?, parse(k)?))
            })
            .collect::<Result<Vec<_>>>()?;
        CyclePattern::new(n, pairs)
    }
}

/// Serialized as an array of `[i, k]` pairs; the rank is carried by context.
impl Serialize for CyclePattern {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.pairs.serialize(s)
    }
}

impl fmt::Display for CyclePattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.pairs.is_empty() {
            return write!(f, "1");
        }
        for (j, &(i, k)) in self.pairs.iter().enumerate() {
            if j > 0 {
                write!(f, " ")?;
            }
            write!(f, "{i}:{k}")?;
        }
        Ok(())
    }
}

/// The set of generator indices used by a word.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct IndexSet {
    indices: BTreeSet<usize>,
}

impl IndexSet {
    pub fn weight(&self) -> usize {
        self.indices.len()
    }

    pub fn contains(&self, j: usize) -> bool {
        self.indices.contains(&j)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.indices.iter().copied()
    }
}

/// Every pattern of rank `n`, depth-first: a pattern is followed by its
/// extensions. The empty pattern comes first.
pub fn enumerate_hn(n: usize) -> Vec<CyclePattern> {
    let mut out = Vec::new();
    visit(n, false, &mut |pairs, _| out.push(CyclePattern::from_pairs_unchecked(n, pairs.to_vec())));
    out
}

/// The Temperley–Lieb patterns of rank `n`, in the same order as
/// [`enumerate_hn`].
pub fn enumerate_tn(n: usize) -> Vec<CyclePattern> {
    let mut out = Vec::new();
    visit(n, true, &mut |pairs, _| out.push(CyclePattern::from_pairs_unchecked(n, pairs.to_vec())));
    out
}

type Visitor<'a> = dyn FnMut(&[(usize, usize)], u64) + 'a;

/// Walks the patterns without allocating one per visit. The callback gets the
/// pairs and a bitmask of the used generator indices (bit `j` for `g_j`).
pub(crate) fn visit(n: usize, temperley_lieb: bool, f: &mut Visitor<'_>) {
    fn rec(
        n: usize,
        tl: bool,
        pairs: &mut Vec<(usize, usize)>,
        used: u64,
        f: &mut Visitor<'_>,
    ) {
        f(pairs, used);
        let (next_top, min_bottom) = match pairs.last() {
            Some(&(i, k)) => (i + 1, if tl { i - k + 1 } else { 1 }),
            None => (1, 1),
        };
        for i in next_top..n {
            for bottom in min_bottom..=i {
                let k = i - bottom;
                let mask = ((1u64 << (k + 1)) - 1) << bottom;
                pairs.push((i, k));
                rec(n, tl, pairs, used | mask, f);
                pairs.pop();
            }
        }
    }
    assert!(n <= 63, "rank too large for the index bitmask");
    if n == 0 {
        return;
    }
    rec(n, temperley_lieb, &mut Vec::new(), 0, f);
}
