//! Labels of the irreducible representations of `YTL_{d,n}(u)` and its
//! dimension, computed two ways.

use std::cmp::Reverse;

use num_bigint::BigUint;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::combinatorics::{binomial, standard_d_tableaux_count, DPartition, Partition};
use crate::error::{Error, Result};

/// Which half of the dimension count a label falls into.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LabelKind {
    /// A single nonempty component with at most two columns.
    OneComponent,
    /// Two nonempty components, each a single column.
    TwoColumns,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepLabel {
    pub label: DPartition,
    pub kind: LabelKind,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepClassification {
    pub d: usize,
    pub n: usize,
    pub members: Vec<RepLabel>,
}

impl RepClassification {
    pub fn labels(&self) -> impl Iterator<Item = &DPartition> {
        self.members.iter().map(|m| &m.label)
    }

    pub fn contains(&self, lambda: &DPartition) -> bool {
        self.labels().any(|l| l == lambda)
    }

    pub fn count(&self, kind: LabelKind) -> usize {
        self.members.iter().filter(|m| m.kind == kind).count()
    }
}

pub(crate) fn require_ytl_rank(n: usize) -> Result<()> {
    if n < 3 {
        Err(Error::RankTooSmall(n))
    } else {
        Ok(())
    }
}

pub(crate) fn require_d(d: usize) -> Result<()> {
    if d == 0 {
        Err(Error::InvalidParameter("d must be at least 1".into()))
    } else {
        Ok(())
    }
}

/// The classification predicate: at most two columns in total.
pub fn is_ytl_label(lambda: &DPartition) -> bool {
    lambda.first_row_sum() <= 2
}

fn kind_of(lambda: &DPartition) -> LabelKind {
    let nonempty = lambda.components().iter().filter(|c| !c.is_empty()).count();
    if nonempty <= 1 {
        LabelKind::OneComponent
    } else {
        LabelKind::TwoColumns
    }
}

/// `R(d,n)`: every `λ ∈ P(d,n)` with `Σ_i λ^(i)_1 ≤ 2`, in
/// [`enumerate_d_partitions`](crate::combinatorics::enumerate_d_partitions)
/// order.
///
/// The labels are built directly rather than filtered out of `P(d,n)`, which
/// is far too large once `n` grows: either one component `(2^a, 1^b)` or two
/// single columns.
pub fn r_set(d: usize, n: usize) -> Result<RepClassification> {
    require_d(d)?;
    require_ytl_rank(n)?;
    let empty = || vec![Partition::empty(); d];
    let mut labels = Vec::new();
    for i in 0..d {
        for a in 0..=n / 2 {
            let mut parts = vec![2; a];
            parts.resize(n - a, 1);
            let mut comps = empty();
            comps[i] = Partition::new(parts).expect("weakly decreasing");
            labels.push(comps);
        }
        for j in i + 1..d {
            for a in 1..n {
                let mut comps = empty();
                comps[i] = Partition::column(a);
                comps[j] = Partition::column(n - a);
                labels.push(comps);
            }
        }
    }
    labels.sort_by_cached_key(|comps| {
        comps
            .iter()
            .map(|c| (Reverse(c.size()), Reverse(c.clone())))
            .collect::<Vec<_>>()
    });
    let members = labels
        .into_iter()
        .map(|comps| {
            let label = DPartition::new(comps).expect("d components");
            RepLabel { kind: kind_of(&label), label }
        })
        .collect();
    Ok(RepClassification { d, n, members })
}

pub fn catalan(n: usize) -> BigUint {
    binomial(2 * n, n) / (n + 1)
}

/// `d(nd − n + d + 1)/2 · C_n − d(d − 1)`.
pub fn ytl_dimension_formula(d: usize, n: usize) -> Result<BigUint> {
    require_d(d)?;
    require_ytl_rank(n)?;
    let twice = BigUint::from(d * (n * d - n + d + 1)) * catalan(n);
    debug_assert!((&twice % 2u32).is_zero());
    Ok(twice / 2u32 - BigUint::from(d * (d - 1)))
}

/// `Σ_{λ ∈ R(d,n)} (dim E^λ)²`.
pub fn ytl_dimension_sum_squares(d: usize, n: usize) -> Result<BigUint> {
    Ok(r_set(d, n)?
        .labels()
        .map(|l| {
            let f = standard_d_tableaux_count(l);
            &f * &f
        })
        .sum())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classical_labels() {
        let r = r_set(1, 3).unwrap();
        let labels: Vec<String> = r.labels().map(|l| l.to_string()).collect();
        assert_eq!(labels, vec!["((2,1))", "((1,1,1))"]);
    }

    #[test]
    fn two_framings_rank_three() {
        let r = r_set(2, 3).unwrap();
        assert_eq!(r.members.len(), 6);
        assert_eq!(r.count(LabelKind::TwoColumns), 2);
        assert!(!r.contains(&DPartition::trivial(2, 3)));
    }

    #[test]
    fn direct_construction_matches_filter() {
        for d in 1..=4 {
            for n in 3..=8 {
                let filtered: Vec<DPartition> = crate::combinatorics::enumerate_d_partitions(d, n)
                    .unwrap()
                    .into_iter()
                    .filter(is_ytl_label)
                    .collect();
                let direct: Vec<DPartition> = r_set(d, n).unwrap().labels().cloned().collect();
                assert_eq!(direct, filtered, "d={d} n={n}");
            }
        }
    }

    #[test]
    fn small_rank_rejected() {
        assert_eq!(r_set(2, 2), Err(Error::RankTooSmall(2)));
        assert!(ytl_dimension_formula(1, 1).is_err());
        assert!(ytl_dimension_sum_squares(3, 0).is_err());
    }

    #[test]
    fn catalan_values() {
        let v: Vec<u64> = (0..8).map(|n| catalan(n).try_into().unwrap()).collect();
        assert_eq!(v, vec![1, 1, 2, 5, 14, 42, 132, 429]);
    }

    #[test]
    fn dimension_values() {
        assert_eq!(ytl_dimension_formula(2, 3).unwrap(), BigUint::from(28u32));
        assert_eq!(ytl_dimension_sum_squares(2, 3).unwrap(), BigUint::from(28u32));
        assert_eq!(ytl_dimension_formula(3, 3).unwrap(), BigUint::from(69u32));
        assert_eq!(ytl_dimension_sum_squares(1, 3).unwrap(), BigUint::from(5u32));
        assert_eq!(ytl_dimension_formula(1, 5).unwrap(), catalan(5));
    }
}
