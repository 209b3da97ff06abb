mod oracles;

use std::collections::BTreeSet;

use num_bigint::BigUint;
use proptest::prelude::*;
use ytl_core::rep_theory::{catalan, ytl_dimension_formula};
use ytl_core::ytl_basis::*;
use ytl_core::yokonuma::{pattern_to_permutation, permutation_to_pattern, Permutation};

#[test]
fn catalan_many_tl_patterns() {
    for n in 1..=12 {
        assert_eq!(BigUint::from(enumerate_tn(n).len()), catalan(n), "n={n}");
    }
}

#[test]
fn tl_patterns_are_321_avoiding_permutations() {
    for n in 1..=7 {
        let from_patterns: BTreeSet<Vec<usize>> = enumerate_tn(n)
            .iter()
            .map(|g| pattern_to_permutation(g).images().to_vec())
            .collect();
        let avoiding: BTreeSet<Vec<usize>> = oracles::permutations(n)
            .into_iter()
            .filter(|w| !oracles::contains_321(w))
            .collect();
        assert_eq!(from_patterns, avoiding, "n={n}");
    }
}

#[test]
fn pattern_words_give_their_permutations() {
    for n in 1..=6 {
        for g in enumerate_hn(n) {
            let w = pattern_to_permutation(&g);
            assert_eq!(w.images(), oracles::word_permutation(n, &g.word()), "{g}");
            assert_eq!(w.length(), g.degree(), "{g} is not reduced");
        }
    }
}

#[test]
fn bijection_with_symmetric_group() {
    for n in 1..=7 {
        let hn = enumerate_hn(n);
        let perms = oracles::permutations(n);
        assert_eq!(hn.len(), perms.len());
        let images: BTreeSet<Vec<usize>> =
            hn.iter().map(|g| pattern_to_permutation(g).images().to_vec()).collect();
        assert_eq!(images.len(), hn.len());
        for g in &hn {
            assert_eq!(&permutation_to_pattern(&pattern_to_permutation(g)), g);
        }
        for w in perms {
            let w = Permutation::from_images(w).unwrap();
            assert_eq!(pattern_to_permutation(&permutation_to_pattern(&w)), w);
        }
    }
}

#[test]
fn counting_lemma_both_ways() {
    for n in 1..=12 {
        let row = z_row_enumerated(n);
        assert_eq!(row, z_row_recursive(n), "n={n}");
        let (sum, weighted) = z_row_sums(&row);
        assert_eq!(sum, catalan(n));
        assert_eq!(weighted, catalan(n) * BigUint::from(n + 1));
        assert_eq!(row[n - 1], catalan(n - 1));
        for (m, z) in row.iter().enumerate() {
            assert_eq!(z_count(n, m, ZMethod::Enumeration).unwrap(), *z);
            assert_eq!(z_count(n, m, ZMethod::Recursion).unwrap(), *z);
        }
    }
    assert!(z_count(4, 4, ZMethod::Recursion).is_err());
}

#[test]
fn z_row_from_pattern_weights() {
    for n in 1..=9 {
        let mut row = vec![0u64; n];
        for g in enumerate_tn(n) {
            row[g.weight()] += 1;
        }
        let z: Vec<BigUint> = row.into_iter().map(BigUint::from).collect();
        assert_eq!(z, z_row_enumerated(n));
    }
}

#[test]
fn basis_size_is_dimension() {
    for d in 1..=4 {
        for n in 3..=9 {
            let basis = enumerate_basis(d, n).unwrap();
            assert_eq!(BigUint::from(basis.len()), ytl_dimension_formula(d, n).unwrap(), "d={d} n={n}");
        }
    }
}

#[test]
fn exponent_set_sizes_follow_closed_form() {
    for d in 1..=4usize {
        for n in 1..=8usize {
            for g in enumerate_tn(n) {
                let m = g.weight();
                let set = monomial_set(d, &g).unwrap();
                let p = 1i64 << (n - m - 1);
                let (d, dd) = (d as i64, (d * d) as i64);
                let expected = p * dd - (p - 1) * d - if m == 0 { dd - d } else { 0 };
                assert_eq!(set.len() as i64, expected, "d={d} g={g}");
                assert_eq!(
                    BigUint::from(set.len()),
                    exponent_set_size(d as usize, n, m).unwrap()
                );
            }
        }
    }
}

#[test]
fn monomial_sets_match_divisibility_characterization() {
    for d in 1..=4 {
        for n in 1..=6 {
            for g in enumerate_tn(n) {
                let got: BTreeSet<Vec<usize>> = monomial_set(d, &g).unwrap().exponents.into_iter().collect();
                let expected = if d == 1 {
                    BTreeSet::from([vec![0; n]])
                } else if g.is_empty() {
                    oracles::identity_monomials(d, n)
                } else {
                    oracles::pattern_monomials(d, n, g.pairs())
                };
                assert_eq!(got, expected, "d={d} n={n} g={g}");
            }
        }
    }
}

#[test]
fn covered_exponents_vanish_except_first_top() {
    for d in 2..=4 {
        for n in 2..=7 {
            for g in enumerate_tn(n).into_iter().filter(|g| !g.is_empty()) {
                let i1 = g.pairs()[0].0;
                let covered = g.index_set();
                for e in monomial_set(d, &g).unwrap().exponents {
                    for j in covered.iter().filter(|&j| j != i1) {
                        assert_eq!(e[j - 1], 0, "{g} {e:?}");
                    }
                }
            }
        }
    }
}

#[test]
fn worked_pattern() {
    let g = CyclePattern::parse(5, "2:1 4:2").unwrap();
    assert_eq!(g.word(), vec![2, 1, 4, 3, 2]);
    assert_eq!(g.weight(), 4);
    assert_eq!(g.first_cycle_covering(1).unwrap(), 0);
    assert_eq!(g.first_cycle_covering(2).unwrap(), 0);
    assert_eq!(g.first_cycle_covering(3).unwrap(), 1);
    assert_eq!(g.first_cycle_covering(4).unwrap(), 1);
    assert!(g.first_cycle_covering(5).is_err());
    assert_eq!(relabelled_variables(&g).unwrap(), vec![2, 5]);
}

#[test]
fn pattern_validation() {
    assert!(CyclePattern::new(3, vec![(2, 2)]).is_err());
    assert!(CyclePattern::new(3, vec![(2, 0), (1, 0)]).is_err());
    assert!(CyclePattern::new(3, vec![(3, 0)]).is_err());
    assert!(CyclePattern::parse(4, "2:x").is_err());
    let hn_only = CyclePattern::new(3, vec![(1, 0), (2, 1)]).unwrap();
    assert!(!hn_only.is_temperley_lieb());
    assert!(monomial_set(2, &hn_only).is_err());
    assert!(enumerate_basis(2, 2).is_err());
    assert!(enumerate_basis(0, 3).is_err());
}

proptest! {
    #[test]
    fn pattern_json_round_trips(n in 1usize..7, pick in any::<prop::sample::Index>()) {
        let all = enumerate_hn(n);
        let g = &all[pick.index(all.len())];
        let json = serde_json::to_string(g).unwrap();
        let pairs: Vec<(usize, usize)> = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(&CyclePattern::new(n, pairs).unwrap(), g);
        prop_assert_eq!(&CyclePattern::parse(n, &g.to_string()).unwrap(), g);
    }

    #[test]
    fn tl_weight_bounds(n in 1usize..10, pick in any::<prop::sample::Index>()) {
        let all = enumerate_tn(n);
        let g = &all[pick.index(all.len())];
        prop_assert!(g.weight() < n);
        prop_assert!(g.weight() <= g.degree());
        if !g.is_empty() {
            let last = g.pairs().len() - 1;
            prop_assert_eq!(g.ladder_end(last).unwrap(), last);
        }
    }
}
