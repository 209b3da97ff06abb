//! Brute-force checks of the quotient `YTL_{d,n}(u)` against the basis
//! `S_{d,n}` and the closed dimension formula.

use std::collections::BTreeMap;

use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::algebra::{AlgebraElement, Generator, YokonumaAlgebra};
use super::ideal::{ideal_echelon, IdealRoute};
use super::linalg::RowEchelon;
use super::scalar::{validate_specialisation, Scalar};
use crate::error::{Error, Result};
use crate::rep_theory::{require_ytl_rank, ytl_dimension_formula};
use crate::ytl_basis::{enumerate_basis, enumerate_tn, BasisElement, CyclePattern};

type Alg = YokonumaAlgebra<BigRational>;
type Elem = AlgebraElement<BigRational>;

/// `count` distinct specialisations `±p/q` with `2 ≤ p ≤ 50`, `1 ≤ q ≤ 20`,
/// skipping the denylisted values.
pub fn draw_u_values(seed: u64, count: usize) -> Vec<BigRational> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out: Vec<BigRational> = Vec::with_capacity(count);
    while out.len() < count {
        let p: i64 = rng.gen_range(2..=50);
        let q: i64 = rng.gen_range(1..=20);
        let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
        let u0 = BigRational::new((sign * p).into(), q.into());
        if validate_specialisation(&u0).is_ok() && !out.contains(&u0) {
            out.push(u0);
        }
    }
    out
}

/// Outcome of one named check, possibly over many instances.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub instances: usize,
    pub failures: Vec<String>,
    pub passed: bool,
}

impl CheckResult {
    fn new(name: &str) -> Self {
        CheckResult { name: name.to_string(), instances: 0, failures: Vec::new(), passed: true }
    }

    fn record(&mut self, ok: bool, instance: impl FnOnce() -> String) {
        self.instances += 1;
        if !ok {
            self.passed = false;
            self.failures.push(instance());
        }
    }
}

fn all_passed(items: &[CheckResult]) -> bool {
    items.iter().all(|c| c.passed)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RankRun {
    pub u: String,
    pub route: IdealRoute,
    pub candidate_rows: usize,
    pub ideal_rank: usize,
    pub quotient_dimension: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuotientDimensionReport {
    pub d: usize,
    pub n: usize,
    pub algebra_dimension: usize,
    pub expected: String,
    pub runs: Vec<RankRun>,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BasisIndependenceReport {
    pub u: String,
    pub basis_size: usize,
    pub residue_rank: usize,
    pub dependent: Vec<BasisElement>,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationReport {
    pub u: String,
    pub items: Vec<CheckResult>,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpanningReport {
    pub u: String,
    pub words: usize,
    pub failures: Vec<String>,
    pub passed: bool,
}

/// Everything `verify` reports for one `(d, n)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub d: usize,
    pub n: usize,
    pub u_values: Vec<String>,
    pub symbolic: bool,
    pub defining_relations: RelationReport,
    pub quotient_dimension: QuotientDimensionReport,
    pub basis_independence: BasisIndependenceReport,
    pub relation_ledger: RelationReport,
    pub passed: bool,
}

/// Computes the ideal rank at each `u0` and compares `d^n n! - rank` with the
/// closed formula.
pub fn verify_quotient_dimension(
    d: usize,
    n: usize,
    u_values: &[BigRational],
    route: IdealRoute,
) -> Result<QuotientDimensionReport> {
    require_ytl_rank(n)?;
    if u_values.is_empty() {
        return Err(Error::InvalidParameter("need at least one value of u".into()));
    }
    let expected = ytl_dimension_formula(d, n)?;
    let mut runs = Vec::new();
    let mut dim = 0;
    for u0 in u_values {
        let alg = Alg::specialised(d, n, u0)?;
        dim = alg.dimension();
        let (_, r) = ideal_echelon(&alg, route)?;
        runs.push(RankRun {
            u: u0.to_string(),
            route,
            candidate_rows: r.candidate_rows,
            ideal_rank: r.rank,
            quotient_dimension: dim - r.rank,
        });
    }
    let passed = runs.iter().all(|r| expected == r.quotient_dimension.into());
    Ok(QuotientDimensionReport {
        d,
        n,
        algebra_dimension: dim,
        expected: expected.to_string(),
        runs,
        passed,
    })
}

/// Each element of `S_{d,n}` is a single basis word, so its residue modulo
/// the ideal is independent of the others exactly when adding its unit
/// vector to the ideal's row space raises the rank.
pub fn verify_basis_independence(alg: &Alg, ideal: &RowEchelon) -> Result<BasisIndependenceReport> {
    let basis = enumerate_basis(alg.d(), alg.n())?;
    let mut ech = ideal.clone();
    let before = ech.rank();
    let mut dependent = Vec::new();
    for b in &basis {
        let e = alg.basis_element(&b.framing, &b.pattern)?;
        if !ech.insert(alg.to_dense(&e)) {
            dependent.push(b.clone());
        }
    }
    Ok(BasisIndependenceReport {
        u: alg.u().to_string(),
        basis_size: basis.len(),
        residue_rank: ech.rank() - before,
        passed: dependent.is_empty(),
        dependent,
    })
}

/// The defining relations of `Y_{d,n}(u)` together with the idempotence of
/// `e_i`, the inverse formula and the conjugation identity relating the
/// `G_{i,i+1}`, evaluated as products in the engine.
pub fn verify_defining_relations<S: Scalar>(
    alg: &YokonumaAlgebra<S>,
    u_label: &str,
) -> Result<RelationReport> {
    let n = alg.n();
    let d = alg.d();
    let mul = |a: &AlgebraElement<S>, b: &AlgebraElement<S>| alg.multiply(a, b);
    let mut items = Vec::new();

    let mut b1 = CheckResult::new("braid_far_commute");
    let mut b2 = CheckResult::new("braid_adjacent");
    let mut quad = CheckResult::new("quadratic");
    let mut idem = CheckResult::new("idempotent_e");
    let mut inv = CheckResult::new("inverse_g");
    for i in 1..n {
        let gi = alg.g(i)?;
        for j in i + 2..n {
            let gj = alg.g(j)?;
            b1.record(mul(&gi, &gj)? == mul(&gj, &gi)?, || format!("i={i}, j={j}"));
        }
        if i + 1 < n {
            let gj = alg.g(i + 1)?;
            let lhs = mul(&mul(&gi, &gj)?, &gi)?;
            let rhs = mul(&gj, &mul(&gi, &gj)?)?;
            b2.record(lhs == rhs, || format!("i={i}"));
        }
        let e = alg.e(i)?;
        let c = alg.u().sub_ref(&S::one());
        let rhs = alg.add(&alg.identity(), &alg.scale(&alg.add(&e, &mul(&e, &gi)?)?, &c))?;
        quad.record(mul(&gi, &gi)? == rhs, || format!("i={i}"));
        idem.record(mul(&e, &e)? == e, || format!("i={i}"));
        let g_inv = alg.inverse_of_generator(i)?;
        let one = alg.identity();
        inv.record(mul(&gi, &g_inv)? == one && mul(&g_inv, &gi)? == one, || format!("i={i}"));
    }

    let mut f1 = CheckResult::new("framing_commute");
    let mut f2 = CheckResult::new("framing_transport");
    let mut f3 = CheckResult::new("framing_order");
    for j in 1..=n {
        let tj = alg.t(j)?;
        for k in 1..=n {
            let tk = alg.t(k)?;
            f1.record(mul(&tj, &tk)? == mul(&tk, &tj)?, || format!("j={j}, k={k}"));
        }
        for i in 1..n {
            let sj = if j == i { i + 1 } else if j == i + 1 { i } else { j };
            let gi = alg.g(i)?;
            f2.record(mul(&tj, &gi)? == mul(&gi, &alg.t(sj)?)?, || format!("j={j}, i={i}"));
        }
        let mut power = alg.identity();
        for _ in 0..d {
            power = mul(&power, &tj)?;
        }
        f3.record(power == alg.identity(), || format!("j={j}"));
    }

    // G_{i,i+1} c^{i-1} = c^{i-1} G_{1,2} with c = g_1 ⋯ g_{n-1}.
    let mut conj = CheckResult::new("ttl_generator_conjugation");
    if n >= 3 {
        let c = alg.word(&(1..n).map(Generator::G).collect::<Vec<_>>())?;
        let g12 = alg.ttl_generator(1)?;
        let mut cp = alg.identity();
        for i in 1..n - 1 {
            let gi = alg.ttl_generator(i)?;
            conj.record(mul(&gi, &cp)? == mul(&cp, &g12)?, || format!("i={i}"));
            cp = mul(&cp, &c)?;
        }
    }

    items.extend([b1, b2, f1, f2, f3, quad, idem, inv, conj]);
    Ok(RelationReport { u: u_label.to_string(), passed: all_passed(&items), items })
}

/// A linear form `Σ c · t_j`.
fn linear(alg: &Alg, terms: &[(i64, usize)]) -> Result<Elem> {
    let mut acc = alg.zero();
    for &(c, j) in terms {
        let tj = alg.scale(&alg.t(j)?, &BigRational::from_integer(c.into()));
        acc = alg.add(&acc, &tj)?;
    }
    Ok(acc)
}

fn product(alg: &Alg, factors: &[Elem]) -> Result<Elem> {
    factors.iter().try_fold(alg.identity(), |acc, f| alg.multiply(&acc, f))
}

fn diff(alg: &Alg, a: usize, b: usize) -> Result<Elem> {
    linear(alg, &[(1, a), (-1, b)])
}

fn word(alg: &Alg, gens: &[usize]) -> Result<Elem> {
    alg.word(&gens.iter().map(|&i| Generator::G(i)).collect::<Vec<_>>())
}

fn one_plus_g(alg: &Alg, i: usize) -> Result<Elem> {
    alg.add(&alg.identity(), &alg.g(i)?)
}

/// Row spaces "ideal + span of the spanning-set words of degree < k", built
/// on demand.
struct LowerSpans<'a> {
    alg: &'a Alg,
    ideal: &'a RowEchelon,
    cache: BTreeMap<usize, RowEchelon>,
}

impl<'a> LowerSpans<'a> {
    fn new(alg: &'a Alg, ideal: &'a RowEchelon) -> Self {
        LowerSpans { alg, ideal, cache: BTreeMap::new() }
    }

    fn below(&mut self, degree: usize) -> Result<&RowEchelon> {
        if !self.cache.contains_key(&degree) {
            let alg = self.alg;
            let mut ech = self.ideal.clone();
            let framings = all_framings(alg.d(), alg.n());
            for g in enumerate_tn(alg.n()).iter().filter(|g| g.degree() < degree) {
                for r in &framings {
                    ech.insert(alg.to_dense(&alg.basis_element(r, g)?));
                }
            }
            self.cache.insert(degree, ech);
        }
        Ok(&self.cache[&degree])
    }

    /// Whether `p · w` lies in the ideal plus the span of lower words.
    fn lowers(&mut self, p: &Elem, w: &Elem, degree: usize) -> Result<bool> {
        let x = self.alg.multiply(p, w)?;
        let v = self.alg.to_dense(&x);
        Ok(self.below(degree)?.contains(&v))
    }
}

fn all_framings(d: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|r| {
                (0..d).map(move |x| {
                    let mut r = r.clone();
                    r.push(x);
                    r
                })
            })
            .collect();
    }
    out
}

/// Linear dependence relations that must vanish in the quotient, and the
/// statements that `P(t) · g` drops to strictly lower degree modulo the
/// ideal.
pub fn verify_relation_ledger(alg: &Alg, ideal: &RowEchelon) -> Result<RelationReport> {
    let n = alg.n();
    let zero_mod_ideal = |x: &Elem| ideal.contains(&alg.to_dense(x));
    let mut items = Vec::new();

    // Relations in the quotient, i = 1 … n-2 unless stated.
    let mut r1 = CheckResult::new("ttl_generator");
    let mut r2 = CheckResult::new("framed_difference_left");
    let mut r3 = CheckResult::new("framed_difference_right");
    let mut r4 = CheckResult::new("framed_quadratic_upper");
    let mut r5 = CheckResult::new("framed_quadratic_lower");
    let mut r6 = CheckResult::new("framing_cubic_adjacent");
    for i in 1..n - 1 {
        r1.record(zero_mod_ideal(&alg.ttl_generator(i)?), || format!("i={i}"));

        // (t_i - t_{i+2})(1 + g_i) + (t_i - t_{i+1})(g_{i+1} + g_{i+1} g_i)
        let x = alg.add(
            &alg.multiply(&diff(alg, i, i + 2)?, &one_plus_g(alg, i)?)?,
            &alg.multiply(
                &diff(alg, i, i + 1)?,
                &alg.add(&alg.g(i + 1)?, &word(alg, &[i + 1, i])?)?,
            )?,
        )?;
        r2.record(zero_mod_ideal(&x), || format!("i={i}"));

        // (t_{i+2} - t_i)(1 + g_{i+1}) + (t_{i+2} - t_{i+1})(g_i + g_i g_{i+1})
        let x = alg.add(
            &alg.multiply(&diff(alg, i + 2, i)?, &one_plus_g(alg, i + 1)?)?,
            &alg.multiply(
                &diff(alg, i + 2, i + 1)?,
                &alg.add(&alg.g(i)?, &word(alg, &[i, i + 1])?)?,
            )?,
        )?;
        r3.record(zero_mod_ideal(&x), || format!("i={i}"));

        let x = product(alg, &[diff(alg, i + 2, i + 1)?, diff(alg, i + 2, i)?, one_plus_g(alg, i)?])?;
        r4.record(zero_mod_ideal(&x), || format!("i={i}"));

        let x = product(alg, &[diff(alg, i, i + 1)?, diff(alg, i + 1, i + 2)?, diff(alg, i, i + 2)?])?;
        r6.record(zero_mod_ideal(&x), || format!("i={i}"));
    }
    for i in 2..n {
        let x = product(alg, &[diff(alg, i - 1, i + 1)?, diff(alg, i - 1, i)?, one_plus_g(alg, i)?])?;
        r5.record(zero_mod_ideal(&x), || format!("i={i}"));
    }

    let mut c1 = CheckResult::new("framing_cubic_any");
    for i in 1..=n {
        for j in 1..=n {
            for k in 1..=n {
                let x = product(alg, &[diff(alg, i, j)?, diff(alg, i, k)?, diff(alg, j, k)?])?;
                c1.record(zero_mod_ideal(&x), || format!("i={i}, j={j}, k={k}"));
            }
        }
    }
    let mut c2 = CheckResult::new("framed_quadratic_any");
    for i in 1..n {
        for j in 1..=n {
            let x = product(alg, &[diff(alg, j, i)?, diff(alg, j, i + 1)?, one_plus_g(alg, i)?])?;
            c2.record(zero_mod_ideal(&x), || format!("i={i}, j={j}"));
        }
    }
    items.extend([r1, r2, r3, r4, r5, r6, c1, c2]);

    // Statements "P(t) w is a combination of lower-degree words".
    let mut spans = LowerSpans::new(alg, ideal);
    let one = alg.identity();

    let mut m1 = CheckResult::new("long_braid_lowers");
    let mut m2 = CheckResult::new("descending_pair_lowers");
    let mut m3 = CheckResult::new("ascending_pair_lowers");
    for i in 1..n - 1 {
        m1.record(spans.lowers(&one, &word(alg, &[i, i + 1, i])?, 3)?, || format!("i={i}"));
        let p = diff(alg, i, i + 1)?;
        m2.record(spans.lowers(&p, &word(alg, &[i + 1, i])?, 2)?, || format!("i={i}"));
        let p = diff(alg, i + 2, i + 1)?;
        m3.record(spans.lowers(&p, &word(alg, &[i, i + 1])?, 2)?, || format!("i={i}"));
    }
    let mut m4 = CheckResult::new("single_generator_lowers");
    for i in 1..n {
        for j in 1..=n {
            let p = alg.multiply(&diff(alg, j, i)?, &diff(alg, j, i + 1)?)?;
            m4.record(spans.lowers(&p, &alg.g(i)?, 1)?, || format!("i={i}, j={j}"));
        }
    }
    let mut m5 = CheckResult::new("identity_cubic_lowers");
    for i in 1..=n {
        for j in 1..=n {
            for k in 1..=n {
                let p = product(alg, &[diff(alg, i, j)?, diff(alg, i, k)?, diff(alg, j, k)?])?;
                m5.record(spans.lowers(&p, &one, 0)?, || format!("i={i}, j={j}, k={k}"));
            }
        }
    }
    let mut m6 = CheckResult::new("distant_pair_lowers");
    for i in 1..n {
        for j in i + 2..n {
            let p = linear(alg, &[(1, i), (1, i + 1), (-1, j), (-1, j + 1)])?;
            m6.record(spans.lowers(&p, &word(alg, &[i, j])?, 2)?, || format!("i={i}, j={j}"));
        }
    }
    let mut m7 = CheckResult::new("single_cycle_lowers");
    for i in 1..n {
        for k in 0..i {
            let g = CyclePattern::new(n, vec![(i, k)])?;
            let w = alg.basis_element(&vec![0; n], &g)?;
            for p in single_cycle_polynomials(alg, i, k)? {
                m7.record(spans.lowers(&p, &w, g.degree())?, || format!("pattern {g}"));
            }
        }
    }
    let mut m8 = CheckResult::new("pattern_lowers");
    for g in enumerate_tn(n).into_iter().filter(|g| !g.is_empty()) {
        let w = alg.basis_element(&vec![0; n], &g)?;
        for p in pattern_polynomials(alg, &g)? {
            m8.record(spans.lowers(&p, &w, g.degree())?, || format!("pattern {g}"));
        }
    }
    items.extend([m1, m2, m3, m4, m5, m6, m7, m8]);

    if alg.d() == 2 {
        let mut z = CheckResult::new("framing_cubic_vanishes_for_d2");
        for i in 1..=n {
            for j in 1..=n {
                for k in 1..=n {
                    let x = product(alg, &[diff(alg, i, j)?, diff(alg, i, k)?, diff(alg, j, k)?])?;
                    z.record(x.is_zero(), || format!("i={i}, j={j}, k={k}"));
                }
            }
        }
        items.push(z);
    }

    Ok(RelationReport { u: alg.u().to_string(), passed: all_passed(&items), items })
}

/// `t_j - t_i` for `j` in the cycle, and `(t_j - t_i)(t_j - t_{i+1})` for
/// every `j`.
fn single_cycle_polynomials(alg: &Alg, i: usize, k: usize) -> Result<Vec<Elem>> {
    let mut out = Vec::new();
    for j in i - k..=i {
        out.push(diff(alg, j, i)?);
    }
    for j in 1..=alg.n() {
        out.push(alg.multiply(&diff(alg, j, i)?, &diff(alg, j, i + 1)?)?);
    }
    Ok(out)
}

/// The polynomials attached to a Temperley–Lieb pattern: those of its first
/// cycle, then for each later cycle `l` the differences `t_j - t_{i_l}` for
/// `max(i_l - k_l, i_{l-1} + 2) ≤ j ≤ i_l`, the sum
/// `t_{i_l} + t_{i_l+1} - t_{i_1} - t_{i_1+1}` when `i_l > i_{l-1} + 1`, and
/// `t_{i_l+1} - t_{i_{l-1}+1}` when `i_l - k_l ≤ i_{l-1} + 1`.
fn pattern_polynomials(alg: &Alg, g: &CyclePattern) -> Result<Vec<Elem>> {
    let pairs = g.pairs();
    let (i1, k1) = pairs[0];
    let mut out = single_cycle_polynomials(alg, i1, k1)?;
    for l in 1..pairs.len() {
        let (il, kl) = pairs[l];
        let prev = pairs[l - 1].0;
        for j in (il - kl).max(prev + 2)..=il {
            out.push(diff(alg, j, il)?);
        }
        if il > prev + 1 {
            out.push(linear(alg, &[(1, il), (1, il + 1), (-1, i1), (-1, i1 + 1)])?);
        }
        if il - kl <= prev + 1 {
            out.push(diff(alg, il + 1, prev + 1)?);
        }
    }
    Ok(out)
}

/// Random words in the generators must reduce, modulo the ideal, to words of
/// `S` whose degree is at most the number of `g`'s in the word.
pub fn verify_spanning(alg: &Alg, ideal: &RowEchelon, words: usize, seed: u64) -> Result<SpanningReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut spans = LowerSpans::new(alg, ideal);
    let n = alg.n();
    let mut failures = Vec::new();
    for _ in 0..words {
        let len = rng.gen_range(1..=6);
        let w: Vec<Generator> = (0..len)
            .map(|_| {
                if rng.gen_bool(0.5) {
                    Generator::T(rng.gen_range(1..=n))
                } else {
                    Generator::G(rng.gen_range(1..n))
                }
            })
            .collect();
        let degree = w.iter().filter(|x| matches!(x, Generator::G(_))).count();
        let x = alg.word(&w)?;
        let bounded = alg.degree(&x).unwrap_or(0) <= degree;
        let spanned = spans.below(degree + 1)?.contains(&alg.to_dense(&x));
        if !(bounded && spanned) {
            failures.push(format!("{w:?}"));
        }
    }
    Ok(SpanningReport { u: alg.u().to_string(), words, passed: failures.is_empty(), failures })
}

/// Runs every check for one `(d, n)`. The ideal rank is computed at each
/// value in `u_values`; the basis and relation checks use the first one.
/// With `symbolic`, the defining relations are checked over `Q[u, u^{-1}]`.
pub fn verify_all(
    d: usize,
    n: usize,
    u_values: &[BigRational],
    symbolic: bool,
    route: IdealRoute,
) -> Result<VerificationReport> {
    require_ytl_rank(n)?;
    let quotient_dimension = verify_quotient_dimension(d, n, u_values, route)?;
    let u0 = &u_values[0];
    let alg = Alg::specialised(d, n, u0)?;
    let (ideal, _) = ideal_echelon(&alg, route)?;
    let defining_relations = if symbolic {
        let sym = YokonumaAlgebra::symbolic(d, n)?;
        verify_defining_relations(&sym, "u")?
    } else {
        verify_defining_relations(&alg, &u0.to_string())?
    };
    let basis_independence = verify_basis_independence(&alg, &ideal)?;
    let relation_ledger = verify_relation_ledger(&alg, &ideal)?;
    let passed = defining_relations.passed
        && quotient_dimension.passed
        && basis_independence.passed
        && relation_ledger.passed;
    Ok(VerificationReport {
        d,
        n,
        u_values: u_values.iter().map(|u| u.to_string()).collect(),
        symbolic,
        defining_relations,
        quotient_dimension,
        basis_independence,
        relation_ledger,
        passed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::yokonuma::scalar::parse_rational;
    use num_traits::{One, Zero};

    #[test]
    fn draws_are_reproducible_and_allowed() {
        let a = draw_u_values(11, 4);
        assert_eq!(a, draw_u_values(11, 4));
        assert_eq!(a.len(), 4);
        assert!(a.iter().all(|u| validate_specialisation(u).is_ok()));
        assert_ne!(draw_u_values(12, 2), draw_u_values(13, 2));
    }

    #[test]
    fn two_three_end_to_end() {
        let u = vec![parse_rational("7").unwrap(), parse_rational("-5/3").unwrap()];
        let report = verify_all(2, 3, &u, true, IdealRoute::Literal).unwrap();
        assert!(report.passed, "{report:#?}");
        assert_eq!(report.quotient_dimension.runs[0].quotient_dimension, 28);
        assert_eq!(report.basis_independence.residue_rank, 28);
    }

    #[test]
    fn spanning_words() {
        let u0 = parse_rational("7").unwrap();
        let alg = Alg::specialised(2, 3, &u0).unwrap();
        let (ideal, _) = ideal_echelon(&alg, IdealRoute::Closure).unwrap();
        let r = verify_spanning(&alg, &ideal, 40, 3).unwrap();
        assert!(r.passed, "{:?}", r.failures);
    }

    #[test]
    fn full_span_is_detected_as_dependent() {
        let u0 = parse_rational("7").unwrap();
        let alg = Alg::specialised(1, 3, &u0).unwrap();
        let mut everything = RowEchelon::new(alg.dimension());
        for k in 0..alg.dimension() {
            let mut v = vec![BigRational::zero(); alg.dimension()];
            v[k] = BigRational::one();
            everything.insert(v);
        }
        let r = verify_basis_independence(&alg, &everything).unwrap();
        assert!(!r.passed);
        assert_eq!(r.dependent.len(), 5);
    }
}
