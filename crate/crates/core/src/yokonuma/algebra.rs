use std::collections::{BTreeMap, HashMap};
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use super::laurent::LaurentPolynomial;
use super::permutation::{pattern_to_permutation, Permutation};
use super::scalar::{validate_specialisation, Scalar};
use crate::error::{Error, Result};
use crate::ytl_basis::{enumerate_hn, CyclePattern};

/// A basis word `t_1^{r_1} ⋯ t_n^{r_n} g_w` of the Juyumaya basis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FramedWord {
    pub framing: Vec<usize>,
    pub braiding: CyclePattern,
}

/// A linear combination of basis words, keyed by basis index
/// (see [`YokonumaAlgebra::index_of`]).
#[derive(Clone, Debug, PartialEq)]
pub struct AlgebraElement<S> {
    d: usize,
    n: usize,
    terms: BTreeMap<usize, S>,
}

impl<S: Scalar> AlgebraElement<S> {
    pub fn params(&self) -> (usize, usize) {
        (self.d, self.n)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Nonzero coefficients by basis index, increasing.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &S)> {
        self.terms.iter().map(|(&k, c)| (k, c))
    }

    pub fn coefficient(&self, index: usize) -> S {
        self.terms.get(&index).cloned().unwrap_or_else(S::zero)
    }

    fn add_term(&mut self, index: usize, c: &S) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(index).or_insert_with(S::zero);
        slot.add_assign_ref(c);
        if slot.is_zero() {
            self.terms.remove(&index);
        }
    }
}

/// Generators of `Y_{d,n}(u)`, for building words.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Generator {
    T(usize),
    G(usize),
}

type Expansion<S> = Vec<(usize, usize, S)>;

/// Multiplication in `Y_{d,n}(u)` over the coefficient ring `S`.
///
/// A basis word `t^r g_w` has index `framing(r) · n! + perm(w)`, where
/// `framing(r) = Σ_j r_j d^{j-1}` and `perm(w)` is the position of the
/// pattern of `w` in [`enumerate_hn`].
///
/// Framings move through braidings by `g_w t_j = t_{w(j)} g_w`. Products of
/// braidings `g_x g_v` are expanded on first use and cached.
pub struct YokonumaAlgebra<S: Scalar> {
    d: usize,
    n: usize,
    u: S,
    u_inv: S,
    framings: usize,
    patterns: Vec<CyclePattern>,
    perms: Vec<Permutation>,
    perm_index: HashMap<Permutation, usize>,
    /// `right_gen[w][i-1]`: `g_w g_i` as (framing, perm, coefficient).
    right_gen: Vec<Vec<Expansion<S>>>,
    braid: Vec<OnceLock<Expansion<S>>>,
}

impl YokonumaAlgebra<BigRational> {
    /// The algebra with `u` specialised to a rational `u0`.
    pub fn specialised(d: usize, n: usize, u0: &BigRational) -> Result<Self> {
        validate_specialisation(u0)?;
        Self::with_parameter(d, n, u0.clone(), u0.recip())
    }
}

impl YokonumaAlgebra<LaurentPolynomial> {
    /// The algebra over `Q[u, u^{-1}]`.
    pub fn symbolic(d: usize, n: usize) -> Result<Self> {
        Self::with_parameter(d, n, LaurentPolynomial::u(), LaurentPolynomial::u_inv())
    }

    /// Substitutes `u = u0` in every coefficient.
    pub fn specialise(
        &self,
        a: &AlgebraElement<LaurentPolynomial>,
        u0: &BigRational,
    ) -> AlgebraElement<BigRational> {
        let mut out = AlgebraElement { d: a.d, n: a.n, terms: BTreeMap::new() };
        for (k, c) in a.terms() {
            out.add_term(k, &c.evaluate(u0));
        }
        out
    }
}

impl<S: Scalar> YokonumaAlgebra<S> {
    fn with_parameter(d: usize, n: usize, u: S, u_inv: S) -> Result<Self> {
        if d == 0 || n == 0 {
            return Err(Error::InvalidParameter(format!("need d, n ≥ 1 (got d = {d}, n = {n})")));
        }
        if n > 7 || (d as f64).powi(n as i32) > 1e6 {
            return Err(Error::InvalidParameter(format!("Y_{{{d},{n}}} is too large")));
        }
        let patterns = enumerate_hn(n);
        let perms: Vec<Permutation> = patterns.iter().map(pattern_to_permutation).collect();
        let perm_index = perms.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
        let nf = perms.len();
        let mut alg = YokonumaAlgebra {
            d,
            n,
            u,
            u_inv,
            framings: d.pow(n as u32),
            patterns,
            perms,
            perm_index,
            right_gen: Vec::new(),
            braid: (0..nf * nf).map(|_| OnceLock::new()).collect(),
        };
        alg.right_gen = (0..nf)
            .map(|w| (1..n).map(|i| alg.expand_right_generator(w, i)).collect())
            .collect();
        Ok(alg)
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `d^n · n!`.
    pub fn dimension(&self) -> usize {
        self.framings * self.perms.len()
    }

    pub fn u(&self) -> &S {
        &self.u
    }

    fn check(&self, a: &AlgebraElement<S>) -> Result<()> {
        if a.d != self.d || a.n != self.n {
            return Err(Error::ParameterMismatch(self.d, self.n, a.d, a.n));
        }
        Ok(())
    }

    fn rational(&self, num: i64, den: i64) -> S {
        S::from_rational(&BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    fn element(&self) -> AlgebraElement<S> {
        AlgebraElement { d: self.d, n: self.n, terms: BTreeMap::new() }
    }

    // Framing arithmetic on base-d digits, r_1 least significant.

    fn digit(&self, f: usize, j: usize) -> usize {
        (f / self.d.pow(j as u32 - 1)) % self.d
    }

    fn framing_of(&self, r: &[usize]) -> usize {
        r.iter().rev().fold(0, |acc, &x| acc * self.d + x)
    }

    fn framing_digits(&self, f: usize) -> Vec<usize> {
        (1..=self.n).map(|j| self.digit(f, j)).collect()
    }

    fn add_framings(&self, a: usize, b: usize) -> usize {
        let mut out = 0;
        let mut place = 1;
        let (mut a, mut b) = (a, b);
        for _ in 0..self.n {
            out += ((a % self.d + b % self.d) % self.d) * place;
            a /= self.d;
            b /= self.d;
            place *= self.d;
        }
        out
    }

    /// Framing `c` with `g_w t^b = t^c g_w`, i.e. `c_{w(j)} = b_j`.
    fn act(&self, w: usize, b: usize) -> usize {
        let w = &self.perms[w];
        let mut c = vec![0; self.n];
        for j in 1..=self.n {
            c[w.apply(j) - 1] = self.digit(b, j);
        }
        self.framing_of(&c)
    }

    /// Framing of `t_p^s t_q^{-s}`.
    fn pair_framing(&self, p: usize, q: usize, s: usize) -> usize {
        let mut r = vec![0; self.n];
        r[p - 1] = s % self.d;
        r[q - 1] = (self.d - s % self.d) % self.d;
        self.framing_of(&r)
    }

    fn expand_right_generator(&self, w: usize, i: usize) -> Expansion<S> {
        let perm = &self.perms[w];
        let moved = perm.times_transposition(i);
        let ws = self.perm_index[&moved];
        if !perm.has_right_descent(i) {
            return vec![(0, ws, S::one())];
        }
        // g_w g_i = g_{w'} g_i² with w' = w s_i, expanded by the quadratic
        // relation; e_i moves left through g_{w'} as e_{w'(i), w'(i+1)}.
        let (p, q) = (moved.apply(i), moved.apply(i + 1));
        let mut coef = self.u.clone();
        coef.add_assign_ref(&S::one().neg_ref());
        let coef = coef.mul_ref(&self.rational(1, self.d as i64));
        let mut acc: BTreeMap<(usize, usize), S> = BTreeMap::new();
        acc.insert((0, ws), S::one());
        for s in 0..self.d {
            let f = self.pair_framing(p, q, s);
            for target in [ws, w] {
                acc.entry((f, target)).or_insert_with(S::zero).add_assign_ref(&coef);
            }
        }
        acc.into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|((f, y), c)| (f, y, c))
            .collect()
    }

    /// `g_x g_v` in the basis.
    fn braid_product(&self, x: usize, v: usize) -> &Expansion<S> {
        self.braid[x * self.perms.len() + v].get_or_init(|| {
            let mut cur: Expansion<S> = vec![(0, x, S::one())];
            for i in self.patterns[v].word() {
                let mut acc: BTreeMap<(usize, usize), S> = BTreeMap::new();
                for (f, w, c) in &cur {
                    for (f2, y, c2) in &self.right_gen[*w][i - 1] {
                        acc.entry((self.add_framings(*f, *f2), *y))
                            .or_insert_with(S::zero)
                            .add_assign_ref(&c.mul_ref(c2));
                    }
                }
                cur = acc
                    .into_iter()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|((f, y), c)| (f, y, c))
                    .collect();
            }
            cur
        })
    }

    /// Basis index of `t^r g`, for a framing `r ∈ {0,…,d-1}^n` and
    /// `g ∈ H_n`.
    pub fn index_of(&self, framing: &[usize], braiding: &CyclePattern) -> Result<usize> {
        if framing.len() != self.n || framing.iter().any(|&r| r >= self.d) {
            return Err(Error::InvalidParameter(format!(
                "framing {framing:?} is not in {{0,…,{}}}^{}",
                self.d - 1,
                self.n
            )));
        }
        if braiding.n() != self.n {
            return Err(Error::ParameterMismatch(self.d, self.n, self.d, braiding.n()));
        }
        let w = self.perm_index[&pattern_to_permutation(braiding)];
        Ok(self.framing_of(framing) * self.perms.len() + w)
    }

    pub fn framed_word(&self, index: usize) -> FramedWord {
        let nf = self.perms.len();
        FramedWord {
            framing: self.framing_digits(index / nf),
            braiding: self.patterns[index % nf].clone(),
        }
    }

    /// Length of the braiding part of a basis word.
    pub fn degree_of(&self, index: usize) -> usize {
        self.patterns[index % self.perms.len()].degree()
    }

    pub fn basis_element(&self, framing: &[usize], braiding: &CyclePattern) -> Result<AlgebraElement<S>> {
        let mut e = self.element();
        e.add_term(self.index_of(framing, braiding)?, &S::one());
        Ok(e)
    }

    pub fn zero(&self) -> AlgebraElement<S> {
        self.element()
    }

    pub fn identity(&self) -> AlgebraElement<S> {
        let mut e = self.element();
        e.add_term(0, &S::one());
        e
    }

    pub fn scalar(&self, c: &S) -> AlgebraElement<S> {
        let mut e = self.element();
        e.add_term(0, c);
        e
    }

    fn check_t(&self, j: usize) -> Result<()> {
        if j == 0 || j > self.n {
            return Err(Error::InvalidParameter(format!("t_{j} does not exist for n = {}", self.n)));
        }
        Ok(())
    }

    fn check_g(&self, i: usize) -> Result<()> {
        if i == 0 || i >= self.n {
            return Err(Error::InvalidParameter(format!("g_{i} does not exist for n = {}", self.n)));
        }
        Ok(())
    }

    /// `t_j^s` (exponent taken mod `d`).
    pub fn t_power(&self, j: usize, s: usize) -> Result<AlgebraElement<S>> {
        self.check_t(j)?;
        let mut r = vec![0; self.n];
        r[j - 1] = s % self.d;
        let mut e = self.element();
        e.add_term(self.framing_of(&r) * self.perms.len(), &S::one());
        Ok(e)
    }

    pub fn t(&self, j: usize) -> Result<AlgebraElement<S>> {
        self.t_power(j, 1)
    }

    pub fn g(&self, i: usize) -> Result<AlgebraElement<S>> {
        self.check_g(i)?;
        self.basis_element(&vec![0; self.n], &CyclePattern::new(self.n, vec![(i, 0)])?)
    }

    /// `e_{p,q} = (1/d) Σ_s t_p^s t_q^{-s}`.
    pub fn e_pair(&self, p: usize, q: usize) -> Result<AlgebraElement<S>> {
        self.check_t(p)?;
        self.check_t(q)?;
        let c = self.rational(1, self.d as i64);
        let mut e = self.element();
        for s in 0..self.d {
            let mut r = vec![0; self.n];
            r[p - 1] += s;
            r[q - 1] += self.d - s;
            let r: Vec<usize> = r.into_iter().map(|x| x % self.d).collect();
            e.add_term(self.framing_of(&r) * self.perms.len(), &c);
        }
        Ok(e)
    }

    pub fn e(&self, i: usize) -> Result<AlgebraElement<S>> {
        self.check_g(i)?;
        self.e_pair(i, i + 1)
    }

    /// `g_i^{-1} = g_i + (u^{-1} - 1) e_i + (u^{-1} - 1) e_i g_i`.
    pub fn inverse_of_generator(&self, i: usize) -> Result<AlgebraElement<S>> {
        let g = self.g(i)?;
        let e = self.e(i)?;
        let c = self.u_inv.sub_ref(&S::one());
        let eg = self.multiply(&e, &g)?;
        let tail = self.scale(&self.add(&e, &eg)?, &c);
        self.add(&g, &tail)
    }

    /// The product of a word in the generators, left to right.
    pub fn word(&self, word: &[Generator]) -> Result<AlgebraElement<S>> {
        let mut acc = self.identity();
        for &x in word {
            acc = match x {
                Generator::T(j) => self.right_t(&acc, j)?,
                Generator::G(i) => self.multiply(&acc, &self.g(i)?)?,
            };
        }
        Ok(acc)
    }

    /// `G_{i,i+1} = g_i g_{i+1} g_i + g_i g_{i+1} + g_{i+1} g_i + g_i + g_{i+1} + 1`.
    pub fn ttl_generator(&self, i: usize) -> Result<AlgebraElement<S>> {
        if i == 0 || i + 1 >= self.n {
            return Err(Error::InvalidParameter(format!("G_{{{i},{}}} needs i + 1 < n", i + 1)));
        }
        use Generator::G;
        let words: [&[Generator]; 6] = [
            &[G(i), G(i + 1), G(i)],
            &[G(i), G(i + 1)],
            &[G(i + 1), G(i)],
            &[G(i)],
            &[G(i + 1)],
            &[],
        ];
        let mut acc = self.zero();
        for w in words {
            acc = self.add(&acc, &self.word(w)?)?;
        }
        Ok(acc)
    }

    pub fn add(&self, a: &AlgebraElement<S>, b: &AlgebraElement<S>) -> Result<AlgebraElement<S>> {
        self.check(a)?;
        self.check(b)?;
        let mut out = a.clone();
        for (k, c) in b.terms() {
            out.add_term(k, c);
        }
        Ok(out)
    }

    pub fn sub(&self, a: &AlgebraElement<S>, b: &AlgebraElement<S>) -> Result<AlgebraElement<S>> {
        self.add(a, &self.neg(b))
    }

    pub fn neg(&self, a: &AlgebraElement<S>) -> AlgebraElement<S> {
        self.scale(a, &S::one().neg_ref())
    }

    pub fn scale(&self, a: &AlgebraElement<S>, c: &S) -> AlgebraElement<S> {
        let mut out = AlgebraElement { d: a.d, n: a.n, terms: BTreeMap::new() };
        for (k, x) in a.terms() {
            out.add_term(k, &x.mul_ref(c));
        }
        out
    }

    pub fn multiply(&self, a: &AlgebraElement<S>, b: &AlgebraElement<S>) -> Result<AlgebraElement<S>> {
        self.check(a)?;
        self.check(b)?;
        let nf = self.perms.len();
        let mut out = self.element();
        for (ka, alpha) in a.terms() {
            let (fa, x) = (ka / nf, ka % nf);
            for (kb, beta) in b.terms() {
                let (fb, v) = (kb / nf, kb % nf);
                let base = self.add_framings(fa, self.act(x, fb));
                let ab = alpha.mul_ref(beta);
                for (f, y, gamma) in self.braid_product(x, v) {
                    out.add_term(self.add_framings(base, *f) * nf + y, &ab.mul_ref(gamma));
                }
            }
        }
        Ok(out)
    }

    /// `t_j · a`.
    pub fn left_t(&self, a: &AlgebraElement<S>, j: usize) -> Result<AlgebraElement<S>> {
        self.check(a)?;
        self.check_t(j)?;
        let nf = self.perms.len();
        let tj = self.d.pow(j as u32 - 1);
        let mut out = self.element();
        for (k, c) in a.terms() {
            out.add_term(self.add_framings(k / nf, tj) * nf + k % nf, c);
        }
        Ok(out)
    }

    /// `a · t_j`.
    pub fn right_t(&self, a: &AlgebraElement<S>, j: usize) -> Result<AlgebraElement<S>> {
        self.check(a)?;
        self.check_t(j)?;
        let nf = self.perms.len();
        let mut out = self.element();
        for (k, c) in a.terms() {
            let w = k % nf;
            let shift = self.d.pow(self.perms[w].apply(j) as u32 - 1);
            out.add_term(self.add_framings(k / nf, shift) * nf + w, c);
        }
        Ok(out)
    }

    /// Coordinates in the basis, indexed as in [`Self::index_of`].
    pub fn to_dense(&self, a: &AlgebraElement<S>) -> Vec<S> {
        let mut v = vec![S::zero(); self.dimension()];
        for (k, c) in a.terms() {
            v[k] = c.clone();
        }
        v
    }

    pub fn from_dense(&self, v: &[S]) -> AlgebraElement<S> {
        let mut e = self.element();
        for (k, c) in v.iter().enumerate() {
            e.add_term(k, c);
        }
        e
    }

    /// Largest braiding length among the terms.
    pub fn degree(&self, a: &AlgebraElement<S>) -> Option<usize> {
        a.terms().map(|(k, _)| self.degree_of(k)).max()
    }

    pub fn terms_as_words<'a>(
        &'a self,
        a: &'a AlgebraElement<S>,
    ) -> impl Iterator<Item = (FramedWord, &'a S)> + 'a {
        a.terms().map(|(k, c)| (self.framed_word(k), c))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::yokonuma::scalar::parse_rational;
    use num_traits::One;

    fn alg(d: usize, n: usize) -> YokonumaAlgebra<LaurentPolynomial> {
        YokonumaAlgebra::symbolic(d, n).unwrap()
    }

    #[test]
    fn identity_is_neutral() {
        let a = alg(2, 3);
        let x = a.add(&a.g(1).unwrap(), &a.t(3).unwrap()).unwrap();
        assert_eq!(a.multiply(&a.identity(), &x).unwrap(), x);
        assert_eq!(a.multiply(&x, &a.identity()).unwrap(), x);
    }

    #[test]
    fn quadratic_relation() {
        let a = alg(3, 3);
        for i in 1..=2 {
            let g = a.g(i).unwrap();
            let e = a.e(i).unwrap();
            let lhs = a.multiply(&g, &g).unwrap();
            let c = a.u().sub_ref(&LaurentPolynomial::one());
            let eg = a.multiply(&e, &g).unwrap();
            let rhs = a.add(&a.identity(), &a.scale(&a.add(&e, &eg).unwrap(), &c)).unwrap();
            assert_eq!(lhs, rhs);
            assert_eq!(lhs.len(), 1 + 2 * 3 - 1);
        }
    }

    #[test]
    fn framing_transport() {
        // t_j g_i = g_i t_{s_i(j)}
        let a = alg(3, 3);
        for i in 1..=2 {
            for j in 1..=3 {
                let sj = if j == i { i + 1 } else if j == i + 1 { i } else { j };
                let lhs = a.left_t(&a.g(i).unwrap(), j).unwrap();
                let rhs = a.right_t(&a.g(i).unwrap(), sj).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn inverse_and_idempotents() {
        let a = alg(2, 3);
        for i in 1..=2 {
            let g = a.g(i).unwrap();
            let gi = a.inverse_of_generator(i).unwrap();
            assert_eq!(a.multiply(&g, &gi).unwrap(), a.identity());
            assert_eq!(a.multiply(&gi, &g).unwrap(), a.identity());
            let e = a.e(i).unwrap();
            assert_eq!(a.multiply(&e, &e).unwrap(), e);
        }
    }

    #[test]
    fn specialisation_agrees() {
        let u0 = parse_rational("5/2").unwrap();
        let sym = alg(2, 3);
        let num = YokonumaAlgebra::specialised(2, 3, &u0).unwrap();
        let x = sym.ttl_generator(1).unwrap();
        let y = num.ttl_generator(1).unwrap();
        assert_eq!(sym.specialise(&sym.multiply(&x, &x).unwrap(), &u0), num.multiply(&y, &y).unwrap());
    }

    #[test]
    fn mismatched_parameters() {
        let a = alg(2, 3);
        let b = alg(3, 3);
        assert!(matches!(
            a.multiply(&a.g(1).unwrap(), &b.g(1).unwrap()),
            Err(Error::ParameterMismatch(2, 3, 3, 3))
        ));
        assert!(a.g(3).is_err());
        assert!(a.t(0).is_err());
        assert!(YokonumaAlgebra::specialised(2, 3, &parse_rational("1").unwrap()).is_err());
    }
}
