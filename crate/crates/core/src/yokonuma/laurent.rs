use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul};

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::scalar::Scalar;

/// A Laurent polynomial in `u` with rational coefficients. Zero coefficients
/// are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LaurentPolynomial {
    coeffs: BTreeMap<i32, BigRational>,
}

impl LaurentPolynomial {
    /// `c · u^e`.
    pub fn monomial(c: BigRational, e: i32) -> Self {
        let mut p = LaurentPolynomial::default();
        if !c.is_zero() {
            p.coeffs.insert(e, c);
        }
        p
    }

    /// The indeterminate `u`.
    pub fn u() -> Self {
        Self::monomial(BigRational::one(), 1)
    }

    /// `u^{-1}`.
    pub fn u_inv() -> Self {
        Self::monomial(BigRational::one(), -1)
    }

    pub fn coefficient(&self, e: i32) -> BigRational {
        self.coeffs.get(&e).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, &BigRational)> {
        self.coeffs.iter().map(|(&e, c)| (e, c))
    }

    /// Substitutes a nonzero rational for `u`.
    pub fn evaluate(&self, u0: &BigRational) -> BigRational {
        self.coeffs.iter().fold(BigRational::zero(), |acc, (&e, c)| {
            let p = if e >= 0 { u0.pow(e) } else { u0.recip().pow(-e) };
            acc + c * p
        })
    }

    fn add_term(&mut self, e: i32, c: &BigRational) {
        let slot = self.coeffs.entry(e).or_insert_with(BigRational::zero);
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&e);
        }
    }
}

impl Zero for LaurentPolynomial {
    fn zero() -> Self {
        LaurentPolynomial::default()
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for LaurentPolynomial {
    fn one() -> Self {
        Self::monomial(BigRational::one(), 0)
    }
}

impl Add for LaurentPolynomial {
    type Output = Self;

    fn add(mut self, other: Self) -> Self {
        Scalar::add_assign_ref(&mut self, &other);
        self
    }
}

impl Mul for LaurentPolynomial {
    type Output = Self;

    fn mul(self, other: Self) -> Self {
        Scalar::mul_ref(&self, &other)
    }
}

impl Scalar for LaurentPolynomial {
    fn from_rational(q: &BigRational) -> Self {
        Self::monomial(q.clone(), 0)
    }

    fn add_assign_ref(&mut self, other: &Self) {
        for (&e, c) in &other.coeffs {
            self.add_term(e, c);
        }
    }

    fn mul_ref(&self, other: &Self) -> Self {
        let mut out = LaurentPolynomial::default();
        for (&a, x) in &self.coeffs {
            for (&b, y) in &other.coeffs {
                out.add_term(a + b, &(x * y));
            }
        }
        out
    }

    fn neg_ref(&self) -> Self {
        LaurentPolynomial {
            coeffs: self.coeffs.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }
}

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (i, (&e, c)) in self.coeffs.iter().rev().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let a = c.abs();
            match e {
                0 => write!(f, "{a}")?,
                _ if a.is_one() => write!(f, "u^{e}")?,
                _ => write!(f, "{a}*u^{e}")?,
            }
        }
        Ok(())
    }
}
