use std::fmt::Debug;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Coefficient ring for algebra elements: exact rationals (with `u`
/// specialised) or Laurent polynomials in `u`.
pub trait Scalar: Clone + Debug + PartialEq + Send + Sync + Zero + One {
    fn from_rational(q: &BigRational) -> Self;
    fn add_assign_ref(&mut self, other: &Self);
    fn mul_ref(&self, other: &Self) -> Self;
    fn neg_ref(&self) -> Self;

    fn sub_ref(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign_ref(&other.neg_ref());
        out
    }
}

impl Scalar for BigRational {
    fn from_rational(q: &BigRational) -> Self {
        q.clone()
    }

    fn add_assign_ref(&mut self, other: &Self) {
        *self += other;
    }

    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }

    fn neg_ref(&self) -> Self {
        -self
    }
}

/// Parses `P/Q` or an integer into a reduced rational.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = |e: String| Error::InvalidRational(format!("{s:?}: {e}"));
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|e| bad(format!("{e}")))?;
    let den: BigInt = den.parse().map_err(|e| bad(format!("{e}")))?;
    if Zero::is_zero(&den) {
        return Err(bad("zero denominator".into()));
    }
    Ok(BigRational::new(num, den))
}

/// Rejects specialisations that collapse the deformation: `0` (not
/// invertible) and the rational roots of unity `±1`.
pub fn validate_specialisation(u0: &BigRational) -> Result<()> {
    let one = BigRational::one();
    if Zero::is_zero(u0) || *u0 == one || *u0 == -one {
        return Err(Error::BadSpecialisation(u0.to_string()));
    }
    Ok(())
}
