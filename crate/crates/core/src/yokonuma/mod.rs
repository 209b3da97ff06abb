//! Exact arithmetic in the Yokonuma–Hecke algebra `Y_{d,n}(u)` and the
//! brute-force construction of the quotient `YTL_{d,n}(u)`.

mod algebra;
mod ideal;
mod laurent;
mod linalg;
mod permutation;
mod scalar;
pub mod verify;

pub use algebra::{AlgebraElement, FramedWord, Generator, YokonumaAlgebra};
pub use ideal::{ideal_echelon, IdealMatrix, IdealRank, IdealRoute};
pub use laurent::LaurentPolynomial;
pub use linalg::RowEchelon;
pub use permutation::{pattern_to_permutation, permutation_to_pattern, Permutation};
pub use scalar::{parse_rational, validate_specialisation, Scalar};
