//! Exact integer and rational arithmetic: reduced rationals with a point at
//! infinity, dense integer matrices, Smith normal form and integer Laurent
//! polynomials. Nothing here touches floating point.

mod laurent;
mod matrix;
mod rational;
mod smith;

pub use laurent::{LaurentMatrix, LaurentPoly};
pub use matrix::IntMatrix;
pub use rational::Rational;
pub use smith::{smith_normal_form, Cokernel, SmithDecomposition};

use num_bigint::BigInt;

use crate::error::MathError;

/// Reduced representative of `num/den`; every `k/0` with `k != 0` becomes
/// the single point at infinity.
pub fn rational_normalize(
    num: impl Into<BigInt>,
    den: impl Into<BigInt>,
) -> Result<Rational, MathError> {
    Rational::new(num, den)
}

/// Exact quotient in the Laurent ring; fails when the division leaves a
/// remainder.
pub fn laurent_div_exact(p: &LaurentPoly, q: &LaurentPoly) -> Result<LaurentPoly, MathError> {
    p.div_exact(q)
}
