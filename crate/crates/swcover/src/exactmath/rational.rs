//! The exact rational value type.
//!
//! All invariants in this crate (delta, eta, rho, Dedekind sums) are exact
//! rationals. `num_rational::BigRational` already enforces the invariants we
//! need: values are kept in lowest terms with a positive denominator, and
//! arithmetic never rounds.

use num_bigint::BigInt;

/// Exact fraction of arbitrary-precision integers.
pub type Rational = num_rational::BigRational;

/// Builds `n / d` as an exact rational. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Builds the integer `n` as an exact rational.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}
