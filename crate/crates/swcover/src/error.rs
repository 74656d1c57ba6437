//! Error type shared by all modules.

use thiserror::Error;

/// Errors raised by the exact-arithmetic and obstruction routines.
///
/// Several variants signal *inconsistent input* rather than a failure of the
/// algorithm: integrality of an APS index is a theorem, so a fractional value
/// means the scenario being described cannot exist.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("arguments are not coprime: gcd({0}, {1}) != 1")]
    NotCoprime(i64, i64),

    #[error("denominator is not invertible modulo (x^{n} - 1)/(x - 1)")]
    NonInvertibleDenominator { n: u64 },

    #[error("pairing c = {c} has wrong parity for self-intersection -{n}")]
    ParityViolation { c: i64, n: i64 },

    #[error("expected dimension is not an integer: {value}")]
    NonIntegralDimension { value: String },

    #[error("APS index d_{j} is not an integer: {value}")]
    NonIntegralIndex { j: usize, value: String },

    #[error("spin-c structure is not sharp: |c_{i}| = {c} > n_{i} = {n}")]
    NotSharp { i: usize, c: i64, n: i64 },

    #[error("intersection form is singular")]
    SingularForm,

    #[error("argument {0} out of range [{1}, {2}]")]
    OutOfRange(i64, i64, i64),

    #[error("class coordinate tuples have mismatched lengths ({0} vs {1})")]
    DimensionMismatch(usize, usize),

    #[error("unsupported group: {0}")]
    UnsupportedGroup(String),

    #[error("integrality violation: {0}")]
    IntegralityViolation(String),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("mixed moduli: {0} vs {1}")]
    ModulusMismatch(u64, u64),

    #[error("malformed scenario: {0}")]
    MalformedScenario(String),

    #[error("{0}")]
    Domain(String),
}

pub type Result<T> = std::result::Result<T, Error>;
