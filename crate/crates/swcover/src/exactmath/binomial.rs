//! Generalized binomial coefficients over unbounded integers.

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// `a!` as a big integer.
pub fn factorial(k: u64) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=k {
        acc *= BigInt::from(i);
    }
    acc
}

/// The generalized binomial coefficient `binom(a, k)` for any integer `a`
/// (either sign) and any integer `k`: zero for `k < 0`, otherwise
/// `a (a-1) ... (a-k+1) / k!` evaluated exactly. The division is always
/// exact since a product of `k` consecutive integers is divisible by `k!`.
pub fn gen_binomial(a: i64, k: i64) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    let k = k as u64;
    let mut num = BigInt::one();
    for i in 0..k {
        num *= BigInt::from(a) - BigInt::from(i);
    }
    num / factorial(k)
}
