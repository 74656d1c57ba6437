//! Dedekind sums via the sawtooth formula.

use super::rational::{rat, Rational};
use crate::error::{Error, Result};
use num_traits::Zero;

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Sawtooth function `((x)) = x - floor(x) - 1/2` for non-integral `x`,
/// zero at integers.
fn sawtooth(num: i64, den: i64) -> Rational {
    if num.rem_euclid(den) == 0 {
        return Rational::zero();
    }
    rat(num.rem_euclid(den), den) - rat(1, 2)
}

/// The Dedekind sum `s(q, p) = sum_{k=1}^{p-1} ((k/p)) ((kq/p))`, computed
/// exactly. Requires `p >= 1` and `gcd(q, p) = 1`.
pub fn dedekind_sum(q: i64, p: i64) -> Result<Rational> {
    if p < 1 {
        return Err(Error::Domain(format!("dedekind_sum needs p >= 1, got {p}")));
    }
    if gcd(q, p) != 1 {
        return Err(Error::NotCoprime(q, p));
    }
    let mut total = Rational::zero();
    for k in 1..p {
        total += sawtooth(k, p) * sawtooth(k * q, p);
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rational::rat_int;
    use crate::exactmath::rootsum::symmetric_root_sum;
    use crate::exactmath::RatPoly;

    #[test]
    fn small_values() {
        assert_eq!(dedekind_sum(1, 1).unwrap(), Rational::zero());
        assert_eq!(dedekind_sum(1, 2).unwrap(), Rational::zero());
        assert_eq!(dedekind_sum(1, 3).unwrap(), rat(1, 18));
        assert_eq!(dedekind_sum(1, 4).unwrap(), rat(1, 8));
    }

    #[test]
    fn rejects_non_coprime() {
        assert_eq!(dedekind_sum(2, 4), Err(Error::NotCoprime(2, 4)));
        assert!(dedekind_sum(1, 0).is_err());
    }

    #[test]
    fn even_modulus_family() {
        // s(1, 2n) = (2n-1)(2n-2)/(24n)
        for n in 1..=20i64 {
            assert_eq!(
                dedekind_sum(1, 2 * n).unwrap(),
                rat((2 * n - 1) * (2 * n - 2), 24 * n)
            );
        }
    }

    #[test]
    fn odd_symmetry() {
        for p in 1..=25i64 {
            for q in 1..p {
                if gcd(q, p) == 1 {
                    assert_eq!(
                        dedekind_sum(-q, p).unwrap(),
                        -dedekind_sum(q, p).unwrap()
                    );
                    assert_eq!(
                        dedekind_sum(q + p, p).unwrap(),
                        dedekind_sum(q, p).unwrap()
                    );
                }
            }
        }
    }

    /// Root-of-unity oracle:
    /// s(q,p) = -(1/p) sum_j 1/((1 - w^-j)(1 - w^-qj)) + 1/4 - 1/(4p).
    fn root_of_unity_oracle(q: i64, p: i64) -> Rational {
        let qp = q.rem_euclid(p) as usize;
        let denom = RatPoly::one_minus_xk(p as usize - 1)
            .mul(&RatPoly::one_minus_xk(p as usize - qp));
        let s = symmetric_root_sum(&RatPoly::one(), &denom, p as u64).unwrap();
        -s / rat_int(p) + rat(1, 4) - rat(1, 4 * p)
    }

    #[test]
    fn matches_root_of_unity_expression() {
        for p in 2..=20i64 {
            for q in 1..p {
                if gcd(q, p) == 1 {
                    assert_eq!(
                        dedekind_sum(q, p).unwrap(),
                        root_of_unity_oracle(q, p),
                        "s({q},{p})"
                    );
                }
            }
        }
    }
}
