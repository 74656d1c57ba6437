//! Exact evaluation of Galois-symmetric sums over nontrivial n-th roots of
//! unity.
//!
//! For rational functions f/g, the sum over all nontrivial n-th roots of
//! unity equals the trace of the multiplication-by-(f/g) operator on the
//! quotient ring `Q[x] / ((x^n - 1)/(x - 1))`, whose eigenvalues are exactly
//! the values f(w^j)/g(w^j) for j = 1..n-1. The trace is rational, so the
//! whole computation stays in exact arithmetic.

use super::poly::RatPoly;
use super::rational::{rat, rat_int, Rational};
use crate::error::{Error, Result};

/// Returns `sum_{j=1}^{n-1} numer(w^j) / denom(w^j)` with `w = e^(2 pi i/n)`,
/// computed exactly.
///
/// Requires `gcd(denom, (x^n - 1)/(x - 1)) = 1` over the rationals, i.e. the
/// denominator must not vanish at any nontrivial n-th root of unity;
/// otherwise `NonInvertibleDenominator` is returned.
pub fn symmetric_root_sum(numer: &RatPoly, denom: &RatPoly, n: u64) -> Result<Rational> {
    if n < 2 {
        return Err(Error::Domain(format!(
            "symmetric_root_sum needs n >= 2, got {n}"
        )));
    }
    let modulus = RatPoly::all_ones(n as usize);
    let inv = denom
        .rem(&modulus)
        .inverse_mod(&modulus)
        .ok_or(Error::NonInvertibleDenominator { n })?;
    let h = numer.rem(&modulus).mul(&inv).rem(&modulus);
    // Trace of multiplication by x^k on the quotient is the power sum of the
    // nontrivial roots: n - 1 for k = 0, and -1 for 1 <= k <= n-2. The trace
    // of multiplication by h follows by linearity.
    let mut trace = h.coeff(0) * rat_int(n as i64 - 1);
    for k in 1..h.coeffs().len() {
        trace -= h.coeff(k);
    }
    Ok(trace)
}

/// `alpha(u, n) = sum_j w^(ju) / (1 - w^(-j))`, evaluated exactly.
pub fn alpha_sum(u: u64, n: u64) -> Result<Rational> {
    symmetric_root_sum(
        &RatPoly::monomial((u % n) as usize),
        &RatPoly::one_minus_xk(n as usize - 1),
        n,
    )
}

/// `beta(u, n) = sum_j w^(ju) / (1 - w^(-j))^2`, evaluated exactly.
pub fn beta_sum(u: u64, n: u64) -> Result<Rational> {
    let d = RatPoly::one_minus_xk(n as usize - 1);
    symmetric_root_sum(&RatPoly::monomial((u % n) as usize), &d.mul(&d), n)
}

/// Closed form for `alpha(u, n)`, valid for `0 <= u <= n-1`.
pub fn alpha_closed(u: u64, n: u64) -> Rational {
    rat(n as i64 - 1, 2) - rat_int(u as i64)
}

/// Closed form for `beta(u, n)`, valid for `0 <= u <= n-1`.
pub fn beta_closed(u: u64, n: u64) -> Rational {
    let n = n as i64;
    let u = u as i64;
    rat(-(n - 1) * (n - 5), 12) + rat(u * (n - u - 2), 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    #[test]
    fn alpha_examples() {
        // alpha(0, 5) = (5-1)/2 = 2
        assert_eq!(alpha_sum(0, 5).unwrap(), rat_int(2));
        // alpha(1, 3) = (3-1)/2 - 1 = 0
        assert_eq!(alpha_sum(1, 3).unwrap(), Rational::zero());
    }

    #[test]
    fn beta_example_frozen() {
        // Direct complex summation over the two cube roots of unity gives
        // 1/(1-w^(-1))^2 + 1/(1-w^(-2))^2 = (2 - w - w^2)/9 = 3/9 = 1/3.
        assert_eq!(beta_sum(0, 3).unwrap(), rat(1, 3));
    }

    #[test]
    fn closed_forms_small_range() {
        for n in 2..=16u64 {
            for u in 0..n {
                assert_eq!(alpha_sum(u, n).unwrap(), alpha_closed(u, n), "alpha({u},{n})");
                assert_eq!(beta_sum(u, n).unwrap(), beta_closed(u, n), "beta({u},{n})");
            }
        }
    }

    #[test]
    fn exponent_reduction_mod_n() {
        // x^u and x^(u mod n) agree at all n-th roots of unity.
        assert_eq!(alpha_sum(7, 5).unwrap(), alpha_sum(2, 5).unwrap());
    }

    #[test]
    fn vanishing_denominator_rejected() {
        // 1 - x^2 vanishes at the root -1 when n is even.
        let d = RatPoly::one_minus_xk(2);
        assert_eq!(
            symmetric_root_sum(&RatPoly::one(), &d, 4),
            Err(Error::NonInvertibleDenominator { n: 4 })
        );
    }

    #[test]
    fn rejects_degenerate_n() {
        assert!(symmetric_root_sum(&RatPoly::one(), &RatPoly::one(), 1).is_err());
    }

    /// Independent float-arithmetic oracle: evaluate the defining sum with
    /// complex f64 arithmetic and compare to within rounding error.
    fn complex_oracle(numer: &RatPoly, denom: &RatPoly, n: u64) -> f64 {
        use num_traits::ToPrimitive;
        let eval = |p: &RatPoly, re: f64, im: f64| {
            // Horner over complex numbers.
            let (mut ar, mut ai) = (0.0f64, 0.0f64);
            for c in p.coeffs().iter().rev() {
                let (nr, ni) = (ar * re - ai * im, ar * im + ai * re);
                ar = nr + c.to_f64().unwrap();
                ai = ni;
            }
            (ar, ai)
        };
        let mut total = 0.0;
        for j in 1..n {
            let theta = 2.0 * std::f64::consts::PI * j as f64 / n as f64;
            let (re, im) = (theta.cos(), theta.sin());
            let (nr, ni) = eval(numer, re, im);
            let (dr, di) = eval(denom, re, im);
            let den = dr * dr + di * di;
            total += (nr * dr + ni * di) / den;
        }
        total
    }

    #[test]
    fn agrees_with_complex_summation() {
        use num_traits::ToPrimitive;
        for n in 2..=12u64 {
            for u in 0..n {
                let numer = RatPoly::monomial(u as usize);
                let denom = RatPoly::one_minus_xk(n as usize - 1);
                let exact = symmetric_root_sum(&numer, &denom, n).unwrap();
                let float = complex_oracle(&numer, &denom, n);
                assert!(
                    (exact.to_f64().unwrap() - float).abs() < 1e-8,
                    "n={n} u={u}: {exact} vs {float}"
                );
            }
        }
    }
}
