//! Dense univariate polynomials with exact rational coefficients.
//!
//! This is the carrier for root-of-unity sum evaluation: just enough ring
//! arithmetic (multiplication, euclidean division, extended gcd) to work in
//! the quotient `Q[x] / ((x^n - 1)/(x - 1))`.

use super::rational::{rat_int, Rational};
use num_traits::Zero;
use std::fmt;

/// Polynomial stored by coefficient list, `coeffs[i]` the coefficient of
/// `x^i`. Trailing zeros are trimmed; the zero polynomial has an empty list.
#[derive(Clone, PartialEq, Eq)]
pub struct RatPoly {
    coeffs: Vec<Rational>,
}

impl RatPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    pub fn zero() -> Self {
        RatPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        RatPoly::constant(rat_int(1))
    }

    pub fn constant(c: Rational) -> Self {
        RatPoly::new(vec![c])
    }

    /// The monomial `x^k`.
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = rat_int(1);
        RatPoly { coeffs }
    }

    /// `1 - x^k` (`k >= 1`), the building block of all eta-invariant
    /// denominators.
    pub fn one_minus_xk(k: usize) -> Self {
        assert!(k >= 1);
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[0] = rat_int(1);
        coeffs[k] = rat_int(-1);
        RatPoly { coeffs }
    }

    /// `1 + x^k`.
    pub fn one_plus_xk(k: usize) -> Self {
        let mut p = RatPoly::one_minus_xk(k.max(1));
        if k == 0 {
            return RatPoly::constant(rat_int(2));
        }
        p.coeffs[k] = rat_int(1);
        p
    }

    /// `1 + x + ... + x^(n-1)`, i.e. `(x^n - 1)/(x - 1)`.
    pub fn all_ones(n: usize) -> Self {
        RatPoly {
            coeffs: vec![rat_int(1); n],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn add(&self, other: &RatPoly) -> RatPoly {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len).map(|i| self.coeff(i) + other.coeff(i)).collect();
        RatPoly::new(coeffs)
    }

    pub fn sub(&self, other: &RatPoly) -> RatPoly {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len).map(|i| self.coeff(i) - other.coeff(i)).collect();
        RatPoly::new(coeffs)
    }

    pub fn neg(&self) -> RatPoly {
        RatPoly::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }

    pub fn scale(&self, s: &Rational) -> RatPoly {
        if s.is_zero() {
            return RatPoly::zero();
        }
        RatPoly::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn mul(&self, other: &RatPoly) -> RatPoly {
        if self.is_zero() || other.is_zero() {
            return RatPoly::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        RatPoly::new(coeffs)
    }

    /// Euclidean division: returns `(q, r)` with `self = q * div + r` and
    /// `deg r < deg div`. Panics if `div` is zero.
    pub fn divrem(&self, div: &RatPoly) -> (RatPoly, RatPoly) {
        let d = div.degree().expect("division by zero polynomial");
        let lead = div.coeffs[d].clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= d {
            return (RatPoly::zero(), self.clone());
        }
        let mut quot = vec![Rational::zero(); rem.len() - d];
        for k in (d..rem.len()).rev() {
            if rem[k].is_zero() {
                continue;
            }
            let q = &rem[k] / &lead;
            quot[k - d] = q.clone();
            for i in 0..=d {
                let delta = &div.coeffs[i] * &q;
                rem[k - d + i] -= delta;
            }
        }
        (RatPoly::new(quot), RatPoly::new(rem))
    }

    pub fn rem(&self, div: &RatPoly) -> RatPoly {
        self.divrem(div).1
    }

    /// Monic gcd of `self` and `other`.
    pub fn gcd(&self, other: &RatPoly) -> RatPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.make_monic()
    }

    fn make_monic(self) -> RatPoly {
        match self.coeffs.last() {
            None => self,
            Some(lead) => {
                let inv = rat_int(1) / lead.clone();
                self.scale(&inv)
            }
        }
    }

    /// Inverse of `self` modulo `m`, when `gcd(self, m) = 1`; `None`
    /// otherwise. Extended euclidean algorithm over `Q[x]`.
    pub fn inverse_mod(&self, m: &RatPoly) -> Option<RatPoly> {
        // Invariants: r0 = s0 * self (mod m), r1 = s1 * self (mod m).
        let mut r0 = self.rem(m);
        let mut r1 = m.clone();
        let mut s0 = RatPoly::one();
        let mut s1 = RatPoly::zero();
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1);
            let s = s0.sub(&q.mul(&s1));
            r0 = r1;
            s0 = s1;
            r1 = r;
            s1 = s;
        }
        match r0.degree() {
            Some(0) => {
                let inv = rat_int(1) / r0.coeffs[0].clone();
                Some(s0.scale(&inv).rem(m))
            }
            _ => None,
        }
    }
}

impl fmt::Debug for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{}", c)?,
                1 => write!(f, "({})x", c)?,
                _ => write!(f, "({})x^{}", c, i)?,
            }
        }
        Ok(())
    }
}
