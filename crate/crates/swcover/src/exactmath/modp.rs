//! Arithmetic and linear algebra over the prime field Z_p.

use crate::error::{Error, Result};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p % 2 == 0 {
        return p == 2;
    }
    let mut d = 3;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// An element of Z_p for a prime `p`, stored as a value in `[0, p)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct ModP {
    p: u64,
    value: u64,
}

impl ModP {
    /// Reduces `value` modulo the prime `p`. Rejects composite moduli: every
    /// theorem consuming these values requires `p` prime.
    pub fn new(value: i64, p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Self::reduce(value, p))
    }

    /// Like `new` but for callers that have already validated the prime.
    pub(crate) fn reduce(value: i64, p: u64) -> Self {
        let v = value.rem_euclid(p as i64) as u64;
        ModP { p, value: v }
    }

    pub fn zero(p: u64) -> Result<Self> {
        Self::new(0, p)
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    fn check(self, other: ModP) -> ModP {
        assert_eq!(
            self.p, other.p,
            "mixed moduli in ModP arithmetic: {} vs {}",
            self.p, other.p
        );
        other
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inverse(&self) -> Option<ModP> {
        if self.value == 0 {
            return None;
        }
        // Fermat: a^(p-2) mod p.
        Some(self.pow_unsigned(self.p - 2))
    }

    fn pow_unsigned(&self, mut e: u64) -> ModP {
        let mut base = *self;
        let mut acc = ModP { p: self.p, value: 1 };
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }

    /// `self^e` with a signed exponent; negative exponents invert first.
    /// Panics on a negative power of zero.
    pub fn pow(&self, e: i64) -> ModP {
        if e >= 0 {
            self.pow_unsigned(e as u64)
        } else {
            let inv = self
                .inverse()
                .expect("negative power of zero in Z_p");
            inv.pow_unsigned(e.unsigned_abs())
        }
    }
}

impl Add for ModP {
    type Output = ModP;
    fn add(self, rhs: ModP) -> ModP {
        let rhs = self.check(rhs);
        ModP {
            p: self.p,
            value: (self.value + rhs.value) % self.p,
        }
    }
}

impl Sub for ModP {
    type Output = ModP;
    fn sub(self, rhs: ModP) -> ModP {
        let rhs = self.check(rhs);
        ModP {
            p: self.p,
            value: (self.p + self.value - rhs.value) % self.p,
        }
    }
}

impl Mul for ModP {
    type Output = ModP;
    fn mul(self, rhs: ModP) -> ModP {
        let rhs = self.check(rhs);
        // p < 2^32 in every use here, but widen anyway.
        let v = (self.value as u128 * rhs.value as u128) % self.p as u128;
        ModP {
            p: self.p,
            value: v as u64,
        }
    }
}

impl Neg for ModP {
    type Output = ModP;
    fn neg(self) -> ModP {
        ModP {
            p: self.p,
            value: (self.p - self.value) % self.p,
        }
    }
}

impl fmt::Debug for ModP {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.value, self.p)
    }
}

impl fmt::Display for ModP {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// Rank over Z_p of a list of coordinate vectors, by Gaussian elimination.
/// All vectors must have the same length.
pub fn modp_rank(vectors: &[Vec<i64>], p: u64) -> Result<usize> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let width = match vectors.first() {
        None => return Ok(0),
        Some(v) => v.len(),
    };
    for v in vectors {
        if v.len() != width {
            return Err(Error::DimensionMismatch(width, v.len()));
        }
    }
    let mut rows: Vec<Vec<u64>> = vectors
        .iter()
        .map(|v| v.iter().map(|&x| x.rem_euclid(p as i64) as u64).collect())
        .collect();
    let mut rank = 0;
    for col in 0..width {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = ModP::reduce(rows[rank][col] as i64, p).inverse().unwrap();
        for c in col..width {
            rows[rank][c] = (ModP::reduce(rows[rank][c] as i64, p) * inv).value();
        }
        for r in 0..rows.len() {
            if r != rank && rows[r][col] != 0 {
                let factor = rows[r][col];
                for c in col..width {
                    let sub = (factor as u128 * rows[rank][c] as u128) % p as u128;
                    rows[r][c] = ((rows[r][c] as u128 + p as u128 - sub) % p as u128) as u64;
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    Ok(rank)
}
