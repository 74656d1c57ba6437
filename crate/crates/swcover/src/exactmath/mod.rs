//! Exact rational arithmetic, mod-p arithmetic and linear algebra,
//! generalized binomial coefficients, Dedekind sums, and exact evaluation of
//! Galois-symmetric sums over roots of unity.

pub mod binomial;
pub mod dedekind;
pub mod modp;
pub mod poly;
pub mod rational;
pub mod rootsum;

pub use binomial::{factorial, gen_binomial};
pub use dedekind::dedekind_sum;
pub use modp::{modp_rank, ModP};
pub use poly::RatPoly;
pub use rational::{rat, rat_int, Rational};
pub use rootsum::{alpha_sum, beta_sum, symmetric_root_sum};
