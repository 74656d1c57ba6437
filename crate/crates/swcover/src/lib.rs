//! Exact-arithmetic invariants of spherical 3-manifolds and Seiberg-Witten
//! obstruction checks for configurations of embedded surfaces in 4-manifolds.
//!
//! Everything here is computed over exact rationals or prime fields; no
//! floating point is used anywhere. The crate is organised as follows:
//!
//! - [`exactmath`]: rationals, mod-p arithmetic and linear algebra,
//!   generalized binomial coefficients, Dedekind sums, and exact evaluation
//!   of Galois-symmetric root-of-unity sums.
//! - [`spherical`]: the catalog of lens spaces, prism manifolds, ADE plumbing
//!   boundaries and `Y(0)`, with their eta, delta and rho invariants.
//! - [`plumbing`]: negative definite plumbing graphs, intersection forms,
//!   characteristic vector searches and the cusp surgery tables.
//! - [`cover`]: cyclic branched cover existence, topology transfer, lifted
//!   pairings and spin-c family bookkeeping.
//! - [`swcalc`]: the mod-p covering formulas for Seiberg-Witten invariants,
//!   partition consistency and dimension bounds.
//! - [`constraints`]: the scenario-level verdict engine wrapping the named
//!   obstruction theorems plus the classical Rokhlin and Guillou-Marin checks.

pub mod constraints;
pub mod cover;
pub mod error;
pub mod exactmath;
pub mod plumbing;
pub mod spherical;
pub mod swcalc;

pub use error::Error;
pub use exactmath::rational::Rational;
