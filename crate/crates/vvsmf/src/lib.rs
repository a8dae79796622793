//! Exact computation of vector-valued Siegel modular forms of degree 2
//! and weight (k,2).
//!
//! The library computes Fourier expansions of the Igusa generators via
//! Jacobi forms and the Maass lift, builds bases of weight-(k,2) spaces
//! from Satoh brackets, extracts Hecke eigenforms and eigenvalues over
//! number fields, evaluates completed L-functions of elliptic eigenforms
//! to high precision, recognizes algebraic critical-value ratios by
//! lattice reduction, and verifies congruences between degree-one and
//! degree-two eigenforms.
//!
//! All Fourier-side arithmetic is exact (GMP rationals); only the
//! L-value pipeline uses arbitrary-precision floating point (MPFR),
//! with explicit error bounds.

pub mod algebra;
pub mod cache;
pub mod config;
pub mod eform;
pub mod error;
pub mod hecke;
pub mod jacobi;
pub mod lfunc;
pub mod siegel;
pub mod verify;

pub use error::{Error, Result};

/// Arbitrary-precision rational scalar, always stored in lowest terms
/// with positive denominator.
pub type Rat = rug::Rational;
/// Arbitrary-precision integer.
pub type Int = rug::Integer;

/// Convenience constructor for a rational from an `i64`.
pub fn rat(n: i64) -> Rat {
    Rat::from(n)
}

/// Convenience constructor for a rational n/d.
pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::from((n, d))
}

/// Convenience constructor for an integer.
pub fn int(n: i64) -> Int {
    Int::from(n)
}
