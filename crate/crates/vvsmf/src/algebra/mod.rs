//! Exact-arithmetic foundation: polynomials over Q, number fields,
//! dense rational matrices, Bernoulli and Cohen numbers, roots modulo
//! primes, polynomial factorization over Q, and integer-lattice
//! reduction (LLL and algebraic-dependence recognition).

pub mod bern;
pub mod factor;
pub mod lattice;
pub mod matrix;
pub mod numfield;
pub mod poly;

pub use bern::{bernoulli, cohen_h, kronecker, moebius, sigma};
pub use factor::{factor_rational, roots_mod_ell};
pub use lattice::{algdep, hermite_normal_form, lll_reduce, IntegerLattice};
pub use matrix::QMatrix;
pub use numfield::{NfElem, NumberField};
pub use poly::QPoly;
