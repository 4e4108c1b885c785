//! Weighted partial Motzkin path triangles and exact verification of their
//! second-order minor-sum identities.
//!
//! The crate is organised bottom-up:
//!
//! - [`algebra`]: big integers, rationals and the bivariate polynomials used
//!   as triangle entries.
//! - [`paths`]: the path objects, their weights, R-visible up steps and the
//!   canonical factorisation.
//! - [`triangle`]: the weight triangle by recurrence, its specialisations and
//!   closed forms.
//! - [`series`]: truncated power series and the generating-function checks.
//! - [`bijections`]: executable, invertible, weight-preserving maps.
//! - [`identities`]: determinant and binomial-sum identity registry.
//! - [`telescope`]: telescoping certificate checks for the alternating sums.
//! - [`cli`]: the command-line front end.

pub mod algebra;
pub mod bijections;
pub mod cli;
pub mod error;
pub mod identities;
pub mod paths;
pub mod series;
pub mod telescope;
pub mod triangle;

pub use algebra::{BiPoly, BigInt, Rational};
pub use error::{Error, Result};
