//! Cross-verified multiprecision evaluation of Stieltjes constants and the special
//! functions around them, with an identity-verification catalog.
//!
//! Every quantity has at least two independent routes. The Euler–Maclaurin oracle in
//! [`series::oracle`] supplies reference values; the quadrature engine handles the
//! Bose-kernel, Laplace and unit-square integrals; [`catalog`] checks closed-form
//! identities side against side.

pub mod catalog;
pub mod cli;
pub mod error;
pub mod precision;
pub mod quadrature;
pub mod series;
pub mod special;

pub use error::{Error, Result};
pub use precision::{ExtComplex, ExtReal, PrecisionContext, Rational};
