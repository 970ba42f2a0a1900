//! Exact computation of graded dimensions, Poincaré and Hodge series, and
//! classical genera of symmetric products `Xⁿ/Sₙ` in the delocalized
//! (orbifold) sense.
//!
//! Every generating function is computed twice: once by assembling the
//! conjugacy-class sectors one cycle type at a time ([`orbifold::brute_series`]),
//! and once by expanding the closed product/exponential formula
//! ([`orbifold::closed_series`]). The two routes share only the series
//! substrate, so agreement is a real check.
//!
//! The crate is `no_std` and only needs `alloc`.
//!
//! Modules:
//! - [`series`]: truncated multivariate series with half-integer exponents
//!   and exact rational coefficients.
//! - [`gvs`]: graded and bigraded dimension functions, graded symmetric powers.
//! - [`symgrp`]: cycle types of `Sₙ`, centralizer orders, grading shifts.
//! - [`orbifold`]: manifold data, sector assembly, closed formulas, genera,
//!   verification.
//! - [`fock`]: truncated Fock space of the Heisenberg superalgebra on `H*(X)`.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod error;
pub mod fock;
pub mod gvs;
pub mod orbifold;
pub mod series;
pub mod symgrp;

pub use error::{Error, Result};

/// Arbitrary-precision exact rational used for every coefficient.
pub type Rational = num_rational::BigRational;
