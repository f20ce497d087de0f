//! Exact computation of a-numbers of Artin–Schreier curves
//! `y^p − y = f(x)` over finite fields.
//!
//! The crate builds the matrix of the Cartier operator on the standard
//! basis of regular differentials, computes kernel dimensions exactly,
//! evaluates the closed-form lower bounds `L(d)` and `L_J(d)` that the
//! a-number attains for generic coefficients, and produces symbolic
//! non-vanishing certificates for the determinants that control
//! genericity.
//!
//! Modules:
//! - [`field`], [`matrix`]: arithmetic in `F_{p^m}` and dense exact
//!   linear algebra over it;
//! - [`curve`]: curve parameters, the differential basis and its layout;
//! - [`cartier`]: the Cartier matrix, a-numbers, filtration kernels and
//!   the ranks of the level-dropping maps;
//! - [`bounds`]: the bound formulas and the row/column index sets with
//!   their cardinality-comparison injections;
//! - [`certificate`]: monomial order, greedy construction of the leading
//!   permutation and randomized determinant evaluation;
//! - [`scan`]: seeded random sampling of coefficient tuples (in parallel
//!   when the `parallel` feature is enabled);
//! - [`golden`]: the embedded worked example used as an end-to-end
//!   self-check.

// `(p + 1) / 2` and `d % p == 0` stay in the same shape as the bound
// formulas they implement.
#![allow(clippy::manual_div_ceil, clippy::manual_is_multiple_of)]

pub mod bounds;
pub mod cartier;
pub mod certificate;
pub mod curve;
pub mod error;
pub mod field;
pub mod golden;
pub mod matrix;
pub mod scan;

pub use error::Error;
