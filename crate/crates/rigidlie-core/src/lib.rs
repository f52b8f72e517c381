//! Exact-arithmetic toolkit for finite-dimensional Lie algebras given by
//! structure constants over the rationals or the Gaussian rationals.
//!
//! Everything in this crate is exact: scalars are arbitrary-precision
//! rationals (optionally with an imaginary part), linear algebra is
//! fraction-free, and every verdict (nilpotency, complete solvability,
//! cohomological rigidity, root-system rank) is a theorem about the input
//! table, not a numerical estimate.
//!
//! The crate is `no_std` (with `alloc`); IO, JSON interchange and the CLI
//! live in the companion `rigidlie` crate.

#![cfg_attr(not(test), no_std)]

#[macro_use]
extern crate alloc;

pub(crate) mod gint;

pub mod catalog;
pub mod cohomology;
pub mod derivations;
pub mod liealg;
pub mod linalg;
pub mod roots;
pub mod scalars;
pub mod weights;

pub use scalars::{Field, Polynomial, Scalar};
