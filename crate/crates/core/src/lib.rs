//! Numerics for generalized Mathieu power series
//!
//! ```text
//! F_mu(r, z) = sum_{n>=1} 2 n z^n / (n^2 + r^2)^(mu+1)
//! ```
//!
//! evaluated by certified direct summation and by the large-`r` asymptotic
//! expansion whose coefficients are `2 (-1)^k binom(k+mu, k) Li_{-2k-1}(z)`.
//! The crate carries its own kernels for the polylogarithm (four routes) and
//! the Hurwitz zeta function (Euler–Maclaurin continuation), plus the
//! trigonometric Mathieu series and their small-`x` leading-order laws.
//!
//! The crate is `no_std` and only needs `alloc`. Every evaluator returns an
//! [`EvalOutcome`] carrying the value, an error bound and how that bound was
//! obtained.
#![no_std]
#![warn(missing_debug_implementations)]
#![allow(clippy::excessive_precision, clippy::neg_cmp_op_on_partial_ord)]

extern crate alloc;

mod error;
mod outcome;
pub mod quad;
pub mod sum;

pub mod hurwitz;
pub mod mathieu;
pub mod polylog;
pub mod special;
pub mod trig;

pub use error::{Error, Result};
pub use num_complex::Complex64;
pub use outcome::{BoundKind, EvalOutcome, Method};
