//! Exact and error-bounded machinery for the odd-reciprocal cosine product
//!
//! cos(π/2n) = (1 − 1/n²)(1 − 1/9n²)(1 − 1/25n²)⋯
//!
//! The crate is split the same way the derivation is:
//!
//! - [`arith`]: exact rationals, dyadic numbers and [`BoundedReal`], a dyadic
//!   value carrying a rigorous absolute error bound, plus π to any precision.
//! - [`recurrence`]: the coefficient sequence `c₁ = 1/2`,
//!   `c_m = 2/(2m−1) · Σ_{i+j=m} c_i c_j`, and the Bernoulli/tangent oracles that
//!   check it.
//! - [`series`]: truncated odd/even power series with exact coefficients, the
//!   fixed point `t = x/2 + 2∫t² dx` and the residual of `2t′ = 1 + 4t²`.
//! - [`analytic`]: error-bounded sums of odd reciprocal powers, the
//!   `−ln S` series, partial products with tail bounds, the row/column
//!   rearrangement check and the three-way identity verification.
//!
//! The crate is `no_std` and only needs `alloc`.

#![cfg_attr(not(test), no_std)]
#![warn(missing_debug_implementations)]

extern crate alloc;

pub mod analytic;
pub mod arith;
mod error;
pub mod recurrence;
pub mod series;

pub use arith::{BoundedReal, Dyadic, ExactRational};
pub use error::Error;

pub type Result<T, E = Error> = core::result::Result<T, E>;
