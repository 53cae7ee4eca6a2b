//! Exact-arithmetic engine for Jack and zonal polynomials on symmetric cones,
//! generalized binomial coefficients, and existence checking for (non-central)
//! Wishart distributions.
//!
//! Everything in this crate computes over arbitrary-precision rationals; no
//! floating point enters any verdict or certificate. The only float outputs
//! are the final renderings of Laplace-transform values.

pub mod binom;
pub mod cone;
pub mod error;
pub mod linalg;
pub mod partition;
pub mod rational;
pub mod spectral;
pub mod symfun;
pub mod wishart;

pub use error::Error;
pub use partition::{Cell, Partition};
pub use rational::Rat;

pub type Result<T> = std::result::Result<T, Error>;
