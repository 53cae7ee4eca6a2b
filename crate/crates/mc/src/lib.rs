//! Monte-Carlo validation of the exact Wishart engine: a genuine sampler for
//! half-integer shape parameters on the real matrix cone, empirical moments
//! and Laplace transforms, and statistical comparison reports.

pub mod sampler;
pub mod verify;

pub use sampler::{sample_noncentral_wishart, SampleBatch};
pub use verify::{
    empirical_laplace, empirical_moment, verify_laplace_transform, verify_moment_formula,
    ComparisonReport, ComparisonRow,
};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum McError {
    #[error("2β must be a positive integer to sample, got β = {0}")]
    NonHalfInteger(String),
    #[error("noncentrality rank {rank} exceeds the degrees of freedom 2β = {degrees}")]
    RankExceedsDegrees { rank: usize, degrees: u64 },
    #[error("empirical moments are guarded to |κ| ≤ 4, got degree {0}")]
    DegreeTooHigh(u64),
    #[error("u lies outside the Laplace domain of the standardized scale")]
    OutOfDomain,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("sampler parameters invalid: {0}")]
    InvalidParams(String),
    #[error(transparent)]
    Core(#[from] zonal_core::Error),
}

pub type Result<T> = std::result::Result<T, McError>;

/// Run `f` on a rayon pool with the given thread count (global pool if None).
/// Results are bit-identical across thread counts by construction: all
/// reductions fold fixed-size chunks in index order.
pub fn with_threads<R: Send>(threads: Option<usize>, f: impl FnOnce() -> R + Send) -> R {
    match threads {
        None => f(),
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .expect("thread pool")
            .install(f),
    }
}
