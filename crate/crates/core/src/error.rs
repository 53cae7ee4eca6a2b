//! Error type shared by the exact engine.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("not a partition: incrementing part {index} of {parts:?} breaks monotonicity")]
    NotAPartition { parts: Vec<u32>, index: usize },
    #[error("cell ({row},{col}) lies outside the diagram of {parts:?}")]
    CellOutOfDiagram {
        parts: Vec<u32>,
        row: usize,
        col: usize,
    },
    #[error("alpha must be strictly positive, got {0}")]
    NonPositiveAlpha(String),
    #[error("partition length {length} exceeds variable count {vars}")]
    LengthExceedsVars { length: usize, vars: usize },
    #[error("need at least {needed} variables for this expansion, got {vars}")]
    InsufficientVars { needed: usize, vars: usize },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("sigma is not nested in kappa at row {row}")]
    NotNested { row: usize },
    #[error("invalid size {size} for cone family {family}")]
    InvalidSize { family: String, size: u32 },
    #[error("shape parameter must be nonnegative, got {0}")]
    NegativeShape(String),
    #[error("invalid Wishart parameters: {0}")]
    InvalidParams(String),
    #[error("scale matrix is not positive definite")]
    NotPositiveDefinite,
    #[error("noncentrality matrix is not positive semidefinite")]
    NotPositiveSemidefinite,
    #[error("tilt parameter must be strictly positive, got {0}")]
    NonPositiveT(String),
    #[error("argument outside the Laplace transform domain (Sigma^-1/2 + u must be positive definite)")]
    OutOfDomain,
    #[error("cannot parse rational from {0:?}")]
    BadRational(String),
    #[error("cannot represent float {0} exactly")]
    BadFloat(f64),
}
