//! Error type shared by all modules.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Parameter or input validation failure.
    #[error("invalid input: {0}")]
    Validation(String),

    /// Requested problem size exceeds the configured dense-matrix capacity.
    #[error("resource limit exceeded: {0}")]
    Resource(String),

    /// Numerical failure (eigensolver breakdown, overflow, zero norm, ...).
    #[error("numeric failure: {0}")]
    Numeric(String),

    /// Iterative solver did not reach the requested tolerance.
    #[error("no convergence: residual {residual:.3e} ({detail})")]
    Convergence { residual: f64, detail: String },

    /// A product formula hit a denominator below tolerance.
    #[error("singular configuration: {0}")]
    Singular(String),

    /// Root collision in the Bethe system: lambda_i - lambda_j at a pole of r.
    #[error("root collision between indices {i} and {j}")]
    Collision { i: usize, j: usize },

    /// Fit rejected (too few points, degenerate data, ...).
    #[error("fit error: {0}")]
    Fit(String),
}

pub type Result<T> = std::result::Result<T, Error>;
