//! Error type shared by all modules.

use thiserror::Error;

/// Errors produced by the synthesis, estimation and certification routines.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix is not symmetric: {0}")]
    NotSymmetric(String),

    #[error("matrix is not positive definite: {0}")]
    NotPositiveDefinite(String),

    #[error("matrix is not positive semidefinite: {0}")]
    NotPositiveSemidefinite(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error(
        "Riccati iteration did not converge after {iterations} steps \
         (residual {residual:e}); system is presumed not mean-square stabilizable"
    )]
    NotStabilizable { iterations: usize, residual: f64 },

    #[error("closed loop is not mean-square stable: lifted spectral radius {radius}")]
    NotMeanSquareStable { radius: f64 },

    #[error("numerically singular: {0}")]
    Singular(String),

    #[error("solver defect: {0}")]
    SolverDefect(String),

    #[error("io error for {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error("parse error in {path}: {message}")]
    Parse { path: String, message: String },
}

impl Error {
    /// Process exit code used by the CLI: 1 invalid input, 2 non-convergence
    /// or loss of mean-square stability.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::NotStabilizable { .. } | Error::NotMeanSquareStable { .. } => 2,
            Error::SolverDefect(_) => 2,
            _ => 1,
        }
    }
}
