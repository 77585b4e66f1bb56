//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// Input data violates a structural precondition (grid shape, sign,
    /// normalization). Maps to exit code 1 in the CLI.
    #[error("validation: {0}")]
    Validation(String),

    /// An identity that should hold up to discretization error failed by a
    /// wide margin, indicating an inconsistent discretization.
    #[error("identity failure: {0}")]
    IdentityFailure(String),

    /// An iterative solver did not converge. Maps to exit code 2 in the CLI.
    #[error("non-convergence: {0}")]
    NonConvergence(String),

    /// Generalized eigenproblem with a mass matrix that is not positive
    /// definite.
    #[error("mass matrix not positive definite: {0}")]
    NotPositiveDefinite(String),

    /// Kernel detection in the weighted eigenproblem found an unexpected
    /// number of near-kernel eigenvalues.
    #[error("kernel detection: expected {expected} eigenvalues near 1, found {found}: {list:?}")]
    KernelDetection {
        expected: usize,
        found: usize,
        list: Vec<f64>,
    },

    #[error("io: {0}")]
    Io(#[from] std::io::Error),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub fn validation(msg: impl Into<String>) -> Self {
        Error::Validation(msg.into())
    }

    pub fn non_convergence(msg: impl Into<String>) -> Self {
        Error::NonConvergence(msg.into())
    }

    /// CLI exit code contract: 0 ok, 1 validation/invariant failure,
    /// 2 numerical non-convergence.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::NonConvergence(_) => 2,
            _ => 1,
        }
    }
}
