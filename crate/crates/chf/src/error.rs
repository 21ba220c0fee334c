//! Error types shared across the crate.

use thiserror::Error;

/// Errors produced while evaluating or constructing solutions.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum EvalError {
    /// The requested standard solution does not exist for these parameters
    /// (M with b a non-positive integer, M-tilde with b an integer >= 2).
    #[error("undefined function: {0}")]
    UndefinedFunction(String),

    /// Argument outside the supported domain (e.g. z <= 0 where z > 0 is required).
    #[error("domain error: {0}")]
    DomainError(String),

    /// A series hit the term cap with an error estimate above tolerance.
    #[error("series did not converge: {0}")]
    NonConvergence(String),

    /// Digamma or gamma requested exactly at a non-positive integer pole.
    #[error("pole at non-positive integer argument {0}")]
    PoleArgument(f64),

    /// The two branches of a linear combination cancel so strongly that the
    /// double-precision result carries fewer digits than requested.
    #[error("catastrophic cancellation: branch magnitude {branch_magnitude:.3e} vs result {result_magnitude:.3e}")]
    CancellationWarning {
        branch_magnitude: f64,
        result_magnitude: f64,
    },

    /// Quantum numbers violate n >= l + 1 or similar constraints.
    #[error("invalid quantum numbers: {0}")]
    InvalidQuantumNumbers(String),

    /// Root bracketing for an eigenvalue search found no sign change.
    #[error("no root in bracket [{lo}, {hi}]")]
    NoRootInBracket { lo: f64, hi: f64 },

    /// A stated precondition was violated (documented per operation).
    #[error("precondition violated: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, EvalError>;
