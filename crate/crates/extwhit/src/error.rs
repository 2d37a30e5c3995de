//! Error type shared by every evaluation routine.

use thiserror::Error;

/// Errors surfaced by evaluation routines.
///
/// Non-convergence of a series or quadrature is *not* an error: it is
/// reported through [`crate::EvalOutcome::converged`] so the caller still
/// sees the best available value. Errors are reserved for inputs on which
/// the requested quantity is undefined or unrepresentable.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Gamma-function pole: argument is a nonpositive integer.
    #[error("gamma pole: argument {0} is a nonpositive integer")]
    GammaPole(String),

    /// Input outside the domain of the requested function.
    #[error("domain: {0}")]
    Domain(String),

    /// The result (or a required intermediate) exceeds the binary64 range.
    #[error("overflow: {0}")]
    Overflow(String),

    /// A parameter combination the library deliberately does not support.
    #[error("unsupported: {0}")]
    Capability(String),

    /// Invalid quadrature controls.
    #[error("invalid quadrature spec: {0}")]
    InvalidSpec(String),
}

pub type Result<T> = std::result::Result<T, Error>;
