//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, Error)]
pub enum Error {
    /// Argument outside the documented domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A zeta-type function was evaluated at one of its poles.
    #[error("pole at s = {0}")]
    Pole(f64),

    /// An iteration (root search, series, tail bound) failed to converge.
    #[error("did not converge: {0}")]
    NonConvergence(String),

    /// Result exceeds the representable range; use a log-scaled variant.
    #[error("overflow: {0}")]
    Overflow(String),

    /// Sphere dimension outside {1, 2, 3}.
    #[error("unsupported dimension {0}")]
    UnsupportedDimension(usize),

    /// Expansion order outside the implemented range.
    #[error("unsupported order {0}")]
    UnsupportedOrder(usize),

    /// Sequence combination not covered by the decomposition engine.
    #[error("unsupported combination: {0}")]
    UnsupportedCombination(String),

    /// The Mellin map requires a vanishing constant term.
    #[error("polynomial has nonzero constant term {0}")]
    NonzeroConstant(String),

    /// Requested tolerance cannot be met at the given truncation.
    #[error("insufficient truncation: tail estimate {tail:e} exceeds tolerance {tolerance:e}")]
    InsufficientTruncation { tail: f64, tolerance: f64 },

    /// Numerical quadrature failed to reach its target accuracy.
    #[error("quadrature failure: {0}")]
    QuadratureFailure(String),
}
