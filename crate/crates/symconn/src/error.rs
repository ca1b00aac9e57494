//! Crate-wide error type.

use thiserror::Error;

/// Errors raised by the library.
///
/// Input errors correspond to violated preconditions on caller-supplied
/// data; solver and resource errors are runtime conditions; internal
/// errors indicate a broken invariant and should never occur.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("input error: {0}")]
    Input(String),

    #[error("polynomial is not symmetric: {0}")]
    NotSymmetric(String),

    #[error("zero polynomial not allowed here")]
    ZeroPolynomial,

    #[error("sign condition is not realized by any root")]
    Unrealizable,

    #[error("scale exceeded: {0}")]
    ScaleExceeded(String),

    #[error("system appears non-zero-dimensional: {0}")]
    NonZeroDimensional(String),

    #[error("no separating linear form found within {trials} trials: {detail}")]
    SeparatingFormExhausted { trials: usize, detail: String },

    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),

    #[error("membership check failed for point {point} at atom {atom}")]
    MembershipFailed { point: String, atom: String },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
