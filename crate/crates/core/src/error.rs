//! Crate-wide error type.
//!
//! Degeneracies are hard errors everywhere: inputs are never perturbed or
//! repaired, and numeric backends report indecision instead of guessing.

/// Errors raised by construction, verification and predicate evaluation.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Point/space dimensions disagree, or a simplex has the wrong arity.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    /// An operation needs more points than the input provides.
    #[error("too few points: {0}")]
    TooFewPoints(String),

    /// Input violates a general-position or full-dimensionality precondition.
    #[error("degenerate input: {0}")]
    Degenerate(String),

    /// Labels are not distinct positive integers, or refer to missing points.
    #[error("invalid labels: {0}")]
    InvalidLabels(String),

    /// A parameter is outside its documented range.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// A numeric predicate could not be decided within the body's tolerance.
    #[error("numeric predicate undecided within tolerance: {0}")]
    Undecided(String),

    /// A requested verification ran and the property does not hold.
    #[error("verification failed: {0}")]
    VerificationFailed(String),

    /// A property the construction guarantees failed to verify. Reaching
    /// this is a bug in the library, never a property of valid input.
    #[error("internal invariant breach: {0}")]
    InternalInvariant(String),

    /// The operation is not defined for this input class.
    #[error("unsupported operation: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
