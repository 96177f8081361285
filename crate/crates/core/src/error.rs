//! Shared error type.

use thiserror::Error;

/// Errors produced by the geometry, intersection, and search modules.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Two inputs live in different ambient dimensions.
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    /// Sphere points with different radii were combined.
    #[error("sphere radius mismatch: {0} vs {1}")]
    RadiusMismatch(f64, f64),

    /// An argument violated a documented precondition.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A simplex is too close to degenerate for the requested computation.
    /// Carries the reciprocal condition estimate of the linear system.
    #[error("degenerate simplex: reciprocal condition estimate {rcond:.3e}")]
    Degenerate { rcond: f64 },

    /// A point was asserted to lie in a convex hull but does not, with the
    /// LP infeasibility margin as evidence.
    #[error("point not in convex hull: infeasibility margin {margin:.3e}")]
    NotInHull { margin: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }
}
