//! Error type shared by all library operations.

use thiserror::Error;

/// Errors reported by construction, closure, criteria, and classification
/// operations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Two matrices (or a matrix and a basis) have incompatible sizes.
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    /// An operation that requires at least one input received none.
    #[error("empty input: {0}")]
    EmptyInput(&'static str),

    /// A matrix contains NaN or infinite entries.
    #[error("non-finite entries in {0}")]
    NonFinite(&'static str),

    /// A generator violates the skew-Hermitian requirement.
    #[error("matrix is not skew-Hermitian (deviation {deviation:.3e} relative to norm)")]
    NotSkewHermitian { deviation: f64 },

    /// A family/rank combination outside the valid range.
    #[error("invalid rank for {family}: {reason}")]
    InvalidRank { family: &'static str, reason: String },

    /// A system specification violating its invariants.
    #[error("invalid system: {0}")]
    InvalidSystem(String),

    /// An operation that requires the symmetric-coupling relation was called
    /// on a system that does not satisfy it.
    #[error("system does not satisfy the symmetric-coupling relation: {0}")]
    SymmetryRequired(String),

    /// A criterion or descent was invoked although its hypothesis fails.
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),

    /// A reconstruction seed that the implementation does not support.
    #[error("unsupported seed index {index} (supported: {supported})")]
    UnsupportedSeed { index: usize, supported: String },

    /// A seed element failed the closure-membership precondition.
    #[error("seed element is not a member of the closure (residual {residual:.3e})")]
    SeedNotInClosure { residual: f64 },

    /// Classification requires a converged closure.
    #[error("closure did not converge (dimension {dim} reached the cap)")]
    Unconverged { dim: usize },

    /// A dipole token (or other numeric field) that could not be parsed.
    #[error("cannot parse numeric token {token:?}: {reason}")]
    ParseToken { token: String, reason: String },

    /// Internal consistency check failed (a bug if it ever fires).
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

/// Convenient alias used across the crate.
pub type Result<T> = std::result::Result<T, Error>;
