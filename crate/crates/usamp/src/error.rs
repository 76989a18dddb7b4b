//! Error types shared across the crate.

use crate::group::DualIndex;
use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    /// A group specification is malformed (e.g. a zero order).
    #[error("invalid group spec: {0}")]
    InvalidGroup(String),

    /// An element or character index lies outside its group.
    #[error("domain error: {0}")]
    Domain(String),

    /// Requested subgroup strides do not divide the group orders.
    #[error("invalid subgroup: {0}")]
    InvalidSubgroup(String),

    /// A point-group matrix fails validation (not orthogonal, not closed,
    /// or incompatible with the group orders).
    #[error("invalid point action: {0}")]
    InvalidAction(String),

    /// A precondition on dimensions or operand compatibility was violated.
    #[error("contract violation: {0}")]
    Contract(String),

    /// A matrix expected to be Hermitian was not, within tolerance.
    #[error("matrix is not Hermitian (max deviation {deviation:.3e})")]
    NonHermitian { deviation: f64 },

    /// Pseudo-inverse of a rank-deficient matrix was requested.
    #[error("rank-deficient matrix (lambda_min = {lambda_min:.3e})")]
    SingularMatrix { lambda_min: f64 },

    /// A square convolution system is singular at one or more characters.
    #[error("singular convolution system at {} character(s), first {first}", .count)]
    SingularSystem { count: usize, first: DualIndex },

    /// The recoverability constant is below tolerance; no stable left
    /// inverse exists.
    #[error("not recoverable: delta = {delta:.3e} at character {worst}")]
    NotRecoverable { delta: f64, worst: DualIndex },

    /// Generator translates fail the Riesz-sequence check.
    #[error("degenerate generators: lower Riesz bound {alpha:.3e} at character {worst}")]
    DegenerateGenerators { alpha: f64, worst: DualIndex },

    /// The two reconstruction routes disagree beyond tolerance.
    #[error("reconstruction routes disagree by {deviation:.3e}")]
    ReconstructionMismatch { deviation: f64 },

    /// Input file or scenario failed schema validation.
    #[error("schema error: {0}")]
    Schema(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
