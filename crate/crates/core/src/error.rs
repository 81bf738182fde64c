//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// A structural cap (group order, table size, search depth) was exceeded.
    #[error("size cap exceeded: {0}")]
    CapExceeded(String),

    /// Invalid parameters for a group family or table constructor.
    #[error("invalid parameter: {0}")]
    Parameter(String),

    /// A supplied subgroup embedding is not an injective homomorphism.
    #[error("invalid embedding: {0}")]
    Embedding(String),

    /// An action was requested for a family that does not define one.
    #[error("unsupported action: {0}")]
    UnsupportedAction(String),

    /// Two objects that must share a character table do not.
    #[error("table mismatch: {0}")]
    TableMismatch(String),

    /// A class function expected to be a genuine character is not one.
    #[error("not a character: {0}")]
    NotACharacter(String),

    /// An exact quantity expected to be rational came out irrational.
    #[error("not rational: {0}")]
    NotRational(String),

    /// A character-table document failed validation; the violated identity
    /// is named in the message.
    #[error("table validation failed: {0}")]
    TableInvalid(String),

    /// Malformed input document or value string.
    #[error("parse error: {0}")]
    Parse(String),

    /// Numerical failure in the dense-matrix verifier.
    #[error("numerical verification failure: {0}")]
    Numerical(String),
}
