use thiserror::Error;

/// Errors surfaced by construction and verification entry points.
///
/// Verification *failures* (an axiom violated, a brace found non-simple) are
/// not errors; they are reported as [`crate::report::Verdict::Fail`] with a
/// witness. Errors cover invalid inputs and resource guards.
#[derive(Debug, Error)]
pub enum BraceError {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("size guard exceeded: order {order} > limit {limit}")]
    SizeGuard { order: u128, limit: u128 },

    #[error("{0} is not a unit modulo {1}")]
    NotAUnit(u64, u64),

    #[error("matrix is not invertible: {0}")]
    NotInvertible(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("serialization error: {0}")]
    Serde(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, BraceError>;
