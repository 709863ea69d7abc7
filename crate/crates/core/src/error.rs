use thiserror::Error;

use crate::scalar::ParseRationalError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vector is not grade-homogeneous")]
    NotHomogeneous,
    #[error("(k, n) = ({k}, {n}) lies outside the summation region")]
    OutOfRegion { k: i64, n: i64 },
    #[error("invalid singular-vector type: {0}")]
    InvalidType(String),
    #[error("weight {weight} violates the type {sv_type} condition: {condition}")]
    WeightCondition {
        weight: String,
        sv_type: String,
        condition: String,
    },
    #[error("coefficient formula hits a pole at {0}")]
    Pole(String),
    #[error("regime violation for {case}: {reason}")]
    Regime { case: String, reason: String },
    #[error("unknown catalog case `{0}`")]
    UnknownCase(String),
    #[error("missing parameter `{0}`")]
    MissingParam(String),
    #[error("catalog edge {src} -> {dst} ({kind}) is not a single elementary embedding: {reason}")]
    UnrealizableEdge {
        src: String,
        dst: String,
        kind: String,
        reason: String,
    },
    #[error("embedding closure did not terminate within max_depth = {0}")]
    DepthExhausted(u32),
    #[error("max_depth must be at least 1")]
    InvalidDepth,
    #[error(transparent)]
    Parse(#[from] ParseRationalError),
    #[error("malformed input: {0}")]
    Malformed(String),
}

pub type Result<T> = std::result::Result<T, Error>;
