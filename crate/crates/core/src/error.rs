use thiserror::Error;

/// Errors raised by precondition violations in the calculus.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty multisegment is not allowed here")]
    EmptyMultisegment,

    #[error("segment endpoints out of order: start {start} > end {end} (doubled exponents)")]
    InvertedSegment { start: i32, end: i32 },

    #[error("segment endpoints {start} and {end} differ by a half-integer (doubled exponents must share parity)")]
    HalfIntegerLength { start: i32, end: i32 },

    #[error("line `{label}` appears with degrees {first} and {second}")]
    DegreeConflict { label: String, first: u32, second: u32 },

    #[error("segments on line `{label}` mix integral and half-integral exponents")]
    MixedParity { label: String },

    #[error("{op} requires all segments on a single cuspidal line")]
    MixedLines { op: &'static str },

    #[error("{op} requires a Z-form multisegment")]
    NotZForm { op: &'static str },

    #[error("total dimension {dim} is odd; no symplectic subgroup exists")]
    OddDimension { dim: u32 },

    #[error("rank {dim} is outside the supported range (even, 2..=6)")]
    UnsupportedRank { dim: u32 },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: u32, got: u32 },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
