use thiserror::Error;

/// Errors raised by the exact arithmetic, linear algebra, and verification layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("matrix is not square ({rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("conjugating matrix is singular")]
    SingularConjugator,

    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    /// A denominator of a rational generator vanishes at the evaluation point.
    #[error("degenerate evaluation point: {0} vanishes")]
    DegeneratePoint(String),

    #[error("sampling exhausted after {attempts} attempts ({context})")]
    SamplingExhausted { attempts: usize, context: String },

    #[error("{id} is not a generator of the {stage} stage")]
    InvalidForStage { id: String, stage: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("unknown {kind} `{name}`")]
    Unknown { kind: &'static str, name: String },

    #[error("integer overflow: {0}")]
    Overflow(String),
}

pub type Result<T> = std::result::Result<T, Error>;
