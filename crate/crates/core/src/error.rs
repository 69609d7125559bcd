use thiserror::Error;

/// A syntax error in partition, tuple or polynomial text.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at position {position}: {message}")]
pub struct ParseError {
    /// Byte offset into the source text.
    pub position: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(position: usize, message: impl Into<String>) -> Self {
        ParseError {
            position,
            message: message.into(),
        }
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("unknown variable '{name}' at position {position}")]
    UnknownVariable { name: String, position: usize },
    #[error("polynomials live in different rings")]
    RingMismatch,
    #[error("Groebner step budget of {0} reductions exhausted")]
    BudgetExhausted(u64),
    #[error("invalid tuple: {0}")]
    InvalidTuple(String),
    #[error("map shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("map has abstract coefficients {0:?}; a rational-coefficient map is required")]
    AbstractCoefficients(Vec<String>),
    #[error("cannot saturate by the zero polynomial")]
    ZeroSaturator,
    #[error("expected {expected} coordinates, got {got}")]
    Arity { expected: usize, got: usize },
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
