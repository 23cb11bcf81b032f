use thiserror::Error;

use crate::algebra::AlgebraKind;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("algebra mismatch: {left} vs {right}")]
    KindMismatch {
        left: AlgebraKind,
        right: AlgebraKind,
    },

    #[error("basis index e{index} out of range for {kind} (dimension {})", kind.dim())]
    IndexOutOfRange { index: usize, kind: AlgebraKind },

    #[error("vector length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("{op} is not defined for {kind}")]
    UnsupportedKind { op: &'static str, kind: AlgebraKind },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("division by zero: element has zero norm")]
    DivisionByZero,

    #[error(transparent)]
    Parse(#[from] ParseError),
}

/// A syntax error in an element, matrix or state literal. `position` is a
/// byte offset into the input text.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at position {position}: {message}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl ParseError {
    pub(crate) fn new(position: usize, message: impl Into<String>) -> Self {
        Self {
            position,
            message: message.into(),
        }
    }
}
