use thiserror::Error;

use crate::models::Violation;
use crate::scalar::LiteralError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("{op}: dimension mismatch ({left_rows}x{left_cols} vs {right_rows}x{right_cols})")]
    DimensionMismatch {
        op: &'static str,
        left_rows: usize,
        left_cols: usize,
        right_rows: usize,
        right_cols: usize,
    },
    #[error("instance mismatch: {left} vs {right}")]
    InstanceMismatch { left: &'static str, right: &'static str },
    #[error("unknown semiring instance `{0}`")]
    UnknownInstance(String),
    #[error("instance `{0}` does not have idempotent addition")]
    NotIdempotent(String),
    #[error("matrix is {rows}x{cols}, expected square")]
    NotSquare { rows: usize, cols: usize },
    #[error("dimensions must be positive")]
    EmptyShape,
    #[error("row {row} has {found} entries, expected {expected}")]
    Ragged { row: usize, expected: usize, found: usize },
    #[error("value {value} is not in the carrier of `{instance}`")]
    OutsideCarrier { instance: &'static str, value: String },
    #[error("coefficient grid is empty")]
    EmptyGrid,
    #[error("vector list is empty")]
    EmptyVectorList,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ModelError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("membership: {0}")]
    Membership(Violation),
    #[error("unknown gate `{0}`")]
    UnknownGate(String),
    #[error("truth table needs {expected} outputs, got {found}")]
    TableSize { expected: usize, found: usize },
    #[error("{0}")]
    Invalid(String),
    #[error(transparent)]
    Literal(#[from] LiteralError),
}

impl From<Violation> for ModelError {
    fn from(v: Violation) -> Self {
        ModelError::Membership(v)
    }
}

/// Errors reading the matrix/vector text format.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum TextError {
    #[error("line {line}, column {col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}
