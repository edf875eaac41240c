use thiserror::Error;

use crate::arith::{ArithError, FieldSpec};

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(FieldSpec, FieldSpec),
    #[error("arity mismatch: expected {expected} variables, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("variable index {index} out of range 1..={nvars}")]
    IndexOutOfRange { index: usize, nvars: usize },
    #[error("invalid degree {0}")]
    InvalidDegree(i64),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("invalid shape (n,k,d)=({n},{k},{d}); need 0 <= k <= d <= n-k")]
    InvalidShape { n: i64, k: i64, d: i64 },
    #[error("tableaux have different shapes")]
    ShapeMismatch,
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),
    #[error("invalid filling: {0}")]
    InvalidFilling(String),
    #[error("path does not end at the required endpoint")]
    EndpointMismatch,
    #[error("invalid endpoints")]
    InvalidEndpoints,
    #[error("straightening did not terminate within {0} rewrites")]
    NonTermination(usize),
    #[error("tableau support does not contain 1..={0}")]
    SupportViolation(usize),
    #[error("degree {degree} out of range 0..={n}")]
    DegreeOutOfRange { degree: usize, n: usize },
    #[error("characteristic {p} too small: need {need}")]
    CharacteristicTooSmall { p: u64, need: String },
    #[error("colon by the zero polynomial")]
    ZeroDivisorInput,
    #[error("ideal is not homogeneous")]
    NonHomogeneous,
    #[error("ideal is zero-dimensional")]
    ZeroDimensional,
    #[error("parameters out of range: {0}")]
    ParameterOutOfRange(String),
    #[error("instance too large: {0}")]
    TooLarge(String),
}
