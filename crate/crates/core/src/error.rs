use thiserror::Error;

use crate::scalars::Field;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("ambient dimension mismatch: {left} vs {right}")]
    AmbientMismatch { left: usize, right: usize },
    #[error("field mismatch: {left} vs {right}")]
    FieldMismatch { left: Field, right: Field },
    #[error("gram matrix is singular: basis columns are dependent")]
    SingularGram,
    #[error("components are not orthogonal: <{one}, {zero}> = {value}")]
    NotOrthogonal { one: String, zero: String, value: String },
    #[error("vector {0} is not in the domain")]
    NotInDomain(String),
    #[error("operators do not commute: {0}")]
    NotCommuting(String),
    #[error("not a partial projection: {0}")]
    NotAProjection(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
