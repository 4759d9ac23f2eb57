use thiserror::Error;

/// Errors reported by the library. Nothing here panics on bad input;
/// every domain violation comes back as one of these.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("series has zero constant term and cannot be inverted")]
    NonInvertibleSeries,
    #[error("inner series of a composition must have zero constant term")]
    CompositionDomain,
    #[error("series reversion needs f(0) = 0 and f'(0) != 0")]
    ReversionDomain,
    #[error("logarithm needs constant term 1")]
    LogDomain,
    #[error("exponential needs constant term 0")]
    ExpDomain,
    #[error("rational power needs constant term 1")]
    PowDomain,
    #[error("series order {available} is below the required order {needed}")]
    InsufficientOrder { needed: usize, available: usize },
    #[error("triangle has a zero diagonal entry in row {row}")]
    SingularTriangle { row: usize },
    #[error("entry ({n}, {m}) lies outside the triangle")]
    OutOfTriangle { n: usize, m: usize },
    #[error("expected {expected} coefficients, found {found}")]
    Shape { expected: usize, found: usize },
    #[error("domain error: {0}")]
    Domain(String),
    #[error("invalid progression parameters: {0}")]
    InvalidParams(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
