use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid input: {0}")]
    Input(String),
    #[error("circle coordinates degenerate: a + b = 0")]
    DegenerateCircle,
    #[error("r-value undefined for {0} edge")]
    RValueUndefined(&'static str),
    #[error("parameter out of range: {0}")]
    Range(String),
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("resultant needs positive degree in `{0}`")]
    DegreeZero(String),
    #[error("matrix is not unimodular (det = {0})")]
    NotUnimodular(String),
    #[error("no assignment for generator `{0}`")]
    MissingGenerator(String),
    #[error("path has no non-horizontal edge, so no final r-value")]
    NoFinalRValue,
    #[error("reference twist must be supplied: {0}")]
    ReferenceTwistRequired(String),
    #[error("expression is not even in `{0}`")]
    NotEven(String),
    #[error("verification failed: {0}")]
    VerificationFailed(String),
    #[error("unsupported format `{0}`")]
    UnsupportedFormat(String),
}

pub type Result<T> = std::result::Result<T, Error>;
