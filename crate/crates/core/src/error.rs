use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Exact division left a nonzero remainder.
    #[error("polynomial division is not exact")]
    NotDivisible,
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    /// Strand-count conservation of a bubble failed.
    #[error("constraint violated: {0}")]
    ConstraintViolation(String),
    #[error("series operands have no common validity window")]
    EmptyWindow,
    #[error("series leading coefficient {0} is not a unit")]
    NonUnitLeading(String),
    #[error("series has no nonzero tracked coefficient")]
    ZeroSeries,
    #[error("series window too short: need {needed} coefficients, have {available}")]
    InsufficientOrder { needed: usize, available: usize },
    #[error("A-exponent offset {0} is not a multiple of 4")]
    ExponentNotMultipleOf4(i64),
}

pub type Result<T> = std::result::Result<T, Error>;
