use thiserror::Error;

use crate::series::SeriesError;

use super::ValidationReport;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RatFuncError {
    #[error("degenerate critical data: {0}")]
    Degenerate(String),
    #[error("constraint violated: {0}")]
    ConstraintViolated(String),
    #[error("no alpha satisfies the fixed-critical-point constraint for this beta and gamma")]
    NoSolution,
    #[error("invalid coefficients: {0}")]
    Invalid(ValidationReport),
    #[error(transparent)]
    Series(#[from] SeriesError),
}
