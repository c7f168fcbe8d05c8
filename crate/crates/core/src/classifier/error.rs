use thiserror::Error;

use crate::berkovich::OracleError;
use crate::ratfunc::{RatFuncError, ValidationReport};
use crate::series::SeriesError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error("invalid coefficients: {0}")]
    Invalid(ValidationReport),
    #[error("input violates the standing hypotheses: {0}")]
    Unclassifiable(String),
    #[error("two-component verdict needs a central edge, but the hull is a star: {0}")]
    PairingUndefined(String),
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    RatFunc(#[from] RatFuncError),
}
