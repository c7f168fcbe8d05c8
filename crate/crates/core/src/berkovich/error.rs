use thiserror::Error;

use crate::series::{Exponent, SeriesError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error("oracle did not settle within {0} normalization steps")]
    IterationCap(usize),
    #[error("map is constant")]
    ConstantMap,
    #[error("disk center is not known below radius exponent {0}")]
    CenterUnknown(Exponent),
    #[error("critical points {0} and {1} coincide to working precision")]
    IndistinctLeaves(String, String),
    #[error("hull leaves must be finite classical points")]
    InfiniteLeaf,
}
