use thiserror::Error;

use super::Exponent;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("division by exact zero")]
    DivisionByZero,
    #[error("divisor is zero to precision O(t^{0}) but not known to be exactly zero")]
    IndeterminateZero(Exponent),
    #[error("valuation undetermined: series is zero to precision O(t^{0})")]
    IndeterminateValuation(Exponent),
    #[error("reduction undefined for valuation {0} < 0")]
    NotIntegral(Exponent),
    #[error("Newton polygon undetermined: coefficient of degree {index} is zero to precision")]
    IndeterminateGeometry { index: usize },
    #[error("no Newton polygon segment with root valuation {0}")]
    NoSuchSlope(Exponent),
    #[error("slope {0} does not isolate a simple residue root")]
    SlopeNotSimple(Exponent),
    #[error("residue roots on slope {0} lie outside the rational residue field")]
    ResidueRootIrrational(Exponent),
    #[error("{root} is not a residue root on slope {slope}")]
    NotAResidueRoot { root: String, slope: Exponent },
    #[error("working precision exhausted at O(t^{0})")]
    PrecisionExhausted(Exponent),
    #[error("polynomial is zero")]
    ZeroPolynomial,
    #[error("syntax error at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },
}
