use std::fmt;

use super::{Exponent, PuiseuxNumber, SeriesError};

/// A quotient `numer / denom` of exact series, kept unexpanded so that
/// identities between quotients can be decided exactly.
#[derive(Clone, Debug)]
pub struct SeriesFraction {
    numer: PuiseuxNumber,
    denom: PuiseuxNumber,
}

impl SeriesFraction {
    /// Fails on an exact-zero denominator.
    pub fn new(numer: PuiseuxNumber, denom: PuiseuxNumber) -> Result<Self, SeriesError> {
        if denom.is_exact_zero() {
            return Err(SeriesError::DivisionByZero);
        }
        Ok(SeriesFraction { numer, denom })
    }

    pub fn numer(&self) -> &PuiseuxNumber {
        &self.numer
    }

    pub fn denom(&self) -> &PuiseuxNumber {
        &self.denom
    }

    pub fn is_zero(&self) -> bool {
        self.numer.is_exact_zero()
    }

    /// Exact equality with a series: `numer == x * denom`.
    pub fn equals(&self, x: &PuiseuxNumber) -> bool {
        (&self.numer - &(x * &self.denom)).is_exact_zero()
    }

    pub fn expand(&self, cap: Exponent) -> Result<PuiseuxNumber, SeriesError> {
        self.numer.div(&self.denom, cap)
    }
}

impl From<PuiseuxNumber> for SeriesFraction {
    fn from(x: PuiseuxNumber) -> Self {
        SeriesFraction { numer: x, denom: PuiseuxNumber::one() }
    }
}

impl PartialEq for SeriesFraction {
    fn eq(&self, other: &Self) -> bool {
        (&(&self.numer * &other.denom) - &(&other.numer * &self.denom)).is_exact_zero()
    }
}

impl fmt::Display for SeriesFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom == PuiseuxNumber::one() {
            write!(f, "{}", self.numer)
        } else {
            write!(f, "({}) / ({})", self.numer, self.denom)
        }
    }
}
