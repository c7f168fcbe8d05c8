use crate::series::{PuiseuxNumber, SeriesFraction};

use super::{CubicCoefficients, RatFuncError, Violation};

/// The critical-data description of the normal form:
/// `phi(z) = (1-alpha)(1-beta) z^2 (z - gamma) / ((1-gamma)(z-alpha)(z-beta))`.
///
/// `alpha` is held as an exact quotient since it is usually obtained by
/// solving a linear equation in the other two.
#[derive(Clone, Debug, PartialEq)]
pub struct CriticalData {
    pub alpha: SeriesFraction,
    pub beta: PuiseuxNumber,
    pub gamma: PuiseuxNumber,
}

impl CriticalData {
    pub fn new(alpha: SeriesFraction, beta: PuiseuxNumber, gamma: PuiseuxNumber) -> Self {
        CriticalData { alpha, beta, gamma }
    }

    /// Builds the data from `beta` and `gamma`, solving for `alpha`.
    pub fn from_beta_gamma(beta: PuiseuxNumber, gamma: PuiseuxNumber) -> Result<Self, RatFuncError> {
        let alpha = solve_alpha(&beta, &gamma)?;
        Ok(CriticalData { alpha, beta, gamma })
    }

    /// Names every coincidence that makes the form degenerate.
    pub fn degeneracies(&self) -> Vec<&'static str> {
        let one = PuiseuxNumber::one();
        let mut out = Vec::new();
        if self.alpha.is_zero() {
            out.push("alpha = 0");
        }
        if self.alpha.equals(&self.gamma) {
            out.push("alpha = gamma");
        }
        if self.beta.is_exact_zero() {
            out.push("beta = 0");
        }
        if self.beta == self.gamma {
            out.push("beta = gamma");
        }
        if self.alpha.equals(&self.beta) {
            out.push("alpha = beta");
        }
        if self.gamma == one {
            out.push("gamma = 1");
        }
        if self.alpha.equals(&one) {
            out.push("alpha = 1");
        }
        if self.beta == one {
            out.push("beta = 1");
        }
        out
    }
}

/// Solves `(1-alpha)(1-beta)(3-2 gamma) = (1-gamma)(2-alpha-beta)` for `alpha`.
pub fn solve_alpha(beta: &PuiseuxNumber, gamma: &PuiseuxNumber) -> Result<SeriesFraction, RatFuncError> {
    let one = PuiseuxNumber::one();
    let two = PuiseuxNumber::from_int(2);
    let three = PuiseuxNumber::from_int(3);
    let a = &(&one - beta) * &(&three - &(&two * gamma));
    let b = &one - gamma;
    let numer = &(&b * &(&two - beta)) - &a;
    let denom = &b - &a;
    if denom.is_exact_zero() {
        return Err(RatFuncError::NoSolution);
    }
    Ok(SeriesFraction::new(numer, denom)?)
}

/// Coefficients of the normal form with the given critical data, scaled by a
/// power of `t` so that all lie in the valuation ring and one is a unit.
pub fn from_critical_data(d: &CriticalData) -> Result<CubicCoefficients, RatFuncError> {
    let bad = d.degeneracies();
    if !bad.is_empty() {
        return Err(RatFuncError::Degenerate(bad.join(", ")));
    }
    let n = d.alpha.numer();
    let dd = d.alpha.denom();
    let one = PuiseuxNumber::one();
    let one_minus_beta = &one - &d.beta;
    let one_minus_gamma = &one - &d.gamma;
    // every coefficient multiplied through by the denominator of alpha
    let a3 = &(dd - n) * &one_minus_beta;
    let a2 = -(&d.gamma * &a3);
    let b2 = &one_minus_gamma * dd;
    let b1 = -(&one_minus_gamma * &(n + &(dd * &d.beta)));
    let b0 = &one_minus_gamma * &(n * &d.beta);
    let raw = CubicCoefficients::new(a3, a2, b2, b1, b0);
    let m = raw.min_valuation().ok_or_else(|| RatFuncError::Degenerate("all coefficients vanish".into()))?;
    let c = raw.shift(-m);
    let report = c.validate();
    if report.violations.contains(&Violation::CriticalPointConstraint) {
        return Err(RatFuncError::ConstraintViolated(Violation::CriticalPointConstraint.to_string()));
    }
    if !report.is_valid() {
        return Err(RatFuncError::Degenerate(report.to_string()));
    }
    Ok(c)
}
