use std::fmt;

use serde::{Deserialize, Serialize};

use crate::series::{Exponent, PuiseuxNumber, SeriesPolynomial, Valuation};

/// The five coefficients of `phi(z) = (a3 z^3 + a2 z^2) / (b2 z^2 + b1 z + b0)`,
/// the normal form with `0`, `1` critical and fixed and `inf` fixed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CubicCoefficients {
    pub a3: PuiseuxNumber,
    pub a2: PuiseuxNumber,
    pub b2: PuiseuxNumber,
    pub b1: PuiseuxNumber,
    pub b0: PuiseuxNumber,
}

/// One failed invariant of [`CubicCoefficients`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Violation {
    /// A coefficient carries a finite precision; the constraints need exact input.
    Inexact(String),
    LeadingNumeratorZero,
    LeadingDenominatorZero,
    /// Named coefficient has negative valuation.
    NotIntegral(String),
    /// No coefficient has valuation zero.
    NoUnitCoefficient,
    /// `phi(1) != 1`: `a3 + a2 != b2 + b1 + b0`.
    FixedPointConstraint,
    /// `phi'(1) != 0`: `3 a3 + 2 a2 - 2 b2 - b1 != 0`.
    CriticalPointConstraint,
    /// Numerator and denominator share a root.
    CommonRoot,
    /// The four critical points `0, 1, c1, c2` are not pairwise distinct.
    CriticalPointsCollide,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Inexact(name) => write!(f, "{name} is not an exact series"),
            Violation::LeadingNumeratorZero => f.write_str("a3 = 0"),
            Violation::LeadingDenominatorZero => f.write_str("b2 = 0"),
            Violation::NotIntegral(name) => write!(f, "{name} has negative valuation"),
            Violation::NoUnitCoefficient => f.write_str("no coefficient is a unit"),
            Violation::FixedPointConstraint => f.write_str("a3 + a2 != b2 + b1 + b0"),
            Violation::CriticalPointConstraint => f.write_str("3*a3 + 2*a2 - 2*b2 - b1 != 0"),
            Violation::CommonRoot => f.write_str("numerator and denominator share a root"),
            Violation::CriticalPointsCollide => f.write_str("critical points 0, 1, c1, c2 are not distinct"),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return f.write_str("valid");
        }
        let parts: Vec<String> = self.violations.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join("; "))
    }
}

impl CubicCoefficients {
    pub fn new(a3: PuiseuxNumber, a2: PuiseuxNumber, b2: PuiseuxNumber, b1: PuiseuxNumber, b0: PuiseuxNumber) -> Self {
        CubicCoefficients { a3, a2, b2, b1, b0 }
    }

    pub fn from_ints(a3: i64, a2: i64, b2: i64, b1: i64, b0: i64) -> Self {
        CubicCoefficients::new(a3.into(), a2.into(), b2.into(), b1.into(), b0.into())
    }

    pub fn named(&self) -> [(&'static str, &PuiseuxNumber); 5] {
        [("a3", &self.a3), ("a2", &self.a2), ("b2", &self.b2), ("b1", &self.b1), ("b0", &self.b0)]
    }

    /// `a3 z^3 + a2 z^2`.
    pub fn numerator(&self) -> SeriesPolynomial {
        SeriesPolynomial::new(vec![PuiseuxNumber::zero(), PuiseuxNumber::zero(), self.a2.clone(), self.a3.clone()])
    }

    /// `b2 z^2 + b1 z + b0`.
    pub fn denominator(&self) -> SeriesPolynomial {
        SeriesPolynomial::new(vec![self.b0.clone(), self.b1.clone(), self.b2.clone()])
    }

    /// `a3 + a2 - b2 - b1 - b0`, zero iff `phi(1) = 1`.
    pub fn fixed_point_defect(&self) -> PuiseuxNumber {
        &(&(&(&self.a3 + &self.a2) - &self.b2) - &self.b1) - &self.b0
    }

    /// `3 a3 + 2 a2 - 2 b2 - b1`, zero iff `1` is critical given `phi(1) = 1`.
    pub fn critical_point_defect(&self) -> PuiseuxNumber {
        let three = PuiseuxNumber::from_int(3);
        let two = PuiseuxNumber::from_int(2);
        &(&(&(&three * &self.a3) + &(&two * &self.a2)) - &(&two * &self.b2)) - &self.b1
    }

    /// `b2 a2^2 - b1 a2 a3 + b0 a3^2 = a3^2 g(-a2/a3)`: zero iff the
    /// numerator's nonzero root is a root of the denominator.
    pub fn resultant(&self) -> PuiseuxNumber {
        let t1 = &(&self.b2 * &self.a2) * &self.a2;
        let t2 = &(&self.b1 * &self.a2) * &self.a3;
        let t3 = &(&self.b0 * &self.a3) * &self.a3;
        &(&t1 - &t2) + &t3
    }

    pub fn validate(&self) -> ValidationReport {
        let mut violations = Vec::new();
        for (name, c) in self.named() {
            if !c.is_exact() {
                violations.push(Violation::Inexact(name.to_string()));
            }
        }
        if !violations.is_empty() {
            return ValidationReport { violations };
        }
        if self.a3.is_exact_zero() {
            violations.push(Violation::LeadingNumeratorZero);
        }
        if self.b2.is_exact_zero() {
            violations.push(Violation::LeadingDenominatorZero);
        }
        let mut has_unit = false;
        for (name, c) in self.named() {
            match c.valuation_lower_bound() {
                Valuation::Finite(v) if v < Exponent::ZERO => violations.push(Violation::NotIntegral(name.to_string())),
                Valuation::Finite(v) if v.is_zero() => has_unit = true,
                _ => {}
            }
        }
        if !has_unit {
            violations.push(Violation::NoUnitCoefficient);
        }
        if !self.fixed_point_defect().is_exact_zero() {
            violations.push(Violation::FixedPointConstraint);
        }
        if !self.critical_point_defect().is_exact_zero() {
            violations.push(Violation::CriticalPointConstraint);
        }
        if self.b0.is_exact_zero() || self.resultant().is_exact_zero() {
            violations.push(Violation::CommonRoot);
        }
        if !self.a3.is_exact_zero() && !self.b2.is_exact_zero() {
            let (_, psi) = super::wronskian_psi(self);
            let at_zero = psi.coeff(0);
            let at_one = psi.eval(&PuiseuxNumber::one());
            let disc = &(&psi.coeff(1) * &psi.coeff(1)) - &(&(&PuiseuxNumber::from_int(4) * &psi.coeff(2)) * &psi.coeff(0));
            if at_zero.is_exact_zero() || at_one.is_exact_zero() || disc.is_exact_zero() {
                violations.push(Violation::CriticalPointsCollide);
            }
        }
        ValidationReport { violations }
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_valid()
    }

    /// Multiplies all five coefficients by `t^e`.
    pub fn shift(&self, e: Exponent) -> Self {
        CubicCoefficients {
            a3: self.a3.shift(e),
            a2: self.a2.shift(e),
            b2: self.b2.shift(e),
            b1: self.b1.shift(e),
            b0: self.b0.shift(e),
        }
    }

    /// Least valuation among the five (they are exact, so this is determined).
    pub fn min_valuation(&self) -> Option<Exponent> {
        self.named().iter().filter_map(|(_, c)| c.valuation().ok().and_then(Valuation::finite)).min()
    }
}

impl fmt::Display for CubicCoefficients {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a3 = {}, a2 = {}, b2 = {}, b1 = {}, b0 = {}", self.a3, self.a2, self.b2, self.b1, self.b0)
    }
}
