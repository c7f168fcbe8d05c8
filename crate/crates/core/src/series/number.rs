use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{Exponent, SeriesError, Valuation};

/// Default absolute truncation point for divisions and root lifting.
pub const DEFAULT_WORKING_PRECISION: i64 = 48;

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// An element of the field of Puiseux series over the rationals, possibly
/// known only up to `O(t^precision)`.
///
/// Every stored exponent is strictly below `precision`, and no stored
/// coefficient is zero. `precision == None` means the series is exact.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct PuiseuxNumber {
    terms: BTreeMap<Exponent, BigRational>,
    precision: Option<Exponent>,
}

impl PuiseuxNumber {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    /// The uniformizer `t`.
    pub fn t() -> Self {
        Self::monomial(BigRational::one(), Exponent::ONE)
    }

    pub fn constant(c: BigRational) -> Self {
        Self::monomial(c, Exponent::ZERO)
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_ratio(n: i64, d: i64) -> Self {
        Self::constant(rat(n, d))
    }

    /// `c * t^e`.
    pub fn monomial(c: BigRational, e: Exponent) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        PuiseuxNumber { terms, precision: None }
    }

    /// `t^e`.
    pub fn t_pow(e: Exponent) -> Self {
        Self::monomial(BigRational::one(), e)
    }

    /// Builds an exact series from `(exponent, coefficient)` pairs; repeated
    /// exponents are summed.
    pub fn from_terms<I: IntoIterator<Item = (Exponent, BigRational)>>(terms: I) -> Self {
        let mut map: BTreeMap<Exponent, BigRational> = BTreeMap::new();
        for (e, c) in terms {
            *map.entry(e).or_insert_with(BigRational::zero) += c;
        }
        map.retain(|_, c| !c.is_zero());
        PuiseuxNumber { terms: map, precision: None }
    }

    /// The series `O(t^precision)`: zero to the given precision.
    pub fn zero_to(precision: Exponent) -> Self {
        PuiseuxNumber { terms: BTreeMap::new(), precision: Some(precision) }
    }

    pub fn precision(&self) -> Option<Exponent> {
        self.precision
    }

    pub fn is_exact(&self) -> bool {
        self.precision.is_none()
    }

    pub fn is_exact_zero(&self) -> bool {
        self.terms.is_empty() && self.precision.is_none()
    }

    /// No known terms but a finite precision.
    pub fn is_zero_to_precision(&self) -> bool {
        self.terms.is_empty() && self.precision.is_some()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &BigRational)> + '_ {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, e: Exponent) -> BigRational {
        self.terms.get(&e).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Least stored term, if any.
    pub fn leading(&self) -> Option<(Exponent, &BigRational)> {
        self.terms.iter().next().map(|(e, c)| (*e, c))
    }

    /// `+inf` for exact zero; an error when the series is zero only to its
    /// precision.
    pub fn valuation(&self) -> Result<Valuation, SeriesError> {
        match (self.leading(), self.precision) {
            (Some((e, _)), _) => Ok(Valuation::Finite(e)),
            (None, None) => Ok(Valuation::Infinite),
            (None, Some(p)) => Err(SeriesError::IndeterminateValuation(p)),
        }
    }

    /// A lower bound for the valuation that is exact whenever the valuation
    /// is determined.
    pub fn valuation_lower_bound(&self) -> Valuation {
        match (self.leading(), self.precision) {
            (Some((e, _)), _) => Valuation::Finite(e),
            (None, None) => Valuation::Infinite,
            (None, Some(p)) => Valuation::Finite(p),
        }
    }

    /// Reduction to the residue field: the coefficient of `t^0`.
    pub fn residue(&self) -> Result<BigRational, SeriesError> {
        match self.valuation_lower_bound() {
            Valuation::Finite(v) if v.is_negative() => {
                if self.leading().is_some() {
                    Err(SeriesError::NotIntegral(v))
                } else {
                    Err(SeriesError::IndeterminateValuation(v))
                }
            }
            Valuation::Finite(v) if v.is_zero() && self.leading().is_none() => {
                Err(SeriesError::IndeterminateValuation(v))
            }
            _ => Ok(self.coefficient(Exponent::ZERO)),
        }
    }

    /// Drops every term with exponent `>= cap` and lowers the precision to
    /// `cap` if it was higher.
    pub fn truncate(&self, cap: Exponent) -> Self {
        let precision = Some(match self.precision {
            Some(p) if p < cap => p,
            _ => cap,
        });
        let terms = self.terms.range(..cap).map(|(e, c)| (*e, c.clone())).collect();
        PuiseuxNumber { terms, precision }
    }

    /// The exact finite series formed by the terms strictly below `cap`.
    /// Fails when the series is not known up to `cap`.
    pub fn exact_prefix(&self, cap: Exponent) -> Result<Self, SeriesError> {
        if let Some(p) = self.precision {
            if p < cap {
                return Err(SeriesError::PrecisionExhausted(p));
            }
        }
        let terms = self.terms.range(..cap).map(|(e, c)| (*e, c.clone())).collect();
        Ok(PuiseuxNumber { terms, precision: None })
    }

    /// Forgets the precision bound: the known terms taken as an exact series.
    pub fn known_terms(&self) -> Self {
        PuiseuxNumber { terms: self.terms.clone(), precision: None }
    }

    pub fn with_precision(mut self, precision: Exponent) -> Self {
        self = self.truncate(precision);
        self
    }

    /// Multiplies by `t^e`.
    pub fn shift(&self, e: Exponent) -> Self {
        PuiseuxNumber {
            terms: self.terms.iter().map(|(k, c)| (*k + e, c.clone())).collect(),
            precision: self.precision.map(|p| p + e),
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return PuiseuxNumber::zero();
        }
        PuiseuxNumber {
            terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect(),
            precision: self.precision,
        }
    }

    /// Least common denominator of the stored exponents.
    pub fn exponent_denominator(&self) -> i64 {
        self.terms
            .keys()
            .chain(self.precision.iter())
            .fold(1i64, |acc, e| num_integer::lcm(acc, e.denom()))
    }

    /// Division `self / divisor`, expanded up to the absolute exponent `cap`
    /// (or less if operand precisions force it).
    pub fn div(&self, divisor: &PuiseuxNumber, cap: Exponent) -> Result<Self, SeriesError> {
        let (lead_e, lead_c) = match divisor.leading() {
            Some((e, c)) => (e, c.clone()),
            None => {
                return Err(match divisor.precision {
                    None => SeriesError::DivisionByZero,
                    Some(p) => SeriesError::IndeterminateZero(p),
                })
            }
        };
        // precision bound on the quotient from the operands
        let mut bound = cap;
        let numer_v = self.valuation_lower_bound();
        if let Some(p) = self.precision {
            bound = bound.min(p - lead_e);
        }
        if let (Some(p), Valuation::Finite(vn)) = (divisor.precision, numer_v) {
            bound = bound.min(vn + p - lead_e - lead_e);
        }

        // long division, leading term first
        let horizon = bound + lead_e;
        let divisor_terms = divisor.known_terms();
        let mut rem = self.known_terms().truncate(horizon).known_terms();
        let mut dropped = rem.terms.len() != self.terms.len();
        let mut quotient = BTreeMap::new();
        while let Some((e, c)) = rem.leading() {
            let qe = e - lead_e;
            let qc = c / &lead_c;
            let step = PuiseuxNumber::monomial(qc.clone(), qe);
            quotient.insert(qe, qc);
            let full = &rem - &(&step * &divisor_terms);
            rem = full.truncate(horizon).known_terms();
            dropped |= rem.terms.len() != full.terms.len();
        }
        let result = PuiseuxNumber { terms: quotient, precision: None };
        if !dropped && self.is_exact() && divisor.is_exact() {
            return Ok(result);
        }
        Ok(result.truncate(bound))
    }

    pub fn inverse(&self, cap: Exponent) -> Result<Self, SeriesError> {
        PuiseuxNumber::one().div(self, cap)
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = PuiseuxNumber::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }
}

impl From<BigRational> for PuiseuxNumber {
    fn from(c: BigRational) -> Self {
        PuiseuxNumber::constant(c)
    }
}

impl From<i64> for PuiseuxNumber {
    fn from(n: i64) -> Self {
        PuiseuxNumber::from_int(n)
    }
}

fn min_precision(a: Option<Exponent>, b: Option<Exponent>) -> Option<Exponent> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, None) => x,
        (None, y) => y,
    }
}

impl Add for &PuiseuxNumber {
    type Output = PuiseuxNumber;
    fn add(self, rhs: &PuiseuxNumber) -> PuiseuxNumber {
        let precision = min_precision(self.precision, rhs.precision);
        let mut terms = self.terms.clone();
        for (e, c) in &rhs.terms {
            let slot = terms.entry(*e).or_insert_with(BigRational::zero);
            *slot += c;
            if slot.is_zero() {
                terms.remove(e);
            }
        }
        if let Some(p) = precision {
            terms.retain(|e, _| *e < p);
        }
        PuiseuxNumber { terms, precision }
    }
}

impl Neg for &PuiseuxNumber {
    type Output = PuiseuxNumber;
    fn neg(self) -> PuiseuxNumber {
        PuiseuxNumber {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
            precision: self.precision,
        }
    }
}

impl Neg for PuiseuxNumber {
    type Output = PuiseuxNumber;
    fn neg(self) -> PuiseuxNumber {
        -&self
    }
}

impl Sub for &PuiseuxNumber {
    type Output = PuiseuxNumber;
    fn sub(self, rhs: &PuiseuxNumber) -> PuiseuxNumber {
        self + &(-rhs)
    }
}

impl Mul for &PuiseuxNumber {
    type Output = PuiseuxNumber;
    fn mul(self, rhs: &PuiseuxNumber) -> PuiseuxNumber {
        let va = self.valuation_lower_bound();
        let vb = rhs.valuation_lower_bound();
        if va.is_infinite() || vb.is_infinite() {
            return PuiseuxNumber::zero();
        }
        let bound_a = rhs.precision.map(|p| va + Valuation::Finite(p));
        let bound_b = self.precision.map(|p| vb + Valuation::Finite(p));
        let precision = min_precision(
            bound_a.and_then(Valuation::finite),
            bound_b.and_then(Valuation::finite),
        );
        let mut terms: BTreeMap<Exponent, BigRational> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e = *ea + *eb;
                if matches!(precision, Some(p) if e >= p) {
                    continue;
                }
                *terms.entry(e).or_insert_with(BigRational::zero) += ca * cb;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        PuiseuxNumber { terms, precision }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for PuiseuxNumber {
            type Output = PuiseuxNumber;
            fn $m(self, rhs: PuiseuxNumber) -> PuiseuxNumber {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&PuiseuxNumber> for PuiseuxNumber {
            type Output = PuiseuxNumber;
            fn $m(self, rhs: &PuiseuxNumber) -> PuiseuxNumber {
                (&self).$m(rhs)
            }
        }
        impl $tr<PuiseuxNumber> for &PuiseuxNumber {
            type Output = PuiseuxNumber;
            fn $m(self, rhs: PuiseuxNumber) -> PuiseuxNumber {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

fn fmt_exponent(e: &Exponent) -> String {
    if e.is_integer() && !e.is_negative() {
        format!("{e}")
    } else {
        format!("({e})")
    }
}

fn fmt_monomial(c: &BigRational, e: &Exponent) -> String {
    if e.is_zero() {
        return c.to_string();
    }
    let tpow = if *e == Exponent::ONE { "t".to_string() } else { format!("t^{}", fmt_exponent(e)) };
    if c.is_one() {
        tpow
    } else {
        format!("{c}*{tpow}")
    }
}

impl fmt::Display for PuiseuxNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, c) in &self.terms {
            let (neg, mag) = if c.is_negative() { (true, -c) } else { (false, c.clone()) };
            let body = fmt_monomial(&mag, e);
            if first {
                if neg {
                    write!(f, "-{body}")?;
                } else {
                    write!(f, "{body}")?;
                }
                first = false;
            } else if neg {
                write!(f, " - {body}")?;
            } else {
                write!(f, " + {body}")?;
            }
        }
        match self.precision {
            Some(p) if first => write!(f, "O(t^{})", fmt_exponent(&p)),
            Some(p) => write!(f, " + O(t^{})", fmt_exponent(&p)),
            None if first => f.write_str("0"),
            None => Ok(()),
        }
    }
}

impl Serialize for PuiseuxNumber {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for PuiseuxNumber {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        super::parse_series(&text).map_err(serde::de::Error::custom)
    }
}
