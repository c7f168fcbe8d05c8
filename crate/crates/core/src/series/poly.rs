use std::fmt;

use num_rational::BigRational;
use num_traits::Zero;

use super::{Exponent, PuiseuxNumber, QPoly, SeriesError, Valuation};

/// A polynomial in `z` with Puiseux-series coefficients, indexed by degree.
///
/// Trailing exact-zero coefficients are trimmed, so the leading coefficient
/// is never an exact zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct SeriesPolynomial {
    coeffs: Vec<PuiseuxNumber>,
}

impl SeriesPolynomial {
    pub fn new(mut coeffs: Vec<PuiseuxNumber>) -> Self {
        while coeffs.last().is_some_and(PuiseuxNumber::is_exact_zero) {
            coeffs.pop();
        }
        SeriesPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        SeriesPolynomial::default()
    }

    pub fn constant(c: PuiseuxNumber) -> Self {
        SeriesPolynomial::new(vec![c])
    }

    /// `z`.
    pub fn identity() -> Self {
        SeriesPolynomial::new(vec![PuiseuxNumber::zero(), PuiseuxNumber::one()])
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        SeriesPolynomial::new(coeffs.iter().map(|&c| PuiseuxNumber::from_int(c)).collect())
    }

    pub fn from_qpoly(p: &QPoly) -> Self {
        SeriesPolynomial::new(p.coeffs().iter().cloned().map(PuiseuxNumber::constant).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[PuiseuxNumber] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> PuiseuxNumber {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn eval(&self, z: &PuiseuxNumber) -> PuiseuxNumber {
        self.coeffs.iter().rev().fold(PuiseuxNumber::zero(), |acc, c| &(&acc * z) + c)
    }

    pub fn derivative(&self) -> Self {
        SeriesPolynomial::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.scale(&BigRational::from_integer((i as i64).into())))
                .collect(),
        )
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        SeriesPolynomial::new((0..n).map(|i| &self.coeff(i) + &other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        SeriesPolynomial::new((0..n).map(|i| &self.coeff(i) - &other.coeff(i)).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return SeriesPolynomial::zero();
        }
        let mut out = vec![PuiseuxNumber::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        SeriesPolynomial::new(out)
    }

    pub fn scale(&self, c: &PuiseuxNumber) -> Self {
        SeriesPolynomial::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn scale_rational(&self, c: &BigRational) -> Self {
        SeriesPolynomial::new(self.coeffs.iter().map(|x| x.scale(c)).collect())
    }

    /// Multiplies every coefficient by `t^e`.
    pub fn shift(&self, e: Exponent) -> Self {
        SeriesPolynomial::new(self.coeffs.iter().map(|x| x.shift(e)).collect())
    }

    /// `self(center + scale * z)`.
    pub fn compose_affine(&self, center: &PuiseuxNumber, scale: &PuiseuxNumber) -> Self {
        let lin = SeriesPolynomial::new(vec![center.clone(), scale.clone()]);
        self.compose(&lin)
    }

    /// `self(inner(z))`.
    pub fn compose(&self, inner: &Self) -> Self {
        self.coeffs.iter().rev().fold(SeriesPolynomial::zero(), |acc, c| {
            acc.mul(inner).add(&SeriesPolynomial::constant(c.clone()))
        })
    }

    /// Reverses the coefficient list padded to `degree`: `z^degree * self(1/z)`.
    pub fn reversed(&self, degree: usize) -> Self {
        let mut coeffs: Vec<_> = (0..=degree).map(|i| self.coeff(i)).collect();
        coeffs.reverse();
        SeriesPolynomial::new(coeffs)
    }

    /// Caps every coefficient at absolute precision `cap`.
    pub fn truncate(&self, cap: Exponent) -> Self {
        SeriesPolynomial::new(self.coeffs.iter().map(|c| c.truncate(cap)).collect())
    }

    pub fn is_exact(&self) -> bool {
        self.coeffs.iter().all(PuiseuxNumber::is_exact)
    }

    /// Minimum coefficient valuation (the Gauss norm exponent).
    ///
    /// Fails when a zero-to-precision coefficient could lie below every
    /// determined one.
    pub fn valuation(&self) -> Result<Valuation, SeriesError> {
        let determined = self
            .coeffs
            .iter()
            .filter_map(|c| c.leading().map(|(e, _)| e))
            .min();
        let blocking = self
            .coeffs
            .iter()
            .filter(|c| c.is_zero_to_precision())
            .filter_map(PuiseuxNumber::precision)
            .min();
        match (determined, blocking) {
            (Some(v), Some(p)) if p <= v => Err(SeriesError::IndeterminateValuation(p)),
            (Some(v), _) => Ok(Valuation::Finite(v)),
            (None, Some(p)) => Err(SeriesError::IndeterminateValuation(p)),
            (None, None) => Ok(Valuation::Infinite),
        }
    }

    /// Residues of `t^{-shift} * self`, coefficient by coefficient.
    pub fn reduce_shifted(&self, shift: Exponent) -> Result<QPoly, SeriesError> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| {
                let scaled = c.shift(-shift);
                match scaled.valuation_lower_bound() {
                    Valuation::Finite(v) if v > Exponent::ZERO => Ok(BigRational::zero()),
                    Valuation::Infinite => Ok(BigRational::zero()),
                    _ => scaled.residue(),
                }
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(QPoly::new(coeffs))
    }

    /// Residue polynomial of an integral polynomial.
    pub fn reduce(&self) -> Result<QPoly, SeriesError> {
        self.reduce_shifted(Exponent::ZERO)
    }
}

impl fmt::Display for SeriesPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_exact_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            match i {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*z")?,
                _ => write!(f, "({c})*z^{i}")?,
            }
            first = false;
        }
        Ok(())
    }
}
