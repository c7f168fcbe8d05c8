use std::fmt;

use num_rational::BigRational;

use crate::series::{Exponent, PuiseuxNumber, QPoly, SeriesError, SeriesPolynomial, Valuation};

use super::CubicCoefficients;

/// A rational map `F / G` with series coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalMap {
    pub numer: SeriesPolynomial,
    pub denom: SeriesPolynomial,
}

impl RationalMap {
    pub fn new(numer: SeriesPolynomial, denom: SeriesPolynomial) -> Self {
        RationalMap { numer, denom }
    }

    pub fn from_cubic(c: &CubicCoefficients) -> Self {
        RationalMap::new(c.numerator(), c.denominator())
    }

    /// Formal degree `max(deg F, deg G)`.
    pub fn degree(&self) -> usize {
        self.numer.degree().unwrap_or(0).max(self.denom.degree().unwrap_or(0))
    }

    /// `z -> self(center + scale z) - shift`.
    pub fn conjugate_affine(&self, center: &PuiseuxNumber, scale: &PuiseuxNumber, shift: Option<&PuiseuxNumber>) -> Self {
        let (f, g) = conjugate_affine(&self.numer, &self.denom, center, scale, shift);
        RationalMap::new(f, g)
    }

    /// `sigma^-1 . self . sigma` for `sigma(z) = center + scale z`.
    pub fn affine_conjugate(&self, center: &PuiseuxNumber, scale: &PuiseuxNumber) -> Self {
        let (f, g) = conjugate_affine(&self.numer, &self.denom, center, scale, Some(center));
        // (f/g) / scale = f / (scale g)
        RationalMap::new(f, g.scale(scale))
    }

    /// The same map in the coordinate `w = 1/z` on both source and target:
    /// `w -> 1 / self(1/w)`.
    pub fn invert_coordinate(&self) -> Self {
        let d = self.degree();
        RationalMap::new(self.denom.reversed(d), self.numer.reversed(d))
    }

    pub fn evaluate(&self, z: &ProjectivePoint, cap: Exponent) -> Result<ProjectivePoint, SeriesError> {
        match z {
            ProjectivePoint::Infinity => self.invert_coordinate().evaluate(&ProjectivePoint::Finite(PuiseuxNumber::zero()), cap).map(|w| w.invert(cap)).and_then(|r| r),
            ProjectivePoint::Finite(z) => {
                let f = self.numer.eval(z);
                let g = self.denom.eval(z);
                if g.is_exact_zero() {
                    if f.is_exact_zero() {
                        return Err(SeriesError::DivisionByZero);
                    }
                    return Ok(ProjectivePoint::Infinity);
                }
                if g.is_zero_to_precision() {
                    if f.leading().is_none() {
                        return Err(SeriesError::IndeterminateZero(g.precision().expect("finite")));
                    }
                    return Ok(ProjectivePoint::Infinity);
                }
                Ok(ProjectivePoint::Finite(f.div(&g, cap)?))
            }
        }
    }
}

/// A point of the projective line over the series field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ProjectivePoint {
    Finite(PuiseuxNumber),
    Infinity,
}

impl ProjectivePoint {
    /// `1 / self`.
    pub fn invert(&self, cap: Exponent) -> Result<ProjectivePoint, SeriesError> {
        match self {
            ProjectivePoint::Infinity => Ok(ProjectivePoint::Finite(PuiseuxNumber::zero())),
            ProjectivePoint::Finite(x) if x.is_exact_zero() => Ok(ProjectivePoint::Infinity),
            ProjectivePoint::Finite(x) => Ok(ProjectivePoint::Finite(x.inverse(cap)?)),
        }
    }
}

impl fmt::Display for ProjectivePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProjectivePoint::Finite(x) => write!(f, "{x}"),
            ProjectivePoint::Infinity => f.write_str("inf"),
        }
    }
}

/// Numerator and denominator of `z -> F/G (center + scale z) - shift`.
pub fn conjugate_affine(
    f: &SeriesPolynomial,
    g: &SeriesPolynomial,
    center: &PuiseuxNumber,
    scale: &PuiseuxNumber,
    shift: Option<&PuiseuxNumber>,
) -> (SeriesPolynomial, SeriesPolynomial) {
    let f2 = f.compose_affine(center, scale);
    let g2 = g.compose_affine(center, scale);
    let f3 = match shift {
        Some(s) => f2.sub(&g2.scale(s)),
        None => f2,
    };
    (f3, g2)
}

/// `Wr = f' g - f g'` and the quadratic `psi` with `Wr = z (z - 1) psi`.
pub fn wronskian_psi(c: &CubicCoefficients) -> (SeriesPolynomial, SeriesPolynomial) {
    let f = c.numerator();
    let g = c.denominator();
    let wr = f.derivative().mul(&g).sub(&f.mul(&g.derivative()));
    let a3b2 = &c.a3 * &c.b2;
    let two = PuiseuxNumber::from_int(2);
    let linear = &(&two * &(&c.a3 * &c.b1)) + &a3b2;
    let constant = -(&two * &(&c.a2 * &c.b0));
    (wr, SeriesPolynomial::new(vec![constant, linear, a3b2]))
}

/// Value of a reduced map of degree zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ReducedConstant {
    Finite(BigRational),
    Infinity,
}

/// The reduction of a rational map to the residue field, in lowest terms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedMap {
    pub numerator: QPoly,
    pub denominator: QPoly,
    pub degree: usize,
    pub constant_value: Option<ReducedConstant>,
}

impl fmt::Display for ReducedMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denominator == QPoly::constant(BigRational::from_integer(1.into())) {
            write!(f, "{}", self.numerator)
        } else {
            write!(f, "({}) / ({})", self.numerator, self.denominator)
        }
    }
}

/// Scales `F, G` jointly by `t^-min(v(F), v(G))`, reduces and cancels the gcd.
pub fn reduce_map(f: &SeriesPolynomial, g: &SeriesPolynomial) -> Result<ReducedMap, SeriesError> {
    let vf = f.valuation()?;
    let vg = g.valuation()?;
    let v = match vf.min(vg) {
        Valuation::Finite(v) => v,
        Valuation::Infinite => return Err(SeriesError::ZeroPolynomial),
    };
    Ok(reduce_pair(f.reduce_shifted(v)?, g.reduce_shifted(v)?))
}

/// Lowest-terms form of a residue-field rational map `num / den`, not both zero.
pub fn reduce_pair(num: QPoly, den: QPoly) -> ReducedMap {
    if den.is_zero() {
        return ReducedMap {
            numerator: QPoly::constant(BigRational::from_integer(1.into())),
            denominator: QPoly::zero(),
            degree: 0,
            constant_value: Some(ReducedConstant::Infinity),
        };
    }
    if num.is_zero() {
        return ReducedMap {
            numerator: QPoly::zero(),
            denominator: QPoly::constant(BigRational::from_integer(1.into())),
            degree: 0,
            constant_value: Some(ReducedConstant::Finite(BigRational::from_integer(0.into()))),
        };
    }
    let common = num.gcd(&den);
    let mut n = num.div_rem(&common).0;
    let mut d = den.div_rem(&common).0;
    let lead = d.leading().expect("nonzero").recip();
    n = n.scale(&lead);
    d = d.scale(&lead);
    let degree = n.degree().unwrap_or(0).max(d.degree().unwrap_or(0));
    let constant_value = (degree == 0).then(|| ReducedConstant::Finite(n.coeff(0) / d.coeff(0)));
    ReducedMap { numerator: n, denominator: d, degree, constant_value }
}
