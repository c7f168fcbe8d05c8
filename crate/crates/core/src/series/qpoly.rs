use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A polynomial over the rationals, coefficients indexed by degree, with no
/// trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct QPoly {
    coeffs: Vec<BigRational>,
}

impl QPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        QPoly::new(coeffs.iter().map(|&c| BigRational::from_integer(BigInt::from(c))).collect())
    }

    pub fn zero() -> Self {
        QPoly::default()
    }

    pub fn constant(c: BigRational) -> Self {
        QPoly::new(vec![c])
    }

    /// `z - root`.
    pub fn linear(root: &BigRational) -> Self {
        QPoly::new(vec![-root.clone(), BigRational::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn eval(&self, z: &BigRational) -> BigRational {
        self.coeffs.iter().rev().fold(BigRational::zero(), |acc, c| acc * z + c)
    }

    pub fn derivative(&self) -> QPoly {
        QPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    pub fn scale(&self, c: &BigRational) -> QPoly {
        QPoly::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn monic(&self) -> QPoly {
        match self.leading() {
            Some(l) => self.scale(&l.recip()),
            None => QPoly::zero(),
        }
    }

    pub fn add(&self, other: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        QPoly::new((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        QPoly::new((0..n).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    pub fn mul(&self, other: &QPoly) -> QPoly {
        if self.is_zero() || other.is_zero() {
            return QPoly::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        QPoly::new(out)
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &QPoly) -> (QPoly, QPoly) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead_inv = divisor.coeffs[dd].recip();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigRational::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd {
            let k = rem.len() - 1;
            let c = &rem[k] * &lead_inv;
            if !c.is_zero() {
                for (j, d) in divisor.coeffs.iter().enumerate() {
                    rem[k - dd + j] -= &c * d;
                }
                quot[k - dd] = c;
            }
            rem.pop();
            while rem.last().is_some_and(Zero::is_zero) && rem.len() > dd {
                rem.pop();
            }
        }
        (QPoly::new(quot), QPoly::new(rem))
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &QPoly) -> QPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Rational roots with multiplicity, in increasing order, plus the
    /// cofactor left after dividing them out.
    pub fn rational_roots(&self) -> (Vec<(BigRational, usize)>, QPoly) {
        let mut rest = self.clone();
        let mut roots = Vec::new();
        if rest.is_zero() {
            return (roots, rest);
        }
        let mut zero_mult = 0;
        while rest.coeffs.first().is_some_and(Zero::is_zero) {
            rest = QPoly::new(rest.coeffs[1..].to_vec());
            zero_mult += 1;
        }
        if zero_mult > 0 {
            roots.push((BigRational::zero(), zero_mult));
        }
        for cand in candidate_roots(&rest) {
            let mut mult = 0;
            let lin = QPoly::linear(&cand);
            loop {
                if rest.degree().unwrap_or(0) == 0 || !rest.eval(&cand).is_zero() {
                    break;
                }
                rest = rest.div_rem(&lin).0;
                mult += 1;
            }
            if mult > 0 {
                roots.push((cand, mult));
            }
        }
        roots.sort_by(|a, b| a.0.cmp(&b.0));
        (roots, rest)
    }

    /// Composition `self(a + b*z)`.
    pub fn compose_affine(&self, a: &BigRational, b: &BigRational) -> QPoly {
        let lin = QPoly::new(vec![a.clone(), b.clone()]);
        self.coeffs
            .iter()
            .rev()
            .fold(QPoly::zero(), |acc, c| acc.mul(&lin).add(&QPoly::constant(c.clone())))
    }
}

/// Integer content-free version: multiply by the lcm of denominators.
fn integer_coeffs(p: &QPoly) -> Vec<BigInt> {
    let l = p.coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    p.coeffs.iter().map(|c| (c * BigRational::from_integer(l.clone())).to_integer()).collect()
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            let q = &n / &d;
            if q != d {
                large.push(q);
            }
            small.push(d.clone());
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Candidates from the rational root theorem, both signs.
fn candidate_roots(p: &QPoly) -> Vec<BigRational> {
    if p.degree().unwrap_or(0) == 0 {
        return Vec::new();
    }
    let ints = integer_coeffs(p);
    let c0 = &ints[0];
    let cn = ints.last().expect("nonzero");
    let mut out = Vec::new();
    for num in divisors(c0) {
        for den in divisors(cn) {
            let r = BigRational::new(num.clone(), den.clone());
            out.push(r.clone());
            out.push(-r);
        }
    }
    out.sort();
    out.dedup();
    out
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            let sign = match (first, neg) {
                (true, true) => "-",
                (true, false) => "",
                (false, true) => " - ",
                (false, false) => " + ",
            };
            let coeff = if mag.is_one() && i > 0 { String::new() } else if i > 0 { format!("{mag}*") } else { mag.to_string() };
            let var = match i {
                0 => String::new(),
                1 => "z".to_string(),
                _ => format!("z^{i}"),
            };
            write!(f, "{sign}{coeff}{var}")?;
            first = false;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::rat;

    #[test]
    fn roots_with_multiplicity() {
        // (z - 1)^2 (2z + 3) z
        let p = QPoly::linear(&rat(1, 1))
            .mul(&QPoly::linear(&rat(1, 1)))
            .mul(&QPoly::from_ints(&[3, 2]))
            .mul(&QPoly::from_ints(&[0, 1]));
        let (roots, rest) = p.rational_roots();
        assert_eq!(roots, vec![(rat(-3, 2), 1), (rat(0, 1), 1), (rat(1, 1), 2)]);
        assert_eq!(rest.degree(), Some(0));
    }

    #[test]
    fn irrational_cofactor() {
        let p = QPoly::from_ints(&[4, 7, 1]);
        let (roots, rest) = p.rational_roots();
        assert!(roots.is_empty());
        assert_eq!(rest, p);
    }

    #[test]
    fn gcd_and_division() {
        let a = QPoly::from_ints(&[-1, 0, 1]);
        let b = QPoly::from_ints(&[1, 2, 1]);
        assert_eq!(a.gcd(&b), QPoly::from_ints(&[1, 1]));
        let (q, r) = b.div_rem(&QPoly::from_ints(&[1, 1]));
        assert_eq!(q, QPoly::from_ints(&[1, 1]));
        assert!(r.is_zero());
    }

    #[test]
    fn display() {
        assert_eq!(QPoly::from_ints(&[0, 1, -1]).to_string(), "-z^2 + z");
    }
}
