//! Newton polygons, residue polynomials and Newton-Puiseux root lifting.

use num_rational::BigRational;
use num_traits::Zero;

use super::{Exponent, PuiseuxNumber, QPoly, SeriesError, SeriesPolynomial, Valuation};

/// One edge of the lower convex hull of `(i, v(c_i))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NewtonSegment {
    pub start: usize,
    pub end: usize,
    /// Common valuation of the `end - start` roots this edge accounts for:
    /// the negated slope.
    pub root_valuation: Exponent,
}

impl NewtonSegment {
    pub fn length(&self) -> usize {
        self.end - self.start
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NewtonPolygon {
    /// Hull vertices `(degree, valuation)`, increasing in degree.
    pub vertices: Vec<(usize, Exponent)>,
    pub segments: Vec<NewtonSegment>,
    /// Number of roots equal to exact zero (leading run of exact-zero
    /// coefficients).
    pub zero_roots: usize,
}

impl NewtonPolygon {
    pub fn of(p: &SeriesPolynomial) -> Result<Self, SeriesError> {
        let deg = p.degree().ok_or(SeriesError::ZeroPolynomial)?;
        let coeffs = p.coeffs();
        if coeffs[deg].leading().is_none() {
            return Err(SeriesError::IndeterminateGeometry { index: deg });
        }
        let points: Vec<(usize, Exponent)> = coeffs
            .iter()
            .enumerate()
            .filter_map(|(i, c)| c.leading().map(|(e, _)| (i, e)))
            .collect();
        let zero_roots = points[0].0;
        for (i, c) in coeffs.iter().enumerate().take(zero_roots) {
            if !c.is_exact_zero() {
                return Err(SeriesError::IndeterminateGeometry { index: i });
            }
        }

        let mut hull: Vec<(usize, Exponent)> = Vec::new();
        for &pt in &points {
            while hull.len() >= 2 {
                let (i1, v1) = hull[hull.len() - 2];
                let (i2, v2) = hull[hull.len() - 1];
                // drop (i2, v2) if it lies on or above the chord (i1,v1)-(pt)
                let lhs = (v2 - v1).scale((pt.0 - i1) as i64);
                let rhs = (pt.1 - v1).scale((i2 - i1) as i64);
                if lhs >= rhs {
                    hull.pop();
                } else {
                    break;
                }
            }
            hull.push(pt);
        }

        let segments: Vec<NewtonSegment> = hull
            .windows(2)
            .map(|w| {
                let (i1, v1) = w[0];
                let (i2, v2) = w[1];
                NewtonSegment { start: i1, end: i2, root_valuation: (v1 - v2).div_int((i2 - i1) as i64) }
            })
            .collect();

        let polygon = NewtonPolygon { vertices: hull, segments, zero_roots };
        for (i, c) in coeffs.iter().enumerate().skip(zero_roots) {
            if let (true, Some(prec)) = (c.is_zero_to_precision(), c.precision()) {
                if prec <= polygon.height_at(i) {
                    return Err(SeriesError::IndeterminateGeometry { index: i });
                }
            }
        }
        Ok(polygon)
    }

    /// Height of the hull above degree `i` (`zero_roots <= i <= deg`).
    pub fn height_at(&self, i: usize) -> Exponent {
        for seg in &self.segments {
            if seg.start <= i && i <= seg.end {
                let v0 = self.vertex_height(seg.start);
                return v0 - seg.root_valuation.scale((i - seg.start) as i64);
            }
        }
        self.vertices[0].1
    }

    fn vertex_height(&self, i: usize) -> Exponent {
        self.vertices.iter().find(|(j, _)| *j == i).map(|(_, v)| *v).expect("vertex")
    }

    pub fn segment_for(&self, root_valuation: Exponent) -> Option<&NewtonSegment> {
        self.segments.iter().find(|s| s.root_valuation == root_valuation)
    }

    /// Nonzero-root valuations with multiplicity, ascending.
    pub fn root_valuations(&self) -> Vec<Exponent> {
        let mut out: Vec<Exponent> = self
            .segments
            .iter()
            .flat_map(|s| std::iter::repeat(s.root_valuation).take(s.length()))
            .collect();
        out.sort();
        out
    }
}

/// Valuations of the nonzero roots of `p`, with multiplicity, ascending.
pub fn root_valuations(p: &SeriesPolynomial) -> Result<Vec<Exponent>, SeriesError> {
    Ok(NewtonPolygon::of(p)?.root_valuations())
}

/// `R(w) = sum lead(c_i) w^(i - start)` over the points on the segment.
/// Its nonzero roots are the leading coefficients `w` of roots `w t^s + ...`.
pub fn residue_polynomial(p: &SeriesPolynomial, seg: &NewtonSegment, polygon: &NewtonPolygon) -> QPoly {
    let coeffs = (seg.start..=seg.end)
        .map(|i| {
            let c = p.coeff(i);
            match c.leading() {
                Some((e, lead)) if e == polygon.height_at(i) => lead.clone(),
                _ => BigRational::zero(),
            }
        })
        .collect();
    QPoly::new(coeffs)
}

/// Lifts the root of `p` with valuation `slope` and leading coefficient
/// `residue_root` to a series `r` with `v(p(r)) >= target`.
///
/// Without a `residue_root` the slope must carry a single root. The result
/// always retains its leading term, lifting past `target` if that needs it.
pub fn lift_root(
    p: &SeriesPolynomial,
    slope: Exponent,
    residue_root: Option<&BigRational>,
    target: Exponent,
) -> Result<PuiseuxNumber, SeriesError> {
    let polygon = NewtonPolygon::of(p)?;
    let seg = polygon.segment_for(slope).ok_or(SeriesError::NoSuchSlope(slope))?;
    let residue = residue_polynomial(p, seg, &polygon);
    let (roots, _) = residue.rational_roots();
    let rho = match residue_root {
        Some(w) => match roots.iter().find(|(r, _)| r == w) {
            Some((_, 1)) => w.clone(),
            Some(_) => return Err(SeriesError::SlopeNotSimple(slope)),
            None => return Err(SeriesError::NotAResidueRoot { root: w.to_string(), slope }),
        },
        None if seg.length() == 1 => roots[0].0.clone(),
        None if roots.is_empty() => return Err(SeriesError::ResidueRootIrrational(slope)),
        None => return Err(SeriesError::SlopeNotSimple(slope)),
    };
    newton_iterate(p, PuiseuxNumber::monomial(rho, slope), target)
}

fn newton_iterate(
    p: &SeriesPolynomial,
    start: PuiseuxNumber,
    target: Exponent,
) -> Result<PuiseuxNumber, SeriesError> {
    let dp = p.derivative();
    let d = match dp.eval(&start).valuation()? {
        Valuation::Finite(d) => d,
        Valuation::Infinite => return Err(SeriesError::SlopeNotSimple(start.leading().map_or(Exponent::ZERO, |l| l.0))),
    };
    // keep at least the leading term: when p' is small at the root, a bare
    // `target` would leave r known only below its own valuation
    let lead = start.leading().map_or(Exponent::ZERO, |l| l.0);
    let cap = (target - d).max(lead + Exponent::ONE);
    let target = cap + d;
    let mut r = start;
    for _ in 0..64 {
        let value = p.eval(&r);
        if value.is_exact_zero() {
            return Ok(r);
        }
        let reached = value.valuation_lower_bound();
        if reached >= Valuation::Finite(target) {
            return Ok(r.truncate(cap));
        }
        if value.is_zero_to_precision() {
            return Err(SeriesError::PrecisionExhausted(value.precision().expect("finite")));
        }
        let step = value.div(&dp.eval(&r), cap)?;
        if step.leading().is_none() {
            return Err(SeriesError::PrecisionExhausted(cap));
        }
        r = (&r - &step).truncate(cap).known_terms();
    }
    Err(SeriesError::PrecisionExhausted(cap))
}

/// A root produced by [`puiseux_roots`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SeriesRoot {
    Lifted(PuiseuxNumber),
    /// `count` roots `prefix + w t^split + ...` whose leading residues `w` are
    /// the roots of an irreducible-over-the-rationals factor of degree `count`.
    /// Their pairwise distances are exactly `split` and
    /// `v(root - y) = min(v(prefix - y), split)` for every series `y` in the model.
    Conjugates { prefix: PuiseuxNumber, split: Exponent, count: usize, minimal: QPoly },
}

impl SeriesRoot {
    pub fn multiplicity(&self) -> usize {
        match self {
            SeriesRoot::Lifted(_) => 1,
            SeriesRoot::Conjugates { count, .. } => *count,
        }
    }

    pub fn valuation(&self) -> Result<Valuation, SeriesError> {
        match self {
            SeriesRoot::Lifted(r) => r.valuation(),
            SeriesRoot::Conjugates { prefix, split, .. } => Ok(match prefix.leading() {
                Some((e, _)) if e < *split => Valuation::Finite(e),
                _ => Valuation::Finite(*split),
            }),
        }
    }
}

/// All roots of `p` (with multiplicity) via Newton-Puiseux recursion, lifted
/// to `v(p(r)) >= target` where the residue data is rational.
pub fn puiseux_roots(p: &SeriesPolynomial, target: Exponent) -> Result<Vec<SeriesRoot>, SeriesError> {
    let mut out = Vec::new();
    roots_below(p, &PuiseuxNumber::zero(), None, target, &mut out)?;
    Ok(out)
}

fn roots_below(
    q: &SeriesPolynomial,
    prefix: &PuiseuxNumber,
    floor: Option<Exponent>,
    target: Exponent,
    out: &mut Vec<SeriesRoot>,
) -> Result<(), SeriesError> {
    let polygon = NewtonPolygon::of(q)?;
    for _ in 0..polygon.zero_roots {
        out.push(SeriesRoot::Lifted(prefix.clone()));
    }
    for seg in &polygon.segments {
        let s = seg.root_valuation;
        if floor.is_some_and(|f| s <= f) {
            continue;
        }
        if s >= target {
            return Err(SeriesError::PrecisionExhausted(s));
        }
        let residue = residue_polynomial(q, seg, &polygon);
        let (roots, rest) = residue.rational_roots();
        for (rho, mult) in roots {
            if rho.is_zero() {
                continue;
            }
            if mult == 1 {
                let u = newton_iterate(q, PuiseuxNumber::monomial(rho, s), target)?;
                out.push(SeriesRoot::Lifted(prefix + &u));
            } else {
                let step = PuiseuxNumber::monomial(rho, s);
                let shifted = q.compose_affine(&step, &PuiseuxNumber::one());
                roots_below(&shifted, &(prefix + &step), Some(s), target, out)?;
            }
        }
        if rest.degree().unwrap_or(0) > 0 {
            out.push(SeriesRoot::Conjugates {
                prefix: prefix.clone(),
                split: s,
                count: rest.degree().expect("nonconstant"),
                minimal: rest.monic(),
            });
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::{parse_series, rat};

    fn poly(cs: &[&str]) -> SeriesPolynomial {
        SeriesPolynomial::new(cs.iter().map(|s| parse_series(s).unwrap()).collect())
    }

    #[test]
    fn split_valuations() {
        let p = poly(&["t^3", "-t - t^2", "1"]);
        assert_eq!(root_valuations(&p).unwrap(), vec![Exponent::integer(1), Exponent::integer(2)]);
    }

    #[test]
    fn ramified_valuations() {
        let p = poly(&["-t", "0", "1"]);
        assert_eq!(root_valuations(&p).unwrap(), vec![Exponent::new(1, 2); 2]);
    }

    #[test]
    fn flat_polygon() {
        assert_eq!(root_valuations(&SeriesPolynomial::from_ints(&[4, 7, 1])).unwrap(), vec![Exponent::ZERO; 2]);
    }

    #[test]
    fn lift_exact_root() {
        let p = poly(&["t^3", "-t - t^2", "1"]);
        let r = lift_root(&p, Exponent::ONE, None, Exponent::integer(10)).unwrap();
        assert_eq!(r, PuiseuxNumber::t());
    }

    #[test]
    fn lift_square_root() {
        let p = poly(&["-1 - t", "0", "1"]);
        let r = lift_root(&p, Exponent::ZERO, Some(&rat(1, 1)), Exponent::integer(3)).unwrap();
        assert_eq!(r, parse_series("1 + 1/2*t - 1/8*t^2 + O(t^3)").unwrap());
        let sq = &r * &r;
        assert!(sq.valuation_lower_bound() >= Valuation::Finite(Exponent::ZERO));
        assert_eq!(sq.truncate(Exponent::integer(3)), parse_series("1 + t + O(t^3)").unwrap());
    }

    #[test]
    fn shared_slope_needs_a_residue() {
        let p = poly(&["-t", "0", "1"]);
        assert_eq!(
            lift_root(&p, Exponent::new(1, 2), None, Exponent::integer(4)),
            Err(SeriesError::SlopeNotSimple(Exponent::new(1, 2)))
        );
        let r = lift_root(&p, Exponent::new(1, 2), Some(&rat(-1, 1)), Exponent::integer(4)).unwrap();
        assert_eq!(r, -PuiseuxNumber::t_pow(Exponent::new(1, 2)));
    }

    #[test]
    fn irrational_residue() {
        let p = SeriesPolynomial::from_ints(&[4, 7, 1]);
        assert_eq!(
            lift_root(&p, Exponent::ZERO, None, Exponent::integer(4)),
            Err(SeriesError::ResidueRootIrrational(Exponent::ZERO))
        );
        let roots = puiseux_roots(&p, Exponent::integer(4)).unwrap();
        assert!(matches!(&roots[..], [SeriesRoot::Conjugates { count: 2, .. }]));
    }

    #[test]
    fn recursion_through_a_double_residue() {
        // (z - 1 - t)(z - 1 + t): residue root 1 is double at slope 0
        let p = poly(&["1 - t^2", "-2", "1"]);
        let mut roots: Vec<_> = puiseux_roots(&p, Exponent::integer(6))
            .unwrap()
            .into_iter()
            .map(|r| match r {
                SeriesRoot::Lifted(x) => x.known_terms(),
                other => panic!("unexpected {other:?}"),
            })
            .collect();
        roots.sort();
        let mut want = vec![parse_series("1 + t").unwrap(), parse_series("1 - t").unwrap()];
        want.sort();
        assert_eq!(roots, want);
    }

    #[test]
    fn exact_double_root() {
        let p = SeriesPolynomial::from_ints(&[1, -2, 1]);
        let roots = puiseux_roots(&p, Exponent::integer(6)).unwrap();
        assert_eq!(roots, vec![SeriesRoot::Lifted(PuiseuxNumber::one()); 2]);
    }

    #[test]
    fn unknown_coefficient_below_hull() {
        let p = SeriesPolynomial::new(vec![
            PuiseuxNumber::t_pow(Exponent::integer(4)),
            PuiseuxNumber::zero_to(Exponent::ONE),
            PuiseuxNumber::one(),
        ]);
        assert_eq!(NewtonPolygon::of(&p), Err(SeriesError::IndeterminateGeometry { index: 1 }));
    }
}
