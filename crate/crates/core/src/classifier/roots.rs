use std::cmp::Ordering;
use std::fmt;

use num_rational::BigRational;

use crate::berkovich::{HullLeaf, HullTree, LeafLabel, LeafPoint};
use crate::ratfunc::{wronskian_psi, CubicCoefficients};
use crate::series::{puiseux_roots, root_valuations, Exponent, PuiseuxNumber, QPoly, SeriesRoot, Valuation};

use super::ClassifyError;

/// One of the two free critical points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CriticalRoot {
    Lifted(PuiseuxNumber),
    /// `prefix + w t^split + ...` with `w` a root of the irreducible
    /// quadratic `minimal`; only its distances to series are known.
    Conjugate { prefix: PuiseuxNumber, split: Exponent, minimal: QPoly },
}

impl CriticalRoot {
    pub fn leaf_point(&self) -> LeafPoint {
        match self {
            CriticalRoot::Lifted(x) => LeafPoint::Series(x.clone()),
            CriticalRoot::Conjugate { prefix, split, .. } => {
                LeafPoint::Conjugate { prefix: prefix.clone(), split: *split, group: 0 }
            }
        }
    }

    pub fn is_lifted(&self) -> bool {
        matches!(self, CriticalRoot::Lifted(_))
    }

    fn sort_key(&self) -> Option<BigRational> {
        match self {
            CriticalRoot::Lifted(x) => x.leading().map(|(_, c)| c.clone()),
            CriticalRoot::Conjugate { .. } => None,
        }
    }
}

impl fmt::Display for CriticalRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CriticalRoot::Lifted(x) => write!(f, "{x}"),
            CriticalRoot::Conjugate { prefix, split, minimal } => {
                write!(f, "{prefix} + w*t^({split}) + ..., {minimal} = 0 at w")
            }
        }
    }
}

/// The roots `c1, c2` of `psi`, with their valuations and distances to `1`.
///
/// Ordered by `(v(c), leading coefficient)`, except that in the deep leaf
/// index 0 is `c-` and index 1 is `c+`, the root closer to `1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriticalPair {
    pub roots: [CriticalRoot; 2],
    pub valuations: [Exponent; 2],
    /// `v(1 - c_i)`.
    pub one_minus: [Exponent; 2],
    pub deep_names: bool,
}

impl CriticalPair {
    pub fn names(&self) -> [&'static str; 2] {
        if self.deep_names {
            ["c-", "c+"]
        } else {
            ["c1", "c2"]
        }
    }

    /// The quartet hull of `{0, 1, c1, c2}`.
    pub fn hull(&self) -> Result<HullTree, ClassifyError> {
        let [n1, n2] = self.names();
        Ok(HullTree::of_quartet([
            HullLeaf::new(LeafLabel::Zero, "0", LeafPoint::Series(PuiseuxNumber::zero())),
            HullLeaf::new(LeafLabel::One, "1", LeafPoint::Series(PuiseuxNumber::one())),
            HullLeaf::new(LeafLabel::C1, n1, self.roots[0].leaf_point()),
            HullLeaf::new(LeafLabel::C2, n2, self.roots[1].leaf_point()),
        ])?)
    }
}

/// Solves `psi = 0` by Newton-Puiseux to `precision`.
pub fn solve_psi(c: &CubicCoefficients, precision: Exponent, deep: bool) -> Result<CriticalPair, ClassifyError> {
    let (_, psi) = wronskian_psi(c);
    let found = puiseux_roots(&psi, precision)?;
    let mut roots: Vec<CriticalRoot> = Vec::new();
    for r in found {
        match r {
            SeriesRoot::Lifted(x) => roots.push(CriticalRoot::Lifted(x)),
            SeriesRoot::Conjugates { prefix, split, count, minimal } => {
                for _ in 0..count {
                    roots.push(CriticalRoot::Conjugate { prefix: prefix.clone(), split, minimal: minimal.clone() });
                }
            }
        }
    }
    let [r1, r2]: [CriticalRoot; 2] = roots
        .try_into()
        .map_err(|v: Vec<_>| ClassifyError::Unclassifiable(format!("psi has {} roots", v.len())))?;

    let mut slopes = root_valuations(&psi)?;
    slopes.sort();
    let zero = PuiseuxNumber::zero();
    let one = PuiseuxNumber::one();
    let finite = |v: Valuation| v.finite().ok_or_else(|| ClassifyError::Unclassifiable("critical points collide".into()));
    let describe = |r: &CriticalRoot| -> Result<(Exponent, Exponent), ClassifyError> {
        let pt = r.leaf_point();
        Ok((finite(pt.closeness_to(&zero))?, finite(pt.closeness_to(&one))?))
    };
    let (v1, w1) = describe(&r1)?;
    let (v2, w2) = describe(&r2)?;
    let mut entries = [(r1, v1, w1), (r2, v2, w2)];
    if deep {
        entries.sort_by(|a, b| a.2.cmp(&b.2));
    } else {
        entries.sort_by(|a, b| match a.1.cmp(&b.1) {
            Ordering::Equal => a.0.sort_key().cmp(&b.0.sort_key()),
            o => o,
        });
    }
    let [(r1, v1, w1), (r2, v2, w2)] = entries;
    let mut vs = [v1, v2];
    vs.sort();
    if vs.as_slice() != slopes.as_slice() {
        let slopes: Vec<String> = slopes.iter().map(Exponent::to_string).collect();
        return Err(ClassifyError::Unclassifiable(format!(
            "lifted roots have valuations {v1}, {v2} but the Newton polygon of psi has slopes {}",
            slopes.join(", ")
        )));
    }
    Ok(CriticalPair { roots: [r1, r2], valuations: [v1, v2], one_minus: [w1, w2], deep_names: deep })
}
