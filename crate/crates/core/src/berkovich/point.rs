use std::fmt;

use serde::{Deserialize, Serialize};

use crate::ratfunc::ProjectivePoint;
use crate::series::{parse_series, Exponent, PuiseuxNumber, SeriesError, Valuation};

use super::OracleError;

/// The type-II point `zeta_{center, |t|^radius}`: the closed disk of that
/// center and radius.
///
/// The center is stored exact and reduced modulo `t^radius`, so equal disks
/// are equal values.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Disk {
    center: PuiseuxNumber,
    radius: Exponent,
}

impl Disk {
    /// Fails when `center` is not known below `radius`.
    pub fn new(center: &PuiseuxNumber, radius: Exponent) -> Result<Self, OracleError> {
        let center = center.exact_prefix(radius).map_err(|_| OracleError::CenterUnknown(radius))?;
        Ok(Disk { center, radius })
    }

    /// The Gauss point `zeta_{0,1}`.
    pub fn gauss() -> Self {
        Disk { center: PuiseuxNumber::zero(), radius: Exponent::ZERO }
    }

    pub fn center(&self) -> &PuiseuxNumber {
        &self.center
    }

    pub fn radius(&self) -> Exponent {
        self.radius
    }

    /// Whether the classical point `x` lies in the disk.
    pub fn contains_point(&self, x: &PuiseuxNumber) -> Result<bool, SeriesError> {
        let diff = x - &self.center;
        match diff.valuation() {
            Ok(v) => Ok(v >= Valuation::Finite(self.radius)),
            Err(_) if diff.precision().is_some_and(|p| p >= self.radius) => Ok(true),
            Err(e) => Err(e),
        }
    }

    /// Disk inclusion `self ⊆ other`.
    pub fn within(&self, other: &Disk) -> bool {
        self.radius >= other.radius
            && (&self.center - &other.center).valuation_lower_bound() >= Valuation::Finite(other.radius)
    }

    /// The smallest disk containing both.
    pub fn meet(&self, other: &Disk) -> Disk {
        let gap = match (&self.center - &other.center).valuation_lower_bound() {
            Valuation::Finite(v) => v,
            Valuation::Infinite => self.radius,
        };
        let r = self.radius.min(other.radius).min(gap);
        Disk::new(&self.center, r).expect("exact center")
    }
}

impl fmt::Display for Disk {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "zeta({}, {})", self.center, self.radius)
    }
}

/// A point of the Berkovich projective line that the model can name.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "BerkPointRepr", into = "BerkPointRepr")]
pub enum BerkPoint {
    Classical(ProjectivePoint),
    Disk(Disk),
}

impl fmt::Display for BerkPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BerkPoint::Classical(p) => write!(f, "{p}"),
            BerkPoint::Disk(d) => write!(f, "{d}"),
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
enum BerkPointRepr {
    Classical { value: String },
    Disk { center: PuiseuxNumber, radius_exp: Exponent },
}

impl From<BerkPoint> for BerkPointRepr {
    fn from(p: BerkPoint) -> Self {
        match p {
            BerkPoint::Classical(v) => BerkPointRepr::Classical { value: v.to_string() },
            BerkPoint::Disk(d) => BerkPointRepr::Disk { center: d.center, radius_exp: d.radius },
        }
    }
}

impl TryFrom<BerkPointRepr> for BerkPoint {
    type Error = String;
    fn try_from(r: BerkPointRepr) -> Result<Self, String> {
        match r {
            BerkPointRepr::Classical { value } if value.trim() == "inf" => Ok(BerkPoint::Classical(ProjectivePoint::Infinity)),
            BerkPointRepr::Classical { value } => {
                parse_series(&value).map(|x| BerkPoint::Classical(ProjectivePoint::Finite(x))).map_err(|e| e.to_string())
            }
            BerkPointRepr::Disk { center, radius_exp } => {
                Disk::new(&center, radius_exp).map(BerkPoint::Disk).map_err(|e| e.to_string())
            }
        }
    }
}

/// The point where the paths from `a` and `b` toward infinity merge.
///
/// For finite `a != b` this is the disk around `a` reaching `b`. When one
/// argument is infinite the result is where the path from the other toward
/// infinity crosses the Gauss point's: `Disk(a, min(v(a), 0))`.
pub fn join(a: &ProjectivePoint, b: &ProjectivePoint) -> Result<Disk, OracleError> {
    match (a, b) {
        (ProjectivePoint::Finite(x), ProjectivePoint::Finite(y)) => match (x - y).valuation()? {
            Valuation::Finite(v) => Disk::new(x, v),
            Valuation::Infinite => Err(OracleError::IndistinctLeaves(x.to_string(), y.to_string())),
        },
        (ProjectivePoint::Finite(x), ProjectivePoint::Infinity) | (ProjectivePoint::Infinity, ProjectivePoint::Finite(x)) => {
            let r = match x.valuation()? {
                Valuation::Finite(v) => v.min(Exponent::ZERO),
                Valuation::Infinite => Exponent::ZERO,
            };
            Disk::new(x, r)
        }
        (ProjectivePoint::Infinity, ProjectivePoint::Infinity) => Err(OracleError::IndistinctLeaves("inf".into(), "inf".into())),
    }
}
