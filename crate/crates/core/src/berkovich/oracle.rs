use crate::ratfunc::{reduce_pair, RationalMap, ReducedConstant, ReducedMap};
use crate::series::{Exponent, PuiseuxNumber, Valuation};

use super::{Disk, OracleError};

pub const DEFAULT_ITERATION_CAP: usize = 10_000;

/// Local degree of a map at a disk point, with the normalized reduction that
/// witnessed it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multiplicity {
    pub multiplicity: usize,
    /// Reduction of `phi(center + t^radius z)` after moving the image to the
    /// Gauss point.
    pub reduced: ReducedMap,
    /// The image point.
    pub image: Disk,
    /// Constant reductions peeled off before the reduction became nonconstant.
    pub steps: usize,
}

/// `m_phi(x)` for a disk point `x`.
///
/// The source is moved to the Gauss point by `z -> c + t^r z`. Numerator and
/// denominator are then scaled separately to unit Gauss norm, which amounts to
/// rescaling the target; whenever the reduction is a constant `c`, that
/// constant is subtracted off the target coordinate and the process repeats.
pub fn multiplicity_at(map: &RationalMap, x: &Disk) -> Result<Multiplicity, OracleError> {
    multiplicity_with_cap(map, x, DEFAULT_ITERATION_CAP)
}

pub fn multiplicity_with_cap(map: &RationalMap, x: &Disk, cap: usize) -> Result<Multiplicity, OracleError> {
    let scale = PuiseuxNumber::t_pow(x.radius());
    let moved = map.conjugate_affine(x.center(), &scale, None);
    let (mut f, g) = (moved.numer, moved.denom);
    let vg = match g.valuation()? {
        Valuation::Finite(v) => v,
        Valuation::Infinite => return Err(OracleError::ConstantMap),
    };
    let g_bar = g.reduce_shifted(vg)?;
    let mut image_center = PuiseuxNumber::zero();
    for steps in 0..cap {
        let vf = match f.valuation()? {
            Valuation::Finite(v) => v,
            Valuation::Infinite => return Err(OracleError::ConstantMap),
        };
        let reduced = reduce_pair(f.reduce_shifted(vf)?, g_bar.clone());
        let image_radius = vf - vg;
        match reduced.constant_value.clone() {
            None => {
                let image = Disk::new(&image_center, image_radius)?;
                return Ok(Multiplicity { multiplicity: reduced.degree, reduced, image, steps });
            }
            Some(ReducedConstant::Finite(c)) => {
                let lift = PuiseuxNumber::monomial(c, image_radius);
                f = f.sub(&g.scale(&lift));
                image_center = &image_center + &lift;
            }
            Some(ReducedConstant::Infinity) => unreachable!("denominator reduction is nonzero"),
        }
    }
    Err(OracleError::IterationCap(cap))
}

/// `m_phi` at the disk `Disk(0, r)` of the coordinate `1/z`: the point
/// `zeta_{0, |t|^-r}` seen from infinity.
pub fn multiplicity_at_infinity(map: &RationalMap, radius: Exponent) -> Result<Multiplicity, OracleError> {
    let flipped = map.invert_coordinate();
    multiplicity_at(&flipped, &Disk::new(&PuiseuxNumber::zero(), radius)?)
}

