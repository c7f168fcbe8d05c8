//! Case taxonomy of the normal form and the three independent verdicts on
//! the shape of the ramification locus.

mod check;
mod deep;
mod error;
mod label;
mod profile;
mod report;
mod roots;
mod theorem;
mod verdict;

#[cfg(test)]
mod tests;

pub use check::{check_trace, CheckedSample, TraceCheck, TraceVerdict};
pub use deep::{from_pq, DeepCaseParams};
pub use error::ClassifyError;
pub use label::{CaseLabel, CaseLeaf};
pub use profile::{classify_leaf, deep_subcase, ResidueProfile};
pub use report::{cross_check, CrossCheckReport};
pub use roots::{solve_psi, CriticalPair, CriticalRoot};
pub use theorem::{match_bullets, Bullet, BulletMatch};
pub use verdict::{
    decide_locus_oracle, decide_locus_symbolic, figure_tag, FigureTag, LocusDescription, LocusShape, Segment,
    ShapeKind,
};

use crate::berkovich::HullTree;
use crate::ratfunc::CubicCoefficients;
use crate::series::Exponent;

/// Absolute precision for root lifting and series division.
pub const DEFAULT_PRECISION: i64 = 24;

/// Everything the verdicts are computed from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Analysis {
    pub coefficients: CubicCoefficients,
    pub profile: ResidueProfile,
    pub label: CaseLabel,
    pub deep: Option<DeepCaseParams>,
    pub roots: CriticalPair,
    pub hull: HullTree,
    pub precision: Exponent,
}

impl Analysis {
    pub fn new(c: &CubicCoefficients) -> Result<Self, ClassifyError> {
        Analysis::with_precision(c, Exponent::integer(DEFAULT_PRECISION))
    }

    pub fn with_precision(c: &CubicCoefficients, precision: Exponent) -> Result<Self, ClassifyError> {
        let profile = ResidueProfile::of(c)?;
        let (label, deep) = profile::label_of(c, &profile, precision)?;
        let roots = solve_psi(c, precision, deep.is_some())?;
        let hull = roots.hull()?;
        Ok(Analysis { coefficients: c.clone(), profile, label, deep, roots, hull, precision })
    }

    pub fn bullets(&self) -> BulletMatch {
        match_bullets(&self.profile, self.deep.as_ref())
    }
}

/// The taxonomy leaf of validated coefficients.
pub fn classify_case(c: &CubicCoefficients) -> Result<CaseLabel, ClassifyError> {
    let profile = ResidueProfile::of(c)?;
    Ok(profile::label_of(c, &profile, Exponent::integer(DEFAULT_PRECISION))?.0)
}
