use std::fmt;

use serde::{Deserialize, Serialize};

use crate::berkovich::{multiplicity_at, trace_locus, Disk, EdgeRole, HullTree, LeafLabel, LeafPoint, Pairing, SampleOutcome, SampleSite, Topology};
use crate::ratfunc::RationalMap;
use crate::series::{rat, Exponent, PuiseuxNumber, Valuation};

use super::{Analysis, CaseLabel, ClassifyError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ShapeKind {
    Connected,
    TwoComponents,
}

impl fmt::Display for ShapeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ShapeKind::Connected => "connected",
            ShapeKind::TwoComponents => "two components",
        })
    }
}

/// The path between two critical points; `apex` is its highest point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Segment {
    pub ends: [usize; 2],
    pub names: [String; 2],
    pub apex: Disk,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LocusShape {
    /// The whole quartet hull.
    Connected,
    TwoComponents([Segment; 2]),
}

impl LocusShape {
    pub fn kind(&self) -> ShapeKind {
        match self {
            LocusShape::Connected => ShapeKind::Connected,
            LocusShape::TwoComponents(_) => ShapeKind::TwoComponents,
        }
    }
}

/// Hull shapes matching the drawings of the locus in the literature,
/// numbered as there.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FigureTag {
    Fig3,
    Fig4,
    Fig5,
    Fig6,
    Fig7,
    Fig8,
    Fig10,
    Fig11,
    Fig12,
    Fig13,
}

impl fmt::Display for FigureTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocusDescription {
    pub shape: LocusShape,
    pub case: CaseLabel,
    pub figure: Option<FigureTag>,
    pub hull: HullTree,
    pub notes: Vec<String>,
}

impl LocusDescription {
    pub fn kind(&self) -> ShapeKind {
        self.shape.kind()
    }
}

/// Tangent direction at the Gauss point.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Direction {
    Zero,
    One,
    Infinity,
    Other,
}

fn leaf_direction(p: &LeafPoint) -> Direction {
    let positive = |v: Valuation| v > Valuation::Finite(Exponent::ZERO);
    let v0 = p.closeness_to(&PuiseuxNumber::zero());
    if positive(v0) {
        Direction::Zero
    } else if v0 < Valuation::Finite(Exponent::ZERO) {
        Direction::Infinity
    } else if positive(p.closeness_to(&PuiseuxNumber::one())) {
        Direction::One
    } else {
        Direction::Other
    }
}

/// `None` for the Gauss point itself.
fn disk_direction(d: &Disk) -> Option<Direction> {
    if *d == Disk::gauss() {
        return None;
    }
    let integral = d.center().valuation_lower_bound() >= Valuation::Finite(Exponent::ZERO);
    if !integral || !d.radius().is_positive() {
        return Some(Direction::Infinity);
    }
    let r = d.center().coefficient(Exponent::ZERO);
    Some(if r == rat(0, 1) {
        Direction::Zero
    } else if r == rat(1, 1) {
        Direction::One
    } else {
        Direction::Other
    })
}

/// Reads the figure shape off the hull; `None` when no drawing matches.
pub fn figure_tag(hull: &HullTree, shape: ShapeKind) -> Option<FigureTag> {
    use Direction::*;
    match &hull.topology {
        Topology::Star { center } => match disk_direction(center) {
            Some(One) if shape == ShapeKind::Connected => Some(FigureTag::Fig11),
            _ => None,
        },
        Topology::Split { pairing, junctions, .. } => {
            let partner = pairing.first[1];
            if partner == 1 {
                return match (disk_direction(&junctions[0]), disk_direction(&junctions[1])) {
                    (None, Some(Infinity)) => Some(FigureTag::Fig4),
                    (None, Some(Other)) => Some(FigureTag::Fig10),
                    _ => None,
                };
            }
            let other = pairing.second.into_iter().find(|&k| k != 1).expect("side holds 1");
            let near_zero = leaf_direction(&hull.leaves[partner].point);
            let near_one = leaf_direction(&hull.leaves[other].point);
            match (disk_direction(&junctions[0]), disk_direction(&junctions[1])) {
                (None, Some(One)) if near_zero == Infinity => Some(FigureTag::Fig8),
                (None, Some(One)) if near_zero == Other => Some(FigureTag::Fig3),
                (Some(Zero), Some(One)) => Some(FigureTag::Fig5),
                (Some(Zero), None) if near_one == Infinity => Some(FigureTag::Fig6),
                (Some(Zero), None) if near_one == Other => Some(FigureTag::Fig7),
                (Some(One), Some(One)) => Some(match shape {
                    ShapeKind::TwoComponents => FigureTag::Fig12,
                    ShapeKind::Connected => FigureTag::Fig13,
                }),
                _ => None,
            }
        }
    }
}

fn segments_for(hull: &HullTree, pairing: &Pairing) -> Result<[Segment; 2], ClassifyError> {
    let seg = |pair: [usize; 2]| -> Result<Segment, ClassifyError> {
        Ok(Segment {
            ends: pair,
            names: pair.map(|k| hull.leaves[k].name.clone()),
            apex: hull.apex(pair[0], pair[1])?,
        })
    };
    Ok([seg(pairing.first)?, seg(pairing.second)?])
}

fn pairing_names(hull: &HullTree, p: &Pairing) -> String {
    let n = |k: usize| hull.leaves[k].name.as_str();
    format!("{{{}, {}}} | {{{}, {}}}", n(p.first[0]), n(p.first[1]), n(p.second[0]), n(p.second[1]))
}

fn describe(a: &Analysis, shape: LocusShape, notes: Vec<String>) -> LocusDescription {
    let figure = figure_tag(&a.hull, shape.kind());
    LocusDescription { shape, case: a.label, figure, hull: a.hull.clone(), notes }
}

/// The verdict read off the per-case analysis of the reduction: good
/// reduction types and most deep subcases give the whole hull, every other
/// leaf splits along the hull's central edge.
pub fn decide_locus_symbolic(a: &Analysis) -> Result<LocusDescription, ClassifyError> {
    let connected = match a.label.deep_subcase {
        Some(k) => k != 2,
        None => a.label.leaf.has_good_reduction_type(),
    };
    if connected {
        return Ok(describe(a, LocusShape::Connected, Vec::new()));
    }
    let mut notes = Vec::new();
    let pairing = if a.label.deep_subcase == Some(2) {
        let fixed = Pairing {
            first: [a.hull.leaf_index(LeafLabel::Zero).expect("leaf 0"), a.hull.leaf_index(LeafLabel::C1).expect("c-")],
            second: [a.hull.leaf_index(LeafLabel::One).expect("leaf 1"), a.hull.leaf_index(LeafLabel::C2).expect("c+")],
        };
        match a.hull.pairing() {
            Some(h) if h == fixed => {}
            Some(h) => notes.push(format!(
                "the hull separates {} rather than {}",
                pairing_names(&a.hull, &h),
                pairing_names(&a.hull, &fixed)
            )),
            None => {
                return Err(ClassifyError::PairingUndefined(format!(
                    "subcase 2 predicts {} but all four points meet at {}",
                    pairing_names(&a.hull, &fixed),
                    star_center(&a.hull)
                )))
            }
        }
        fixed
    } else {
        a.hull.pairing().ok_or_else(|| {
            ClassifyError::PairingUndefined(format!("case {} but all four points meet at {}", a.label, star_center(&a.hull)))
        })?
    };
    let segments = segments_for(&a.hull, &pairing)?;
    Ok(describe(a, LocusShape::TwoComponents(segments), notes))
}

fn star_center(hull: &HullTree) -> String {
    match &hull.topology {
        Topology::Star { center } => center.to_string(),
        Topology::Split { .. } => "no single point".into(),
    }
}

/// The verdict of the local-degree oracle: a star hull is connected;
/// otherwise the multiplicity at the middle of the central edge decides.
///
/// Every other edge of the hull is sampled once as well, and a sample with
/// `m = 1` on a part that the verdict puts in the locus is reported in the
/// notes.
pub fn decide_locus_oracle(a: &Analysis) -> Result<LocusDescription, ClassifyError> {
    let map = RationalMap::from_cubic(&a.coefficients);
    let mut notes = Vec::new();
    let shape = match &a.hull.topology {
        Topology::Star { .. } => LocusShape::Connected,
        Topology::Split { pairing, .. } => {
            let mid = a.hull.central_point(Exponent::new(1, 2)).expect("split hull");
            let m = multiplicity_at(&map, &mid)?;
            notes.push(format!("m = {} at {mid}, the middle of the central edge", m.multiplicity));
            if m.multiplicity >= 2 {
                LocusShape::Connected
            } else {
                LocusShape::TwoComponents(segments_for(&a.hull, pairing)?)
            }
        }
    };
    let trace = trace_locus(&map, &a.hull, 1);
    for s in &trace.samples {
        let on_central = matches!(s.site, SampleSite::Edge { role: EdgeRole::Central, .. });
        if on_central && shape.kind() == ShapeKind::TwoComponents {
            continue;
        }
        match (&s.outcome, &s.point) {
            (SampleOutcome::Multiplicity(1), Some(p)) => notes.push(format!("m = 1 at {p}, inside the predicted locus")),
            (SampleOutcome::Failed(e), Some(p)) => notes.push(format!("oracle failed at {p}: {e}")),
            _ => {}
        }
    }
    Ok(describe(a, shape, notes))
}
