use serde::{Deserialize, Serialize};

use ramlocus_core::berkovich::{BerkPoint, Disk, EdgeRole, HullTree, NodeKind, SampleOutcome, SampleSite, Topology, TraceResult};
use ramlocus_core::classifier::{
    Analysis, CaseLabel, CheckedSample, ClassifyError, CrossCheckReport, FigureTag, LocusDescription, LocusShape,
    ShapeKind, TraceVerdict,
};
use ramlocus_core::series::Exponent;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SegmentReport {
    pub ends: [String; 2],
    /// Highest point of the segment.
    pub apex: BerkPoint,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootReport {
    pub name: String,
    pub value: String,
    pub valuation: Exponent,
    pub one_minus_valuation: Exponent,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HullReport {
    /// `star` or `split`.
    pub topology: String,
    pub junctions: Vec<BerkPoint>,
    /// The two pairs separated by the central edge of a split hull.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pairing: Option<[[String; 2]; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub central_length: Option<Exponent>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SampleReport {
    pub site: String,
    pub radius_exp: Exponent,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub point: Option<BerkPoint>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub multiplicity: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub in_predicted_locus: Option<bool>,
    /// `consistent`, `contradiction`, `unresolved`, or the oracle failure.
    pub status: String,
}

/// One verdict, or why there is none.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub shape: Option<ShapeKind>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub segments: Vec<SegmentReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub figure: Option<FigureTag>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossCheckJson {
    #[serde(default)]
    pub case: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub deep_subcase: Option<u8>,
    pub symbolic: VerdictJson,
    pub oracle: VerdictJson,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub theorem1_bullet: Option<String>,
    pub agreement: bool,
    pub notes: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocusReport {
    #[serde(flatten)]
    pub label: CaseLabel,
    /// The source of `shape`: `symbolic` or `oracle`.
    pub source: String,
    pub shape: ShapeKind,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub segments: Vec<SegmentReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub figure: Option<FigureTag>,
    pub critical_points: Vec<RootReport>,
    pub hull: HullReport,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub samples: Vec<SampleReport>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cross_check: Option<CrossCheckJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceReport {
    #[serde(flatten)]
    pub label: CaseLabel,
    pub prediction: ShapeKind,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub segments: Vec<SegmentReport>,
    pub samples: Vec<SampleReport>,
    pub contradictions: Vec<String>,
    pub consistent: bool,
}

fn point(d: &Disk) -> BerkPoint {
    BerkPoint::Disk(d.clone())
}

pub(crate) fn segments_of(hull: &HullTree, shape: &LocusShape) -> Vec<SegmentReport> {
    match shape {
        LocusShape::Connected => Vec::new(),
        LocusShape::TwoComponents(segs) => segs
            .iter()
            .map(|s| SegmentReport { ends: [hull.leaves[s.ends[0]].name.clone(), hull.leaves[s.ends[1]].name.clone()], apex: point(&s.apex) })
            .collect(),
    }
}

impl VerdictJson {
    pub(crate) fn of(r: &Result<LocusDescription, ClassifyError>) -> Self {
        match r {
            Ok(d) => VerdictJson {
                shape: Some(d.kind()),
                segments: segments_of(&d.hull, &d.shape),
                figure: d.figure,
                notes: d.notes.clone(),
                error: None,
            },
            Err(e) => VerdictJson { shape: None, segments: Vec::new(), figure: None, notes: Vec::new(), error: Some(e.to_string()) },
        }
    }
}

impl CrossCheckJson {
    pub(crate) fn of(r: &CrossCheckReport) -> Self {
        CrossCheckJson {
            case: r.label.map(|l| l.leaf.path().to_string()),
            deep_subcase: r.label.and_then(|l| l.deep_subcase),
            symbolic: VerdictJson::of(&r.symbolic),
            oracle: VerdictJson::of(&r.oracle),
            theorem1_bullet: r.bullets.and_then(|b| b.bullet).map(|b| b.condition().to_string()),
            agreement: r.agreement,
            notes: r.notes.clone(),
        }
    }
}

impl HullReport {
    pub(crate) fn of(hull: &HullTree) -> Self {
        let junctions = hull
            .nodes
            .iter()
            .filter_map(|n| match &n.kind {
                NodeKind::Junction(d) => Some(point(d)),
                NodeKind::Leaf(_) => None,
            })
            .collect();
        let name = |k: usize| hull.leaves[k].name.clone();
        match &hull.topology {
            Topology::Star { .. } => HullReport { topology: "star".into(), junctions, pairing: None, central_length: None },
            Topology::Split { pairing, length, .. } => HullReport {
                topology: "split".into(),
                junctions,
                pairing: Some([pairing.first.map(name), pairing.second.map(name)]),
                central_length: Some(*length),
            },
        }
    }
}

pub(crate) fn roots_of(a: &Analysis) -> Vec<RootReport> {
    let names = a.roots.names();
    (0..2)
        .map(|k| RootReport {
            name: names[k].to_string(),
            value: a.roots.roots[k].to_string(),
            valuation: a.roots.valuations[k],
            one_minus_valuation: a.roots.one_minus[k],
        })
        .collect()
}

pub(crate) fn site_name(hull: &HullTree, site: &SampleSite) -> String {
    let node = |k: usize| match &hull.nodes[k].kind {
        NodeKind::Leaf(i) => hull.leaves[*i].name.clone(),
        NodeKind::Junction(d) => d.to_string(),
    };
    match site {
        SampleSite::Node(k) => format!("junction {}", node(*k)),
        SampleSite::Edge { child, role } => {
            let role = match role {
                EdgeRole::Central => "central".to_string(),
                EdgeRole::Pair(k) => format!("pair {k}"),
                EdgeRole::Spoke => "spoke".to_string(),
            };
            format!("{role} edge above {}", node(*child))
        }
    }
}

pub(crate) fn samples_of(hull: &HullTree, trace: &TraceResult) -> Vec<SampleReport> {
    trace
        .samples
        .iter()
        .map(|s| {
            let (multiplicity, status) = match &s.outcome {
                SampleOutcome::Multiplicity(m) => (Some(*m), "measured".to_string()),
                SampleOutcome::Unrepresentable => (None, "unrepresentable".to_string()),
                SampleOutcome::Failed(e) => (None, format!("failed: {e}")),
            };
            SampleReport {
                site: site_name(hull, &s.site),
                radius_exp: s.radius,
                point: s.point.as_ref().map(point),
                multiplicity,
                in_predicted_locus: None,
                status,
            }
        })
        .collect()
}

pub(crate) fn checked_samples_of(hull: &HullTree, checked: &[CheckedSample]) -> Vec<SampleReport> {
    checked
        .iter()
        .map(|c| {
            let s = &c.sample;
            let multiplicity = match &s.outcome {
                SampleOutcome::Multiplicity(m) => Some(*m),
                _ => None,
            };
            let status = match (c.verdict, &s.outcome) {
                (TraceVerdict::Consistent, _) => "consistent".to_string(),
                (TraceVerdict::Contradiction, _) => "contradiction".to_string(),
                (TraceVerdict::Unresolved, SampleOutcome::Failed(e)) => format!("failed: {e}"),
                (TraceVerdict::Unresolved, _) => "unresolved".to_string(),
            };
            SampleReport {
                site: site_name(hull, &s.site),
                radius_exp: s.radius,
                point: s.point.as_ref().map(point),
                multiplicity,
                in_predicted_locus: c.predicted_in_locus,
                status,
            }
        })
        .collect()
}
