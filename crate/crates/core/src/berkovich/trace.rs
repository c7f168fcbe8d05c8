use rayon::prelude::*;

use crate::ratfunc::RationalMap;
use crate::series::{Exponent, Valuation};

use super::{multiplicity_at, Disk, EdgeRole, HullTree, NodeKind};

/// Where on the hull a sample was taken.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum SampleSite {
    /// A junction node.
    Node(usize),
    /// Interior of the edge from node `child` up to its parent.
    Edge { child: usize, role: EdgeRole },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SampleOutcome {
    Multiplicity(usize),
    /// The point lies beyond the resolution of a conjugate root's known prefix.
    Unrepresentable,
    Failed(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeSample {
    pub site: SampleSite,
    pub radius: Exponent,
    pub point: Option<Disk>,
    pub outcome: SampleOutcome,
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct TraceResult {
    pub samples: Vec<EdgeSample>,
}

/// Samples the oracle across the hull: every junction, `per_edge` evenly
/// spaced interior points of each edge between junctions, and `per_edge`
/// points at unit exponent steps below the junction on each leaf edge.
///
/// Samples are independent and evaluated in parallel; the order of the output
/// is fixed by the hull alone.
pub fn trace_locus(map: &RationalMap, hull: &HullTree, per_edge: usize) -> TraceResult {
    let mut sites: Vec<(SampleSite, Exponent, Option<Disk>)> = Vec::new();
    for (k, node) in hull.nodes.iter().enumerate() {
        if let NodeKind::Junction(d) = &node.kind {
            sites.push((SampleSite::Node(k), d.radius(), Some(d.clone())));
        }
    }
    for child in hull.edges() {
        let parent = hull.nodes[child].parent.expect("edge has a parent");
        let NodeKind::Junction(top) = &hull.nodes[parent].kind else { unreachable!("parents are junctions") };
        let role = hull.edge_role(child);
        let n = per_edge as i64;
        let radii: Vec<Exponent> = match hull.nodes[child].radius() {
            Valuation::Finite(bottom) => {
                (1..=n).map(|k| top.radius() + (bottom - top.radius()) * Exponent::new(k, n + 1)).collect()
            }
            Valuation::Infinite => (1..=n).map(|k| top.radius() + Exponent::integer(k)).collect(),
        };
        for r in radii {
            let point = match &hull.nodes[child].kind {
                NodeKind::Leaf(i) => hull.leaves[*i].point.center_below(r).ok(),
                NodeKind::Junction(d) => Some(Disk::new(d.center(), r).expect("exact center")),
            };
            sites.push((SampleSite::Edge { child, role }, r, point));
        }
    }

    let samples = sites
        .into_par_iter()
        .map(|(site, radius, point)| {
            let outcome = match &point {
                None => SampleOutcome::Unrepresentable,
                Some(d) => match multiplicity_at(map, d) {
                    Ok(m) => SampleOutcome::Multiplicity(m.multiplicity),
                    Err(e) => SampleOutcome::Failed(e.to_string()),
                },
            };
            EdgeSample { site, radius, point, outcome }
        })
        .collect();
    TraceResult { samples }
}
