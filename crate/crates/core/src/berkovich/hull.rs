use std::fmt;

use crate::series::{Exponent, PuiseuxNumber, SeriesRoot, Valuation};

use super::{Disk, OracleError};

/// Which critical point a hull leaf stands for.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LeafLabel {
    Zero,
    One,
    C1,
    C2,
}

/// A finite classical point as far as the series model can describe it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LeafPoint {
    Series(PuiseuxNumber),
    /// One of a pair of conjugate roots `prefix + w t^split + ...` with `w`
    /// outside the rationals; leaves sharing `group` are the conjugates.
    Conjugate { prefix: PuiseuxNumber, split: Exponent, group: usize },
}

impl LeafPoint {
    pub fn from_root(root: &SeriesRoot, group: usize) -> Self {
        match root {
            SeriesRoot::Lifted(x) => LeafPoint::Series(x.clone()),
            SeriesRoot::Conjugates { prefix, split, .. } => {
                LeafPoint::Conjugate { prefix: prefix.clone(), split: *split, group }
            }
        }
    }

    /// `v(self - y)` for a series `y` of the model.
    pub fn closeness_to(&self, y: &PuiseuxNumber) -> Valuation {
        match self {
            LeafPoint::Series(x) => (x - y).valuation_lower_bound(),
            LeafPoint::Conjugate { prefix, split, .. } => (prefix - y).valuation_lower_bound().min(Valuation::Finite(*split)),
        }
    }

    /// A series known to agree with the point below exponent `radius`.
    pub fn center_below(&self, radius: Exponent) -> Result<Disk, OracleError> {
        match self {
            LeafPoint::Series(x) => Disk::new(x, radius),
            LeafPoint::Conjugate { prefix, split, .. } if radius <= *split => Disk::new(prefix, radius),
            LeafPoint::Conjugate { .. } => Err(OracleError::CenterUnknown(radius)),
        }
    }

    pub fn in_disk(&self, d: &Disk) -> bool {
        self.closeness_to(d.center()) >= Valuation::Finite(d.radius())
    }
}

impl fmt::Display for LeafPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LeafPoint::Series(x) => write!(f, "{x}"),
            LeafPoint::Conjugate { prefix, split, .. } => write!(f, "{prefix} + w*t^({split}) + ..."),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HullLeaf {
    pub label: LeafLabel,
    /// Display name such as `0`, `1`, `c1`, `c+`.
    pub name: String,
    pub point: LeafPoint,
}

impl HullLeaf {
    pub fn new(label: LeafLabel, name: impl Into<String>, point: LeafPoint) -> Self {
        HullLeaf { label, name: name.into(), point }
    }
}

/// `v(a - b)` for two leaves; errors when they cannot be told apart.
fn closeness(a: &HullLeaf, b: &HullLeaf) -> Result<Exponent, OracleError> {
    let indistinct = || OracleError::IndistinctLeaves(a.name.clone(), b.name.clone());
    match (&a.point, &b.point) {
        (LeafPoint::Series(x), LeafPoint::Series(y)) => {
            let diff = x - y;
            diff.valuation().ok().and_then(Valuation::finite).ok_or_else(indistinct)
        }
        (LeafPoint::Series(x), c @ LeafPoint::Conjugate { .. }) | (c @ LeafPoint::Conjugate { .. }, LeafPoint::Series(x)) => {
            c.closeness_to(x).finite().ok_or_else(indistinct)
        }
        (
            LeafPoint::Conjugate { prefix: p1, split: s1, group: g1 },
            LeafPoint::Conjugate { prefix: p2, split: s2, group: g2 },
        ) => {
            if g1 == g2 {
                Ok(*s1)
            } else {
                Ok((p1 - p2).valuation_lower_bound().min(Valuation::Finite(*s1)).min(Valuation::Finite(*s2)).finite().expect("finite split"))
            }
        }
    }
}

/// Two pairs of leaf indices separated by the hull's central edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Pairing {
    pub first: [usize; 2],
    pub second: [usize; 2],
}

impl Pairing {
    fn mask(pair: [usize; 2]) -> u8 {
        (1 << pair[0]) | (1 << pair[1])
    }

    pub fn side_mask(&self, side: usize) -> u8 {
        Pairing::mask(if side == 0 { self.first } else { self.second })
    }

    /// Whether `{a, b}` is one side of the pairing.
    pub fn separates(&self, a: usize, b: usize) -> bool {
        let m = (1 << a) | (1 << b);
        m == self.side_mask(0) || m == self.side_mask(1)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Topology {
    /// All four leaves branch off one point.
    Star { center: Disk },
    /// A central edge of positive length joins `junctions[0]` (where the
    /// `first` pair meets) to `junctions[1]`.
    Split { pairing: Pairing, junctions: [Disk; 2], length: Exponent },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NodeKind {
    Leaf(usize),
    Junction(Disk),
}

/// A vertex of the hull viewed as a tree hanging from infinity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HullNode {
    pub kind: NodeKind,
    pub parent: Option<usize>,
    /// Bitmask of the leaves at or below this node.
    pub below: u8,
}

impl HullNode {
    pub fn radius(&self) -> Valuation {
        match &self.kind {
            NodeKind::Leaf(_) => Valuation::Infinite,
            NodeKind::Junction(d) => Valuation::Finite(d.radius()),
        }
    }
}

/// Where an edge sits relative to the central edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EdgeRole {
    /// On the path between the two junctions of a split hull.
    Central,
    /// On the path joining the two leaves of pairing side 0 or 1.
    Pair(usize),
    /// An edge of a star hull.
    Spoke,
}

/// The subtree of the Berkovich line spanned by four finite classical points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HullTree {
    pub leaves: Vec<HullLeaf>,
    /// Leaves first, in input order, then junctions by increasing radius.
    pub nodes: Vec<HullNode>,
    pub topology: Topology,
}

impl HullTree {
    pub fn of_quartet(leaves: [HullLeaf; 4]) -> Result<Self, OracleError> {
        let mut d = [[Exponent::ZERO; 4]; 4];
        for i in 0..4 {
            for j in (i + 1)..4 {
                d[i][j] = closeness(&leaves[i], &leaves[j])?;
                d[j][i] = d[i][j];
            }
        }

        let median = |a: usize, b: usize, c: usize| -> Result<Disk, OracleError> {
            let (x, y) = [(a, b), (a, c), (b, c)].into_iter().max_by_key(|&(x, y)| d[x][y]).expect("three pairs");
            leaves[x].point.center_below(d[x][y])
        };

        let splits = [([0, 1], [2, 3]), ([0, 2], [1, 3]), ([0, 3], [1, 2])];
        let sums: Vec<Exponent> = splits.iter().map(|(p, q)| d[p[0]][p[1]] + d[q[0]][q[1]]).collect();
        let best = (0..3).max_by_key(|&k| sums[k]).expect("three splits");
        let others: Vec<Exponent> = (0..3).filter(|&k| k != best).map(|k| sums[k]).collect();
        debug_assert_eq!(others[0], others[1], "four-point condition");
        let topology = if sums[best] == others[0] {
            Topology::Star { center: median(0, 1, 2)? }
        } else {
            let (first, second) = splits[best];
            let pairing = Pairing { first, second };
            Topology::Split {
                pairing,
                junctions: [median(first[0], first[1], second[0])?, median(second[0], second[1], first[0])?],
                length: sums[best] - others[0],
            }
        };

        let mut junctions: Vec<Disk> = Vec::new();
        for i in 0..4 {
            for j in (i + 1)..4 {
                let disk = leaves[i].point.center_below(d[i][j])?;
                if !junctions.contains(&disk) {
                    junctions.push(disk);
                }
            }
        }
        junctions.sort_by_key(|j| (j.radius(), j.center().clone()));

        let mut nodes: Vec<HullNode> = (0..4)
            .map(|i| HullNode { kind: NodeKind::Leaf(i), parent: None, below: 1 << i })
            .collect();
        for j in &junctions {
            let below = (0..4).filter(|&i| leaves[i].point.in_disk(j)).fold(0u8, |m, i| m | (1 << i));
            nodes.push(HullNode { kind: NodeKind::Junction(j.clone()), parent: None, below });
        }
        for u in 0..nodes.len() {
            let parent = (4..nodes.len())
                .filter(|&k| k != u)
                .filter(|&k| {
                    let NodeKind::Junction(cand) = &nodes[k].kind else { unreachable!() };
                    match &nodes[u].kind {
                        NodeKind::Leaf(i) => leaves[*i].point.in_disk(cand),
                        NodeKind::Junction(own) => own.within(cand) && own != cand,
                    }
                })
                .max_by_key(|&k| nodes[k].radius());
            nodes[u].parent = parent;
        }

        Ok(HullTree { leaves: leaves.to_vec(), nodes, topology })
    }

    pub fn is_star(&self) -> bool {
        matches!(self.topology, Topology::Star { .. })
    }

    pub fn pairing(&self) -> Option<Pairing> {
        match &self.topology {
            Topology::Split { pairing, .. } => Some(*pairing),
            Topology::Star { .. } => None,
        }
    }

    pub fn leaf_index(&self, label: LeafLabel) -> Option<usize> {
        self.leaves.iter().position(|l| l.label == label)
    }

    /// The node with no parent.
    pub fn root(&self) -> usize {
        (0..self.nodes.len()).find(|&k| self.nodes[k].parent.is_none()).expect("hull has a root")
    }

    pub fn junctions(&self) -> impl Iterator<Item = &Disk> + '_ {
        self.nodes.iter().filter_map(|n| match &n.kind {
            NodeKind::Junction(d) => Some(d),
            NodeKind::Leaf(_) => None,
        })
    }

    /// The highest point of the path between leaves `i` and `j`.
    pub fn apex(&self, i: usize, j: usize) -> Result<Disk, OracleError> {
        let d = closeness(&self.leaves[i], &self.leaves[j])?;
        self.leaves[i].point.center_below(d)
    }

    /// Whether the disk point `x` lies on the path between leaves `i` and `j`.
    pub fn on_leaf_path(&self, x: &Disk, i: usize, j: usize) -> Result<bool, OracleError> {
        let top = self.apex(i, j)?;
        Ok(x.within(&top) && (self.leaves[i].point.in_disk(x) || self.leaves[j].point.in_disk(x)))
    }

    /// Role of the edge from node `child` up to its parent.
    pub fn edge_role(&self, child: usize) -> EdgeRole {
        let Some(pairing) = self.pairing() else { return EdgeRole::Spoke };
        let m = self.nodes[child].below;
        let (a, b) = (pairing.side_mask(0), pairing.side_mask(1));
        if m == a || m == b {
            EdgeRole::Central
        } else if (m & a).count_ones() == 1 {
            EdgeRole::Pair(0)
        } else {
            EdgeRole::Pair(1)
        }
    }

    /// Child nodes of every edge, leaves first.
    pub fn edges(&self) -> Vec<usize> {
        (0..self.nodes.len()).filter(|&k| self.nodes[k].parent.is_some()).collect()
    }

    /// Whether a node touches a non-central edge.
    pub fn node_on_pair_path(&self, node: usize) -> bool {
        let mut incident: Vec<usize> = (0..self.nodes.len()).filter(|&k| self.nodes[k].parent == Some(node)).collect();
        if self.nodes[node].parent.is_some() {
            incident.push(node);
        }
        incident.into_iter().any(|e| self.edge_role(e) != EdgeRole::Central)
    }

    /// The point at arc-length fraction `frac` along the central edge,
    /// starting from `junctions[0]`.
    pub fn central_point(&self, frac: Exponent) -> Option<Disk> {
        let Topology::Split { junctions, .. } = &self.topology else { return None };
        Some(path_point(&junctions[0], &junctions[1], frac))
    }
}

/// The point at arc-length fraction `frac` on the path from `a` to `b`.
pub fn path_point(a: &Disk, b: &Disk, frac: Exponent) -> Disk {
    let top = a.meet(b).radius();
    let up = a.radius() - top;
    let down = b.radius() - top;
    let at = (up + down) * frac;
    if at <= up {
        Disk::new(a.center(), a.radius() - at).expect("exact center")
    } else {
        Disk::new(b.center(), top + (at - up)).expect("exact center")
    }
}
