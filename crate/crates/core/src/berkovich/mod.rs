//! Points of the Berkovich line, quartet hulls, and the local-degree oracle.

mod error;
mod hull;
mod oracle;
mod point;
mod trace;

pub use error::OracleError;
pub use hull::{path_point, EdgeRole, HullLeaf, HullNode, HullTree, LeafLabel, LeafPoint, NodeKind, Pairing, Topology};
pub use oracle::{multiplicity_at, multiplicity_at_infinity, multiplicity_with_cap, Multiplicity, DEFAULT_ITERATION_CAP};
pub use point::{join, BerkPoint, Disk};
pub use trace::{trace_locus, EdgeSample, SampleOutcome, SampleSite, TraceResult};

#[cfg(test)]
mod crosscheck;
