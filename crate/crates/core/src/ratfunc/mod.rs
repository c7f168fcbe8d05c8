//! The normalized cubic, its constraints, Wronskian, and reductions.

mod coefficients;
mod critical;
mod error;
mod map;

pub use coefficients::{CubicCoefficients, ValidationReport, Violation};
pub use critical::{from_critical_data, solve_alpha, CriticalData};
pub use error::RatFuncError;
pub use map::{conjugate_affine, reduce_map, reduce_pair, wronskian_psi, ProjectivePoint, RationalMap, ReducedConstant, ReducedMap};

#[cfg(test)]
mod tests;
