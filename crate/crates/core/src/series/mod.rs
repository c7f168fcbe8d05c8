//! The field of truncated Puiseux series over the rationals.

mod error;
mod exponent;
mod fraction;
mod newton;
mod number;
mod parse;
mod poly;
mod qpoly;

pub use error::SeriesError;
pub use exponent::{Exponent, Valuation};
pub use fraction::SeriesFraction;
pub use newton::{lift_root, puiseux_roots, residue_polynomial, root_valuations, NewtonPolygon, NewtonSegment, SeriesRoot};
pub use number::{rat, PuiseuxNumber, DEFAULT_WORKING_PRECISION};
pub use parse::{parse_rational, parse_series};
pub use poly::SeriesPolynomial;
pub use qpoly::QPoly;

#[cfg(test)]
mod props;
