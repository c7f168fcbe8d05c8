//! The `ramlocus` command line: instance files in, JSON or DOT out.
//!
//! Every command returns an [`Outcome`] instead of printing, so the binary and
//! the tests drive the same code.

mod commands;
mod dot;
mod instance;
mod report;

use std::io;

use thiserror::Error;

use ramlocus_core::berkovich::OracleError;
use ramlocus_core::classifier::ClassifyError;
use ramlocus_core::ratfunc::{RatFuncError, ValidationReport};
use ramlocus_core::series::{Exponent, SeriesError};

pub use commands::{classify, locus, mult, trace, Center, LocusFormat, LocusMode};
pub use dot::render_dot;
pub use instance::{CoefficientLiterals, CriticalLiterals, InstanceFile, Loaded, PqLiterals};
pub use report::{
    CrossCheckJson, HullReport, LocusReport, RootReport, SampleReport, SegmentReport, TraceReport, VerdictJson,
};

pub mod exit {
    pub const SUCCESS: i32 = 0;
    pub const INPUT: i32 = 1;
    pub const VALIDATION: i32 = 2;
    pub const DISAGREEMENT: i32 = 3;
    pub const PRECISION: i32 = 4;
    pub const TRACE_CONTRADICTION: i32 = 5;
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: io::Error },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid instance: {0}")]
    Invalid(ValidationReport),
    #[error("rejected instance: {0}")]
    Rejected(String),
    #[error("working precision exhausted at O(t^{0})")]
    Precision(Exponent),
    /// The series model cannot carry out the computation (irrational residue
    /// roots, undetermined geometry, an oracle that does not settle).
    #[error("cannot resolve: {0}")]
    Unresolved(String),
    #[error("no prediction: {0}")]
    NoPrediction(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io { .. } | CliError::Parse(_) => exit::INPUT,
            CliError::Invalid(_) | CliError::Rejected(_) => exit::VALIDATION,
            CliError::NoPrediction(_) => exit::DISAGREEMENT,
            CliError::Precision(_) | CliError::Unresolved(_) => exit::PRECISION,
        }
    }

    fn from_series(e: SeriesError) -> Self {
        match e {
            SeriesError::PrecisionExhausted(x) | SeriesError::IndeterminateZero(x) | SeriesError::IndeterminateValuation(x) => {
                CliError::Precision(x)
            }
            SeriesError::Syntax { .. } => CliError::Parse(e.to_string()),
            other => CliError::Unresolved(other.to_string()),
        }
    }

    fn from_oracle(e: OracleError) -> Self {
        match e {
            OracleError::Series(s) => CliError::from_series(s),
            OracleError::CenterUnknown(x) => CliError::Precision(x),
            other => CliError::Unresolved(other.to_string()),
        }
    }

    pub(crate) fn from_ratfunc(e: RatFuncError) -> Self {
        match e {
            RatFuncError::Invalid(r) => CliError::Invalid(r),
            RatFuncError::Series(s) => CliError::from_series(s),
            other => CliError::Rejected(other.to_string()),
        }
    }
}

impl From<ClassifyError> for CliError {
    fn from(e: ClassifyError) -> Self {
        match e {
            ClassifyError::Invalid(r) => CliError::Invalid(r),
            ClassifyError::Series(s) => CliError::from_series(s),
            ClassifyError::Oracle(o) => CliError::from_oracle(o),
            ClassifyError::RatFunc(r) => CliError::from_ratfunc(r),
            ClassifyError::PairingUndefined(m) => CliError::NoPrediction(m),
            ClassifyError::Unclassifiable(m) => CliError::Unresolved(m),
        }
    }
}

impl From<OracleError> for CliError {
    fn from(e: OracleError) -> Self {
        CliError::from_oracle(e)
    }
}

/// What a command would print and return.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn document(code: i32, stdout: String, stderr: String) -> Self {
        Outcome { code, stdout, stderr }
    }

    fn failure(e: &CliError) -> Self {
        let mut stderr = format!("error: {e}\n");
        if let CliError::Invalid(r) = e {
            for v in &r.violations {
                stderr.push_str(&format!("  violation: {v}\n"));
            }
        }
        Outcome { code: e.exit_code(), stdout: String::new(), stderr }
    }
}

impl From<Result<Outcome, CliError>> for Outcome {
    fn from(r: Result<Outcome, CliError>) -> Self {
        r.unwrap_or_else(|e| Outcome::failure(&e))
    }
}
