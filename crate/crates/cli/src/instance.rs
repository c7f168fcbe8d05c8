use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use ramlocus_core::classifier::{from_pq, DEFAULT_PRECISION};
use ramlocus_core::ratfunc::{from_critical_data, CriticalData, CubicCoefficients};
use ramlocus_core::series::{parse_series, Exponent, PuiseuxNumber, SeriesFraction};

use crate::CliError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoefficientLiterals {
    pub a3: String,
    pub a2: String,
    pub b2: String,
    pub b1: String,
    pub b0: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CriticalLiterals {
    /// Solved from `beta` and `gamma` when absent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<String>,
    pub beta: String,
    pub gamma: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PqLiterals {
    pub p: String,
    pub q: String,
}

/// One instance: exactly one of the three descriptions, plus an optional
/// working precision.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coefficients: Option<CoefficientLiterals>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub critical_data: Option<CriticalLiterals>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pq: Option<PqLiterals>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub precision: Option<i64>,
}

/// A parsed and validated instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Loaded {
    pub coefficients: CubicCoefficients,
    pub precision: Exponent,
}

fn literal(name: &str, text: &str) -> Result<PuiseuxNumber, CliError> {
    parse_series(text).map_err(|e| CliError::Parse(format!("{name} = {text:?}: {e}")))
}

impl InstanceFile {
    pub fn from_coefficients(c: &CubicCoefficients) -> Self {
        InstanceFile {
            coefficients: Some(CoefficientLiterals {
                a3: c.a3.to_string(),
                a2: c.a2.to_string(),
                b2: c.b2.to_string(),
                b1: c.b1.to_string(),
                b0: c.b0.to_string(),
            }),
            ..InstanceFile::default()
        }
    }

    pub fn read(path: &Path) -> Result<Self, CliError> {
        let text = fs::read_to_string(path).map_err(|source| CliError::Io { path: path.display().to_string(), source })?;
        serde_json::from_str(&text).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))
    }

    /// Parses the literals and builds the normal form; fails with
    /// [`CliError::Invalid`] when the result breaks an invariant.
    pub fn load(&self) -> Result<Loaded, CliError> {
        let given = [self.coefficients.is_some(), self.critical_data.is_some(), self.pq.is_some()];
        if given.iter().filter(|&&g| g).count() != 1 {
            return Err(CliError::Parse("give exactly one of coefficients, critical_data, pq".into()));
        }
        let precision = match self.precision {
            Some(p) if p <= 0 => return Err(CliError::Parse(format!("precision must be positive, got {p}"))),
            Some(p) => Exponent::integer(p),
            None => Exponent::integer(DEFAULT_PRECISION),
        };
        let coefficients = if let Some(c) = &self.coefficients {
            CubicCoefficients::new(
                literal("a3", &c.a3)?,
                literal("a2", &c.a2)?,
                literal("b2", &c.b2)?,
                literal("b1", &c.b1)?,
                literal("b0", &c.b0)?,
            )
        } else if let Some(d) = &self.critical_data {
            let (beta, gamma) = (literal("beta", &d.beta)?, literal("gamma", &d.gamma)?);
            let data = match &d.alpha {
                Some(text) => {
                    let alpha = SeriesFraction::new(literal("alpha", text)?, PuiseuxNumber::one())
                        .map_err(|e| CliError::Parse(format!("alpha: {e}")))?;
                    CriticalData::new(alpha, beta, gamma)
                }
                None => CriticalData::from_beta_gamma(beta, gamma).map_err(CliError::from_ratfunc)?,
            };
            from_critical_data(&data).map_err(CliError::from_ratfunc)?
        } else {
            let pq = self.pq.as_ref().expect("one description is present");
            from_pq(&literal("p", &pq.p)?, &literal("q", &pq.q)?).map_err(CliError::from_ratfunc)?
        };
        let report = coefficients.validate();
        if !report.is_valid() {
            return Err(CliError::Invalid(report));
        }
        Ok(Loaded { coefficients, precision })
    }
}
