use super::{decide_locus_oracle, decide_locus_symbolic, Analysis, BulletMatch, CaseLabel, ClassifyError, LocusDescription, ShapeKind};
use crate::ratfunc::CubicCoefficients;
use crate::series::Exponent;

/// Three verdicts on one instance and whether they agree. The oracle verdict
/// is the authoritative one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossCheckReport {
    pub label: Option<CaseLabel>,
    pub symbolic: Result<LocusDescription, ClassifyError>,
    pub oracle: Result<LocusDescription, ClassifyError>,
    pub bullets: Option<BulletMatch>,
    pub agreement: bool,
    pub notes: Vec<String>,
}

impl CrossCheckReport {
    pub fn authoritative(&self) -> Option<ShapeKind> {
        self.oracle.as_ref().ok().map(LocusDescription::kind)
    }
}

pub fn cross_check(c: &CubicCoefficients, precision: Exponent) -> CrossCheckReport {
    let analysis = match Analysis::with_precision(c, precision) {
        Ok(a) => a,
        Err(e) => {
            return CrossCheckReport {
                label: None,
                symbolic: Err(e.clone()),
                oracle: Err(e.clone()),
                bullets: None,
                agreement: false,
                notes: vec![format!("analysis failed: {e}")],
            }
        }
    };
    let (symbolic, oracle) = rayon::join(|| decide_locus_symbolic(&analysis), || decide_locus_oracle(&analysis));
    let bullets = analysis.bullets();
    let mut notes = Vec::new();

    let verdicts = [
        ("symbolic", symbolic.as_ref().ok().map(LocusDescription::kind)),
        ("oracle", oracle.as_ref().ok().map(LocusDescription::kind)),
        ("characterization", Some(bullets.verdict)),
    ];
    for (name, r) in [("symbolic", &symbolic), ("oracle", &oracle)] {
        if let Err(e) = r {
            notes.push(format!("{name} verdict failed: {e}"));
        }
    }
    let agreement = verdicts.iter().all(|(_, v)| v.is_some() && *v == verdicts[1].1);
    if !agreement {
        let said: Vec<String> = verdicts
            .iter()
            .map(|(name, v)| match v {
                Some(k) => format!("{name}: {k}"),
                None => format!("{name}: none"),
            })
            .collect();
        notes.push(format!("discrepancy ({}); the oracle verdict is authoritative", said.join(", ")));
    }
    match bullets.bullet {
        Some(b) => notes.push(format!("matched condition: {b}")),
        None => notes.push("no listed condition matches; two components by the complement".into()),
    }
    if let (Some(k @ (5 | 6)), Some(d)) = (analysis.label.deep_subcase, analysis.deep.as_ref()) {
        let [lo, hi] = d.one_minus_valuations;
        notes.push(format!(
            "subcase {k}: v(1 - c-) = {lo}, v(1 - c+) = {hi}; unequal distances to 1 go with v(4p + q) > v(p), that is subcase 5"
        ));
    }
    CrossCheckReport { label: Some(analysis.label), symbolic, oracle, bullets: Some(bullets), agreement, notes }
}
