use std::path::Path;

use serde::Serialize;

use ramlocus_core::berkovich::{multiplicity_at, multiplicity_at_infinity, trace_locus, BerkPoint, Disk, Multiplicity};
use ramlocus_core::classifier::{
    check_trace, classify_case, cross_check, decide_locus_oracle, decide_locus_symbolic, Analysis, LocusDescription,
    LocusShape, Segment,
};
use ramlocus_core::ratfunc::RationalMap;
use ramlocus_core::series::{parse_series, Exponent, PuiseuxNumber};

use crate::report::{checked_samples_of, roots_of, samples_of, segments_of, HullReport};
use crate::{exit, render_dot, CliError, CrossCheckJson, InstanceFile, Loaded, LocusReport, Outcome, TraceReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LocusFormat {
    Json,
    Dot,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LocusMode {
    Symbolic,
    Oracle,
    /// Cross-check all verdicts; the document shows the oracle's.
    Both,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Center {
    Finite(String),
    Infinity,
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types serialize");
    s.push('\n');
    s
}

fn load(path: &Path) -> Result<Loaded, CliError> {
    InstanceFile::read(path)?.load()
}

fn analyze(loaded: &Loaded) -> Result<Analysis, CliError> {
    Ok(Analysis::with_precision(&loaded.coefficients, loaded.precision)?)
}

/// Prints the case label of the instance.
pub fn classify(path: &Path) -> Outcome {
    let run = || -> Result<Outcome, CliError> {
        let label = classify_case(&load(path)?.coefficients)?;
        Ok(Outcome::document(exit::SUCCESS, json(&label), String::new()))
    };
    run().into()
}

fn report_of(a: &Analysis, d: &LocusDescription, source: &str, with_samples: bool) -> LocusReport {
    let samples = if with_samples {
        let map = RationalMap::from_cubic(&a.coefficients);
        samples_of(&a.hull, &trace_locus(&map, &a.hull, 1))
    } else {
        Vec::new()
    };
    LocusReport {
        label: a.label,
        source: source.into(),
        shape: d.kind(),
        segments: segments_of(&a.hull, &d.shape),
        figure: d.figure,
        critical_points: roots_of(a),
        hull: HullReport::of(&a.hull),
        samples,
        notes: d.notes.clone(),
        cross_check: None,
    }
}

/// The locus as JSON or DOT. With [`LocusMode::Both`] the cross-check report
/// is embedded and a disagreement exits with code 3, after printing.
pub fn locus(path: &Path, format: LocusFormat, mode: LocusMode) -> Outcome {
    let run = || -> Result<Outcome, CliError> {
        let loaded = load(path)?;
        let a = analyze(&loaded)?;
        let (description, report, code, stderr) = match mode {
            LocusMode::Symbolic => {
                let d = decide_locus_symbolic(&a)?;
                let r = report_of(&a, &d, "symbolic", false);
                (d, r, exit::SUCCESS, String::new())
            }
            LocusMode::Oracle => {
                let d = decide_locus_oracle(&a)?;
                let r = report_of(&a, &d, "oracle", true);
                (d, r, exit::SUCCESS, String::new())
            }
            LocusMode::Both => {
                let cc = cross_check(&loaded.coefficients, loaded.precision);
                let d = cc.oracle.clone()?;
                let mut r = report_of(&a, &d, "oracle", true);
                r.cross_check = Some(CrossCheckJson::of(&cc));
                let (code, stderr) = if cc.agreement {
                    (exit::SUCCESS, String::new())
                } else {
                    (exit::DISAGREEMENT, cc.notes.iter().map(|n| format!("note: {n}\n")).collect())
                };
                (d, r, code, stderr)
            }
        };
        let stdout = match format {
            LocusFormat::Json => json(&report),
            LocusFormat::Dot => render_dot(&description.hull, &description.shape),
        };
        Ok(Outcome::document(code, stdout, stderr))
    };
    run().into()
}

#[derive(Serialize)]
struct MultJson {
    point: String,
    multiplicity: usize,
    image: BerkPoint,
    reduction: String,
}

/// `m_phi` at one disk point. `Center::Infinity` reads the radius in the
/// coordinate `1/z`.
pub fn mult(path: &Path, center: &Center, radius_exp: &str) -> Outcome {
    let run = || -> Result<Outcome, CliError> {
        let loaded = load(path)?;
        let radius = Exponent::parse(radius_exp).ok_or_else(|| CliError::Parse(format!("radius exponent {radius_exp:?}")))?;
        let map = RationalMap::from_cubic(&loaded.coefficients);
        let (point, m): (String, Multiplicity) = match center {
            Center::Infinity => (format!("zeta(inf, {radius})"), multiplicity_at_infinity(&map, radius)?),
            Center::Finite(text) => {
                let c: PuiseuxNumber = parse_series(text).map_err(|e| CliError::Parse(format!("center {text:?}: {e}")))?;
                let x = Disk::new(&c, radius)?;
                (x.to_string(), multiplicity_at(&map, &x)?)
            }
        };
        let out = MultJson {
            point,
            multiplicity: m.multiplicity,
            image: BerkPoint::Disk(m.image.clone()),
            reduction: m.reduced.to_string(),
        };
        Ok(Outcome::document(exit::SUCCESS, json(&out), String::new()))
    };
    run().into()
}

/// The prediction with the opposite shape, for exercising the contradiction
/// path.
fn corrupted(a: &Analysis, d: &LocusDescription) -> Result<LocusDescription, CliError> {
    let shape = match &d.shape {
        LocusShape::TwoComponents(_) => LocusShape::Connected,
        LocusShape::Connected => {
            let seg = |i: usize, j: usize| -> Result<Segment, CliError> {
                Ok(Segment {
                    ends: [i, j],
                    names: [a.hull.leaves[i].name.clone(), a.hull.leaves[j].name.clone()],
                    apex: a.hull.apex(i, j)?,
                })
            };
            let p = a.hull.pairing();
            let (first, second) = p.map_or(([0, 1], [2, 3]), |p| (p.first, p.second));
            LocusShape::TwoComponents([seg(first[0], first[1])?, seg(second[0], second[1])?])
        }
    };
    Ok(LocusDescription { shape, ..d.clone() })
}

/// Samples the hull and compares each multiplicity with the taxonomy's
/// predicted locus; any mismatch exits with code 5.
pub fn trace(path: &Path, grid: usize, corrupt_prediction: bool) -> Outcome {
    let run = || -> Result<Outcome, CliError> {
        if grid == 0 {
            return Err(CliError::Parse("--grid must be at least 1".into()));
        }
        let a = analyze(&load(path)?)?;
        let mut prediction = decide_locus_symbolic(&a)?;
        if corrupt_prediction {
            prediction = corrupted(&a, &prediction)?;
        }
        let map = RationalMap::from_cubic(&a.coefficients);
        let sampled = trace_locus(&map, &a.hull, grid);
        let checked = check_trace(&prediction, &sampled)?;
        let report = TraceReport {
            label: a.label,
            prediction: prediction.kind(),
            segments: segments_of(&a.hull, &prediction.shape),
            samples: checked_samples_of(&a.hull, &checked.samples),
            contradictions: checked.contradictions.clone(),
            consistent: checked.is_consistent(),
        };
        let (code, stderr) = if checked.is_consistent() {
            (exit::SUCCESS, String::new())
        } else {
            (exit::TRACE_CONTRADICTION, checked.contradictions.iter().map(|c| format!("contradiction: {c}\n")).collect())
        };
        Ok(Outcome::document(code, json(&report), stderr))
    };
    run().into()
}
