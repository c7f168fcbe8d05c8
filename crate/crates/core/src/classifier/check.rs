use crate::berkovich::{EdgeSample, SampleOutcome, TraceResult};

use super::{ClassifyError, LocusDescription, LocusShape};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TraceVerdict {
    Consistent,
    /// No multiplicity was obtained at this sample.
    Unresolved,
    Contradiction,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckedSample {
    pub sample: EdgeSample,
    /// `None` when the sample point itself is not representable.
    pub predicted_in_locus: Option<bool>,
    pub verdict: TraceVerdict,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceCheck {
    pub samples: Vec<CheckedSample>,
    /// Reasons the prediction fails, one per offending sample plus any
    /// structural problem with the predicted components.
    pub contradictions: Vec<String>,
}

impl TraceCheck {
    pub fn is_consistent(&self) -> bool {
        self.contradictions.is_empty()
    }
}

/// Compares sampled multiplicities with a predicted locus: `m >= 2` exactly
/// on the predicted components.
pub fn check_trace(prediction: &LocusDescription, trace: &TraceResult) -> Result<TraceCheck, ClassifyError> {
    let hull = &prediction.hull;
    let mut contradictions = Vec::new();
    if let LocusShape::TwoComponents(segs) = &prediction.shape {
        let disjoint = hull.pairing().is_some_and(|p| p.separates(segs[0].ends[0], segs[0].ends[1]));
        if !disjoint {
            contradictions.push(format!(
                "the predicted segments [{}, {}] and [{}, {}] meet inside the hull",
                segs[0].names[0], segs[0].names[1], segs[1].names[0], segs[1].names[1]
            ));
        }
    }
    let mut samples = Vec::with_capacity(trace.samples.len());
    for s in &trace.samples {
        let predicted = match (&prediction.shape, &s.point) {
            (_, None) => None,
            (LocusShape::Connected, Some(_)) => Some(true),
            (LocusShape::TwoComponents(segs), Some(x)) => {
                let mut inside = false;
                for seg in segs {
                    inside |= hull.on_leaf_path(x, seg.ends[0], seg.ends[1])?;
                }
                Some(inside)
            }
        };
        let verdict = match (&s.outcome, predicted) {
            (SampleOutcome::Multiplicity(m), Some(inside)) => {
                if (*m >= 2) == inside {
                    TraceVerdict::Consistent
                } else {
                    let point = s.point.as_ref().expect("representable");
                    let side = if inside { "inside" } else { "outside" };
                    contradictions.push(format!("m = {m} at {point}, {side} the predicted locus"));
                    TraceVerdict::Contradiction
                }
            }
            _ => TraceVerdict::Unresolved,
        };
        samples.push(CheckedSample { sample: s.clone(), predicted_in_locus: predicted, verdict });
    }
    Ok(TraceCheck { samples, contradictions })
}
