//! Instance generators: hand-built members of every reachable taxonomy leaf
//! and seeded random normal forms.
//!
//! Every generator picks the denominator `b2 z^2 + b1 z + b0` and solves the
//! fixed-point and critical-point constraints for the numerator:
//! `a3 = -b1 - 2 b0`, `a2 = b2 + 2 b1 + 3 b0`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::classifier::{from_pq, CaseLabel, CaseLeaf};
use crate::ratfunc::{CubicCoefficients, RatFuncError};
use crate::series::{parse_series, rat, Exponent, PuiseuxNumber};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    pub name: String,
    /// The leaf the construction aims at.
    pub intended: CaseLabel,
    pub coefficients: CubicCoefficients,
}

/// The normal form with the given denominator, scaled so one coefficient is
/// a unit.
pub fn from_denominator(b2: PuiseuxNumber, b1: PuiseuxNumber, b0: PuiseuxNumber) -> Result<CubicCoefficients, RatFuncError> {
    let two = PuiseuxNumber::from_int(2);
    let three = PuiseuxNumber::from_int(3);
    let a3 = -(&b1 + &(&two * &b0));
    let a2 = &(&b2 + &(&two * &b1)) + &(&three * &b0);
    let raw = CubicCoefficients::new(a3, a2, b2, b1, b0);
    let m = raw.min_valuation().ok_or_else(|| RatFuncError::Degenerate("all coefficients vanish".into()))?;
    let c = raw.shift(-m);
    let report = c.validate();
    if report.is_valid() {
        Ok(c)
    } else {
        Err(RatFuncError::Invalid(report))
    }
}

fn series(text: &str) -> PuiseuxNumber {
    parse_series(text).expect("literal in the generator table")
}

/// `(leaf, b2, b1, b0)`; two rows per leaf where the leaf is reachable.
///
/// Leaf 1-2-1-2 needs `b0` small and `b1` a unit while `a3 = -b1 - 2 b0` is
/// small, which cannot happen, so it has no row.
const DENOMINATORS: &[(CaseLeaf, &str, &str, &str)] = &[
    (CaseLeaf::C1111, "1 - t + t^2", "-2 + t", "1"),
    (CaseLeaf::C1111, "1 - 2*t - t^3", "-2 + t", "1 + t"),
    (CaseLeaf::C1112, "1", "-2 + t", "1"),
    (CaseLeaf::C1112, "1 + t^2", "-2 + 3*t", "1 - t"),
    (CaseLeaf::C112, "1", "3*t^2 + 2*t - 2", "1 - t - 2*t^2"),
    (CaseLeaf::C112, "1", "-2 + 2*t + t^3", "1 - t"),
    (CaseLeaf::C12111, "1", "-2*t + t^2", "t"),
    (CaseLeaf::C12111, "2", "-4*t + t^3", "2*t"),
    (CaseLeaf::C12112, "1", "t", "t^2"),
    (CaseLeaf::C12112, "1", "2*t", "-t^3"),
    (CaseLeaf::C12113, "1", "t", "t"),
    (CaseLeaf::C12113, "2", "3*t", "-t + t^2"),
    // v(b1) > v(a3) = v(b0): shares the reduction of 1-2-1-1-3
    (CaseLeaf::C12113, "1", "t^2", "t"),
    (CaseLeaf::C122, "2", "-2 + t", "1"),
    (CaseLeaf::C122, "3", "-2 + t^2", "1"),
    // both free critical points reduce to 0 and the hull is a star
    (CaseLeaf::C211, "-2", "1", "t"),
    (CaseLeaf::C211, "-2 + t", "1 + t^2", "3*t^(1/2)"),
    // v(a2) = 1 < v(b0) = 2: the free critical points separate
    (CaseLeaf::C211, "-2 + t", "1", "t^2"),
    (CaseLeaf::C212, "1", "1 + 2*t", "-1 - t"),
    (CaseLeaf::C212, "1 + t", "1", "-1 + t^2"),
    (CaseLeaf::C2211, "t", "1", "t"),
    (CaseLeaf::C2211, "t^2", "1 - t", "2*t"),
    (CaseLeaf::C22121, "-1 + t", "1", "t"),
    (CaseLeaf::C22121, "-2", "2 + t", "t^2"),
    (CaseLeaf::C22122, "1", "1", "t"),
    (CaseLeaf::C22122, "3", "1 + t", "t + t^2"),
    (CaseLeaf::C22211, "t", "-1", "1"),
    (CaseLeaf::C22211, "2*t", "-3 + t", "3"),
    (CaseLeaf::C22212, "t", "1", "1"),
    (CaseLeaf::C22212, "t^2", "2", "1"),
    // gamma reduces to 1, the other residue root of g is 3
    (CaseLeaf::C222212, "1 + t", "-4", "3"),
    // gamma reduces to -1, g has the residue root 1/2
    (CaseLeaf::C222212, "-2", "-1 + t", "1"),
    (CaseLeaf::C22222, "1", "1", "1"),
    (CaseLeaf::C22222, "2", "1", "1"),
];

/// `(subcase, p, q)` for the deep leaf.
const DEEP: &[(u8, &str, &str)] = &[
    (1, "t^2", "t"),
    (1, "t^3", "-t + t^2"),
    (1, "t^2", "2*t"),
    (2, "t", "-t + t^2"),
    (2, "2*t", "-2*t + t^3"),
    (2, "t", "-t + t^(3/2)"),
    (3, "t", "t^2"),
    (3, "t", "t^3"),
    (3, "-t", "3*t^2"),
    (4, "2*t", "t"),
    (4, "t", "1/2*t + t^2"),
    (5, "t", "-4*t + t^3"),
    (5, "t", "-4*t + t^2"),
    (6, "t", "t"),
    (6, "t", "3*t"),
];

/// Hand-built instances, each labelled with the leaf it was built for.
///
/// Panics if a table row fails validation.
pub fn leaf_instances() -> Vec<Instance> {
    let mut out = Vec::new();
    for (k, &(leaf, b2, b1, b0)) in DENOMINATORS.iter().enumerate() {
        let coefficients = from_denominator(series(b2), series(b1), series(b0))
            .unwrap_or_else(|e| panic!("row {k} ({leaf}): {e}"));
        out.push(Instance {
            name: format!("{leaf} #{k}: b2 = {b2}, b1 = {b1}, b0 = {b0}"),
            intended: CaseLabel::leaf(leaf),
            coefficients,
        });
    }
    out.extend(deep_instances());
    out
}

pub fn deep_instances() -> Vec<Instance> {
    DEEP.iter()
        .map(|&(k, p, q)| {
            let coefficients =
                from_pq(&series(p), &series(q)).unwrap_or_else(|e| panic!("deep p = {p}, q = {q}: {e}"));
            Instance { name: format!("deep subcase {k}: p = {p}, q = {q}"), intended: CaseLabel::deep(k), coefficients }
        })
        .collect()
}

fn random_series(rng: &mut ChaCha8Rng) -> PuiseuxNumber {
    let terms = rng.gen_range(1..=3);
    let denom = if rng.gen_bool(0.25) { 2 } else { 1 };
    PuiseuxNumber::from_terms((0..terms).map(|_| {
        let e = Exponent::new(rng.gen_range(0..=3 * denom), denom);
        let mut c = rng.gen_range(-5..=5);
        if c == 0 {
            c = 1;
        }
        (e, rat(c, 1))
    }))
}

/// `count` validated normal forms with random denominators; the same seed
/// always yields the same list.
pub fn random_instances(seed: u64, count: usize) -> Vec<CubicCoefficients> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let (b2, b1, b0) = (random_series(&mut rng), random_series(&mut rng), random_series(&mut rng));
        if let Ok(c) = from_denominator(b2, b1, b0) {
            out.push(c);
        }
    }
    out
}
