//! The acceptance gate: ten criteria, one PASS/FAIL line each.
//!
//! Runs without the libtest harness so the lines print in order; the process
//! exits nonzero when any criterion fails.

use std::fmt::Write as _;
use std::path::Path;
use std::process::ExitCode;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use ramlocus_cli::{trace, InstanceFile};
use ramlocus_core::berkovich::{multiplicity_at, Disk};
use ramlocus_core::classifier::{
    classify_case, cross_check, decide_locus_oracle, decide_locus_symbolic, from_pq, Analysis, CaseLabel, CaseLeaf,
    ShapeKind,
};
use ramlocus_core::instances::{leaf_instances, random_instances, Instance};
use ramlocus_core::ratfunc::{wronskian_psi, CubicCoefficients, RationalMap};
use ramlocus_core::series::{
    lift_root, parse_series, rat, residue_polynomial, Exponent, NewtonPolygon, PuiseuxNumber, QPoly, SeriesPolynomial,
    Valuation,
};

/// Minimum number of random tuples for the Wronskian identity.
const IDENTITY_SAMPLES: usize = 200;
/// Minimum number of (instance, conjugation, point) triples.
const INVARIANCE_TRIPLES: usize = 50;
/// Minimum number of instances whose critical polynomial is lifted.
const LIFT_INSTANCES: usize = 30;
/// Absolute precision the lifted roots must reach: `v(psi(root)) >= this`.
const LIFT_TARGET: i64 = 24;
const TRACE_GRID: usize = 3;

struct Verdict {
    pass: bool,
    detail: String,
}

impl Verdict {
    fn from_failures(checked: usize, failures: Vec<String>) -> Self {
        if failures.is_empty() {
            Verdict { pass: true, detail: format!("{checked} checks") }
        } else {
            let mut detail = format!("{} of {checked} checks failed", failures.len());
            for f in failures {
                let _ = write!(detail, "\n      - {f}");
            }
            Verdict { pass: false, detail }
        }
    }
}

fn series(text: &str) -> PuiseuxNumber {
    parse_series(text).expect("literal")
}

fn wronskian_identity() -> Verdict {
    let instances = random_instances(1, IDENTITY_SAMPLES);
    let z_z_minus_1 = SeriesPolynomial::from_ints(&[0, -1, 1]);
    let failures = instances
        .iter()
        .filter_map(|c| {
            let (wr, psi) = wronskian_psi(c);
            let defect = wr.sub(&z_z_minus_1.mul(&psi));
            (!(defect.is_zero() && defect.is_exact())).then(|| format!("{c}: Wr - z(z-1)psi = {defect}"))
        })
        .collect();
    Verdict::from_failures(instances.len(), failures)
}

fn required_labels() -> Vec<CaseLabel> {
    let mut labels: Vec<CaseLabel> =
        CaseLeaf::ALL.into_iter().filter(|&l| l != CaseLeaf::C222211).map(CaseLabel::leaf).collect();
    labels.extend((1..=6).map(CaseLabel::deep));
    labels
}

fn taxonomy_coverage(instances: &[Instance]) -> Verdict {
    let mut failures = Vec::new();
    for label in required_labels() {
        if !instances.iter().any(|i| i.intended == label) {
            failures.push(format!("no generated instance for {label}"));
        }
    }
    for inst in instances {
        match classify_case(&inst.coefficients) {
            Ok(l) if l == inst.intended => {}
            Ok(l) => failures.push(format!("{}: classified as {l}", inst.name)),
            Err(e) => failures.push(format!("{}: {e}", inst.name)),
        }
    }
    Verdict::from_failures(required_labels().len() + instances.len(), failures)
}

fn verdict_reproduction(instances: &[Instance]) -> Verdict {
    let precision = Exponent::integer(ramlocus_core::classifier::DEFAULT_PRECISION);
    let mut failures = Vec::new();
    for inst in instances {
        let report = cross_check(&inst.coefficients, precision);
        let kind = |r: &Result<ramlocus_core::classifier::LocusDescription, _>| r.as_ref().ok().map(|d| d.kind());
        let (sym, ora) = (kind(&report.symbolic), kind(&report.oracle));
        let bullets = report.bullets.map(|b| b.verdict);
        let flagged = match inst.intended.deep_subcase {
            Some(1) => Some(ShapeKind::Connected),
            Some(2) => Some(ShapeKind::TwoComponents),
            _ => None,
        };
        match flagged {
            None => {
                if !(sym.is_some() && sym == ora && ora == bullets) {
                    failures.push(format!(
                        "{}: symbolic {}, oracle {}, characterization {}",
                        inst.name,
                        show(sym, &report.symbolic),
                        show(ora, &report.oracle),
                        bullets.map_or("none".into(), |b| b.to_string())
                    ));
                }
            }
            Some(expected) => {
                if report.agreement {
                    failures.push(format!("{}: no discrepancy reported", inst.name));
                }
                if ora != Some(expected) {
                    failures.push(format!(
                        "{}: oracle {} where the subcase computation gives {expected}",
                        inst.name,
                        show(ora, &report.oracle)
                    ));
                }
            }
        }
    }
    Verdict::from_failures(instances.len(), failures)
}

fn show<T>(k: Option<ShapeKind>, r: &Result<T, ramlocus_core::classifier::ClassifyError>) -> String {
    match (k, r) {
        (Some(k), _) => k.to_string(),
        (None, Err(e)) => format!("error ({e})"),
        (None, Ok(_)) => "none".into(),
    }
}

/// Whether `r` is a nonzero rational multiple of `target`.
fn proportional(num: &QPoly, den: &QPoly, target: &QPoly) -> bool {
    if den.degree() != Some(0) || num.is_zero() {
        return false;
    }
    let lead = |p: &QPoly| p.leading().cloned().expect("nonzero");
    num.scale(&lead(target)) == target.scale(&(lead(num)))
}

fn case_two_multiplicity() -> Verdict {
    let c = from_pq(&series("t"), &series("-t + t^2")).expect("valid deep instance");
    let map = RationalMap::from_cubic(&c);
    let x = Disk::new(&PuiseuxNumber::one(), Exponent::integer(1)).expect("exact center");
    let mut failures = Vec::new();
    match multiplicity_at(&map, &x) {
        Ok(m) => {
            if m.multiplicity != 2 {
                failures.push(format!("m at {x} is {}, expected 2 (reduction {})", m.multiplicity, m.reduced));
            }
            let target = QPoly::new(vec![rat(0, 1), rat(1, 1), rat(-1, 1)]);
            if !proportional(&m.reduced.numerator, &m.reduced.denominator, &target) {
                failures.push(format!("reduction {} is not a unit multiple of -z^2 + z", m.reduced));
            }
        }
        Err(e) => failures.push(format!("oracle failed: {e}")),
    }
    Verdict::from_failures(2, failures)
}

fn case_five_multiplicity() -> Verdict {
    let c = from_pq(&series("t"), &series("-4*t + t^3")).expect("valid deep instance");
    let map = RationalMap::from_cubic(&c);
    let x = Disk::new(&PuiseuxNumber::one(), Exponent::integer(1)).expect("exact center");
    let mut failures = Vec::new();
    match multiplicity_at(&map, &x) {
        Ok(m) if m.multiplicity == 3 => {}
        Ok(m) => failures.push(format!("m at {x} is {}, expected 3", m.multiplicity)),
        Err(e) => failures.push(format!("oracle failed: {e}")),
    }
    let report = cross_check(&c, Exponent::integer(ramlocus_core::classifier::DEFAULT_PRECISION));
    for (name, r) in [("symbolic", &report.symbolic), ("oracle", &report.oracle)] {
        match r {
            Ok(d) if d.kind() == ShapeKind::Connected => {}
            Ok(d) => failures.push(format!("{name} verdict {}", d.kind())),
            Err(e) => failures.push(format!("{name} verdict failed: {e}")),
        }
    }
    Verdict::from_failures(3, failures)
}

fn deep_valuations(instances: &[Instance]) -> Verdict {
    let mut failures = Vec::new();
    let mut checked = 0;
    for inst in instances.iter().filter(|i| matches!(i.intended.deep_subcase, Some(1..=4))) {
        checked += 1;
        let a = match Analysis::new(&inst.coefficients) {
            Ok(a) => a,
            Err(e) => {
                failures.push(format!("{}: {e}", inst.name));
                continue;
            }
        };
        let d = a.deep.as_ref().expect("deep leaf carries p and q");
        let vp = d.p.valuation_lower_bound().finite().expect("p nonzero");
        let vq = d.q.valuation_lower_bound().finite().expect("q nonzero");
        let mut got = a.roots.one_minus;
        got.sort();
        let ok = match inst.intended.deep_subcase {
            Some(1) => got == [vq, vq],
            Some(2) => got[0] == vp && got[1] > vp,
            _ => got == [vp, vp],
        };
        if !ok {
            failures.push(format!("{}: v(1 - c) = {{{}, {}}} with v(p) = {vp}, v(q) = {vq}", inst.name, got[0], got[1]));
        }
    }
    Verdict::from_failures(checked, failures)
}

fn random_disk(rng: &mut ChaCha8Rng) -> Disk {
    let c = PuiseuxNumber::from_terms([
        (Exponent::ZERO, rat(rng.gen_range(-3..=3), 1)),
        (Exponent::integer(1), rat(rng.gen_range(-3..=3), 1)),
    ]);
    Disk::new(&c, Exponent::new(rng.gen_range(-2..=6), rng.gen_range(1..=2))).expect("exact center")
}

fn oracle_invariance() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let instances = random_instances(3, INVARIANCE_TRIPLES);
    let mut failures = Vec::new();
    for c in &instances {
        let map = RationalMap::from_cubic(c);
        let x = random_disk(&mut rng);
        let shift = PuiseuxNumber::from_terms([
            (Exponent::ZERO, rat(rng.gen_range(-4..=4), 1)),
            (Exponent::new(1, 2), rat(rng.gen_range(-4..=4), 1)),
        ]);
        let mut unit = rng.gen_range(-3..=3);
        if unit == 0 {
            unit = 1;
        }
        let e = Exponent::integer(rng.gen_range(-2..=2));
        let scale = PuiseuxNumber::monomial(rat(unit, 1), e);
        let conj = map.affine_conjugate(&shift, &scale);
        // sigma(z) = shift + scale z sends Disk((c - shift)/scale, r - e) onto x
        let pulled_center = (x.center() - &shift).div(&scale, Exponent::integer(64)).expect("monomial divisor");
        let y = Disk::new(&pulled_center, x.radius() - e).expect("exact center");
        match (multiplicity_at(&map, &x), multiplicity_at(&conj, &y)) {
            (Ok(m), Ok(n)) if m.multiplicity == n.multiplicity => {}
            (Ok(m), Ok(n)) => failures.push(format!("{c} at {x}: {} but {} after conjugation", m.multiplicity, n.multiplicity)),
            (a, b) => failures.push(format!("{c} at {x}: oracle failed ({:?}, {:?})", a.err(), b.err())),
        }
    }
    Verdict::from_failures(instances.len(), failures)
}

fn good_reduction(instances: &[Instance]) -> Verdict {
    let mut failures = Vec::new();
    let mut checked = 0;
    for inst in instances.iter().filter(|i| matches!(i.intended.leaf, CaseLeaf::C212 | CaseLeaf::C22222)) {
        checked += 1;
        let map = RationalMap::from_cubic(&inst.coefficients);
        match multiplicity_at(&map, &Disk::gauss()) {
            Ok(m) if m.multiplicity == 3 => {}
            Ok(m) => failures.push(format!("{}: m at the Gauss point is {}", inst.name, m.multiplicity)),
            Err(e) => failures.push(format!("{}: {e}", inst.name)),
        }
        let a = match Analysis::new(&inst.coefficients) {
            Ok(a) => a,
            Err(e) => {
                failures.push(format!("{}: {e}", inst.name));
                continue;
            }
        };
        for (name, r) in [("symbolic", decide_locus_symbolic(&a)), ("oracle", decide_locus_oracle(&a))] {
            match r {
                Ok(d) if d.kind() == ShapeKind::Connected => {}
                Ok(d) => failures.push(format!("{}: {name} verdict {}", inst.name, d.kind())),
                Err(e) => failures.push(format!("{}: {name} verdict failed: {e}", inst.name)),
            }
        }
    }
    Verdict::from_failures(checked, failures)
}

fn trace_consistency(instances: &[Instance], dir: &Path) -> Verdict {
    let mut failures = Vec::new();
    for (k, inst) in instances.iter().enumerate() {
        let path = dir.join(format!("instance-{k}.json"));
        let file = InstanceFile::from_coefficients(&inst.coefficients);
        std::fs::write(&path, serde_json::to_string(&file).expect("serializable")).expect("temp file");
        let out = trace(&path, TRACE_GRID, false);
        if out.code != 0 {
            let first = out.stderr.lines().next().unwrap_or("").to_string();
            failures.push(format!("{}: exit {}, {first}", inst.name, out.code));
        }
    }
    Verdict::from_failures(instances.len(), failures)
}

/// Every simple rational residue root of every Newton segment of `psi`.
fn lift_all(psi: &SeriesPolynomial, target: Exponent) -> Result<Vec<(Exponent, PuiseuxNumber)>, String> {
    let polygon = NewtonPolygon::of(psi).map_err(|e| e.to_string())?;
    let mut out = Vec::new();
    for seg in &polygon.segments {
        let (roots, _) = residue_polynomial(psi, seg, &polygon).rational_roots();
        for (w, mult) in roots {
            if mult != 1 {
                continue;
            }
            if let Ok(r) = lift_root(psi, seg.root_valuation, Some(&w), target) {
                out.push((seg.root_valuation, r));
            }
        }
    }
    Ok(out)
}

fn lifted_roots(instances: &[CubicCoefficients]) -> Verdict {
    let target = Exponent::integer(LIFT_TARGET);
    let mut failures = Vec::new();
    let mut lifted_instances = 0;
    let mut roots = 0;
    for c in instances {
        let (_, psi) = wronskian_psi(c);
        let lifted = match lift_all(&psi, target) {
            Ok(l) => l,
            Err(e) => {
                failures.push(format!("{c}: {e}"));
                continue;
            }
        };
        if !lifted.is_empty() {
            lifted_instances += 1;
        }
        for (slope, r) in lifted {
            roots += 1;
            if r.valuation_lower_bound() != Valuation::Finite(slope) {
                failures.push(format!("{c}: root {r} does not have valuation {slope}"));
            }
            let residual = psi.eval(&r).valuation_lower_bound();
            if residual < Valuation::Finite(target) {
                failures.push(format!("{c}: psi({r}) has valuation {residual} < {target}"));
            }
        }
    }
    if lifted_instances < LIFT_INSTANCES {
        failures.push(format!("only {lifted_instances} instances had a liftable root"));
    }
    Verdict::from_failures(roots, failures)
}

fn main() -> ExitCode {
    let instances = leaf_instances();
    let randoms = random_instances(5, 60);
    let dir = tempfile::tempdir().expect("temp dir");
    let criteria: Vec<(&str, Box<dyn Fn() -> Verdict + '_>)> = vec![
        ("wronskian identity", Box::new(wronskian_identity)),
        ("taxonomy coverage", Box::new(|| taxonomy_coverage(&instances))),
        ("three verdicts agree", Box::new(|| verdict_reproduction(&instances))),
        ("deep case 2 multiplicity", Box::new(case_two_multiplicity)),
        ("deep case 5 multiplicity", Box::new(case_five_multiplicity)),
        ("deep case valuations", Box::new(|| deep_valuations(&instances))),
        ("oracle conjugation invariance", Box::new(oracle_invariance)),
        ("good reduction", Box::new(|| good_reduction(&instances))),
        ("trace consistency", Box::new(|| trace_consistency(&instances, dir.path()))),
        ("newton polygon vs lifted roots", Box::new(|| lifted_roots(&randoms))),
    ];
    let mut passed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let v = run();
        let status = if v.pass { "PASS" } else { "FAIL" };
        println!("criterion {:>2} {name}: {status} [{:.1?}] {}", k + 1, start.elapsed(), v.detail);
        passed += usize::from(v.pass);
    }
    println!("acceptance: {passed}/{} criteria passed", criteria.len());
    if passed == criteria.len() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
