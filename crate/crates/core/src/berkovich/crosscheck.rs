// Local degrees recomputed without the oracle's iteration: the image of the
// disk point is read off a single evaluation `w = phi(x0)` at a point `x0` of
// the disk, and the degree is that of the reduction of
// `(phi(center + t^r z) - w) / t^s`.

use crate::berkovich::{multiplicity_at, trace_locus, Disk, SampleOutcome};
use crate::classifier::Analysis;
use crate::instances::{leaf_instances, random_instances};
use crate::ratfunc::{reduce_pair, RationalMap};
use crate::series::{Exponent, PuiseuxNumber, Valuation};

const WORKING_PRECISION: i64 = 64;

/// `None` when no probe point gives a finite value with enough precision.
fn degree_by_evaluation(map: &RationalMap, x: &Disk) -> Option<usize> {
    let scale = PuiseuxNumber::t_pow(x.radius());
    let moved = map.conjugate_affine(x.center(), &scale, None);
    let cap = Exponent::integer(WORKING_PRECISION);
    for z0 in [0i64, 1, -1, 2, 3, 5] {
        let z0 = PuiseuxNumber::from_int(z0);
        let g0 = moved.denom.eval(&z0);
        if g0.valuation_lower_bound() > Valuation::Finite(Exponent::integer(8)) {
            continue;
        }
        let Ok(w) = moved.numer.eval(&z0).div(&g0, cap) else { continue };
        let shifted = moved.numer.sub(&moved.denom.scale(&w));
        let (Ok(Valuation::Finite(vf)), Ok(Valuation::Finite(vg))) = (shifted.valuation(), moved.denom.valuation())
        else {
            continue;
        };
        let (Ok(num), Ok(den)) = (shifted.reduce_shifted(vf), moved.denom.reduce_shifted(vg)) else { continue };
        let reduced = reduce_pair(num, den);
        if reduced.degree > 0 {
            return Some(reduced.degree);
        }
    }
    None
}

fn compare_on(map: &RationalMap, points: &[Disk]) -> (usize, Vec<String>) {
    let mut checked = 0;
    let mut mismatches = Vec::new();
    for x in points {
        let Some(expected) = degree_by_evaluation(map, x) else { continue };
        let m = multiplicity_at(map, x).expect("oracle succeeds on exact centers");
        checked += 1;
        if m.multiplicity != expected {
            mismatches.push(format!("{x}: oracle {} vs evaluation {expected}", m.multiplicity));
        }
    }
    (checked, mismatches)
}

fn hull_points(a: &Analysis) -> Vec<Disk> {
    let map = RationalMap::from_cubic(&a.coefficients);
    let mut points: Vec<Disk> = trace_locus(&map, &a.hull, 3)
        .samples
        .into_iter()
        .filter(|s| !matches!(s.outcome, SampleOutcome::Unrepresentable))
        .filter_map(|s| s.point)
        .collect();
    for k in 1..4 {
        if let Some(d) = a.hull.central_point(Exponent::new(k, 4)) {
            points.push(d);
        }
    }
    points
}

#[test]
fn oracle_matches_evaluation_on_every_hand_built_hull() {
    let mut total = 0;
    for inst in leaf_instances() {
        let a = Analysis::new(&inst.coefficients).unwrap_or_else(|e| panic!("{}: {e}", inst.name));
        let map = RationalMap::from_cubic(&a.coefficients);
        let (checked, mismatches) = compare_on(&map, &hull_points(&a));
        assert!(mismatches.is_empty(), "{}: {mismatches:?}", inst.name);
        total += checked;
    }
    assert!(total > 200, "only {total} points were checkable");
}

#[test]
fn oracle_matches_evaluation_on_random_maps() {
    let grid: Vec<Disk> = [("0", 0), ("0", 1), ("1", 1), ("1", 2), ("1/2", 1), ("2", 3), ("1 + t", 2), ("t", 3), ("-1", 0)]
        .into_iter()
        .map(|(c, r)| Disk::new(&crate::series::parse_series(c).unwrap(), Exponent::integer(r)).unwrap())
        .collect();
    let mut total = 0;
    for c in random_instances(11, 40) {
        let map = RationalMap::from_cubic(&c);
        let (checked, mismatches) = compare_on(&map, &grid);
        assert!(mismatches.is_empty(), "{c}: {mismatches:?}");
        total += checked;
    }
    assert!(total > 200, "only {total} points were checkable");
}
