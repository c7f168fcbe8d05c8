use crate::ratfunc::{
    conjugate_affine, from_critical_data, reduce_map, solve_alpha, wronskian_psi, CriticalData, CubicCoefficients,
    ProjectivePoint, RatFuncError, RationalMap, ReducedConstant, Violation,
};
use crate::series::{parse_series, Exponent, PuiseuxNumber, QPoly, SeriesFraction, SeriesPolynomial};

fn s(text: &str) -> PuiseuxNumber {
    parse_series(text).unwrap()
}

fn poly(cs: &[&str]) -> SeriesPolynomial {
    SeriesPolynomial::new(cs.iter().map(|c| s(c)).collect())
}

fn cubic(parts: [&str; 5]) -> CubicCoefficients {
    CubicCoefficients::new(s(parts[0]), s(parts[1]), s(parts[2]), s(parts[3]), s(parts[4]))
}

#[test]
fn validate_examples() {
    assert!(CubicCoefficients::from_ints(1, 1, 1, 3, -2).validate().is_valid());
    let bad = CubicCoefficients::from_ints(1, 1, 1, 1, 0).validate();
    assert!(bad.violations.contains(&Violation::CriticalPointConstraint));
    let zero = CubicCoefficients::from_ints(0, 1, 1, 1, 1).validate();
    assert!(zero.violations.contains(&Violation::LeadingNumeratorZero));
}

#[test]
fn psi_of_integer_tuple() {
    let c = CubicCoefficients::from_ints(1, 1, 1, 3, -2);
    let (wr, psi) = wronskian_psi(&c);
    assert_eq!(psi, SeriesPolynomial::from_ints(&[4, 7, 1]));
    assert_eq!(wr, SeriesPolynomial::from_ints(&[0, -4, -3, 6, 1]));
    let z_z1 = SeriesPolynomial::from_ints(&[0, -1, 1]);
    assert_eq!(z_z1.mul(&psi), wr);
}

#[test]
fn psi_of_series_tuple() {
    let c = cubic(["1", "t", "1", "1+2*t", "-1-t"]);
    assert!(c.fixed_point_defect().is_exact_zero());
    assert!(c.critical_point_defect().is_exact_zero());
    let (_, psi) = wronskian_psi(&c);
    assert_eq!(psi, poly(&["2*t + 2*t^2", "3 + 4*t", "1"]));
}

#[test]
fn alpha_formula_in_p_q() {
    for (p, q) in [("t", "t^2"), ("t", "t"), ("2*t^2", "-t"), ("1/3*t^(1/2)", "t + t^3")] {
        let (p, q) = (s(p), s(q));
        let beta = &s("1/2") + &p;
        let gamma = &s("1") + &q;
        let alpha = solve_alpha(&beta, &gamma).unwrap();
        let one = PuiseuxNumber::one();
        let two = PuiseuxNumber::from_int(2);
        let four = PuiseuxNumber::from_int(4);
        let pq = &p * &q;
        let numer = &(&(&one - &(&two * &p)) + &q) + &(&two * &pq);
        let denom = &(&one - &(&two * &p)) + &(&four * &pq);
        assert_eq!(alpha, SeriesFraction::new(numer, denom).unwrap());
    }
}

#[test]
fn alpha_for_equal_p_q() {
    let alpha = solve_alpha(&s("1/2 + t"), &s("1 + t")).unwrap();
    assert_eq!(alpha, SeriesFraction::new(s("1 - t + 2*t^2"), s("1 - 2*t + 4*t^2")).unwrap());
}

#[test]
fn critical_data_round_trip() {
    let alpha = SeriesFraction::new(s("1 - 2*t + t^2 + 2*t^3"), s("1 - 2*t + 4*t^3")).unwrap();
    let data = CriticalData::new(alpha, s("1/2 + t"), s("1 + t^2"));
    let c = from_critical_data(&data).unwrap();
    assert!(c.validate().is_valid(), "{}", c.validate());
    let map = RationalMap::from_cubic(&c);
    let cap = Exponent::integer(20);
    assert_eq!(map.evaluate(&ProjectivePoint::Finite(PuiseuxNumber::one()), cap).unwrap(), ProjectivePoint::Finite(PuiseuxNumber::one()));
    assert_eq!(map.evaluate(&ProjectivePoint::Finite(PuiseuxNumber::zero()), cap).unwrap(), ProjectivePoint::Finite(PuiseuxNumber::zero()));
    assert_eq!(map.evaluate(&ProjectivePoint::Infinity, cap).unwrap(), ProjectivePoint::Infinity);
    // gamma is the nonzero root of the numerator
    assert!((&c.a2 + &(&c.a3 * &s("1 + t^2"))).is_exact_zero());
}

#[test]
fn degenerate_critical_data() {
    let gamma = s("1 + t");
    let same = CriticalData::new(SeriesFraction::from(gamma.clone()), s("1/2"), gamma.clone());
    assert!(matches!(from_critical_data(&same), Err(RatFuncError::Degenerate(_))));
    let forced = CriticalData::from_beta_gamma(s("1/2"), gamma).unwrap();
    assert!(forced.alpha.equals(&s("1 + t")));
    assert!(matches!(from_critical_data(&forced), Err(RatFuncError::Degenerate(_))));
}

#[test]
fn unconstrained_alpha_is_rejected() {
    let data = CriticalData::new(SeriesFraction::from(s("3")), s("1/2 + t"), s("1 + t^2"));
    assert!(matches!(from_critical_data(&data), Err(RatFuncError::ConstraintViolated(_))));
}

#[test]
fn reduce_map_examples() {
    let r = reduce_map(&poly(&["0", "0", "0", "1"]), &poly(&["1"])).unwrap();
    assert_eq!(r.degree, 3);
    assert_eq!(r.numerator, QPoly::from_ints(&[0, 0, 0, 1]));
    let r = reduce_map(&poly(&["-t", "0", "1"]), &poly(&["0", "1"])).unwrap();
    assert_eq!(r.degree, 1);
    assert_eq!(r.numerator, QPoly::from_ints(&[0, 1]));
    assert_eq!(r.denominator, QPoly::from_ints(&[1]));
    let r = reduce_map(&poly(&["0", "0", "t^2", "t"]), &poly(&["t"])).unwrap();
    assert_eq!(r.degree, 3);
    assert_eq!(r.numerator, QPoly::from_ints(&[0, 0, 0, 1]));
    let r = reduce_map(&poly(&["1", "t"]), &poly(&["t"])).unwrap();
    assert_eq!(r.constant_value, Some(ReducedConstant::Infinity));
}

#[test]
fn conjugation_examples() {
    let f = poly(&["0", "0", "1"]);
    let g = poly(&["1"]);
    let (f1, g1) = conjugate_affine(&f, &g, &PuiseuxNumber::zero(), &PuiseuxNumber::one(), None);
    assert_eq!((f1, g1), (f.clone(), g.clone()));
    let (f2, g2) = conjugate_affine(&f, &g, &PuiseuxNumber::zero(), &PuiseuxNumber::t(), None);
    assert_eq!(f2, poly(&["0", "0", "t^2"]));
    assert_eq!(g2, g);
}

#[test]
fn deep_case_shifted_numerator() {
    for (p, q) in [("t", "t^2"), ("t", "-t + t^2"), ("t^2", "t"), ("1/2*t", "3*t")] {
        let (p, q) = (s(p), s(q));
        let data = CriticalData::from_beta_gamma(&s("1/2") + &p, &s("1") + &q).unwrap();
        let c = from_critical_data(&data).unwrap();
        let map = RationalMap::from_cubic(&c);
        let rho = map.conjugate_affine(&PuiseuxNumber::one(), &PuiseuxNumber::one(), Some(&PuiseuxNumber::one()));
        let one = PuiseuxNumber::one();
        let two = PuiseuxNumber::from_int(2);
        let four = PuiseuxNumber::from_int(4);
        let eight = PuiseuxNumber::from_int(8);
        let u = &one - &(&two * &p);
        let cubic_c = -(&u * &u);
        let pp = &p * &p;
        let quad_c = &(&(&(&(&four * &p) + &q) + &(&four * &(&p * &q))) - &(&eight * &pp)) + &(&four * &(&pp * &q));
        let n = rho.numer.clone();
        assert!(n.coeff(0).is_exact_zero() && n.coeff(1).is_exact_zero());
        // proportional: n3 * quad_c == n2 * cubic_c
        assert!((&(&n.coeff(3) * &quad_c) - &(&n.coeff(2) * &cubic_c)).is_exact_zero());
    }
}
