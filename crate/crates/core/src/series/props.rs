use num_rational::BigRational;
use proptest::prelude::*;

use super::{lift_root, root_valuations, rat, Exponent, PuiseuxNumber, SeriesPolynomial, Valuation};

fn exponent() -> impl Strategy<Value = Exponent> {
    (-4i64..9, 1i64..4).prop_map(|(n, d)| Exponent::new(n, d))
}

fn coefficient() -> impl Strategy<Value = BigRational> {
    (-6i64..7, 1i64..4).prop_filter("nonzero", |(n, _)| *n != 0).prop_map(|(n, d)| rat(n, d))
}

fn nonzero_series() -> impl Strategy<Value = PuiseuxNumber> {
    prop::collection::vec((exponent(), coefficient()), 1..5)
        .prop_map(PuiseuxNumber::from_terms)
        .prop_filter("nonzero", |x| !x.is_exact_zero())
}

fn series() -> impl Strategy<Value = PuiseuxNumber> {
    prop_oneof![1 => Just(PuiseuxNumber::zero()), 6 => nonzero_series()]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn ultrametric(x in series(), y in series()) {
        let vx = x.valuation().unwrap();
        let vy = y.valuation().unwrap();
        let vs = (&x + &y).valuation().unwrap();
        prop_assert!(vs >= vx.min(vy));
        if vx != vy {
            prop_assert_eq!(vs, vx.min(vy));
        }
    }

    #[test]
    fn valuation_is_multiplicative(x in nonzero_series(), y in nonzero_series()) {
        let vxy = (&x * &y).valuation().unwrap();
        prop_assert_eq!(vxy, x.valuation().unwrap() + y.valuation().unwrap());
    }

    #[test]
    fn division_round_trips_to_its_precision(x in series(), y in nonzero_series(), cap in 2i64..12) {
        let cap = Exponent::integer(cap);
        let q = x.div(&y, cap).unwrap();
        let vy = y.valuation().unwrap().finite().unwrap();
        let residual = &(&q * &y) - &x;
        // the quotient is good to O(t^cap), so the residual starts at cap + v(y)
        prop_assert!(residual.valuation_lower_bound() >= Valuation::Finite(cap + vy), "residual {}", residual);
    }

    #[test]
    fn root_valuations_sum_to_the_polygon_height(
        coeffs in prop::collection::vec(series(), 0..4),
        c0 in nonzero_series(),
        lead in nonzero_series(),
    ) {
        let mut all = vec![c0.clone()];
        all.extend(coeffs);
        all.push(lead.clone());
        let p = SeriesPolynomial::new(all);
        let roots = root_valuations(&p).unwrap();
        prop_assert_eq!(roots.len(), p.degree().unwrap());
        let total = roots.into_iter().fold(Exponent::ZERO, |a, b| a + b);
        let height = c0.valuation().unwrap().finite().unwrap() - lead.valuation().unwrap().finite().unwrap();
        prop_assert_eq!(total, height);
    }

    #[test]
    fn lifted_root_annihilates_to_target(
        e1 in exponent(), e2 in exponent(), e3 in exponent(),
        c in prop::collection::vec(coefficient(), 3),
        perturbation in series(),
        target in 12i64..24,
    ) {
        prop_assume!(e1 != e2 && e2 != e3 && e1 != e3);
        // roots of distinct valuations, then a perturbation of the constant
        // coefficient deep enough to leave the polygon alone
        let linear = |e: Exponent, c: &BigRational| {
            SeriesPolynomial::new(vec![-PuiseuxNumber::monomial(c.clone(), e), PuiseuxNumber::one()])
        };
        let mut p = linear(e1, &c[0]).mul(&linear(e2, &c[1])).mul(&linear(e3, &c[2]));
        let deep = perturbation.shift(Exponent::integer(30));
        p = p.add(&SeriesPolynomial::constant(deep));
        let target = Exponent::integer(target);
        for (e, lead) in [(e1, &c[0]), (e2, &c[1]), (e3, &c[2])] {
            let r = lift_root(&p, e, None, target).unwrap();
            prop_assert_eq!(r.leading().map(|(x, y)| (x, y.clone())), Some((e, lead.clone())));
            prop_assert!(p.eval(&r).valuation_lower_bound() >= Valuation::Finite(target), "{} at {}", p.eval(&r), r);
        }
    }
}

#[test]
fn truncation_is_not_zero() {
    let x = PuiseuxNumber::zero_to(Exponent::integer(3));
    assert!(x.is_zero_to_precision());
    assert!(!x.is_exact_zero());
    assert!(x.valuation().is_err());
}
