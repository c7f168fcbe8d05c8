use crate::ratfunc::{from_critical_data, solve_alpha, wronskian_psi, CriticalData, CubicCoefficients, RatFuncError};
use crate::series::{lift_root, rat, root_valuations, Exponent, PuiseuxNumber, SeriesFraction, Valuation};

use super::ClassifyError;

/// Coordinates of the deep leaf: `beta = 1/2 + p`, `gamma = 1 + q`, where
/// `beta` is the root of the denominator reducing to `1/2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeepCaseParams {
    pub p: PuiseuxNumber,
    pub q: PuiseuxNumber,
    /// `(1-2p+4pq)^2 ((alpha+beta-1/2)^2 - 2 alpha beta gamma)`, the radicand
    /// in the closed form of the two free critical points.
    pub r: PuiseuxNumber,
    /// `v(1 - c)` over the two free critical points, in increasing order.
    pub one_minus_valuations: [Exponent; 2],
}

impl DeepCaseParams {
    pub fn of(c: &CubicCoefficients, precision: Exponent) -> Result<Self, ClassifyError> {
        let half = rat(1, 2);
        let beta = lift_root(&c.denominator(), Exponent::ZERO, Some(&half), precision)?;
        let gamma = -c.a2.div(&c.a3, precision)?;
        let one = PuiseuxNumber::one();
        let p = &beta - &PuiseuxNumber::constant(half.clone());
        let q = &gamma - &one;
        let alpha = solve_alpha(&beta, &gamma)?.expand(precision)?;
        let r = radicand(&alpha, &beta, &gamma, &p, &q);

        let (_, psi) = wronskian_psi(c);
        let near_one = psi.compose_affine(&one, &one);
        let mut vals = root_valuations(&near_one)?;
        vals.sort();
        let one_minus_valuations = match vals.as_slice() {
            [a, b] => [*a, *b],
            _ => return Err(ClassifyError::Unclassifiable(format!("psi(1 + w) has {} roots", vals.len()))),
        };
        Ok(DeepCaseParams { p, q, r, one_minus_valuations })
    }
}

fn radicand(
    alpha: &PuiseuxNumber,
    beta: &PuiseuxNumber,
    gamma: &PuiseuxNumber,
    p: &PuiseuxNumber,
    q: &PuiseuxNumber,
) -> PuiseuxNumber {
    let one = PuiseuxNumber::one();
    let two = PuiseuxNumber::from_int(2);
    let four = PuiseuxNumber::from_int(4);
    let half = PuiseuxNumber::constant(rat(1, 2));
    let front = &(&one - &(&two * p)) + &(&(&four * p) * q);
    let shifted = &(alpha + beta) - &half;
    let inner = &(&shifted * &shifted) - &(&(&(&two * alpha) * beta) * gamma);
    &(&front * &front) * &inner
}

/// The normal form with `beta = 1/2 + p`, `gamma = 1 + q` and
/// `alpha = (1 - 2p + q + 2pq) / (1 - 2p + 4pq)`.
pub fn from_pq(p: &PuiseuxNumber, q: &PuiseuxNumber) -> Result<CubicCoefficients, RatFuncError> {
    for (name, x) in [("p", p), ("q", q)] {
        if !x.is_exact_zero() && x.valuation_lower_bound() <= Valuation::Finite(Exponent::ZERO) {
            return Err(RatFuncError::Degenerate(format!("{name} must have positive valuation")));
        }
    }
    let one = PuiseuxNumber::one();
    let two = PuiseuxNumber::from_int(2);
    let four = PuiseuxNumber::from_int(4);
    let pq = p * q;
    let numer = &(&(&one - &(&two * p)) + q) + &(&two * &pq);
    let denom = &(&one - &(&two * p)) + &(&four * &pq);
    let alpha = SeriesFraction::new(numer, denom)?;
    let beta = p + &PuiseuxNumber::constant(rat(1, 2));
    let gamma = &one + q;
    from_critical_data(&CriticalData::new(alpha, beta, gamma))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::parse_series;

    fn s(x: &str) -> PuiseuxNumber {
        parse_series(x).unwrap()
    }

    #[test]
    fn alpha_formula_matches_the_linear_solve() {
        let (p, q) = (s("t"), s("-4*t + t^3"));
        let beta = &s("1/2") + &p;
        let gamma = &s("1") + &q;
        let solved = solve_alpha(&beta, &gamma).unwrap();
        let pq = &p * &q;
        let closed = SeriesFraction::new(
            &(&(&s("1") - &(&s("2") * &p)) + &q) + &(&s("2") * &pq),
            &(&s("1") - &(&s("2") * &p)) + &(&s("4") * &pq),
        )
        .unwrap();
        assert_eq!(solved, closed);
    }

    #[test]
    fn zero_p_is_degenerate() {
        assert!(matches!(from_pq(&s("0"), &s("t")), Err(RatFuncError::Degenerate(_))));
    }

    #[test]
    fn params_recover_p_and_q() {
        let c = from_pq(&s("t"), &s("t^2")).unwrap();
        let d = DeepCaseParams::of(&c, Exponent::integer(16)).unwrap();
        assert_eq!(d.p, s("t"));
        assert_eq!(d.q.truncate(Exponent::integer(8)), s("t^2 + O(t^8)"));
    }
}
