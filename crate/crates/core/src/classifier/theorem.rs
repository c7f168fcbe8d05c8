//! The "connected if and only if" characterization as a list of valuation
//! conditions, evaluated directly on the coefficients.

use std::fmt;

use crate::series::{Exponent, Valuation};

use super::deep::DeepCaseParams;
use super::{ResidueProfile, ShapeKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Bullet {
    // connected list
    GoodAtInfinityDirection,
    GoodWithSmallB2,
    GoodGeneric,
    PotentiallyGood,
    BalancedSmallTerms,
    DeepCloseToOne,
    // two-segment list
    UnitB0SmallA3,
    SmallB0,
    SmallB0AndB2,
    SmallB2DoubleRoot,
    SmallA2A3Root,
    LargeGamma,
    SmallB1,
    SmallB1B0,
    GammaNearOne,
    RootNearHalf,
    DeepFarFromOne,
}

impl Bullet {
    pub const CONNECTED: [Bullet; 6] = [
        Bullet::GoodAtInfinityDirection,
        Bullet::GoodWithSmallB2,
        Bullet::GoodGeneric,
        Bullet::PotentiallyGood,
        Bullet::BalancedSmallTerms,
        Bullet::DeepCloseToOne,
    ];

    pub const TWO_SEGMENTS: [Bullet; 11] = [
        Bullet::UnitB0SmallA3,
        Bullet::SmallB0,
        Bullet::SmallB0AndB2,
        Bullet::SmallB2DoubleRoot,
        Bullet::SmallA2A3Root,
        Bullet::LargeGamma,
        Bullet::SmallB1,
        Bullet::SmallB1B0,
        Bullet::GammaNearOne,
        Bullet::RootNearHalf,
        Bullet::DeepFarFromOne,
    ];

    pub fn verdict(self) -> ShapeKind {
        if Bullet::CONNECTED.contains(&self) {
            ShapeKind::Connected
        } else {
            ShapeKind::TwoComponents
        }
    }

    /// The condition in valuation notation (`v(x) > 0` means `|x| < 1`).
    pub fn condition(self) -> &'static str {
        match self {
            Bullet::GoodAtInfinityDirection => "v(a3) = 0, v(a2) > 0, v(b0) = 0",
            Bullet::GoodWithSmallB2 => "v(a3) = v(a2) = v(b0) = 0, v(b2) > 0, v(g(gamma)) = 0",
            Bullet::GoodGeneric => "v(a3) = v(a2) = v(b0) = v(b2) = 0, v(g(gamma)) = 0",
            Bullet::PotentiallyGood => "v(a2) >= v(a3) > 0, v(g(gamma)) = 0",
            Bullet::BalancedSmallTerms => "v(a2) = 0, v(b1) >= v(a3) = v(b0) > 0",
            Bullet::DeepCloseToOne => "unit a3, a2, b2, b0; v(g(gamma)) > 0; v(gamma - 1) >= v(beta - 1/2) > 0",
            Bullet::UnitB0SmallA3 => "v(a3) > 0, v(a2) = 0, v(b0) = 0",
            Bullet::SmallB0 => "v(a3) = 0, v(b0) > 0, not (v(a2) = 0 and v(b2) > 0)",
            Bullet::SmallB0AndB2 => "v(a3) = v(a2) = 0, v(b0) > 0, v(b2) > 0",
            Bullet::SmallB2DoubleRoot => "v(a3) = v(a2) = v(b0) = 0, v(b2) > 0, v(g(gamma)) > 0",
            Bullet::SmallA2A3Root => "v(a2) >= v(a3) > 0, v(g(gamma)) > 0",
            Bullet::LargeGamma => "0 < v(a2) < v(a3)",
            Bullet::SmallB1 => "v(a2) = 0, 0 < v(b1) < v(a3), v(b0) > 0",
            Bullet::SmallB1B0 => "v(a2) = 0, 0 < v(a3) <= v(b1), v(a3) < v(b0)",
            Bullet::GammaNearOne => "unit a3, a2, b2, b0; v(g(gamma)) > 0; v(gamma - 1) > 0 and no root of g near 1/2",
            Bullet::RootNearHalf => "unit a3, a2, b2, b0; v(g(gamma)) > 0; a root of g near 1/2 and v(gamma - 1) = 0",
            Bullet::DeepFarFromOne => "unit a3, a2, b2, b0; v(g(gamma)) > 0; v(beta - 1/2) > v(gamma - 1) > 0",
        }
    }

    fn holds(self, p: &ResidueProfile, deep: Option<&DeepCaseParams>) -> bool {
        let zero = Valuation::Finite(Exponent::ZERO);
        let pos = |v: Valuation| v > zero;
        let a3 = Valuation::Finite(p.v_a3);
        let b0 = Valuation::Finite(p.v_b0);
        let small_g = p.g_gamma_small();
        let double = p.in_double_root_branch();
        let deep_vals = || {
            let d = deep?;
            let vq = d.q.valuation_lower_bound();
            let vp = d.p.valuation_lower_bound();
            Some((vp, vq))
        };
        match self {
            Bullet::GoodAtInfinityDirection => p.a3_unit() && !p.a2_unit() && p.b0_unit(),
            Bullet::GoodWithSmallB2 => p.a3_unit() && p.a2_unit() && p.b0_unit() && !p.b2_unit() && !small_g,
            Bullet::GoodGeneric => p.a3_unit() && p.a2_unit() && p.b0_unit() && p.b2_unit() && !small_g,
            Bullet::PotentiallyGood => pos(a3) && p.gamma_integral() && pos(p.v_a2) && !small_g,
            Bullet::BalancedSmallTerms => p.a2_unit() && pos(a3) && p.v_b1 >= a3 && a3 == b0,
            Bullet::DeepCloseToOne => deep_vals().is_some_and(|(vp, vq)| vq >= vp && pos(vp)),
            Bullet::UnitB0SmallA3 => pos(a3) && p.a2_unit() && p.b0_unit(),
            Bullet::SmallB0 => p.a3_unit() && pos(b0) && !(p.a2_unit() && !p.b2_unit()),
            Bullet::SmallB0AndB2 => p.a3_unit() && p.a2_unit() && pos(b0) && !p.b2_unit(),
            Bullet::SmallB2DoubleRoot => p.a3_unit() && p.a2_unit() && p.b0_unit() && !p.b2_unit() && small_g,
            Bullet::SmallA2A3Root => pos(a3) && p.gamma_integral() && pos(p.v_a2) && small_g,
            Bullet::LargeGamma => pos(p.v_a2) && p.v_a2 < a3,
            Bullet::SmallB1 => p.a2_unit() && pos(p.v_b1) && p.v_b1 < a3 && pos(b0),
            Bullet::SmallB1B0 => p.a2_unit() && pos(a3) && a3 <= p.v_b1 && a3 < b0,
            Bullet::GammaNearOne => double && p.gamma_residue_is_one() && !p.g_bar_vanishes_at_half(),
            Bullet::RootNearHalf => double && p.g_bar_vanishes_at_half() && !p.gamma_residue_is_one(),
            Bullet::DeepFarFromOne => deep_vals().is_some_and(|(vp, vq)| vp > vq && pos(vq)),
        }
    }
}

impl fmt::Display for Bullet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.condition())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BulletMatch {
    /// The first matching condition; `None` when no two-segment condition
    /// matches either and the verdict comes from the complement.
    pub bullet: Option<Bullet>,
    pub verdict: ShapeKind,
}

/// Connected exactly when some condition of the connected list holds.
pub fn match_bullets(p: &ResidueProfile, deep: Option<&DeepCaseParams>) -> BulletMatch {
    if let Some(b) = Bullet::CONNECTED.into_iter().find(|b| b.holds(p, deep)) {
        return BulletMatch { bullet: Some(b), verdict: ShapeKind::Connected };
    }
    let b = Bullet::TWO_SEGMENTS.into_iter().find(|b| b.holds(p, deep));
    BulletMatch { bullet: b, verdict: ShapeKind::TwoComponents }
}
