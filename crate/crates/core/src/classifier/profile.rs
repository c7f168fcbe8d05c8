use num_rational::BigRational;
use num_traits::Zero;

use crate::ratfunc::CubicCoefficients;
use crate::series::{rat, Exponent, PuiseuxNumber, QPoly, Valuation};

use super::deep::DeepCaseParams;
use super::{CaseLabel, CaseLeaf, ClassifyError};

/// Exact valuations and residues of the five coefficients, plus the derived
/// quantities every residue test in the taxonomy is phrased in.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidueProfile {
    pub v_a3: Exponent,
    pub v_a2: Valuation,
    pub v_b2: Exponent,
    pub v_b1: Valuation,
    pub v_b0: Exponent,
    /// `v(g(gamma)) = v(Res) - 2 v(a3)` where `gamma = -a2/a3`.
    pub v_g_gamma: Exponent,
    /// Residues of `a3, a2, b2, b1, b0`.
    pub residues: [BigRational; 5],
    /// Residue of `gamma`, when `v(a2) >= v(a3)`.
    pub gamma_residue: Option<BigRational>,
    /// `b2 z^2 + b1 z + b0` mod `t`.
    pub g_bar: QPoly,
}

impl ResidueProfile {
    pub fn of(c: &CubicCoefficients) -> Result<Self, ClassifyError> {
        let report = c.validate();
        if !report.is_valid() {
            return Err(ClassifyError::Invalid(report));
        }
        let finite = |x: &PuiseuxNumber, name: &str| -> Result<Exponent, ClassifyError> {
            x.valuation()?
                .finite()
                .ok_or_else(|| ClassifyError::Unclassifiable(format!("{name} vanishes")))
        };
        let v_a3 = finite(&c.a3, "a3")?;
        let v_b2 = finite(&c.b2, "b2")?;
        let v_b0 = finite(&c.b0, "b0")?;
        let v_a2 = c.a2.valuation()?;
        let v_b1 = c.b1.valuation()?;
        let v_res = finite(&c.resultant(), "the resultant")?;
        let residues = [&c.a3, &c.a2, &c.b2, &c.b1, &c.b0].map(|x| x.coefficient(Exponent::ZERO));
        let gamma_residue = match v_a2 {
            Valuation::Finite(v) if v < v_a3 => None,
            Valuation::Finite(v) if v > v_a3 => Some(BigRational::zero()),
            Valuation::Finite(v) => {
                let lead_a2 = c.a2.coefficient(v);
                let lead_a3 = c.a3.coefficient(v_a3);
                Some(-lead_a2 / lead_a3)
            }
            Valuation::Infinite => Some(BigRational::zero()),
        };
        let g_bar = QPoly::new(vec![residues[4].clone(), residues[3].clone(), residues[2].clone()]);
        Ok(ResidueProfile {
            v_a3,
            v_a2,
            v_b2,
            v_b1,
            v_b0,
            v_g_gamma: v_res - v_a3.scale(2),
            residues,
            gamma_residue,
            g_bar,
        })
    }

    pub fn a3_unit(&self) -> bool {
        self.v_a3.is_zero()
    }

    pub fn a2_unit(&self) -> bool {
        self.v_a2 == Valuation::Finite(Exponent::ZERO)
    }

    pub fn b2_unit(&self) -> bool {
        self.v_b2.is_zero()
    }

    pub fn b1_unit(&self) -> bool {
        self.v_b1 == Valuation::Finite(Exponent::ZERO)
    }

    pub fn b0_unit(&self) -> bool {
        self.v_b0.is_zero()
    }

    /// `|gamma| <= 1`.
    pub fn gamma_integral(&self) -> bool {
        self.v_a2 >= Valuation::Finite(self.v_a3)
    }

    /// `g(gamma)` reduces to zero.
    pub fn g_gamma_small(&self) -> bool {
        self.v_g_gamma.is_positive()
    }

    pub fn gamma_residue_is_one(&self) -> bool {
        self.gamma_residue.as_ref().is_some_and(|g| *g == rat(1, 1))
    }

    pub fn g_bar_vanishes_at_half(&self) -> bool {
        self.g_bar.eval(&rat(1, 2)).is_zero()
    }

    /// The residue conditions shared by both deep branches: every one of
    /// `a3, a2, b2, b0` a unit and `g(gamma)` small.
    pub fn in_double_root_branch(&self) -> bool {
        self.a3_unit() && self.a2_unit() && self.b0_unit() && self.b2_unit() && self.g_gamma_small()
    }

    /// Whether the residue data singles out the deep leaf: `gamma` reduces to
    /// `1` and `g` has the residue root `1/2`.
    pub fn is_deep(&self) -> bool {
        self.in_double_root_branch() && self.gamma_residue_is_one() && self.g_bar_vanishes_at_half()
    }
}

/// Walks both decision trees down to a leaf, without deep subcases.
pub fn classify_leaf(p: &ResidueProfile) -> Result<CaseLeaf, ClassifyError> {
    let v_a3 = Valuation::Finite(p.v_a3);
    let leaf = if !p.a3_unit() {
        if !p.a2_unit() {
            if p.gamma_integral() {
                if p.g_gamma_small() {
                    CaseLeaf::C1111
                } else {
                    CaseLeaf::C1112
                }
            } else {
                CaseLeaf::C112
            }
        } else if p.b0_unit() {
            CaseLeaf::C122
        } else if p.b1_unit() {
            CaseLeaf::C1212
        } else if p.v_b1 < v_a3 {
            CaseLeaf::C12111
        } else if p.v_a3 < p.v_b0 {
            CaseLeaf::C12112
        } else {
            // v(b1) >= v(a3) = v(b0); a strict inequality on the left has the
            // same reduction type as equality
            CaseLeaf::C12113
        }
    } else if !p.a2_unit() {
        if p.b0_unit() {
            CaseLeaf::C212
        } else {
            CaseLeaf::C211
        }
    } else if !p.b0_unit() {
        if !p.b2_unit() {
            CaseLeaf::C2211
        } else if p.g_gamma_small() {
            CaseLeaf::C22121
        } else {
            CaseLeaf::C22122
        }
    } else if !p.b2_unit() {
        if p.g_gamma_small() {
            CaseLeaf::C22211
        } else {
            CaseLeaf::C22212
        }
    } else if !p.g_gamma_small() {
        CaseLeaf::C22222
    } else if p.is_deep() {
        CaseLeaf::C222211
    } else {
        CaseLeaf::C222212
    };
    Ok(leaf)
}

/// Deep subcase from `v(p)`, `v(q)` and the three cancellation tests.
pub fn deep_subcase(params: &DeepCaseParams) -> Result<u8, ClassifyError> {
    let vq = params.q.valuation()?.finite().ok_or_else(|| ClassifyError::Unclassifiable("gamma = 1".into()))?;
    let vp = match params.p.valuation() {
        Ok(Valuation::Finite(v)) => v,
        Ok(Valuation::Infinite) => return Ok(1),
        Err(_) if params.p.precision().is_some_and(|prec| prec > vq) => return Ok(1),
        Err(e) => return Err(e.into()),
    };
    if vp > vq {
        return Ok(1);
    }
    if vp < vq {
        return Ok(3);
    }
    let cancels = |x: PuiseuxNumber| x.valuation_lower_bound() > Valuation::Finite(vp);
    let two = PuiseuxNumber::from_int(2);
    let four = PuiseuxNumber::from_int(4);
    Ok(if cancels(&params.p + &params.q) {
        2
    } else if cancels(&params.p - &(&two * &params.q)) {
        4
    } else if cancels(&(&four * &params.p) + &params.q) {
        5
    } else {
        6
    })
}

/// Full label, computing the deep parameters when needed.
pub fn label_of(
    c: &CubicCoefficients,
    profile: &ResidueProfile,
    precision: Exponent,
) -> Result<(CaseLabel, Option<DeepCaseParams>), ClassifyError> {
    let leaf = classify_leaf(profile)?;
    if leaf != CaseLeaf::C222211 {
        return Ok((CaseLabel::leaf(leaf), None));
    }
    let params = DeepCaseParams::of(c, precision)?;
    let k = deep_subcase(&params)?;
    Ok((CaseLabel::deep(k), Some(params)))
}
