//! The inequality catalog: identifiers, hypothesis schemas, bound formulas,
//! and the uniform check runner.
//!
//! Every entry compares an operator quantity against a closed-form bound.
//! Reports always orient `slack = lhs − rhs` so that nonnegative slack means
//! "the inequality holds": for lower bounds `lhs` is the measured quantity
//! and `rhs` the bound; for the four upper-bound entries (`BERN_1`,
//! `AZIZ_POLAR_UPPER`, `LEMMA2`, `SCALE_ID_15`) the roles are flipped so the
//! bound sits on the left.

use alloc::vec::Vec;
use num_complex::Complex64;
#[cfg(not(feature = "std"))]
use num_traits::Float;

use crate::circle;
use crate::error::Error;
use crate::operators::{
    generalized_derivative, generalized_polar_derivative, polar_derivative, GammaWeights,
    PolarPoint,
};
use crate::poly::{DiskRadius, RootForm, DEFAULT_PREDICATE_TOL};

/// Scale-relative absolute tolerance for pass/fail decisions.
pub const ABS_TOL_SCALE: f64 = 1e-9;
/// Relative tolerance for pass/fail decisions.
pub const REL_TOL: f64 = 1e-8;
/// `equality_sharp` triggers within this multiple of the absolute tolerance.
pub const SHARP_FACTOR: f64 = 10.0;
/// Fixed absolute tolerance for the scalar inequality `LEMMA1`.
pub const LEMMA1_ABS_TOL: f64 = 1e-12;

/// Identifiers for the catalog entries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[allow(missing_docs)]
pub enum InequalityId {
    Bern1,
    Turan2,
    DubininPt3,
    Dubinin4,
    Malik5,
    RatherPt6,
    Rather7,
    AzizPolarUpper,
    AzizRather8,
    RatherPolar9,
    ThmF,
    ThmG10,
    ThmH,
    ThmI,
    Thm1_11,
    Cor1_12,
    Thm2,
    Cor2,
    Lemma1,
    Lemma2,
    Lemma3_13,
    ScaleId15,
}

/// Admissible range for the disk radius k.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KRange {
    Any,
    AtMostOne,
    AtLeastOne,
    ExactlyOne,
}

impl KRange {
    pub fn admits(self, k: f64) -> bool {
        match self {
            KRange::Any => k > 0.0,
            KRange::AtMostOne => k > 0.0 && k <= 1.0,
            KRange::AtLeastOne => k >= 1.0,
            KRange::ExactlyOne => (k - 1.0).abs() <= 1e-12,
        }
    }
}

/// Whether and how an entry constrains the polar point.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AlphaRequirement {
    /// The entry involves no polar point.
    NotUsed,
    /// A polar point is consumed but its modulus is unconstrained.
    Unconstrained,
    ModulusAtLeastK,
    ModulusAtLeastOne,
}

impl AlphaRequirement {
    pub fn uses_alpha(self) -> bool {
        self != AlphaRequirement::NotUsed
    }

    /// Minimum admissible `|α|` given the disk radius, if constrained.
    pub fn floor(self, k: f64) -> Option<f64> {
        match self {
            AlphaRequirement::NotUsed | AlphaRequirement::Unconstrained => None,
            AlphaRequirement::ModulusAtLeastK => Some(k),
            AlphaRequirement::ModulusAtLeastOne => Some(1.0),
        }
    }
}

/// Shape of the checked statement.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckForm {
    /// Compares circle maxima.
    MaxForm,
    /// Compares a pointwise minimum over the circle against a constant.
    Pointwise,
    /// Scalar inequality over a vector in `[0,1]^n` (no polynomial).
    Scalar,
}

/// Direction of the bound relative to the measured quantity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Lower,
    Upper,
}

/// Static hypothesis schema of one catalog entry.
#[derive(Debug, Clone, Copy)]
pub struct IdSchema {
    pub k_range: KRange,
    pub alpha: AlphaRequirement,
    pub form: CheckForm,
    pub direction: Direction,
    pub uses_gamma: bool,
    pub needs_zeros_in_disk: bool,
}

impl InequalityId {
    pub const ALL: [InequalityId; 22] = [
        InequalityId::Bern1,
        InequalityId::Turan2,
        InequalityId::DubininPt3,
        InequalityId::Dubinin4,
        InequalityId::Malik5,
        InequalityId::RatherPt6,
        InequalityId::Rather7,
        InequalityId::AzizPolarUpper,
        InequalityId::AzizRather8,
        InequalityId::RatherPolar9,
        InequalityId::ThmF,
        InequalityId::ThmG10,
        InequalityId::ThmH,
        InequalityId::ThmI,
        InequalityId::Thm1_11,
        InequalityId::Cor1_12,
        InequalityId::Thm2,
        InequalityId::Cor2,
        InequalityId::Lemma1,
        InequalityId::Lemma2,
        InequalityId::Lemma3_13,
        InequalityId::ScaleId15,
    ];

    pub fn name(self) -> &'static str {
        match self {
            InequalityId::Bern1 => "BERN_1",
            InequalityId::Turan2 => "TURAN_2",
            InequalityId::DubininPt3 => "DUBININ_PT_3",
            InequalityId::Dubinin4 => "DUBININ_4",
            InequalityId::Malik5 => "MALIK_5",
            InequalityId::RatherPt6 => "RATHER_PT_6",
            InequalityId::Rather7 => "RATHER_7",
            InequalityId::AzizPolarUpper => "AZIZ_POLAR_UPPER",
            InequalityId::AzizRather8 => "AZIZ_RATHER_8",
            InequalityId::RatherPolar9 => "RATHER_POLAR_9",
            InequalityId::ThmF => "THM_F",
            InequalityId::ThmG10 => "THM_G_10",
            InequalityId::ThmH => "THM_H",
            InequalityId::ThmI => "THM_I",
            InequalityId::Thm1_11 => "THM1_11",
            InequalityId::Cor1_12 => "COR1_12",
            InequalityId::Thm2 => "THM2",
            InequalityId::Cor2 => "COR2",
            InequalityId::Lemma1 => "LEMMA1",
            InequalityId::Lemma2 => "LEMMA2",
            InequalityId::Lemma3_13 => "LEMMA3_13",
            InequalityId::ScaleId15 => "SCALE_ID_15",
        }
    }

    pub fn from_name(s: &str) -> Option<InequalityId> {
        InequalityId::ALL.iter().copied().find(|id| id.name() == s)
    }

    pub fn schema(self) -> IdSchema {
        use AlphaRequirement as A;
        use CheckForm as F;
        use Direction as D;
        use KRange as K;
        let s = |k_range, alpha, form, direction, uses_gamma, needs_zeros_in_disk| IdSchema {
            k_range,
            alpha,
            form,
            direction,
            uses_gamma,
            needs_zeros_in_disk,
        };
        match self {
            InequalityId::Bern1 => s(K::Any, A::NotUsed, F::MaxForm, D::Upper, false, false),
            InequalityId::Turan2 => s(K::ExactlyOne, A::NotUsed, F::MaxForm, D::Lower, false, true),
            InequalityId::DubininPt3 => s(K::ExactlyOne, A::NotUsed, F::Pointwise, D::Lower, false, true),
            InequalityId::Dubinin4 => s(K::ExactlyOne, A::NotUsed, F::MaxForm, D::Lower, false, true),
            InequalityId::Malik5 => s(K::AtMostOne, A::NotUsed, F::MaxForm, D::Lower, false, true),
            InequalityId::RatherPt6 => s(K::AtMostOne, A::NotUsed, F::Pointwise, D::Lower, false, true),
            InequalityId::Rather7 => s(K::AtMostOne, A::NotUsed, F::Pointwise, D::Lower, false, true),
            InequalityId::AzizPolarUpper => s(K::Any, A::ModulusAtLeastOne, F::MaxForm, D::Upper, false, false),
            InequalityId::AzizRather8 => s(K::AtMostOne, A::ModulusAtLeastK, F::MaxForm, D::Lower, false, true),
            InequalityId::RatherPolar9 => s(K::AtMostOne, A::ModulusAtLeastK, F::MaxForm, D::Lower, false, true),
            InequalityId::ThmF => s(K::AtMostOne, A::ModulusAtLeastK, F::MaxForm, D::Lower, true, true),
            InequalityId::ThmG10 => s(K::AtMostOne, A::NotUsed, F::Pointwise, D::Lower, true, true),
            InequalityId::ThmH => s(K::AtMostOne, A::ModulusAtLeastOne, F::MaxForm, D::Lower, true, true),
            InequalityId::ThmI => s(K::ExactlyOne, A::ModulusAtLeastOne, F::MaxForm, D::Lower, true, true),
            InequalityId::Thm1_11 => s(K::AtLeastOne, A::NotUsed, F::MaxForm, D::Lower, true, true),
            InequalityId::Cor1_12 => s(K::AtLeastOne, A::NotUsed, F::MaxForm, D::Lower, false, true),
            InequalityId::Thm2 => s(K::AtLeastOne, A::ModulusAtLeastK, F::MaxForm, D::Lower, true, true),
            InequalityId::Cor2 => s(K::AtLeastOne, A::ModulusAtLeastK, F::MaxForm, D::Lower, false, true),
            InequalityId::Lemma1 => s(K::Any, A::NotUsed, F::Scalar, D::Lower, false, false),
            InequalityId::Lemma2 => s(K::AtLeastOne, A::NotUsed, F::MaxForm, D::Upper, false, false),
            InequalityId::Lemma3_13 => s(K::AtLeastOne, A::NotUsed, F::MaxForm, D::Lower, false, true),
            InequalityId::ScaleId15 => s(K::AtLeastOne, A::Unconstrained, F::MaxForm, D::Upper, true, true),
        }
    }
}

impl core::fmt::Display for InequalityId {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(self.name())
    }
}

impl core::str::FromStr for InequalityId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        InequalityId::from_name(s).ok_or(Error::SchemaViolation("unknown inequality id"))
    }
}

/// Instance data echoed back in a report.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Witness {
    pub root_form: Option<RootForm>,
    pub gamma: Option<GammaWeights>,
    pub alpha: Option<Complex64>,
    pub k: Option<f64>,
    /// The x-vector for the scalar entry.
    pub x: Option<Vec<f64>>,
    /// Angle attaining the reported lhs, when it came from a circle scan.
    pub lhs_theta: Option<f64>,
    /// Angle attaining the reported rhs, when it came from a circle scan.
    pub rhs_theta: Option<f64>,
}

/// Outcome of one inequality check.
#[derive(Debug, Clone, PartialEq)]
pub struct CheckReport {
    pub id: InequalityId,
    pub lhs: Option<f64>,
    pub rhs: Option<f64>,
    /// `lhs − rhs`; nonnegative means the inequality holds.
    pub slack: Option<f64>,
    /// `slack / max(rhs, ε)`.
    pub rel_slack: Option<f64>,
    /// Verdict under the pinned tolerances; absent when the hypothesis failed.
    pub pass: Option<bool>,
    pub hypothesis_ok: bool,
    /// True when the slack is within rounding of zero — the instance attains
    /// the bound.
    pub equality_sharp: bool,
    pub witness: Witness,
    /// Short reason for hypothesis failures.
    pub note: Option<&'static str>,
}

pub(crate) fn hypothesis_failure(
    id: InequalityId,
    witness: Witness,
    note: &'static str,
) -> CheckReport {
    CheckReport {
        id,
        lhs: None,
        rhs: None,
        slack: None,
        rel_slack: None,
        pass: None,
        hypothesis_ok: false,
        equality_sharp: false,
        witness,
        note: Some(note),
    }
}

fn assemble(
    id: InequalityId,
    lhs: f64,
    rhs: f64,
    witness: Witness,
    abs_tol: f64,
    rel_tol: f64,
) -> CheckReport {
    let slack = lhs - rhs;
    let rel_slack = slack / rhs.max(f64::MIN_POSITIVE);
    let pass = slack >= -(abs_tol + rel_tol * rhs.abs());
    let equality_sharp = slack.abs() <= SHARP_FACTOR * abs_tol;
    CheckReport {
        id,
        lhs: Some(lhs),
        rhs: Some(rhs),
        slack: Some(slack),
        rel_slack: Some(rel_slack),
        pass: Some(pass),
        hypothesis_ok: true,
        equality_sharp,
        witness,
        note: None,
    }
}

/// Assemble a polynomial-entry report under the standard scale-relative
/// tolerances.
pub(crate) fn complete(id: InequalityId, lhs: f64, rhs: f64, witness: Witness) -> CheckReport {
    let abs_tol = ABS_TOL_SCALE * lhs.abs().max(rhs.abs());
    assemble(id, lhs, rhs, witness, abs_tol, REL_TOL)
}

/// Parameters consumed by [`bound_value`]. Fields irrelevant to a given
/// entry are ignored (e.g. `alpha_mod` without a polar point, `maxmod` for
/// the pointwise entries).
#[derive(Debug, Clone, Copy)]
pub struct BoundParams {
    pub n: usize,
    pub k: f64,
    /// `|α|`.
    pub alpha_mod: f64,
    /// `|a_0|` of the expanded polynomial.
    pub a0_mod: f64,
    /// `|a_n|` of the expanded polynomial.
    pub an_mod: f64,
    /// `Λ = Σ γ_j`.
    pub lambda: f64,
    /// `min_j γ_j`.
    pub gamma_min: f64,
    /// Circle maximum of the reference polynomial: `max_{|z|=1}|P|` for most
    /// entries, `max_{|z|=1}|D_α^γ[P]|` for `SCALE_ID_15`.
    pub maxmod: f64,
}

fn require(cond: bool, what: &'static str) -> Result<(), Error> {
    if cond {
        Ok(())
    } else {
        Err(Error::HypothesisViolated(what))
    }
}

fn k_range_violation(range: KRange) -> &'static str {
    match range {
        KRange::Any => "k must be positive",
        KRange::AtMostOne => "requires 0 < k <= 1",
        KRange::AtLeastOne => "requires k >= 1",
        KRange::ExactlyOne => "requires k = 1",
    }
}

fn alpha_floor_ok(alpha_mod: f64, floor: f64) -> bool {
    alpha_mod >= floor - 1e-9 * floor.max(1.0)
}

/// Closed-form bound for one entry.
///
/// Validates the entry's hypothesis on the scalar parameters and returns the
/// bound's numeric value. For the upper-bound entries this is the upper
/// bound; for lower-bound entries, the lower bound. `LEMMA1` has no such
/// form and returns an error.
pub fn bound_value(id: InequalityId, p: &BoundParams) -> Result<f64, Error> {
    let schema = id.schema();
    if id == InequalityId::Lemma1 {
        return Err(Error::InvalidParameter(
            "LEMMA1 is a scalar inequality; use lemma1_check",
        ));
    }
    require(p.n >= 1, "degree at least 1 required")?;
    require(p.k.is_finite() && schema.k_range.admits(p.k), k_range_violation(schema.k_range))?;
    if let Some(floor) = schema.alpha.floor(p.k) {
        let what = match schema.alpha {
            AlphaRequirement::ModulusAtLeastK => "requires |alpha| >= k",
            _ => "requires |alpha| >= 1",
        };
        require(p.alpha_mod.is_finite() && alpha_floor_ok(p.alpha_mod, floor), what)?;
    }
    let nf = p.n as f64;
    let kn = p.k.powi(p.n as i32);
    let needs_ratio = matches!(
        id,
        InequalityId::DubininPt3
            | InequalityId::Dubinin4
            | InequalityId::RatherPt6
            | InequalityId::Rather7
            | InequalityId::RatherPolar9
            | InequalityId::ThmG10
            | InequalityId::ThmH
            | InequalityId::ThmI
            | InequalityId::Thm1_11
            | InequalityId::Cor1_12
            | InequalityId::Thm2
            | InequalityId::Cor2
    );
    if needs_ratio {
        if !(p.an_mod.is_finite() && p.an_mod > 0.0) {
            return Err(Error::InvalidParameter("leading coefficient modulus must be positive"));
        }
        if !(p.a0_mod.is_finite() && p.a0_mod >= 0.0) {
            return Err(Error::InvalidParameter("constant coefficient modulus must be nonnegative"));
        }
    }
    if schema.uses_gamma {
        if !(p.lambda.is_finite() && p.lambda > 0.0) {
            return Err(Error::InvalidParameter("lambda must be positive"));
        }
        if !(p.gamma_min.is_finite() && (0.0..=p.lambda).contains(&p.gamma_min)) {
            return Err(Error::InvalidParameter("gamma_min must lie in [0, lambda]"));
        }
    }
    if schema.form == CheckForm::MaxForm && !(p.maxmod.is_finite() && p.maxmod >= 0.0) {
        return Err(Error::InvalidParameter("maxmod must be nonnegative and finite"));
    }

    // Zero-location refinements: fk uses the k-powered leading term, g the
    // plain one.
    let fk = (kn * p.an_mod - p.a0_mod) / (kn * p.an_mod + p.a0_mod);
    let g = (p.an_mod - p.a0_mod) / (p.an_mod + p.a0_mod);
    let am = p.alpha_mod;

    Ok(match id {
        InequalityId::Bern1 => nf * p.maxmod,
        InequalityId::Turan2 => 0.5 * nf * p.maxmod,
        InequalityId::DubininPt3 => 0.5 * (nf + g),
        InequalityId::Dubinin4 => 0.5 * (nf + g) * p.maxmod,
        InequalityId::Malik5 => nf / (1.0 + p.k) * p.maxmod,
        InequalityId::RatherPt6 => nf / (1.0 + p.k) * (1.0 + p.k / nf * fk),
        InequalityId::Rather7 => nf / (1.0 + p.k) * (1.0 + p.k / nf * fk),
        InequalityId::AzizPolarUpper => nf * am * p.maxmod,
        InequalityId::AzizRather8 => nf * (am - p.k) / (1.0 + p.k) * p.maxmod,
        InequalityId::RatherPolar9 => {
            nf * (am - p.k) / (1.0 + p.k) * (1.0 + p.k / nf * fk) * p.maxmod
        }
        InequalityId::ThmF => p.lambda * (am - p.k) / (1.0 + p.k) * p.maxmod,
        InequalityId::ThmG10 => p.k / (1.0 + p.k) * (p.lambda / p.k + p.gamma_min * fk),
        InequalityId::ThmH => (am - p.k) / (1.0 + p.k) * (p.lambda + p.k * p.gamma_min * fk) * p.maxmod,
        InequalityId::ThmI => 0.5 * (am - 1.0) * (p.lambda + p.gamma_min * g) * p.maxmod,
        InequalityId::Thm1_11 => {
            p.lambda / (1.0 + kn) * (1.0 + p.gamma_min / p.lambda * fk) * p.maxmod
        }
        InequalityId::Cor1_12 => nf / (1.0 + kn) * (1.0 + fk / nf) * p.maxmod,
        InequalityId::Thm2 => (am - p.k) / (1.0 + kn) * (p.lambda + p.gamma_min * g) * p.maxmod,
        InequalityId::Cor2 => nf * (am - p.k) / (1.0 + kn) * (1.0 + g / nf) * p.maxmod,
        InequalityId::Lemma1 => unreachable!(),
        InequalityId::Lemma2 => kn * p.maxmod,
        InequalityId::Lemma3_13 => 2.0 * kn / (1.0 + kn) * p.maxmod,
        InequalityId::ScaleId15 => p.k.powi(p.n as i32 - 1) * p.maxmod,
    })
}

/// Run one catalog check on a polynomial instance.
///
/// Hypothesis violations (wrong k-range, |α| below its floor, zeros outside
/// the disk, missing γ/α, degree 0) yield `hypothesis_ok = false` with
/// `pass` absent; they are never graded.
pub fn run_check(
    id: InequalityId,
    r: &RootForm,
    gamma: Option<&GammaWeights>,
    alpha: Option<PolarPoint>,
    k: DiskRadius,
) -> CheckReport {
    run_check_with_tol(id, r, gamma, alpha, k, DEFAULT_PREDICATE_TOL)
}

/// [`run_check`] with an explicit zero-location tolerance: zeros are
/// accepted up to `|z| <= k·(1 + predicate_tol)`.
///
/// Roots recovered from coefficients place a multiplicity-m cluster only to
/// O(residual^(1/m)), so callers grading solved roots need a looser
/// predicate than the default.
pub fn run_check_with_tol(
    id: InequalityId,
    r: &RootForm,
    gamma: Option<&GammaWeights>,
    alpha: Option<PolarPoint>,
    k: DiskRadius,
    predicate_tol: f64,
) -> CheckReport {
    let schema = id.schema();
    let kv = k.value();
    let n = r.degree();
    let mut witness = Witness {
        root_form: Some(r.clone()),
        gamma: gamma.cloned(),
        alpha: alpha.map(|a| a.alpha),
        k: Some(kv),
        ..Witness::default()
    };

    if schema.form == CheckForm::Scalar {
        return hypothesis_failure(id, witness, "scalar entry; use lemma1_check");
    }
    if n == 0 {
        return hypothesis_failure(id, witness, "degree at least 1 required");
    }
    let g = if schema.uses_gamma {
        match gamma {
            Some(g) if g.len() == n => Some(g),
            Some(_) => return hypothesis_failure(id, witness, "gamma length must equal the degree"),
            None => return hypothesis_failure(id, witness, "gamma weights required"),
        }
    } else {
        None
    };
    let a = if schema.alpha.uses_alpha() {
        match alpha {
            Some(a) => Some(a),
            None => return hypothesis_failure(id, witness, "polar point required"),
        }
    } else {
        None
    };
    if !schema.k_range.admits(kv) {
        return hypothesis_failure(id, witness, k_range_violation(schema.k_range));
    }
    if let Some(floor) = schema.alpha.floor(kv) {
        let am = a.expect("gated above").alpha.norm();
        if !alpha_floor_ok(am, floor) {
            let what = match schema.alpha {
                AlphaRequirement::ModulusAtLeastK => "requires |alpha| >= k",
                _ => "requires |alpha| >= 1",
            };
            return hypothesis_failure(id, witness, what);
        }
    }
    if schema.needs_zeros_in_disk && !r.zeros_in_disk(kv, predicate_tol) {
        return hypothesis_failure(id, witness, "zeros must lie in |z| <= k");
    }

    // Lemma 3 is owned by the circle module; route there after the gates so
    // both entry points agree.
    if id == InequalityId::Lemma3_13 {
        return circle::boundary_growth_check(r, k);
    }

    let p = r.expand();
    let params = BoundParams {
        n,
        k: kv,
        alpha_mod: a.map_or(0.0, |a| a.alpha.norm()),
        a0_mod: p.coeff(0).norm(),
        an_mod: p.leading().norm(),
        lambda: g.map_or(0.0, |g| g.lambda()),
        gamma_min: g.map_or(0.0, |g| g.gamma_min()),
        maxmod: 0.0,
    };

    match schema.form {
        CheckForm::Pointwise => {
            let est = match id {
                InequalityId::DubininPt3 | InequalityId::RatherPt6 => {
                    circle::pointwise_dubinin_min(r, 1.0, circle::DEFAULT_FLOOR_FRAC)
                }
                InequalityId::Rather7 => circle::pointwise_ratio_min(
                    &p.derivative(),
                    &p,
                    1.0,
                    circle::DEFAULT_FLOOR_FRAC,
                ),
                InequalityId::ThmG10 => {
                    match generalized_derivative(r, g.expect("gated above")) {
                        Ok(pg) => circle::pointwise_ratio_min(&pg, &p, 1.0, circle::DEFAULT_FLOOR_FRAC),
                        Err(_) => return hypothesis_failure(id, witness, "generalized derivative unavailable"),
                    }
                }
                _ => unreachable!("no other pointwise entries"),
            };
            let est = match est {
                Ok(e) => e,
                Err(_) => return hypothesis_failure(id, witness, "no admissible circle samples"),
            };
            let rhs = match bound_value(id, &params) {
                Ok(b) => b,
                Err(Error::HypothesisViolated(what)) => return hypothesis_failure(id, witness, what),
                Err(_) => return hypothesis_failure(id, witness, "bound parameters invalid"),
            };
            witness.lhs_theta = Some(est.arg_theta);
            complete(id, est.value, rhs, witness)
        }
        CheckForm::MaxForm => {
            // Upper-bound entries report (bound, quantity); lower-bound
            // entries report (quantity, bound).
            match id {
                InequalityId::Bern1 | InequalityId::AzizPolarUpper => {
                    let maxp = circle::max_modulus(&p, 1.0);
                    let quantity = match id {
                        InequalityId::Bern1 => circle::max_modulus(&p.derivative(), 1.0),
                        _ => {
                            match polar_derivative(&p, a.expect("gated above")) {
                                Ok(d) => circle::max_modulus(&d, 1.0),
                                Err(_) => return hypothesis_failure(id, witness, "polar derivative unavailable"),
                            }
                        }
                    };
                    let bound = match bound_value(id, &BoundParams { maxmod: maxp.value, ..params }) {
                        Ok(b) => b,
                        Err(_) => return hypothesis_failure(id, witness, "bound parameters invalid"),
                    };
                    witness.lhs_theta = Some(maxp.arg_theta);
                    witness.rhs_theta = Some(quantity.arg_theta);
                    complete(id, bound, quantity.value, witness)
                }
                InequalityId::Lemma2 => {
                    let inner = circle::max_modulus(&p, 1.0);
                    let outer = circle::max_modulus(&p, kv);
                    let bound = match bound_value(id, &BoundParams { maxmod: inner.value, ..params }) {
                        Ok(b) => b,
                        Err(_) => return hypothesis_failure(id, witness, "bound parameters invalid"),
                    };
                    witness.lhs_theta = Some(inner.arg_theta);
                    witness.rhs_theta = Some(outer.arg_theta);
                    complete(id, bound, outer.value, witness)
                }
                InequalityId::ScaleId15 => {
                    let gw = g.expect("gated above");
                    let alpha = a.expect("gated above");
                    let scaled = match r.scale_domain(kv) {
                        Ok(s) => s,
                        Err(_) => return hypothesis_failure(id, witness, "rescaled root form unavailable"),
                    };
                    let alpha_over_k = PolarPoint { alpha: alpha.alpha / kv };
                    let lhs_poly = match generalized_polar_derivative(&scaled, gw, alpha_over_k) {
                        Ok(d) => d,
                        Err(_) => return hypothesis_failure(id, witness, "generalized polar derivative unavailable"),
                    };
                    let reference = match generalized_polar_derivative(r, gw, alpha) {
                        Ok(d) => d,
                        Err(_) => return hypothesis_failure(id, witness, "generalized polar derivative unavailable"),
                    };
                    let quantity = circle::max_modulus(&lhs_poly, 1.0);
                    let refmax = circle::max_modulus(&reference, 1.0);
                    let bound = match bound_value(id, &BoundParams { maxmod: refmax.value, ..params }) {
                        Ok(b) => b,
                        Err(_) => return hypothesis_failure(id, witness, "bound parameters invalid"),
                    };
                    witness.lhs_theta = Some(refmax.arg_theta);
                    witness.rhs_theta = Some(quantity.arg_theta);
                    complete(id, bound, quantity.value, witness)
                }
                _ => {
                    let lhs_poly = match id {
                        InequalityId::Turan2
                        | InequalityId::Dubinin4
                        | InequalityId::Malik5
                        | InequalityId::Cor1_12 => Ok(p.derivative()),
                        InequalityId::AzizRather8 | InequalityId::RatherPolar9 | InequalityId::Cor2 => {
                            polar_derivative(&p, a.expect("gated above"))
                        }
                        InequalityId::Thm1_11 => generalized_derivative(r, g.expect("gated above")),
                        InequalityId::ThmF
                        | InequalityId::ThmH
                        | InequalityId::ThmI
                        | InequalityId::Thm2 => {
                            generalized_polar_derivative(r, g.expect("gated above"), a.expect("gated above"))
                        }
                        _ => unreachable!("remaining ids are lower-bound max-form"),
                    };
                    let lhs_poly = match lhs_poly {
                        Ok(q) => q,
                        Err(_) => return hypothesis_failure(id, witness, "operator unavailable"),
                    };
                    let maxp = circle::max_modulus(&p, 1.0);
                    let est = circle::max_modulus(&lhs_poly, 1.0);
                    let rhs = match bound_value(id, &BoundParams { maxmod: maxp.value, ..params }) {
                        Ok(b) => b,
                        Err(Error::HypothesisViolated(what)) => {
                            return hypothesis_failure(id, witness, what)
                        }
                        Err(_) => return hypothesis_failure(id, witness, "bound parameters invalid"),
                    };
                    witness.lhs_theta = Some(est.arg_theta);
                    witness.rhs_theta = Some(maxp.arg_theta);
                    complete(id, est.value, rhs, witness)
                }
            }
        }
        CheckForm::Scalar => unreachable!("handled above"),
    }
}

/// Check the scalar inequality `Σ (1−x_j)/(1+x_j) >= (1−Πx_j)/(1+Πx_j)`
/// for `x ∈ [0,1]^n`, at a fixed absolute tolerance.
pub fn lemma1_check(xs: &[f64]) -> CheckReport {
    let id = InequalityId::Lemma1;
    let witness = Witness { x: Some(xs.to_vec()), ..Witness::default() };
    if xs.is_empty() {
        return hypothesis_failure(id, witness, "x-vector must be nonempty");
    }
    if !xs.iter().all(|x| x.is_finite() && (0.0..=1.0).contains(x)) {
        return hypothesis_failure(id, witness, "x-vector entries must lie in [0, 1]");
    }
    let lhs: f64 = xs.iter().map(|&x| (1.0 - x) / (1.0 + x)).sum();
    let prod: f64 = xs.iter().product();
    let rhs = (1.0 - prod) / (1.0 + prod);
    assemble(id, lhs, rhs, witness, LEMMA1_ABS_TOL, 0.0)
}

/// One row of the human-readable catalog table.
#[derive(Debug, Clone, Copy)]
pub struct CatalogEntry {
    pub id: InequalityId,
    pub eq_label: &'static str,
    pub k_range: &'static str,
    pub alpha_constraint: &'static str,
    pub formula: &'static str,
}

/// The full catalog, in canonical order.
pub fn catalog_table() -> Vec<CatalogEntry> {
    InequalityId::ALL
        .iter()
        .map(|&id| {
            let (eq_label, formula) = match id {
                InequalityId::Bern1 => ("Eq (1)", "max|P'| <= n max|P|"),
                InequalityId::Turan2 => ("Eq (2)", "max|P'| >= (n/2) max|P|"),
                InequalityId::DubininPt3 => (
                    "Thm A / Eq (3)",
                    "Re(zP'(z)/P(z)) >= (n/2)[1 + (1/n)(|an|-|a0|)/(|an|+|a0|)] on |z|=1",
                ),
                InequalityId::Dubinin4 => (
                    "Eq (4)",
                    "max|P'| >= (1/2)[n + (|an|-|a0|)/(|an|+|a0|)] max|P|",
                ),
                InequalityId::Malik5 => ("Eq (5)", "max|P'| >= n/(1+k) max|P|"),
                InequalityId::RatherPt6 => (
                    "Thm B / Eq (6)",
                    "Re(zP'(z)/P(z)) >= n/(1+k)[1 + (k/n)(k^n|an|-|a0|)/(k^n|an|+|a0|)] on |z|=1",
                ),
                InequalityId::Rather7 => (
                    "Thm C / Eq (7)",
                    "|P'(z)| >= n/(1+k)[1 + (k/n)(k^n|an|-|a0|)/(k^n|an|+|a0|)] |P(z)| on |z|=1",
                ),
                InequalityId::AzizPolarUpper => ("polar Bernstein", "max|Da[P]| <= n|a| max|P|"),
                InequalityId::AzizRather8 => (
                    "Thm D / Eq (8)",
                    "max|Da[P]| >= n(|a|-k)/(1+k) max|P|",
                ),
                InequalityId::RatherPolar9 => (
                    "Thm E / Eq (9)",
                    "max|Da[P]| >= n(|a|-k)/(1+k)[1 + (k/n)(k^n|an|-|a0|)/(k^n|an|+|a0|)] max|P|",
                ),
                InequalityId::ThmF => (
                    "Thm F",
                    "max|Da^g[P]| >= L(|a|-k)/(1+k) max|P|",
                ),
                InequalityId::ThmG10 => (
                    "Thm G / Eq (10)",
                    "|P^g(z)| >= k/(1+k)[L/k + gmin (k^n|an|-|a0|)/(k^n|an|+|a0|)] |P(z)| on |z|=1",
                ),
                InequalityId::ThmH => (
                    "Thm H",
                    "max|Da^g[P]| >= (|a|-k)/(1+k)[L + k gmin (k^n|an|-|a0|)/(k^n|an|+|a0|)] max|P|",
                ),
                InequalityId::ThmI => (
                    "Thm I",
                    "max|Da^g[P]| >= (|a|-1)/2 [L + gmin (|an|-|a0|)/(|an|+|a0|)] max|P|",
                ),
                InequalityId::Thm1_11 => (
                    "Thm 1 / Eq (11)",
                    "max|P^g| >= L/(1+k^n)[1 + (gmin/L)(k^n|an|-|a0|)/(k^n|an|+|a0|)] max|P|",
                ),
                InequalityId::Cor1_12 => (
                    "Cor 1 / Eq (12)",
                    "max|P'| >= n/(1+k^n)[1 + (1/n)(k^n|an|-|a0|)/(k^n|an|+|a0|)] max|P|",
                ),
                InequalityId::Thm2 => (
                    "Thm 2",
                    "max|Da^g[P]| >= (|a|-k)/(1+k^n)[L + gmin (|an|-|a0|)/(|an|+|a0|)] max|P|",
                ),
                InequalityId::Cor2 => (
                    "Cor 2",
                    "max|Da[P]| >= n(|a|-k)/(1+k^n)[1 + (1/n)(|an|-|a0|)/(|an|+|a0|)] max|P|",
                ),
                InequalityId::Lemma1 => (
                    "Lemma 1",
                    "sum (1-xj)/(1+xj) >= (1-prod xj)/(1+prod xj) for xj in [0;1]",
                ),
                InequalityId::Lemma2 => (
                    "Lemma 2",
                    "max_{|z|=k}|P| <= k^n max_{|z|=1}|P| for k >= 1",
                ),
                InequalityId::Lemma3_13 => (
                    "Lemma 3 / Eq (13)",
                    "max_{|z|=k}|P| >= 2k^n/(1+k^n) max_{|z|=1}|P|",
                ),
                InequalityId::ScaleId15 => (
                    "Eq (15)",
                    "max_{|z|=1}|D_{a/k}^g[P(k.)](z)| <= k^(n-1) max_{|z|=1}|Da^g[P]|",
                ),
            };
            let schema = id.schema();
            let k_range = match schema.k_range {
                KRange::Any => "none",
                KRange::AtMostOne => "0 < k <= 1",
                KRange::AtLeastOne => "k >= 1",
                KRange::ExactlyOne => "k = 1",
            };
            let alpha_constraint = match schema.alpha {
                AlphaRequirement::NotUsed => "none",
                AlphaRequirement::Unconstrained => "any alpha",
                AlphaRequirement::ModulusAtLeastK => "|alpha| >= k",
                AlphaRequirement::ModulusAtLeastOne => "|alpha| >= 1",
            };
            CatalogEntry { id, eq_label, k_range, alpha_constraint, formula }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use num_complex::Complex64;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn k(v: f64) -> DiskRadius {
        DiskRadius::new(v).unwrap()
    }

    fn binom_roots(kk: f64, n: usize) -> RootForm {
        RootForm::new(c(1.0, 0.0), vec![c(-kk, 0.0); n]).unwrap()
    }

    #[test]
    fn bernstein_is_sharp_on_monomials() {
        let r = RootForm::new(Complex64::from_polar(2.0, 0.6), vec![c(0.0, 0.0); 6]).unwrap();
        let rep = run_check(InequalityId::Bern1, &r, None, None, k(1.0));
        assert_eq!(rep.pass, Some(true));
        assert!(rep.equality_sharp, "slack {:?}", rep.slack);
        // lhs is the bound side for upper entries.
        assert!((rep.lhs.unwrap() - 12.0).abs() <= 1e-9 * 12.0);
    }

    #[test]
    fn turan_is_sharp_on_zn_plus_one() {
        // Roots of z^3 + 1: equality case of the lower bound with k = 1.
        let roots: Vec<Complex64> = (0..3)
            .map(|j| Complex64::from_polar(1.0, core::f64::consts::PI * (2.0 * j as f64 + 1.0) / 3.0))
            .collect();
        let r = RootForm::new(c(1.0, 0.0), roots).unwrap();
        let rep = run_check(InequalityId::Turan2, &r, None, None, k(1.0));
        assert_eq!(rep.pass, Some(true));
        assert!(rep.rel_slack.unwrap().abs() <= 1e-8, "rel slack {:?}", rep.rel_slack);
    }

    #[test]
    fn malik_is_sharp_on_binomial_powers() {
        for &kk in &[0.25, 0.5, 1.0] {
            let rep = run_check(InequalityId::Malik5, &binom_roots(kk, 4), None, None, k(kk));
            assert_eq!(rep.pass, Some(true), "k={kk}");
            assert!(rep.rel_slack.unwrap().abs() <= 1e-8, "k={kk}: {:?}", rep.rel_slack);
        }
    }

    #[test]
    fn thm1_worked_example_boundary_root() {
        // (z+2)^3 at k = 2 with unit weights: the refinement term vanishes
        // (|a0| = k^n|an| = 8), lhs = max|3(z+2)^2| = 27, and the bound is
        // (3/9)·27 = 9, so the relative gap is exactly 2 = (1+k^3)/(1+k) − 1.
        let g = GammaWeights::ones(3);
        let rep = run_check(InequalityId::Thm1_11, &binom_roots(2.0, 3), Some(&g), None, k(2.0));
        assert_eq!(rep.pass, Some(true));
        assert!((rep.lhs.unwrap() - 27.0).abs() <= 1e-9 * 27.0, "lhs {:?}", rep.lhs);
        assert!((rep.rhs.unwrap() - 9.0).abs() <= 1e-9 * 9.0, "rhs {:?}", rep.rhs);
        assert!((rep.rel_slack.unwrap() - 2.0).abs() <= 1e-8, "rel {:?}", rep.rel_slack);
        assert!(!rep.equality_sharp);
    }

    #[test]
    fn thm1_is_sharp_on_equimodular_zeros() {
        // z^3 + 8 puts every zero on |z| = 2: lhs = max|3z^2| = 3 and the
        // bound is (3/9)·max|z^3+8| = (3/9)·9 = 3.
        let roots: Vec<Complex64> = (0..3)
            .map(|j| Complex64::from_polar(2.0, core::f64::consts::PI * (2.0 * j as f64 + 1.0) / 3.0))
            .collect();
        let r = RootForm::new(c(1.0, 0.0), roots).unwrap();
        let g = GammaWeights::ones(3);
        let rep = run_check(InequalityId::Thm1_11, &r, Some(&g), None, k(2.0));
        assert_eq!(rep.pass, Some(true));
        assert!((rep.lhs.unwrap() - 3.0).abs() <= 1e-8 * 3.0, "lhs {:?}", rep.lhs);
        assert!((rep.rhs.unwrap() - 3.0).abs() <= 1e-8 * 3.0, "rhs {:?}", rep.rhs);
        assert!(rep.equality_sharp);
    }

    #[test]
    fn thm2_worked_example() {
        // (z+2)^3, unit weights, α = 4, k = 2:
        // lhs = max|18(z+2)^2| = 162, bound = (2/9)(3 − 7/9)·27 = 40/3.
        let g = GammaWeights::ones(3);
        let a = PolarPoint::new(c(4.0, 0.0)).unwrap();
        let rep = run_check(InequalityId::Thm2, &binom_roots(2.0, 3), Some(&g), Some(a), k(2.0));
        assert_eq!(rep.pass, Some(true));
        assert!((rep.lhs.unwrap() - 162.0).abs() <= 1e-9 * 162.0, "lhs {:?}", rep.lhs);
        let expected = 40.0 / 3.0;
        assert!((rep.rhs.unwrap() - expected).abs() <= 1e-9 * expected, "rhs {:?}", rep.rhs);
        assert!(!rep.equality_sharp);
    }

    #[test]
    fn hypothesis_failure_for_outside_zero() {
        let r = RootForm::new(c(1.0, 0.0), vec![c(1.5, 0.0)]).unwrap();
        let rep = run_check(InequalityId::Turan2, &r, None, None, k(1.0));
        assert!(!rep.hypothesis_ok);
        assert_eq!(rep.pass, None);
        assert!(rep.note.is_some());
    }

    #[test]
    fn hypothesis_failure_for_wrong_k_range() {
        let rep = run_check(InequalityId::Thm1_11, &binom_roots(0.25, 2), Some(&GammaWeights::ones(2)), None, k(0.5));
        assert!(!rep.hypothesis_ok);
        let rep = run_check(InequalityId::Malik5, &binom_roots(0.5, 2), None, None, k(2.0));
        assert!(!rep.hypothesis_ok);
    }

    #[test]
    fn hypothesis_failure_for_small_alpha() {
        let a = PolarPoint::new(c(0.5, 0.0)).unwrap();
        let rep = run_check(
            InequalityId::AzizRather8,
            &binom_roots(1.0, 3),
            None,
            Some(a),
            k(1.0),
        );
        assert!(!rep.hypothesis_ok);
    }

    #[test]
    fn missing_gamma_or_alpha_is_flagged() {
        let rep = run_check(InequalityId::Thm1_11, &binom_roots(1.0, 3), None, None, k(1.0));
        assert!(!rep.hypothesis_ok);
        let rep = run_check(
            InequalityId::ThmI,
            &binom_roots(1.0, 3),
            Some(&GammaWeights::ones(3)),
            None,
            k(1.0),
        );
        assert!(!rep.hypothesis_ok);
    }

    #[test]
    fn bound_value_validates_hypotheses() {
        let base = BoundParams {
            n: 3,
            k: 0.5,
            alpha_mod: 2.0,
            a0_mod: 0.5,
            an_mod: 1.0,
            lambda: 3.0,
            gamma_min: 1.0,
            maxmod: 4.0,
        };
        assert!(matches!(
            bound_value(InequalityId::Thm1_11, &base),
            Err(Error::HypothesisViolated(_))
        ));
        assert!(bound_value(InequalityId::Malik5, &base).is_ok());
        assert!(matches!(
            bound_value(InequalityId::Lemma1, &base),
            Err(Error::InvalidParameter(_))
        ));
        let small_alpha = BoundParams { alpha_mod: 0.25, ..base };
        assert!(matches!(
            bound_value(InequalityId::AzizRather8, &small_alpha),
            Err(Error::HypothesisViolated(_))
        ));
    }

    #[test]
    fn bound_value_thm2_worked_example() {
        let p = BoundParams {
            n: 3,
            k: 2.0,
            alpha_mod: 4.0,
            a0_mod: 8.0,
            an_mod: 1.0,
            lambda: 3.0,
            gamma_min: 1.0,
            maxmod: 27.0,
        };
        let b = bound_value(InequalityId::Thm2, &p).unwrap();
        assert!((b - 40.0 / 3.0).abs() <= 1e-12 * 40.0 / 3.0, "{b}");
    }

    #[test]
    fn lemma1_basic_values() {
        // x = (1/2, 1/2): lhs = 2/3, rhs = 3/5.
        let rep = lemma1_check(&[0.5, 0.5]);
        assert_eq!(rep.pass, Some(true));
        assert!((rep.lhs.unwrap() - 2.0 / 3.0).abs() <= 1e-15);
        assert!((rep.rhs.unwrap() - 0.6).abs() <= 1e-15);
        assert!(!rep.equality_sharp);

        // All ones: both sides vanish.
        let rep = lemma1_check(&[1.0; 5]);
        assert_eq!(rep.slack, Some(0.0));
        assert!(rep.equality_sharp);

        // Out-of-box input is a hypothesis failure, not a grade.
        let rep = lemma1_check(&[0.5, 1.2]);
        assert!(!rep.hypothesis_ok);
    }

    #[test]
    fn lemma1_singleton_is_identity() {
        for &x in &[0.0, 0.17, 0.93, 1.0] {
            let rep = lemma1_check(&[x]);
            assert_eq!(rep.slack, Some(0.0), "x={x}");
        }
    }

    #[test]
    fn catalog_table_is_complete() {
        let table = catalog_table();
        assert_eq!(table.len(), 22);
        let thm1 = table.iter().find(|e| e.id == InequalityId::Thm1_11).unwrap();
        assert_eq!(thm1.k_range, "k >= 1");
        assert_eq!(thm1.eq_label, "Thm 1 / Eq (11)");
        // Names are unique and round-trip through the parser.
        for e in &table {
            assert_eq!(InequalityId::from_name(e.id.name()), Some(e.id));
            assert!(!e.formula.contains(','), "CSV-unsafe formula for {}", e.id.name());
            assert!(!e.eq_label.contains(','));
        }
    }

    #[test]
    fn lemma2_check_orientation() {
        // (z+1)^2 at k = 2: bound 4·4 = 16 vs outer max 9 — holds, not sharp.
        let rep = run_check(InequalityId::Lemma2, &binom_roots(1.0, 2), None, None, k(2.0));
        assert_eq!(rep.pass, Some(true));
        assert!((rep.lhs.unwrap() - 16.0).abs() <= 1e-9 * 16.0);
        assert!((rep.rhs.unwrap() - 9.0).abs() <= 1e-9 * 9.0);
        // Monomials attain it: |cz| at k=2 → bound 2·|c|, outer max 2|c|.
        let mono = RootForm::new(c(0.0, 1.5), vec![c(0.0, 0.0)]).unwrap();
        let rep = run_check(InequalityId::Lemma2, &mono, None, None, k(2.0));
        assert!(rep.equality_sharp);
    }

    #[test]
    fn scale_identity_is_equality_at_degree_one() {
        // For n = 1 both sides reduce to max_{|z|=k}|D_α^γ[P]| = k^0·max|D|:
        // the operator output is constant, so slack is zero.
        let r = RootForm::new(c(2.0, 1.0), vec![c(0.5, -0.25)]).unwrap();
        let g = GammaWeights::new(vec![0.7]).unwrap();
        let a = PolarPoint::new(c(3.0, 1.0)).unwrap();
        let rep = run_check(InequalityId::ScaleId15, &r, Some(&g), Some(a), k(2.0));
        assert_eq!(rep.pass, Some(true));
        assert!(rep.equality_sharp, "slack {:?}", rep.slack);
    }

    #[test]
    fn rel_slack_matches_ratio() {
        let g = GammaWeights::ones(3);
        let a = PolarPoint::new(c(4.0, 0.0)).unwrap();
        let rep = run_check(InequalityId::Thm2, &binom_roots(2.0, 3), Some(&g), Some(a), k(2.0));
        let expect = rep.lhs.unwrap() / rep.rhs.unwrap() - 1.0;
        assert!((rep.rel_slack.unwrap() - expect).abs() <= 1e-12 * expect.abs());
    }
}
