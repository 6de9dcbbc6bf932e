//! Deterministic random ensembles: instance sampling, violation scans,
//! sharpness probes along extremal families, and a local falsification
//! search.
//!
//! All randomness is counter-based (see [`crate::rng`]): a trial's samples
//! depend only on `(seed, trial index, stream)`, so scan results are
//! identical no matter how trials are scheduled. Reductions track the
//! minimum slack with a lexicographic `(slack, trial)` tie-break, which
//! makes the merge order-independent as well.

use alloc::vec::Vec;
use core::f64::consts::TAU;
use num_complex::Complex64;
#[cfg(not(feature = "std"))]
use num_traits::Float;

use crate::catalog::{self, CheckForm, CheckReport, InequalityId};
use crate::error::Error;
use crate::operators::{GammaWeights, PolarPoint};
use crate::poly::{DiskRadius, RootForm};
use crate::rng::{Stream, StreamRng};

/// How γ weights are drawn.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GammaMode {
    /// All weights 1 (reduces the generalized operators to the classical ones).
    Ones,
    /// Independent uniform weights in (0, 1].
    Uniform01,
    /// Independent standard-exponential weights.
    Exp1,
}

/// How the polar point is drawn.
#[derive(Debug, Clone, PartialEq)]
pub enum AlphaMode {
    /// The inequality consumes no polar point.
    None,
    /// |α| drawn from a fixed grid, phase uniform (for boundary sweeps).
    Radial(Vec<f64>),
    /// Area-uniform in the annulus `[m(1+1e-6), 4m]`, where m is the
    /// inequality's effective |α| floor (k, 1, or max(k,1) when
    /// unconstrained).
    Annulus,
}

/// Where zeros are placed inside the sampling disk.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZeroMode {
    /// Area-uniform over the disk.
    DiskUniform,
    /// Uniform on the boundary circle.
    Boundary,
    /// Area-uniform within `0.1·k` of a random center, clipped to the disk.
    Clustered,
}

/// Configuration of one scan cell.
#[derive(Debug, Clone, PartialEq)]
pub struct EnsembleConfig {
    pub degree: usize,
    /// Disk radius used by the hypothesis checks.
    pub k: DiskRadius,
    pub trials: u64,
    pub seed: u64,
    pub gamma_mode: GammaMode,
    pub alpha_mode: AlphaMode,
    pub zero_mode: ZeroMode,
    /// Radius zeros are actually sampled in; defaults to `k`. Setting it
    /// larger than `k` deliberately produces hypothesis failures.
    pub sample_k: Option<f64>,
}

impl EnsembleConfig {
    fn sampling_radius(&self) -> f64 {
        self.sample_k.unwrap_or(self.k.value())
    }
}

/// A sampled polynomial instance.
#[derive(Debug, Clone, PartialEq)]
pub struct SampleInstance {
    pub root_form: RootForm,
    pub gamma: GammaWeights,
    pub alpha: Option<PolarPoint>,
}

fn effective_alpha_floor(id: InequalityId, k: f64) -> f64 {
    id.schema().alpha.floor(k).unwrap_or_else(|| k.max(1.0))
}

/// Check that a configuration is compatible with an inequality's schema.
pub fn validate_config(id: InequalityId, cfg: &EnsembleConfig) -> Result<(), Error> {
    if cfg.degree == 0 {
        return Err(Error::SchemaViolation("degree must be at least 1"));
    }
    if cfg.trials == 0 {
        return Err(Error::SchemaViolation("at least one trial required"));
    }
    let schema = id.schema();
    if schema.form == CheckForm::Scalar {
        // The scalar entry only uses degree/trials/seed.
        return Ok(());
    }
    if !schema.k_range.admits(cfg.k.value()) {
        return Err(Error::SchemaViolation("k outside the inequality's range"));
    }
    if let Some(sk) = cfg.sample_k {
        if !sk.is_finite() || sk <= 0.0 {
            return Err(Error::SchemaViolation("sample_k must be positive and finite"));
        }
    }
    match (&cfg.alpha_mode, schema.alpha.uses_alpha()) {
        (AlphaMode::None, true) => {
            return Err(Error::SchemaViolation("inequality consumes a polar point; pick an alpha mode"))
        }
        (AlphaMode::None, false) => {}
        (_, false) => {
            return Err(Error::SchemaViolation("inequality takes no polar point"))
        }
        (AlphaMode::Radial(grid), true) => {
            if grid.is_empty() {
                return Err(Error::SchemaViolation("radial alpha grid is empty"));
            }
            if !grid.iter().all(|m| m.is_finite() && *m > 0.0) {
                return Err(Error::SchemaViolation("radial alpha grid must be positive and finite"));
            }
            if let Some(floor) = schema.alpha.floor(cfg.k.value()) {
                if grid.iter().any(|&m| m < floor * (1.0 - 1e-9)) {
                    return Err(Error::SchemaViolation("radial alpha grid below the |alpha| floor"));
                }
            }
        }
        (AlphaMode::Annulus, true) => {}
    }
    Ok(())
}

/// Draw the polynomial instance for one trial. Deterministic in
/// `(cfg.seed, trial)`; the id only selects the α constraint to respect.
pub fn sample_instance(id: InequalityId, cfg: &EnsembleConfig, trial: u64) -> SampleInstance {
    let n = cfg.degree;
    let ks = cfg.sampling_radius();

    let mut zrng = StreamRng::new(cfg.seed, trial, Stream::Zeros);
    let roots: Vec<Complex64> = match cfg.zero_mode {
        ZeroMode::DiskUniform => (0..n).map(|_| zrng.next_in_disk(ks)).collect(),
        ZeroMode::Boundary => (0..n).map(|_| zrng.next_on_circle(ks)).collect(),
        ZeroMode::Clustered => {
            let center = zrng.next_in_disk(ks);
            (0..n)
                .map(|_| {
                    let z = center + zrng.next_in_disk(0.1 * ks);
                    let m = z.norm();
                    if m > ks {
                        z * (ks / m)
                    } else {
                        z
                    }
                })
                .collect()
        }
    };
    let leading = StreamRng::new(cfg.seed, trial, Stream::Leading).next_on_circle(1.0);
    let root_form = RootForm::new(leading, roots).expect("sampled roots are finite");

    let mut grng = StreamRng::new(cfg.seed, trial, Stream::Gamma);
    let gamma = loop {
        let ws: Vec<f64> = match cfg.gamma_mode {
            GammaMode::Ones => alloc::vec![1.0; n],
            // 1 − u ∈ (0, 1] keeps the weight sum positive.
            GammaMode::Uniform01 => (0..n).map(|_| 1.0 - grng.next_f64()).collect(),
            GammaMode::Exp1 => (0..n).map(|_| grng.next_exp1()).collect(),
        };
        if let Ok(g) = GammaWeights::new(ws) {
            break g;
        }
    };

    let alpha = match &cfg.alpha_mode {
        AlphaMode::None => None,
        AlphaMode::Radial(grid) => {
            let mut arng = StreamRng::new(cfg.seed, trial, Stream::Alpha);
            let m = grid[arng.next_index(grid.len())];
            Some(PolarPoint::new(Complex64::from_polar(m, TAU * arng.next_f64())).unwrap())
        }
        AlphaMode::Annulus => {
            let mut arng = StreamRng::new(cfg.seed, trial, Stream::Alpha);
            let m0 = effective_alpha_floor(id, cfg.k.value());
            let lo = m0 * (1.0 + 1e-6);
            let hi = 4.0 * m0;
            let u = arng.next_f64();
            let radius = (lo * lo + u * (hi * hi - lo * lo)).sqrt();
            Some(PolarPoint::new(Complex64::from_polar(radius, TAU * arng.next_f64())).unwrap())
        }
    };

    SampleInstance { root_form, gamma, alpha }
}

fn sample_x(cfg: &EnsembleConfig, trial: u64) -> Vec<f64> {
    let mut rng = StreamRng::new(cfg.seed, trial, Stream::Lemma1X);
    (0..cfg.degree).map(|_| rng.next_f64()).collect()
}

/// Evaluate one trial of a scan.
pub fn run_trial(id: InequalityId, cfg: &EnsembleConfig, trial: u64) -> CheckReport {
    if id.schema().form == CheckForm::Scalar {
        return catalog::lemma1_check(&sample_x(cfg, trial));
    }
    let inst = sample_instance(id, cfg, trial);
    catalog::run_check(id, &inst.root_form, Some(&inst.gamma), inst.alpha, cfg.k)
}

/// Order-independent scan reduction: counts plus the minimum-slack witness
/// with a `(slack, trial)` lexicographic tie-break.
#[derive(Debug, Clone)]
pub struct ScanAccumulator {
    checked: u64,
    violations: u64,
    equality_sharp_count: u64,
    min_slack: f64,
    min_rel_slack: f64,
    worst: Option<(f64, u64, CheckReport)>,
}

impl ScanAccumulator {
    pub fn new() -> Self {
        ScanAccumulator {
            checked: 0,
            violations: 0,
            equality_sharp_count: 0,
            min_slack: f64::INFINITY,
            min_rel_slack: f64::INFINITY,
            worst: None,
        }
    }

    pub fn push(&mut self, trial: u64, report: CheckReport) {
        if !report.hypothesis_ok {
            return;
        }
        self.checked += 1;
        if report.pass == Some(false) {
            self.violations += 1;
        }
        if report.equality_sharp {
            self.equality_sharp_count += 1;
        }
        let slack = report.slack.expect("graded report has slack");
        let rel = report.rel_slack.expect("graded report has rel_slack");
        self.min_slack = self.min_slack.min(slack);
        self.min_rel_slack = self.min_rel_slack.min(rel);
        let replace = match &self.worst {
            None => true,
            Some((s, t, _)) => slack < *s || (slack == *s && trial < *t),
        };
        if replace {
            self.worst = Some((slack, trial, report));
        }
    }

    /// Combine two partial reductions (associative and commutative).
    pub fn merge(mut self, other: ScanAccumulator) -> ScanAccumulator {
        self.checked += other.checked;
        self.violations += other.violations;
        self.equality_sharp_count += other.equality_sharp_count;
        self.min_slack = self.min_slack.min(other.min_slack);
        self.min_rel_slack = self.min_rel_slack.min(other.min_rel_slack);
        self.worst = match (self.worst.take(), other.worst) {
            (None, w) | (w, None) => w,
            (Some(a), Some(b)) => {
                if b.0 < a.0 || (b.0 == a.0 && b.1 < a.1) {
                    Some(b)
                } else {
                    Some(a)
                }
            }
        };
        self
    }

    pub fn finalize(self, id: InequalityId, cfg: &EnsembleConfig) -> ScanReport {
        ScanReport {
            id,
            config: cfg.clone(),
            checked: self.checked,
            violations: self.violations,
            equality_sharp_count: self.equality_sharp_count,
            min_slack: if self.checked > 0 { Some(self.min_slack) } else { None },
            min_rel_slack: if self.checked > 0 { Some(self.min_rel_slack) } else { None },
            worst_witness: self.worst.map(|(_, _, r)| r),
        }
    }
}

impl Default for ScanAccumulator {
    fn default() -> Self {
        Self::new()
    }
}

/// Aggregate result of a scan (or falsification run).
#[derive(Debug, Clone, PartialEq)]
pub struct ScanReport {
    pub id: InequalityId,
    /// Echo of the configuration that produced this report.
    pub config: EnsembleConfig,
    /// Trials whose hypothesis held (only these are graded).
    pub checked: u64,
    pub violations: u64,
    pub equality_sharp_count: u64,
    pub min_slack: Option<f64>,
    pub min_rel_slack: Option<f64>,
    /// Full report for the minimum-slack trial.
    pub worst_witness: Option<CheckReport>,
}

/// Serial scan over `cfg.trials` sampled instances.
pub fn scan(id: InequalityId, cfg: &EnsembleConfig) -> Result<ScanReport, Error> {
    validate_config(id, cfg)?;
    let mut acc = ScanAccumulator::new();
    for trial in 0..cfg.trials {
        acc.push(trial, run_trial(id, cfg, trial));
    }
    Ok(acc.finalize(id, cfg))
}

/// Extremal families for sharpness probing.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// `(z + k)^n` — the binomial with a zero on the disk boundary.
    BinomK,
    /// `z^n` — all zeros at the origin.
    Monomial,
    /// `z^n + 1` — equimodular extremes of the Turán-type bounds.
    AlphaZnBeta,
}

impl Family {
    fn instance(self, n: usize, k: f64) -> RootForm {
        let one = Complex64::new(1.0, 0.0);
        let roots: Vec<Complex64> = match self {
            Family::BinomK => alloc::vec![Complex64::new(-k, 0.0); n],
            Family::Monomial => alloc::vec![Complex64::new(0.0, 0.0); n],
            Family::AlphaZnBeta => (0..n)
                .map(|j| {
                    Complex64::from_polar(1.0, core::f64::consts::PI * (2.0 * j as f64 + 1.0) / n as f64)
                })
                .collect(),
        };
        RootForm::new(one, roots).expect("family roots are finite")
    }
}

/// Probe how close an inequality comes to equality along an extremal family
/// over grids of degree, radius, and (when consumed) |α|.
///
/// One report per grid point, ordered by (n, k, α); γ is all-ones.
pub fn sharpness_probe(
    id: InequalityId,
    family: Family,
    ns: &[usize],
    ks: &[f64],
    alphas: Option<&[f64]>,
) -> Result<Vec<CheckReport>, Error> {
    let schema = id.schema();
    if schema.form == CheckForm::Scalar {
        return Err(Error::SchemaViolation("scalar entry has no polynomial family"));
    }
    let needs_alpha = schema.alpha.uses_alpha();
    if needs_alpha && alphas.map_or(true, |a| a.is_empty()) {
        return Err(Error::SchemaViolation("alpha grid required for this inequality"));
    }
    if ns.is_empty() || ks.is_empty() {
        return Err(Error::SchemaViolation("empty probe grid"));
    }
    let alpha_slots: Vec<Option<f64>> = if needs_alpha {
        alphas.unwrap().iter().map(|&m| Some(m)).collect()
    } else {
        alloc::vec![None]
    };
    let mut out = Vec::with_capacity(ns.len() * ks.len() * alpha_slots.len());
    for &n in ns {
        if n == 0 {
            return Err(Error::SchemaViolation("degree must be at least 1"));
        }
        for &kv in ks {
            let k = DiskRadius::new(kv)?;
            let r = family.instance(n, kv);
            let g = GammaWeights::ones(n);
            for &am in &alpha_slots {
                let alpha = match am {
                    Some(m) => Some(PolarPoint::new(Complex64::new(m, 0.0))?),
                    None => None,
                };
                let gref = schema.uses_gamma.then_some(&g);
                out.push(catalog::run_check(id, &r, gref, alpha, k));
            }
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Falsification
// ---------------------------------------------------------------------------

/// Mutable search state for the falsifier.
#[derive(Clone)]
enum SearchPoint {
    Poly {
        roots: Vec<Complex64>,
        leading: Complex64,
        gamma: Vec<f64>,
        alpha: Option<Complex64>,
    },
    X(Vec<f64>),
}

impl SearchPoint {
    fn from_trial(id: InequalityId, cfg: &EnsembleConfig, trial: u64) -> SearchPoint {
        if id.schema().form == CheckForm::Scalar {
            SearchPoint::X(sample_x(cfg, trial))
        } else {
            let inst = sample_instance(id, cfg, trial);
            SearchPoint::Poly {
                roots: inst.root_form.roots().to_vec(),
                leading: inst.root_form.leading(),
                gamma: inst.gamma.weights().to_vec(),
                alpha: inst.alpha.map(|a| a.alpha),
            }
        }
    }

    fn eval(&self, id: InequalityId, cfg: &EnsembleConfig) -> Option<CheckReport> {
        match self {
            SearchPoint::X(xs) => Some(catalog::lemma1_check(xs)),
            SearchPoint::Poly { roots, leading, gamma, alpha } => {
                let r = RootForm::new(*leading, roots.clone()).ok()?;
                let g = GammaWeights::new(gamma.clone()).ok()?;
                let a = alpha.map(|a| PolarPoint::new(a).expect("finite by construction"));
                Some(catalog::run_check(id, &r, Some(&g), a, cfg.k))
            }
        }
    }
}

/// One perturbable coordinate of the search state.
#[derive(Clone, Copy)]
enum Dim {
    RootRadial(usize),
    RootAngular(usize),
    Gamma(usize),
    AlphaRadial,
    AlphaAngular,
    XCoord(usize),
}

fn search_dims(id: InequalityId, n: usize, has_alpha: bool) -> Vec<Dim> {
    let schema = id.schema();
    if schema.form == CheckForm::Scalar {
        return (0..n).map(Dim::XCoord).collect();
    }
    let mut dims: Vec<Dim> = Vec::new();
    for i in 0..n {
        dims.push(Dim::RootRadial(i));
        dims.push(Dim::RootAngular(i));
    }
    if schema.uses_gamma {
        for i in 0..n {
            dims.push(Dim::Gamma(i));
        }
    }
    if has_alpha {
        dims.push(Dim::AlphaRadial);
        dims.push(Dim::AlphaAngular);
    }
    dims
}

fn initial_step(dim: Dim, k: f64) -> f64 {
    match dim {
        Dim::RootRadial(_) => 0.25 * k,
        Dim::RootAngular(_) | Dim::AlphaAngular => 0.5,
        Dim::Gamma(_) => 0.25,
        Dim::AlphaRadial => 0.25 * k.max(1.0),
        Dim::XCoord(_) => 0.25,
    }
}

/// Reflect a proposal into `[0, 1]` (used for the scalar entry: clamping
/// could park a coordinate exactly on the equality manifold and freeze the
/// strict-descent search there).
fn reflect_unit(mut x: f64) -> f64 {
    loop {
        if x < 0.0 {
            x = -x;
        } else if x > 1.0 {
            x = 2.0 - x;
        } else {
            return x;
        }
    }
}

/// Apply one perturbation; returns `None` when the proposal cannot satisfy
/// the constraints (e.g. all-zero weights), which counts as a rejection
/// without spending an evaluation.
fn perturb(
    point: &SearchPoint,
    dim: Dim,
    step: f64,
    id: InequalityId,
    k: f64,
    rng: &mut StreamRng,
) -> Option<SearchPoint> {
    let sign = if rng.next_f64() < 0.5 { -1.0 } else { 1.0 };
    let delta = sign * step;
    let mut next = point.clone();
    match (&mut next, dim) {
        (SearchPoint::X(xs), Dim::XCoord(i)) => {
            xs[i] = reflect_unit(xs[i] + delta);
        }
        (SearchPoint::Poly { roots, .. }, Dim::RootRadial(i)) => {
            let (m, phi) = (roots[i].norm(), roots[i].arg());
            // Project back into the closed disk.
            let m2 = (m + delta).clamp(0.0, k);
            roots[i] = Complex64::from_polar(m2, phi);
        }
        (SearchPoint::Poly { roots, .. }, Dim::RootAngular(i)) => {
            let (m, phi) = (roots[i].norm(), roots[i].arg());
            roots[i] = Complex64::from_polar(m, phi + delta);
        }
        (SearchPoint::Poly { gamma, .. }, Dim::Gamma(i)) => {
            gamma[i] = (gamma[i] + delta).max(0.0);
            if gamma.iter().sum::<f64>() <= 0.0 {
                return None;
            }
        }
        (SearchPoint::Poly { alpha: Some(a), .. }, Dim::AlphaRadial) => {
            let floor = effective_alpha_floor(id, k) * (1.0 + 1e-6);
            let (m, phi) = (a.norm(), a.arg());
            let m2 = (m + delta).clamp(floor, 1e6);
            *a = Complex64::from_polar(m2, phi);
        }
        (SearchPoint::Poly { alpha: Some(a), .. }, Dim::AlphaAngular) => {
            let (m, phi) = (a.norm(), a.arg());
            *a = Complex64::from_polar(m, phi + delta);
        }
        _ => return None,
    }
    Some(next)
}

/// Scan, then try to push the minimum slack lower by coordinate-wise
/// perturbation descent with step halving, restarts on stall, and
/// projection into the hypothesis set.
///
/// The returned report aggregates the scan trials and every descent
/// evaluation, so `min_slack`/`worst_witness` reflect the global best and
/// `violations` counts any falsification found along the way. The best
/// slack seen is nonincreasing over the run.
pub fn falsify(id: InequalityId, cfg: &EnsembleConfig, budget: u64) -> Result<ScanReport, Error> {
    validate_config(id, cfg)?;

    let mut acc = ScanAccumulator::new();
    let mut best_trial = 0u64;
    let mut best_slack = f64::INFINITY;
    for trial in 0..cfg.trials {
        let report = run_trial(id, cfg, trial);
        if report.hypothesis_ok {
            let s = report.slack.expect("graded");
            if s < best_slack {
                best_slack = s;
                best_trial = trial;
            }
        }
        acc.push(trial, report);
    }

    if budget == 0 || acc.checked == 0 {
        return Ok(acc.finalize(id, cfg));
    }

    let mut rng = StreamRng::new(cfg.seed, u64::MAX, Stream::Falsify);
    let mut point = SearchPoint::from_trial(id, cfg, best_trial);
    let mut current_slack = best_slack;
    let kv = cfg.k.value();
    let dims = search_dims(
        id,
        cfg.degree,
        matches!(point, SearchPoint::Poly { alpha: Some(_), .. }),
    );
    let init_steps: Vec<f64> = dims.iter().map(|&d| initial_step(d, kv)).collect();
    let mut steps = init_steps.clone();
    let mut rejects = 0usize;
    let stall_limit = 60 * dims.len();
    // Restart trial keys live far above the scan range so draws never collide.
    const RESTART_BASE: u64 = 1 << 62;
    let mut restarts = 0u64;

    let mut evals = 0u64;
    while evals < budget {
        let restart_due = rejects >= stall_limit
            || steps.iter().zip(&init_steps).all(|(s, s0)| s < &(1e-13 * s0));
        if restart_due {
            restarts += 1;
            point = SearchPoint::from_trial(id, cfg, RESTART_BASE + restarts);
            steps.clone_from(&init_steps);
            rejects = 0;
            if let Some(report) = point.eval(id, cfg) {
                current_slack = if report.hypothesis_ok {
                    report.slack.expect("graded")
                } else {
                    f64::INFINITY
                };
                acc.push(cfg.trials + evals, report);
                evals += 1;
            }
            continue;
        }

        let di = rng.next_index(dims.len());
        let proposal = perturb(&point, dims[di], steps[di], id, kv, &mut rng);
        let Some(candidate) = proposal else {
            steps[di] *= 0.5;
            rejects += 1;
            continue;
        };
        let Some(report) = candidate.eval(id, cfg) else {
            steps[di] *= 0.5;
            rejects += 1;
            continue;
        };
        let slack = if report.hypothesis_ok {
            report.slack.expect("graded")
        } else {
            f64::INFINITY
        };
        acc.push(cfg.trials + evals, report);
        evals += 1;
        if slack < current_slack {
            point = candidate;
            current_slack = slack;
            rejects = 0;
            // Re-expand so a productive direction is not starved by earlier
            // unlucky rejections on the same coordinate.
            steps[di] = (steps[di] * 2.0).min(init_steps[di]);
        } else {
            steps[di] *= 0.5;
            rejects += 1;
        }
    }

    Ok(acc.finalize(id, cfg))
}
