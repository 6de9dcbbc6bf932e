//! Circle analysis: maximum modulus on `|z| = r`, pointwise minima of
//! ratios and of the radial log-derivative, and the growth check between
//! two radii.
//!
//! The maximum estimator samples `|q|` on an equispaced grid (at least 1024
//! points, at least 128 per degree), refines every competitive local
//! maximum by golden-section search, then doubles the grid until the
//! refined value stabilizes. For a degree-n polynomial, `|q(re^{iθ})|²` is
//! a trigonometric polynomial of degree n, so a grid this dense cannot hide
//! a peak between samples; the doubling pass is a belt-and-braces check and
//! normally stops after one round.

use alloc::vec::Vec;
use core::f64::consts::TAU;
use num_complex::Complex64;
#[cfg(not(feature = "std"))]
use num_traits::Float;

use crate::catalog::{self, CheckReport, InequalityId, Witness};
use crate::error::Error;
use crate::poly::{DiskRadius, Polynomial, RootForm};

/// Base grid size for maximum estimation.
const BASE_GRID: usize = 1024;
/// Minimum samples per polynomial degree.
const GRID_DENSITY: usize = 128;
/// Grid doublings attempted before giving up on convergence.
const MAX_DOUBLINGS: usize = 3;
/// Relative stabilization target between doublings.
const CONV_REL: f64 = 1e-12;
/// Angular width at which golden-section refinement stops.
const REFINE_WIDTH: f64 = 1e-14;
/// Only local maxima within 1% of the best sample are worth refining: on
/// grids this dense, a true peak cannot sag more than ~0.2% below its
/// nearest sampled local maximum.
const CANDIDATE_WINDOW_SQ: f64 = 0.98;
/// Hard cap on refinement candidates per stage (near-constant-modulus
/// inputs can make every sample competitive).
const MAX_CANDIDATES: usize = 48;

/// Base grid size for pointwise minima.
const PW_BASE_GRID: usize = 4096;
/// Minimum pointwise samples per degree.
const PW_GRID_DENSITY: usize = 256;
/// How many smallest grid values get local refinement.
const PW_REFINE: usize = 8;

/// Default denominator floor, as a fraction of the grid maximum of the
/// denominator modulus.
pub const DEFAULT_FLOOR_FRAC: f64 = 1e-6;

const INV_PHI: f64 = 0.618_033_988_749_895;
const ZERO_C: Complex64 = Complex64::new(0.0, 0.0);

/// Result of a circle-maximum estimation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MaxModEstimate {
    /// Estimated `max_{|z|=r} |q(z)|`.
    pub value: f64,
    /// Angle attaining the estimate, in `[0, 2π)`.
    pub arg_theta: f64,
    /// Final grid size used.
    pub grid: usize,
    /// Whether the doubling pass stabilized below [`MaxModEstimate::rel_gap`]'s target.
    pub refined: bool,
    /// Relative change of the refined maximum in the last doubling.
    pub rel_gap: f64,
}

/// Location and value of a pointwise minimum on the circle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PointwiseMin {
    pub value: f64,
    pub arg_theta: f64,
}

/// Fill `out` with `|q(r·e^{2πi·j/n})|²` for j = 0..n.
///
/// Points advance by complex rotation, re-synchronized from sin/cos every 64
/// steps so accumulated rounding stays below ~1e-14 relative.
fn sample_norm_sqr(q: &Polynomial, r: f64, n: usize, out: &mut Vec<f64>) {
    out.clear();
    out.reserve(n);
    let step = TAU / n as f64;
    let rot = Complex64::from_polar(1.0, step);
    let coeffs = q.coeffs();
    let mut j = 0;
    while j < n {
        let block = 64.min(n - j);
        let mut w = Complex64::from_polar(r, step * j as f64);
        for _ in 0..block {
            let mut acc = ZERO_C;
            for &c in coeffs.iter().rev() {
                acc = acc * w + c;
            }
            out.push(acc.norm_sqr());
            w *= rot;
        }
        j += block;
    }
}

fn eval_norm_sqr(q: &Polynomial, r: f64, theta: f64) -> f64 {
    let w = Complex64::from_polar(r, theta);
    let mut acc = ZERO_C;
    for &c in q.coeffs().iter().rev() {
        acc = acc * w + c;
    }
    acc.norm_sqr()
}

/// Golden-section maximization of `f` on `[a, b]` down to `REFINE_WIDTH`.
fn golden_max(f: impl Fn(f64) -> f64, mut a: f64, mut b: f64) -> (f64, f64) {
    let mut h = b - a;
    let mut x1 = b - INV_PHI * h;
    let mut x2 = a + INV_PHI * h;
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    while h > REFINE_WIDTH {
        if f1 >= f2 {
            b = x2;
            x2 = x1;
            f2 = f1;
            h = b - a;
            x1 = b - INV_PHI * h;
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            h = b - a;
            x2 = a + INV_PHI * h;
            f2 = f(x2);
        }
    }
    if f1 >= f2 { (x1, f1) } else { (x2, f2) }
}

/// Golden-section minimization (mirror image of [`golden_max`]).
fn golden_min(f: impl Fn(f64) -> f64, mut a: f64, mut b: f64) -> (f64, f64) {
    let mut h = b - a;
    let mut x1 = b - INV_PHI * h;
    let mut x2 = a + INV_PHI * h;
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    while h > REFINE_WIDTH {
        if f1 <= f2 {
            b = x2;
            x2 = x1;
            f2 = f1;
            h = b - a;
            x1 = b - INV_PHI * h;
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            h = b - a;
            x2 = a + INV_PHI * h;
            f2 = f(x2);
        }
    }
    if f1 <= f2 { (x1, f1) } else { (x2, f2) }
}

fn wrap_theta(t: f64) -> f64 {
    let w = t % TAU;
    let w = if w < 0.0 { w + TAU } else { w };
    if w >= TAU { 0.0 } else { w }
}

/// Estimate `max_{|z|=r} |q(z)|`.
///
/// Panics if `r` is not positive and finite (caller contract).
pub fn max_modulus(q: &Polynomial, r: f64) -> MaxModEstimate {
    assert!(r.is_finite() && r > 0.0, "radius must be positive and finite");
    let base = BASE_GRID.max(GRID_DENSITY * q.degree().max(1));
    let mut vals: Vec<f64> = Vec::new();
    let mut cand: Vec<usize> = Vec::new();

    let mut best_val = 0.0f64; // running max over stages, |q| scale
    let mut best_theta = 0.0f64;
    let mut prev_stage = f64::NAN;
    let mut rel_gap = f64::NAN;
    let mut refined = false;
    let mut grid = base;

    for d in 0..=MAX_DOUBLINGS {
        let n = base << d;
        grid = n;
        sample_norm_sqr(q, r, n, &mut vals);
        let step = TAU / n as f64;

        let top = vals.iter().fold(0.0f64, |m, &v| m.max(v));
        cand.clear();
        for i in 0..n {
            let prev = vals[(i + n - 1) % n];
            let next = vals[(i + 1) % n];
            let v = vals[i];
            if v >= prev && v >= next && (v > prev || v > next) && v >= CANDIDATE_WINDOW_SQ * top {
                cand.push(i);
            }
        }
        if cand.is_empty() {
            // Constant-modulus samples (e.g. c·z^n): fall back to the argmax.
            let (mut arg, mut m) = (0usize, -1.0f64);
            for (i, &v) in vals.iter().enumerate() {
                if v > m {
                    m = v;
                    arg = i;
                }
            }
            cand.push(arg);
        } else if cand.len() > MAX_CANDIDATES {
            cand.sort_by(|&a, &b| vals[b].partial_cmp(&vals[a]).unwrap());
            cand.truncate(MAX_CANDIDATES);
        }

        let mut stage_val_sq = top;
        let mut stage_theta = 0.0f64;
        // Seed theta from the argmax sample in case refinement cannot improve.
        if let Some(&i0) = cand.first() {
            stage_theta = step * i0 as f64;
        }
        for &i in &cand {
            let center = step * i as f64;
            let (t, v) = golden_max(|th| eval_norm_sqr(q, r, th), center - step, center + step);
            if v >= stage_val_sq {
                stage_val_sq = v;
                stage_theta = t;
            } else if vals[i] >= stage_val_sq {
                stage_val_sq = vals[i];
                stage_theta = center;
            }
        }

        let stage_val = stage_val_sq.sqrt();
        if stage_val >= best_val {
            best_val = stage_val;
            best_theta = stage_theta;
        }
        if d > 0 {
            rel_gap = (stage_val - prev_stage).abs() / stage_val.max(f64::MIN_POSITIVE);
            if rel_gap < CONV_REL {
                refined = true;
                break;
            }
        }
        prev_stage = stage_val;
    }

    MaxModEstimate {
        value: best_val,
        arg_theta: wrap_theta(best_theta),
        grid,
        refined,
        rel_gap: if rel_gap.is_nan() { 0.0 } else { rel_gap },
    }
}

/// Shared skeleton for the two pointwise minima: grid-scan an objective
/// that is only admissible where the guard polynomial stays above a floor,
/// then refine the smallest few samples.
///
/// The objective receives `(θ, r·e^{iθ}, guard²(θ), max guard²)`; the angle
/// is passed separately because objectives that need angle differences to
/// nearby roots lose precision recovering θ from the point.
fn pointwise_min_impl(
    objective: impl Fn(f64, Complex64, f64, f64) -> f64,
    guard: &Polynomial,
    degree_hint: usize,
    r: f64,
    floor_frac: f64,
) -> Result<PointwiseMin, Error> {
    if !floor_frac.is_finite() || !(0.0..1.0).contains(&floor_frac) {
        return Err(Error::InvalidParameter("floor fraction must lie in [0, 1)"));
    }
    let n = PW_BASE_GRID.max(PW_GRID_DENSITY * degree_hint.max(1));
    let step = TAU / n as f64;

    let mut guard_sq: Vec<f64> = Vec::new();
    sample_norm_sqr(guard, r, n, &mut guard_sq);
    let gmax = guard_sq.iter().fold(0.0f64, |m, &v| m.max(v));
    let floor_sq = floor_frac * floor_frac * gmax;

    // Track the PW_REFINE smallest admissible samples.
    let mut smallest: Vec<(f64, usize)> = Vec::with_capacity(PW_REFINE + 1);
    let rot = Complex64::from_polar(1.0, step);
    let mut j = 0usize;
    while j < n {
        let block = 64.min(n - j);
        let mut w = Complex64::from_polar(r, step * j as f64);
        for b in 0..block {
            let i = j + b;
            let gsq = guard_sq[i];
            if gsq > 0.0 && gsq >= floor_sq {
                let v = objective(step * i as f64, w, gsq, gmax);
                if smallest.len() < PW_REFINE || v < smallest.last().unwrap().0 {
                    let pos = smallest.partition_point(|&(s, _)| s < v);
                    smallest.insert(pos, (v, i));
                    smallest.truncate(PW_REFINE);
                }
            }
            w *= rot;
        }
        j += block;
    }
    if smallest.is_empty() {
        return Err(Error::NoAdmissibleSamples);
    }

    let eval_at = |theta: f64| -> f64 {
        let w = Complex64::from_polar(r, theta);
        let mut acc = ZERO_C;
        for &c in guard.coeffs().iter().rev() {
            acc = acc * w + c;
        }
        let gsq = acc.norm_sqr();
        if gsq > 0.0 && gsq >= floor_sq {
            objective(theta, w, gsq, gmax)
        } else {
            f64::INFINITY
        }
    };

    let (mut best_v, best_i) = smallest[0];
    let mut best_theta = step * best_i as f64;
    for &(_, i) in &smallest {
        let center = step * i as f64;
        let (t, v) = golden_min(eval_at, center - step, center + step);
        if v < best_v {
            best_v = v;
            best_theta = t;
        }
    }
    Ok(PointwiseMin { value: best_v, arg_theta: wrap_theta(best_theta) })
}

/// Minimum of `|num(z)| / |den(z)|` over the admissible part of `|z| = r`,
/// where points with `|den|` below `floor_frac · max|den|` are excluded.
pub fn pointwise_ratio_min(
    num: &Polynomial,
    den: &Polynomial,
    r: f64,
    floor_frac: f64,
) -> Result<PointwiseMin, Error> {
    assert!(r.is_finite() && r > 0.0, "radius must be positive and finite");
    let num_coeffs: Vec<Complex64> = num.coeffs().to_vec();
    let objective = move |_theta: f64, w: Complex64, den_sq: f64, _gmax: f64| -> f64 {
        let mut acc = ZERO_C;
        for &c in num_coeffs.iter().rev() {
            acc = acc * w + c;
        }
        (acc.norm_sqr() / den_sq).sqrt()
    };
    pointwise_min_impl(objective, den, num.degree().max(den.degree()), r, floor_frac)
}

/// Guard² threshold (relative to the circle max) below which the Dubinin
/// objective switches from the fused-Horner route to the logarithmic
/// derivative over roots. Near a zero, `Re(z·P'·conj(P))` loses all its
/// accurate digits to cancellation (numerator and denominator both vanish
/// quadratically while the numerator's absolute error stays at coefficient
/// scale), whereas the per-root half-angle form stays fully accurate.
const DUBININ_SAFE_FRAC_SQ: f64 = 1e-4;

/// Minimum of `Re(z·P'(z)/P(z))` over the admissible part of `|z| = r`.
pub fn pointwise_dubinin_min(
    rf: &RootForm,
    r: f64,
    floor_frac: f64,
) -> Result<PointwiseMin, Error> {
    assert!(r.is_finite() && r > 0.0, "radius must be positive and finite");
    let p = rf.expand();
    let coeffs: Vec<Complex64> = p.coeffs().to_vec();
    // Per-root (|z_j|/r, arg z_j) for the cancellation-safe route.
    let polar: Vec<(f64, f64)> = rf.roots().iter().map(|z| (z.norm() / r, z.arg())).collect();
    let objective = move |theta: f64, w: Complex64, p_sq: f64, gmax: f64| -> f64 {
        if p_sq >= DUBININ_SAFE_FRAC_SQ * gmax {
            // One fused Horner pass for P and P'; Re(w·P'·conj(P))/|P|²
            // avoids a complex division.
            let mut v = ZERO_C;
            let mut dv = ZERO_C;
            for &c in coeffs.iter().rev() {
                dv = dv * w + v;
                v = v * w + c;
            }
            (w * dv * v.conj()).re / p_sq
        } else {
            // Σ_j Re(z/(z − z_j)) with each term written over nonnegative
            // pieces: [(1−ρ) + 2ρ·sin²(ψ/2)] / [(1−ρ)² + 4ρ·sin²(ψ/2)],
            // ρ = |z_j|/r, ψ = arg z_j − θ.
            let mut acc = 0.0;
            for &(rho, th_j) in polar.iter() {
                let s = ((th_j - theta) * 0.5).sin();
                let s2 = s * s;
                let one_m = 1.0 - rho;
                let den = one_m * one_m + 4.0 * rho * s2;
                if den <= 0.0 {
                    return f64::INFINITY;
                }
                acc += (one_m + 2.0 * rho * s2) / den;
            }
            acc
        }
    };
    pointwise_min_impl(objective, &p, p.degree(), r, floor_frac)
}

/// `max_{|z|=R} |P| / max_{|z|=1} |P|` for `R >= 1`.
pub fn growth_factor(p: &Polynomial, big_r: f64) -> Result<f64, Error> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !big_r.is_finite() || big_r < 1.0 {
        return Err(Error::InvalidParameter("growth radius must be >= 1"));
    }
    Ok(max_modulus(p, big_r).value / max_modulus(p, 1.0).value)
}

/// Check the boundary growth lower bound for zeros in `|z| <= k`, `k >= 1`:
/// `max_{|z|=k}|P| >= 2k^n/(1+k^n) · max_{|z|=1}|P|`.
pub fn boundary_growth_check(r: &RootForm, k: DiskRadius) -> CheckReport {
    let id = InequalityId::Lemma3_13;
    let kv = k.value();
    let n = r.degree();
    let mut witness = Witness {
        root_form: Some(r.clone()),
        k: Some(kv),
        ..Witness::default()
    };
    if n == 0 {
        return catalog::hypothesis_failure(id, witness, "degree >= 1 required");
    }
    if kv < 1.0 {
        return catalog::hypothesis_failure(id, witness, "k >= 1 required");
    }
    if !r.zeros_in_disk(kv, crate::poly::DEFAULT_PREDICATE_TOL) {
        return catalog::hypothesis_failure(id, witness, "zeros must lie in |z| <= k");
    }
    let p = r.expand();
    let outer = max_modulus(&p, kv);
    let inner = max_modulus(&p, 1.0);
    let kn = kv.powi(n as i32);
    let bound = 2.0 * kn / (1.0 + kn) * inner.value;
    witness.lhs_theta = Some(outer.arg_theta);
    witness.rhs_theta = Some(inner.arg_theta);
    catalog::complete(id, outer.value, bound, witness)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::{Stream, StreamRng};
    use alloc::vec;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn binom_pow(k: f64, n: usize) -> Polynomial {
        // (z + k)^n via iterated expansion.
        RootForm::new(c(1.0, 0.0), vec![c(-k, 0.0); n]).unwrap().expand()
    }

    #[test]
    fn max_modulus_of_shifted_cube() {
        // max_{|z|=1} |(z+2)^3| = 3^3 = 27, attained at z = 1 (θ = 0).
        let p = binom_pow(2.0, 3);
        let est = max_modulus(&p, 1.0);
        assert!((est.value - 27.0).abs() <= 1e-11 * 27.0, "value {}", est.value);
        let near_zero = est.arg_theta.min(TAU - est.arg_theta);
        assert!(near_zero <= 1e-6, "theta {}", est.arg_theta);
        assert!(est.grid >= 1024);
        assert!(est.refined);
        assert!(est.rel_gap <= CONV_REL);
    }

    #[test]
    fn max_modulus_constant_modulus_monomial() {
        // |c z^5| is constant on the circle; the local-max rule has no
        // strict candidates and must fall back gracefully.
        let mut coeffs = vec![ZERO_C; 6];
        coeffs[5] = c(0.0, 2.5);
        let p = Polynomial::new(coeffs).unwrap();
        let est = max_modulus(&p, 1.0);
        assert!((est.value - 2.5).abs() <= 1e-12 * 2.5);
        assert!(est.refined);
    }

    #[test]
    fn max_modulus_binomial_family_closed_form() {
        for &krad in &[0.25, 0.5, 1.0, 2.0] {
            for n in 1..=8usize {
                let p = binom_pow(krad, n);
                let est = max_modulus(&p, 1.0);
                let exact = (1.0 + krad).powi(n as i32);
                assert!(
                    (est.value - exact).abs() <= 1e-9 * exact,
                    "k={krad} n={n}: {} vs {exact}",
                    est.value
                );
            }
        }
    }

    #[test]
    fn max_modulus_scaling_covariance() {
        // max_{|z|=k}|P| computed directly must match max_{|z|=1}|P(kz)|.
        let mut rng = StreamRng::new(7, 0, Stream::Zeros);
        for trial in 0..20 {
            let n = 1 + (trial % 7);
            let roots: Vec<Complex64> = (0..n).map(|_| rng.next_in_disk(2.0)).collect();
            let p = RootForm::new(rng.next_on_circle(1.0), roots).unwrap().expand();
            let k = rng.next_range(0.3, 3.0);
            let direct = max_modulus(&p, k).value;
            let scaled = max_modulus(&p.scale_domain(k).unwrap(), 1.0).value;
            assert!(
                (direct - scaled).abs() <= 1e-11 * direct.max(scaled),
                "trial {trial}: {direct} vs {scaled}"
            );
        }
    }

    #[test]
    fn max_modulus_rotation_invariance() {
        let mut rng = StreamRng::new(8, 0, Stream::Zeros);
        let roots: Vec<Complex64> = (0..6).map(|_| rng.next_in_disk(1.5)).collect();
        let p = RootForm::new(c(0.7, -0.3), roots).unwrap().expand();
        let base = max_modulus(&p, 1.0).value;
        for &phi in &[0.31, 1.7, 4.0] {
            let rot = Complex64::from_polar(1.0, phi);
            let mut pw = c(1.0, 0.0);
            let rotated: Vec<Complex64> = p
                .coeffs()
                .iter()
                .enumerate()
                .map(|(j, &a)| {
                    if j > 0 {
                        pw *= rot;
                    }
                    a * pw
                })
                .collect();
            let q = Polynomial::new(rotated).unwrap();
            let v = max_modulus(&q, 1.0).value;
            assert!((v - base).abs() <= 1e-11 * base, "phi={phi}: {v} vs {base}");
        }
    }

    #[test]
    fn max_modulus_dominates_coarse_grids() {
        let p = binom_pow(0.7, 5);
        let est = max_modulus(&p, 1.0);
        for m in [64usize, 257, 512] {
            let coarse = (0..m)
                .map(|i| p.eval(Complex64::from_polar(1.0, TAU * i as f64 / m as f64)).norm())
                .fold(0.0f64, f64::max);
            assert!(est.value >= coarse - 1e-12 * est.value);
        }
    }

    #[test]
    fn max_modulus_zero_polynomial() {
        let est = max_modulus(&Polynomial::zero(), 1.0);
        assert_eq!(est.value, 0.0);
    }

    #[test]
    fn pointwise_ratio_derivative_over_binomial() {
        // |n(z+1)^{n-1}| / |(z+1)^n| = n/|z+1| has circle minimum n/2 at z = 1.
        for n in [2usize, 5, 8] {
            let p = binom_pow(1.0, n);
            let est = pointwise_ratio_min(&p.derivative(), &p, 1.0, DEFAULT_FLOOR_FRAC).unwrap();
            let exact = n as f64 / 2.0;
            assert!((est.value - exact).abs() <= 1e-9 * exact, "n={n}: {}", est.value);
            let near_zero = est.arg_theta.min(TAU - est.arg_theta);
            assert!(near_zero <= 1e-5, "n={n} theta {}", est.arg_theta);
        }
    }

    #[test]
    fn pointwise_ratio_of_polynomial_with_itself_is_exactly_one() {
        let p = binom_pow(0.5, 4);
        let est = pointwise_ratio_min(&p, &p, 1.0, DEFAULT_FLOOR_FRAC).unwrap();
        assert_eq!(est.value, 1.0);
    }

    #[test]
    fn pointwise_ratio_zero_numerator() {
        let p = binom_pow(0.5, 3);
        let est = pointwise_ratio_min(&Polynomial::zero(), &p, 1.0, DEFAULT_FLOOR_FRAC).unwrap();
        assert_eq!(est.value, 0.0);
    }

    #[test]
    fn pointwise_ratio_rejects_zero_denominator() {
        let p = binom_pow(0.5, 3);
        let err = pointwise_ratio_min(&p, &Polynomial::zero(), 1.0, DEFAULT_FLOOR_FRAC).unwrap_err();
        assert!(matches!(err, Error::NoAdmissibleSamples));
    }

    #[test]
    fn pointwise_dubinin_min_of_boundary_binomial_is_half_n() {
        // For (z+1)^n, Re(zP'/P) = n·Re(z/(z+1)) ≡ n/2 on the unit circle,
        // even though the zero sits on the circle itself. This is exactly
        // the regime where the coefficient route loses ~4 digits near the
        // zero; the log-derivative route keeps the constant flat.
        for n in [1usize, 2, 4, 7] {
            let rf = RootForm::new(c(1.0, 0.0), vec![c(-1.0, 0.0); n]).unwrap();
            let est = pointwise_dubinin_min(&rf, 1.0, DEFAULT_FLOOR_FRAC).unwrap();
            let exact = n as f64 / 2.0;
            assert!((est.value - exact).abs() <= 1e-9 * exact, "n={n}: {}", est.value);
        }
    }

    #[test]
    fn pointwise_dubinin_min_matches_dense_oracle_for_interior_roots() {
        // With roots kept in |z| ≤ 0.8 the coefficient route is well
        // conditioned everywhere on the circle, so a brute-force Horner
        // oracle over 10^6 samples is trustworthy.
        let mut rng = StreamRng::new(17, 0, Stream::Zeros);
        for n in [2usize, 5] {
            let roots: Vec<Complex64> = (0..n).map(|_| rng.next_in_disk(0.8)).collect();
            let rf = RootForm::new(rng.next_on_circle(1.0), roots).unwrap();
            let est = pointwise_dubinin_min(&rf, 1.0, DEFAULT_FLOOR_FRAC).unwrap();

            let p = rf.expand();
            let dp = p.derivative();
            let m = 1_000_000usize;
            let mut oracle = f64::INFINITY;
            for i in 0..m {
                let z = Complex64::from_polar(1.0, TAU * i as f64 / m as f64);
                let v = p.eval(z);
                oracle = oracle.min((z * dp.eval(z) * v.conj()).re / v.norm_sqr());
            }
            assert!(
                (est.value - oracle).abs() <= 1e-8 * oracle.abs().max(1.0),
                "n={n}: {} vs oracle {oracle}",
                est.value
            );
        }
    }

    #[test]
    fn dubinin_min_degree_one_closed_form() {
        // P = z − a with |a| < 1: min over the circle of Re(z/(z−a)) is
        // 1/(1+|a|), attained opposite the root.
        let a = c(0.6, 0.0);
        let rf = RootForm::new(c(1.0, 0.0), vec![a]).unwrap();
        let est = pointwise_dubinin_min(&rf, 1.0, DEFAULT_FLOOR_FRAC).unwrap();
        let exact = 1.0 / 1.6;
        assert!((est.value - exact).abs() <= 1e-10, "{}", est.value);
    }

    #[test]
    fn growth_factor_of_binomial_square() {
        // (z+1)²: max at R=2 is 9, at R=1 is 4 → factor 9/4.
        let p = binom_pow(1.0, 2);
        let g = growth_factor(&p, 2.0).unwrap();
        assert!((g - 2.25).abs() <= 1e-11 * 2.25);
    }

    #[test]
    fn growth_factor_bounded_by_power_law() {
        let mut rng = StreamRng::new(9, 0, Stream::Zeros);
        for trial in 0..50 {
            let n = 1 + (trial % 8);
            let roots: Vec<Complex64> = (0..n).map(|_| rng.next_in_disk(3.0)).collect();
            let p = RootForm::new(rng.next_on_circle(1.0), roots).unwrap().expand();
            let big_r = rng.next_range(1.0, 4.0);
            let g = growth_factor(&p, big_r).unwrap();
            assert!(
                g <= big_r.powi(n as i32) * (1.0 + 1e-10),
                "trial {trial}: {g} vs {}",
                big_r.powi(n as i32)
            );
        }
    }

    #[test]
    fn growth_factor_input_guards() {
        assert!(matches!(growth_factor(&Polynomial::zero(), 2.0), Err(Error::ZeroPolynomial)));
        let p = binom_pow(1.0, 2);
        assert!(growth_factor(&p, 0.5).is_err());
    }

    #[test]
    fn boundary_growth_check_shifted_cube() {
        // (z+2)^3 at k = 2: outer max 4^3 = 64, bound (16/9)·27 = 48.
        let r = RootForm::new(c(1.0, 0.0), vec![c(-2.0, 0.0); 3]).unwrap();
        let rep = boundary_growth_check(&r, DiskRadius::new(2.0).unwrap());
        assert!(rep.hypothesis_ok);
        assert_eq!(rep.pass, Some(true));
        let lhs = rep.lhs.unwrap();
        let rhs = rep.rhs.unwrap();
        assert!((lhs - 64.0).abs() <= 1e-9 * 64.0, "lhs {lhs}");
        assert!((rhs - 48.0).abs() <= 1e-9 * 48.0, "rhs {rhs}");
    }

    #[test]
    fn boundary_growth_check_gates() {
        let r = RootForm::new(c(1.0, 0.0), vec![c(-2.0, 0.0); 3]).unwrap();
        // k below 1 violates the hypothesis.
        let rep = boundary_growth_check(&r, DiskRadius::new(0.5).unwrap());
        assert!(!rep.hypothesis_ok);
        assert_eq!(rep.pass, None);
        // Zeros outside the disk violate it too.
        let rep = boundary_growth_check(&r, DiskRadius::new(1.5).unwrap());
        assert!(!rep.hypothesis_ok);
    }
}
