//! Derivative-like operators on polynomials: the ordinary derivative's
//! weighted generalization, the polar derivative, and their combination.
//!
//! For `P(z) = c · Π_j (z − z_j)` of degree n with weights `γ_j ≥ 0`
//! (not all zero, `Λ = Σ γ_j`):
//!
//! * generalized derivative: `P^γ(z) = Σ_j γ_j · c · Π_{i≠j} (z − z_i)`;
//! * polar derivative at pole α: `D_α[P](z) = n·P(z) + (α − z)·P'(z)`;
//! * generalized polar derivative: `D_α^γ[P](z) = Λ·P(z) + (α − z)·P^γ(z)`.
//!
//! With all weights 1, `P^γ = P'` and `D_α^γ = D_α`; dividing `D_α[P]` by α
//! and letting `|α| → ∞` recovers `P'`.

use alloc::vec::Vec;
use num_complex::Complex64;

use crate::error::Error;
use crate::poly::{Polynomial, RootForm};

const ZERO_C: Complex64 = Complex64::new(0.0, 0.0);

/// Nonnegative weights `γ_j`, one per root, not all zero.
#[derive(Debug, Clone, PartialEq)]
pub struct GammaWeights {
    weights: Vec<f64>,
}

impl GammaWeights {
    pub fn new(weights: Vec<f64>) -> Result<Self, Error> {
        if weights.is_empty() {
            return Err(Error::EmptyCoefficients);
        }
        if !weights.iter().all(|w| w.is_finite()) {
            return Err(Error::NonFinite("gamma weights"));
        }
        if weights.iter().any(|&w| w < 0.0) {
            return Err(Error::InvalidParameter("gamma weights must be nonnegative"));
        }
        if weights.iter().sum::<f64>() <= 0.0 {
            return Err(Error::InvalidParameter("gamma weights must not all be zero"));
        }
        Ok(GammaWeights { weights })
    }

    /// The all-ones weight vector, which reduces `P^γ` to `P'`.
    pub fn ones(n: usize) -> Self {
        GammaWeights { weights: alloc::vec![1.0; n] }
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// `Λ = Σ_j γ_j`.
    pub fn lambda(&self) -> f64 {
        self.weights.iter().sum()
    }

    /// `min_j γ_j`.
    pub fn gamma_min(&self) -> f64 {
        self.weights.iter().fold(f64::INFINITY, |m, &w| m.min(w))
    }
}

/// Pole of a polar derivative.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolarPoint {
    pub alpha: Complex64,
}

impl PolarPoint {
    pub fn new(alpha: Complex64) -> Result<Self, Error> {
        if alpha.re.is_finite() && alpha.im.is_finite() {
            Ok(PolarPoint { alpha })
        } else {
            Err(Error::NonFinite("polar point"))
        }
    }
}

/// Generalized derivative `P^γ(z) = Σ_j γ_j · c · Π_{i≠j} (z − z_i)`.
///
/// Each sub-product is expanded independently from the root list (no
/// deflation of a previously expanded polynomial), so weights pair with
/// roots by index even when roots repeat. Output has exactly `n`
/// coefficient slots; its leading coefficient is `Λ·c`.
pub fn generalized_derivative(r: &RootForm, g: &GammaWeights) -> Result<Polynomial, Error> {
    let n = r.degree();
    if n == 0 {
        return Err(Error::DegreeTooLow { required: 1, got: 0 });
    }
    if g.len() != n {
        return Err(Error::LengthMismatch { expected: n, got: g.len() });
    }
    let mut acc = alloc::vec![ZERO_C; n];
    let mut sub: Vec<Complex64> = Vec::with_capacity(n);
    for (j, &gj) in g.weights().iter().enumerate() {
        sub.clear();
        sub.push(r.leading() * gj);
        for (i, &root) in r.roots().iter().enumerate() {
            if i == j {
                continue;
            }
            sub.push(ZERO_C);
            for s in (0..sub.len() - 1).rev() {
                let c = sub[s];
                sub[s + 1] += c;
                sub[s] = -root * c;
            }
        }
        for (slot, &v) in acc.iter_mut().zip(sub.iter()) {
            *slot += v;
        }
    }
    Ok(Polynomial::from_raw(acc))
}

/// Polar derivative `D_α[P](z) = n·P(z) + (α − z)·P'(z)` in coefficient
/// form: slot j of the result is `(n−j)·a_j + α·(j+1)·a_{j+1}`.
///
/// The degree-n slot cancels identically and is dropped; any further
/// exact-zero leading slots are trimmed (for `P = c(z−α)^n` the result is
/// the zero polynomial).
pub fn polar_derivative(p: &Polynomial, alpha: PolarPoint) -> Result<Polynomial, Error> {
    let n = p.degree();
    if n == 0 {
        return Err(Error::DegreeTooLow { required: 1, got: 0 });
    }
    let a = alpha.alpha;
    let nf = n as f64;
    let mut out: Vec<Complex64> = (0..n)
        .map(|j| p.coeff(j) * (nf - j as f64) + a * p.coeff(j + 1) * (j + 1) as f64)
        .collect();
    while out.len() > 1 && *out.last().unwrap() == ZERO_C {
        out.pop();
    }
    Ok(Polynomial::from_raw(out))
}

/// Generalized polar derivative `D_α^γ[P](z) = Λ·P(z) + (α − z)·P^γ(z)`.
///
/// The representation keeps all `n+1` coefficient slots: the top slot is
/// `Λc − Λc` and is zero up to rounding, but it is left in place so callers
/// can observe the cancellation instead of trusting it.
pub fn generalized_polar_derivative(
    r: &RootForm,
    g: &GammaWeights,
    alpha: PolarPoint,
) -> Result<Polynomial, Error> {
    let n = r.degree();
    if n == 0 {
        return Err(Error::DegreeTooLow { required: 1, got: 0 });
    }
    let p = r.expand();
    let pg = generalized_derivative(r, g)?;
    let lambda = g.lambda();
    let a = alpha.alpha;
    let out: Vec<Complex64> = (0..=n)
        .map(|j| {
            let mut v = p.coeff(j) * lambda + a * pg.coeff(j);
            if j >= 1 {
                v -= pg.coeff(j - 1);
            }
            v
        })
        .collect();
    Ok(Polynomial::from_raw(out))
}

/// `Re(z·P'(z)/P(z))` with a guard: evaluation is rejected when
/// `|P(z)|` falls below `floor` (or vanishes), since the quantity blows up
/// at zeros of P.
pub fn dubinin_quantity(p: &Polynomial, z: Complex64, floor: f64) -> Result<f64, Error> {
    if !floor.is_finite() || floor < 0.0 {
        return Err(Error::InvalidParameter("floor must be nonnegative and finite"));
    }
    let (v, dv) = p.eval_pair(z);
    let vn = v.norm();
    if vn < floor || vn == 0.0 {
        return Err(Error::NearZeroRejected { modulus: vn, floor });
    }
    Ok((z * dv / v).re)
}

/// Defect of the polar-derivative limit: `|D_α[P](z)/α − P'(z)|`, computed
/// directly from the two operators (not via an algebraic shortcut), for
/// `|α| >= 1`. Exact algebra gives `(n·P(z) − z·P'(z))/α`, so the defect
/// decays like `1/|α|` along a fixed direction.
pub fn limit_ratio_defect(p: &Polynomial, alpha: PolarPoint, z: Complex64) -> Result<f64, Error> {
    let am = alpha.alpha.norm();
    if am < 1.0 - 1e-12 {
        return Err(Error::HypothesisViolated("polar limit requires |alpha| >= 1"));
    }
    let d = polar_derivative(p, alpha)?;
    Ok((d.eval(z) / alpha.alpha - p.derivative().eval(z)).norm())
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use crate::rng::{Stream, StreamRng};

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn approx(a: Complex64, b: Complex64, tol: f64) -> bool {
        (a - b).norm() <= tol * (1.0 + b.norm())
    }

    #[test]
    fn generalized_derivative_two_roots_symbolic() {
        // P = (z−1)(z+1), γ = (2, 3):
        // P^γ = 2(z+1) + 3(z−1) = 5z − 1.
        let r = RootForm::new(c(1.0, 0.0), vec![c(1.0, 0.0), c(-1.0, 0.0)]).unwrap();
        let g = GammaWeights::new(vec![2.0, 3.0]).unwrap();
        let pg = generalized_derivative(&r, &g).unwrap();
        assert_eq!(pg.coeffs(), &[c(-1.0, 0.0), c(5.0, 0.0)]);
    }

    #[test]
    fn generalized_derivative_leading_is_lambda_c() {
        let r = RootForm::new(c(0.0, 2.0), vec![c(0.5, 0.0), c(0.0, -0.5), c(-0.25, 0.25)]).unwrap();
        let g = GammaWeights::new(vec![0.25, 1.5, 2.0]).unwrap();
        let pg = generalized_derivative(&r, &g).unwrap();
        assert_eq!(pg.degree(), 2);
        assert!(approx(pg.leading(), c(0.0, 2.0) * 3.75, 1e-14));
    }

    #[test]
    fn ones_weights_reduce_to_ordinary_derivative() {
        let mut rng = StreamRng::new(11, 0, Stream::Zeros);
        for n in 1..=8usize {
            let roots: Vec<Complex64> = (0..n).map(|_| rng.next_in_disk(2.0)).collect();
            let lead = rng.next_on_circle(1.0);
            let r = RootForm::new(lead, roots).unwrap();
            let pg = generalized_derivative(&r, &GammaWeights::ones(n)).unwrap();
            let dp = r.expand().derivative();
            for j in 0..n {
                assert!(approx(pg.coeff(j), dp.coeff(j), 1e-12), "n={n} slot {j}");
            }
        }
    }

    #[test]
    fn gamma_weights_are_additive() {
        let mut rng = StreamRng::new(12, 0, Stream::Gamma);
        let roots: Vec<Complex64> = (0..5).map(|_| rng.next_in_disk(1.5)).collect();
        let r = RootForm::new(c(1.0, -0.5), roots).unwrap();
        let g1: Vec<f64> = (0..5).map(|_| rng.next_f64() + 0.01).collect();
        let g2: Vec<f64> = (0..5).map(|_| rng.next_f64() + 0.01).collect();
        let sum: Vec<f64> = g1.iter().zip(&g2).map(|(a, b)| a + b).collect();
        let pa = generalized_derivative(&r, &GammaWeights::new(g1).unwrap()).unwrap();
        let pb = generalized_derivative(&r, &GammaWeights::new(g2).unwrap()).unwrap();
        let ps = generalized_derivative(&r, &GammaWeights::new(sum).unwrap()).unwrap();
        for j in 0..5 {
            let d = (ps.coeff(j) - pa.coeff(j) - pb.coeff(j)).norm();
            assert!(d <= 1e-13 * (1.0 + ps.coeff(j).norm()), "slot {j}");
        }
    }

    #[test]
    fn polar_derivative_of_binomial_power() {
        // D_α[(z+1)^4] = 4(1+α)(z+1)^3; with α = 3 that is 16(z+1)^3.
        let r = RootForm::new(c(1.0, 0.0), vec![c(-1.0, 0.0); 4]).unwrap();
        let d = polar_derivative(&r.expand(), PolarPoint::new(c(3.0, 0.0)).unwrap()).unwrap();
        let expected = [16.0, 48.0, 48.0, 16.0];
        assert_eq!(d.degree(), 3);
        for (j, &e) in expected.iter().enumerate() {
            assert!(approx(d.coeff(j), c(e, 0.0), 1e-13), "slot {j}: {}", d.coeff(j));
        }
    }

    #[test]
    fn polar_derivative_annihilates_shifted_monomial() {
        // D_α[(z−α)^n] = 0 identically; integer α keeps the arithmetic exact.
        let r = RootForm::new(c(1.0, 0.0), vec![c(2.0, 0.0); 3]).unwrap();
        let d = polar_derivative(&r.expand(), PolarPoint::new(c(2.0, 0.0)).unwrap()).unwrap();
        assert!(d.is_zero());
    }

    #[test]
    fn generalized_polar_derivative_symbolic() {
        // P = (z−1)(z+1), γ = (2,3), α = 0:
        // Λ·P + (0 − z)·P^γ = 5z² − 5 − z(5z − 1) = z − 5.
        let r = RootForm::new(c(1.0, 0.0), vec![c(1.0, 0.0), c(-1.0, 0.0)]).unwrap();
        let g = GammaWeights::new(vec![2.0, 3.0]).unwrap();
        let d = generalized_polar_derivative(&r, &g, PolarPoint::new(ZERO_C).unwrap()).unwrap();
        assert_eq!(d.coeffs().len(), 3);
        assert!(approx(d.coeff(0), c(-5.0, 0.0), 1e-14));
        assert!(approx(d.coeff(1), c(1.0, 0.0), 1e-14));
        assert!(d.coeff(2).norm() <= 1e-14);
    }

    #[test]
    fn generalized_polar_derivative_degree_one() {
        // P = z, γ = (0.5), α = 2: D = 0.5z + (2−z)·0.5 = 1.
        let r = RootForm::new(c(1.0, 0.0), vec![ZERO_C]).unwrap();
        let g = GammaWeights::new(vec![0.5]).unwrap();
        let d = generalized_polar_derivative(&r, &g, PolarPoint::new(c(2.0, 0.0)).unwrap()).unwrap();
        assert!(approx(d.coeff(0), c(1.0, 0.0), 1e-15));
        assert!(d.coeff(1).norm() <= 1e-15);
    }

    #[test]
    fn generalized_polar_top_slot_cancels_numerically() {
        let mut rng = StreamRng::new(21, 3, Stream::Zeros);
        for n in 2..=8usize {
            let roots: Vec<Complex64> = (0..n).map(|_| rng.next_in_disk(1.0)).collect();
            let lead = rng.next_on_circle(1.0);
            let r = RootForm::new(lead, roots).unwrap();
            let g = GammaWeights::new((0..n).map(|_| rng.next_f64() + 0.1).collect()).unwrap();
            let a = PolarPoint::new(rng.next_on_circle(3.0)).unwrap();
            let d = generalized_polar_derivative(&r, &g, a).unwrap();
            let scale = g.lambda() * lead.norm();
            assert!(d.leading().norm() <= 1e-12 * scale, "n={n}: {}", d.leading().norm());
        }
    }

    #[test]
    fn operator_identity_at_random_points() {
        // D_α^γ[P](z) − Λ·P(z) = (α − z)·P^γ(z) at 100 random points.
        let mut rng = StreamRng::new(31, 0, Stream::Zeros);
        let roots: Vec<Complex64> = (0..6).map(|_| rng.next_in_disk(1.2)).collect();
        let r = RootForm::new(c(0.3, 0.9), roots).unwrap();
        let g = GammaWeights::new((0..6).map(|_| rng.next_f64() * 2.0 + 0.05).collect()).unwrap();
        let a = PolarPoint::new(c(1.7, -0.4)).unwrap();
        let p = r.expand();
        let pg = generalized_derivative(&r, &g).unwrap();
        let d = generalized_polar_derivative(&r, &g, a).unwrap();
        for _ in 0..100 {
            let z = rng.next_in_disk(2.0);
            let lhs = d.eval(z) - p.eval(z) * g.lambda();
            let rhs = (a.alpha - z) * pg.eval(z);
            assert!((lhs - rhs).norm() <= 1e-11 * (1.0 + rhs.norm()));
        }
    }

    #[test]
    fn dubinin_quantity_symbolic_value() {
        // P = (z+1)²: z·P'/P = 2z/(z+1); at z = i this is 1 + i, so Re = 1.
        let p = Polynomial::new(vec![c(1.0, 0.0), c(2.0, 0.0), c(1.0, 0.0)]).unwrap();
        let v = dubinin_quantity(&p, c(0.0, 1.0), 1e-9).unwrap();
        assert!((v - 1.0).abs() <= 1e-14);
    }

    #[test]
    fn dubinin_quantity_rejects_near_zero() {
        let p = Polynomial::new(vec![c(1.0, 0.0), c(2.0, 0.0), c(1.0, 0.0)]).unwrap();
        let err = dubinin_quantity(&p, c(-1.0, 1e-9), 1e-6).unwrap_err();
        assert!(matches!(err, Error::NearZeroRejected { .. }));
    }

    #[test]
    fn limit_ratio_defect_matches_exact_form_and_halves() {
        let mut rng = StreamRng::new(41, 0, Stream::Alpha);
        let p = Polynomial::new(vec![c(1.0, 0.5), c(-0.3, 0.2), c(0.0, -1.1), c(0.8, 0.0)]).unwrap();
        let n = p.degree() as f64;
        let dp = p.derivative();
        for _ in 0..50 {
            let z = rng.next_on_circle(1.0);
            let dir = rng.next_on_circle(1.0);
            let m = rng.next_range(1.0, 100.0);
            let alpha = PolarPoint::new(dir * m).unwrap();
            // Conditioning screen: skip points where nP − zP' nearly cancels.
            let cp = (p.eval(z) * n - z * dp.eval(z)).norm();
            if cp < 1e-3 {
                continue;
            }
            let defect = limit_ratio_defect(&p, alpha, z).unwrap();
            let oracle = cp / m;
            assert!((defect - oracle).abs() <= 1e-10 * oracle, "{defect} vs {oracle}");
            // Doubling |α| along the same direction halves the defect.
            let defect2 = limit_ratio_defect(&p, PolarPoint::new(dir * (2.0 * m)).unwrap(), z).unwrap();
            assert!((defect - 2.0 * defect2).abs() <= 1e-10 * defect);
        }
    }

    #[test]
    fn weight_validation() {
        assert!(GammaWeights::new(vec![]).is_err());
        assert!(GammaWeights::new(vec![0.0, 0.0]).is_err());
        assert!(GammaWeights::new(vec![1.0, -0.5]).is_err());
        assert!(GammaWeights::new(vec![0.0, 2.0]).is_ok());
        let g = GammaWeights::new(vec![0.5, 2.0, 1.0]).unwrap();
        assert_eq!(g.lambda(), 3.5);
        assert_eq!(g.gamma_min(), 0.5);
    }

    #[test]
    fn length_mismatch_is_rejected() {
        let r = RootForm::new(c(1.0, 0.0), vec![ZERO_C, ZERO_C]).unwrap();
        let g = GammaWeights::new(vec![1.0, 1.0, 1.0]).unwrap();
        assert!(matches!(
            generalized_derivative(&r, &g),
            Err(Error::LengthMismatch { expected: 2, got: 3 })
        ));
    }
}
