//! Polynomial representations: dense coefficient form and root (factored)
//! form, with conversions in both directions.
//!
//! Coefficient order is ascending: `coeffs[j]` is the coefficient of `z^j`.
//! The zero polynomial is representable (single zero coefficient) and is the
//! only value allowed to have a vanishing leading coefficient; operations
//! that produce it (e.g. the derivative of a constant) flag it via
//! [`Polynomial::is_zero`].

use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::TAU;
use num_complex::Complex64;
#[cfg(not(feature = "std"))]
use num_traits::Float;

use crate::error::Error;

/// Default normalized-residual tolerance for coefficient → root conversion.
pub const DEFAULT_RESIDUAL_TOL: f64 = 1e-10;
/// Default relative tolerance for zero-location predicates.
pub const DEFAULT_PREDICATE_TOL: f64 = 1e-9;

const ZERO_C: Complex64 = Complex64::new(0.0, 0.0);

fn all_finite(cs: &[Complex64]) -> bool {
    cs.iter().all(|c| c.re.is_finite() && c.im.is_finite())
}

/// Radius of a closed disk `|z| <= k`; validated to be positive and finite.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiskRadius(f64);

impl DiskRadius {
    pub fn new(k: f64) -> Result<Self, Error> {
        if k.is_finite() && k > 0.0 {
            Ok(DiskRadius(k))
        } else {
            Err(Error::InvalidParameter("disk radius must be positive and finite"))
        }
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

/// Dense polynomial over `Complex64`, ascending coefficient order.
#[derive(Debug, Clone, PartialEq)]
pub struct Polynomial {
    coeffs: Vec<Complex64>,
}

impl Polynomial {
    /// Validating constructor: coefficients must be finite and nonempty, and
    /// the leading coefficient nonzero unless this is the explicit zero
    /// polynomial `[0]`.
    pub fn new(coeffs: Vec<Complex64>) -> Result<Self, Error> {
        if coeffs.is_empty() {
            return Err(Error::EmptyCoefficients);
        }
        if !all_finite(&coeffs) {
            return Err(Error::NonFinite("polynomial coefficients"));
        }
        let lead = coeffs[coeffs.len() - 1];
        if coeffs.len() > 1 && lead == ZERO_C {
            return Err(Error::ZeroLeadingCoefficient);
        }
        Ok(Polynomial { coeffs })
    }

    /// Internal constructor for operator outputs that intentionally keep a
    /// (possibly cancelling) top coefficient slot.
    pub(crate) fn from_raw(coeffs: Vec<Complex64>) -> Self {
        debug_assert!(!coeffs.is_empty() && all_finite(&coeffs));
        Polynomial { coeffs }
    }

    /// The zero polynomial.
    pub fn zero() -> Self {
        Polynomial { coeffs: vec![ZERO_C] }
    }

    pub fn constant(c: Complex64) -> Self {
        Polynomial { coeffs: vec![c] }
    }

    /// True only for the degenerate zero polynomial.
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == ZERO_C)
    }

    /// Formal degree: one less than the coefficient count. Operator outputs
    /// may carry a numerically negligible leading slot; callers that care
    /// inspect [`Polynomial::leading`].
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// Coefficient of `z^j` (zero beyond the stored degree).
    pub fn coeff(&self, j: usize) -> Complex64 {
        self.coeffs.get(j).copied().unwrap_or(ZERO_C)
    }

    pub fn leading(&self) -> Complex64 {
        self.coeffs[self.coeffs.len() - 1]
    }

    /// Horner evaluation.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        let mut acc = ZERO_C;
        for &c in self.coeffs.iter().rev() {
            acc = acc * z + c;
        }
        acc
    }

    /// Value and first derivative in a single Horner pass.
    pub(crate) fn eval_pair(&self, z: Complex64) -> (Complex64, Complex64) {
        let mut p = ZERO_C;
        let mut dp = ZERO_C;
        for &c in self.coeffs.iter().rev() {
            dp = dp * z + p;
            p = p * z + c;
        }
        (p, dp)
    }

    /// Ordinary derivative. The derivative of a constant is the explicit
    /// zero polynomial (see [`Polynomial::is_zero`]).
    pub fn derivative(&self) -> Polynomial {
        if self.coeffs.len() == 1 {
            return Polynomial::zero();
        }
        let d: Vec<Complex64> = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(j, &c)| c * j as f64)
            .collect();
        Polynomial::from_raw(d)
    }

    /// The polynomial `z ↦ P(kz)`: coefficient `j` becomes `a_j k^j`.
    pub fn scale_domain(&self, k: f64) -> Result<Polynomial, Error> {
        if !k.is_finite() || k <= 0.0 {
            return Err(Error::InvalidParameter("scale factor must be positive and finite"));
        }
        let mut pw = 1.0;
        let scaled: Vec<Complex64> = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(j, &c)| {
                if j > 0 {
                    pw *= k;
                }
                c * pw
            })
            .collect();
        Ok(Polynomial { coeffs: scaled })
    }

    /// Largest normalized residual `|P(z_j)| / (|a_n| max(1,|z_j|)^n)` over
    /// a candidate root set.
    fn normalized_residual(&self, roots: &[Complex64]) -> f64 {
        let n = self.degree() as i32;
        let lead = self.leading().norm();
        let mut worst: f64 = 0.0;
        for &r in roots {
            let scale = lead * r.norm().max(1.0).powi(n);
            worst = worst.max(self.eval(r).norm() / scale);
        }
        worst
    }

    /// All roots via Ehrlich–Aberth simultaneous iteration.
    ///
    /// Converges when either every correction is at machine level or the
    /// normalized residual meets `residual_tol` and further iterations have
    /// stalled (multiple-root clusters stall at radius ~ `tol^(1/m)` for
    /// multiplicity m). On failure the error carries the best iterate seen
    /// together with its residual.
    pub fn find_roots(&self, residual_tol: f64) -> Result<RootForm, Error> {
        if !residual_tol.is_finite() || residual_tol <= 0.0 {
            return Err(Error::InvalidParameter("residual tolerance must be positive and finite"));
        }
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let n = self.degree();
        if n == 0 {
            return Err(Error::DegreeTooLow { required: 1, got: 0 });
        }
        let lead = self.leading();
        if n == 1 {
            return RootForm::new(lead, vec![-self.coeffs[0] / lead]);
        }

        // Initial guesses on a circle sized by the geometric mean of root
        // moduli, spread by the golden angle to avoid symmetric stalls.
        let r0 = (self.coeffs[0].norm() / lead.norm())
            .powf(1.0 / n as f64)
            .max(1e-8);
        let golden = TAU * 0.618_033_988_749_895;
        let mut z: Vec<Complex64> = (0..n)
            .map(|i| Complex64::from_polar(r0, 0.25 + golden * i as f64))
            .collect();

        let mut w = vec![ZERO_C; n];
        let mut prev_corr = f64::INFINITY;
        let mut stall = 0usize;
        let mut best_roots = z.clone();
        let mut best_res = self.normalized_residual(&z);

        for _ in 0..500 {
            for i in 0..n {
                let (p, dp) = self.eval_pair(z[i]);
                if p == ZERO_C {
                    w[i] = ZERO_C;
                    continue;
                }
                if dp == ZERO_C {
                    // Landed on a critical point: take a deterministic nudge.
                    w[i] = Complex64::new(1e-3 * (1.0 + z[i].norm()), 0.0);
                    continue;
                }
                let newton = p / dp;
                let mut s = ZERO_C;
                for j in 0..n {
                    if j != i {
                        let mut d = z[i] - z[j];
                        if d == ZERO_C {
                            d = Complex64::new(1e-12 * (1.0 + z[i].norm()), 0.0);
                        }
                        s += d.inv();
                    }
                }
                let denom = Complex64::new(1.0, 0.0) - newton * s;
                w[i] = if denom.norm_sqr() < 1e-60 { newton } else { newton / denom };
            }
            let mut corr: f64 = 0.0;
            for i in 0..n {
                z[i] -= w[i];
                corr = corr.max(w[i].norm() / (1.0 + z[i].norm()));
            }
            if corr <= 1e-15 {
                break;
            }
            // A stall means corrections have stopped contracting — either a
            // multiple-root noise floor or a cycle; stop once the residual
            // target is met.
            stall = if corr > 0.95 * prev_corr { stall + 1 } else { 0 };
            prev_corr = corr;
            if stall >= 3 {
                let res = self.normalized_residual(&z);
                if res < best_res {
                    best_res = res;
                    best_roots.copy_from_slice(&z);
                }
                if res <= residual_tol {
                    break;
                }
            }
        }

        let res = self.normalized_residual(&z);
        if res < best_res {
            best_res = res;
            best_roots = z;
        }
        if best_res <= residual_tol {
            RootForm::new(lead, best_roots)
        } else {
            Err(Error::RootsDidNotConverge { roots: best_roots, residual: best_res })
        }
    }
}

/// Factored form `c · Π_j (z − z_j)`.
#[derive(Debug, Clone, PartialEq)]
pub struct RootForm {
    leading: Complex64,
    roots: Vec<Complex64>,
}

impl RootForm {
    /// Validating constructor: finite entries, nonzero leading factor.
    /// Multiple roots are represented by repeated entries.
    pub fn new(leading: Complex64, roots: Vec<Complex64>) -> Result<Self, Error> {
        if !leading.re.is_finite() || !leading.im.is_finite() {
            return Err(Error::NonFinite("leading factor"));
        }
        if leading == ZERO_C {
            return Err(Error::ZeroLeadingCoefficient);
        }
        if !all_finite(&roots) {
            return Err(Error::NonFinite("roots"));
        }
        Ok(RootForm { leading, roots })
    }

    pub fn leading(&self) -> Complex64 {
        self.leading
    }

    pub fn roots(&self) -> &[Complex64] {
        &self.roots
    }

    pub fn degree(&self) -> usize {
        self.roots.len()
    }

    pub fn max_root_modulus(&self) -> f64 {
        self.roots.iter().fold(0.0, |m, r| m.max(r.norm()))
    }

    /// True when every root satisfies `|z_j| <= k (1 + tol)`.
    pub fn zeros_in_disk(&self, k: f64, tol: f64) -> bool {
        self.max_root_modulus() <= k * (1.0 + tol)
    }

    /// Expand to coefficient form by successive multiplication by `(z − z_j)`.
    pub fn expand(&self) -> Polynomial {
        let mut coeffs = vec![self.leading];
        for &r in &self.roots {
            coeffs.push(ZERO_C);
            // Multiply in place by (z − r), highest slot first.
            for j in (0..coeffs.len() - 1).rev() {
                let c = coeffs[j];
                coeffs[j + 1] += c;
                coeffs[j] = -r * c;
            }
        }
        Polynomial { coeffs }
    }

    /// Direct product evaluation `c · Π (z − z_j)` — accurate near roots.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.roots.iter().fold(self.leading, |acc, &r| acc * (z - r))
    }

    /// Root form of `z ↦ P(kz)`: roots shrink to `z_j / k`, the leading
    /// factor grows to `c·k^n`.
    pub fn scale_domain(&self, k: f64) -> Result<RootForm, Error> {
        if !k.is_finite() || k <= 0.0 {
            return Err(Error::InvalidParameter("scale factor must be positive and finite"));
        }
        let n = self.roots.len() as i32;
        RootForm::new(
            self.leading * k.powi(n),
            self.roots.iter().map(|&r| r / k).collect(),
        )
    }
}
