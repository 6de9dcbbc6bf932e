use alloc::vec::Vec;
use core::fmt;
use num_complex::Complex64;

/// Errors produced by constructors, operators, and checks.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// An input contained a NaN or infinity. The payload names the field.
    NonFinite(&'static str),
    /// A coefficient vector was empty.
    EmptyCoefficients,
    /// The leading coefficient of an input polynomial was exactly zero.
    ZeroLeadingCoefficient,
    /// The zero polynomial was passed where a nonzero one is required.
    ZeroPolynomial,
    /// An operation requires degree at least `required`.
    DegreeTooLow { required: usize, got: usize },
    /// Two paired sequences had different lengths (e.g. weights vs roots).
    LengthMismatch { expected: usize, got: usize },
    /// A scalar parameter was outside its admissible range.
    InvalidParameter(&'static str),
    /// Root finding stopped without meeting the residual tolerance.
    /// Carries the best iterate and its normalized residual.
    RootsDidNotConverge { roots: Vec<Complex64>, residual: f64 },
    /// A pointwise quantity was requested too close to a zero of the
    /// denominator polynomial.
    NearZeroRejected { modulus: f64, floor: f64 },
    /// No circle sample survived the denominator floor.
    NoAdmissibleSamples,
    /// A check or bound was requested with parameters violating the
    /// inequality's hypothesis. The payload names the constraint.
    HypothesisViolated(&'static str),
    /// An ensemble configuration is incompatible with the chosen
    /// inequality's schema. The payload names the mismatch.
    SchemaViolation(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NonFinite(what) => write!(f, "non-finite value in {what}"),
            Error::EmptyCoefficients => write!(f, "empty coefficient vector"),
            Error::ZeroLeadingCoefficient => write!(f, "leading coefficient is zero"),
            Error::ZeroPolynomial => write!(f, "zero polynomial not allowed here"),
            Error::DegreeTooLow { required, got } => {
                write!(f, "degree {got} below required {required}")
            }
            Error::LengthMismatch { expected, got } => {
                write!(f, "length mismatch: expected {expected}, got {got}")
            }
            Error::InvalidParameter(what) => write!(f, "invalid parameter: {what}"),
            Error::RootsDidNotConverge { residual, .. } => {
                write!(f, "root finding did not converge (residual {residual:.3e})")
            }
            Error::NearZeroRejected { modulus, floor } => {
                write!(f, "evaluation point too close to a zero (|P| = {modulus:.3e} < floor {floor:.3e})")
            }
            Error::NoAdmissibleSamples => write!(f, "no circle sample above the denominator floor"),
            Error::HypothesisViolated(what) => write!(f, "hypothesis violated: {what}"),
            Error::SchemaViolation(what) => write!(f, "config incompatible with inequality schema: {what}"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for Error {}
