use num_complex::Complex64;
use thiserror::Error;

/// Errors shared by all modules of the crate.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// Gamma function evaluated at (or within tolerance of) a pole.
    #[error("gamma pole: {z} is within tolerance of a non-positive integer")]
    Pole { z: Complex64 },

    /// Series stopping criterion was not met within the term budget.
    #[error("series did not converge within {max_terms} terms at |z| = {z_abs:.6}")]
    Convergence { max_terms: usize, z_abs: f64 },

    /// Operator input is not normalized (requires c0 = 0 and c1 = 1).
    #[error("series is not normalized: c0 = {c0}, c1 = {c1}")]
    NotClassA { c0: Complex64, c1: Complex64 },

    /// A parameter is outside its admissible range.
    #[error("invalid parameter: {0}")]
    Param(String),

    /// The series denominator of the dominant vanished.
    #[error("dominant denominator vanished at z = {z}")]
    DenominatorZero { z: Complex64 },

    /// The Briot-Bouquet denominator q(z) + a - 1 is too close to zero.
    #[error("singular denominator |q(z)+a-1| <= 1e-10 at z = {z}")]
    SingularDenominator { z: Complex64 },

    /// Membership query landed within tolerance of the sampled boundary.
    #[error("point {w} is within {tol:e} of the sampled boundary")]
    BoundaryAmbiguous { w: Complex64, tol: f64 },

    /// Theorem hypothesis fails, so the check does not apply.
    ///
    /// Distinct from a verification failure: an inapplicable theorem is not
    /// a counterexample.
    #[error("hypothesis not satisfied: {0}")]
    Hypothesis(String),

    /// I/O failure while reading or writing an interface file.
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Io(e.to_string())
    }
}
