//! Best dominants of the Briot-Bouquet differential equation
//!
//! ```text
//! q(z) + z q'(z) / (η q(z) + μ) = h_c(z),    q(0) = 1,
//! ```
//!
//! in a branch-free series formulation, together with the auxiliary function
//! H(z) = z·exp(4z/3 + z²/3) and ODE residual certification.
//!
//! The textbook solution reads q = z^μ [H]^η (η ∫₀^z [H]^η t^{μ-1} dt)^{-1} - μ/η,
//! which contains branch- and path-dependent powers as written. Writing
//! e(z) = exp(η(4z/3 + z²/3)) = Σ g_k z^k, the integral collapses to
//! ∫₀^z t^{μ-1} [H(t)]^η dt = z^{μ+η} Σ g_k z^k/(a+k) with a = μ + η, so every
//! z-power cancels:
//!
//! ```text
//! q(z) = e(z) / (η G(z)) - μ/η,    G(z) = Σ g_k z^k / (a + k).
//! ```
//!
//! This form is single-valued on the disc and matches the textbook formula on
//! the positive real axis.

use num_complex::Complex64;

use crate::cardioid::hc;
use crate::{Error, Result};

/// Denominator threshold below which the dominant is reported singular.
pub const DENOMINATOR_TOL: f64 = 1e-14;

/// Threshold on |ηq + μ| for the ODE residual.
pub const ODE_DENOMINATOR_TOL: f64 = 1e-10;

/// Default series order for dominant evaluation.
pub const DEFAULT_ORDER: usize = 64;

/// Which theorem instance a dominant belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DominantOrigin {
    /// a = γ (operator parameter γ)
    Thm31,
    /// a = β/α
    Thm32,
    /// a = σ + 1 (Bernardi parameter σ)
    Thm33,
    Generic,
}

/// Parameters (η, μ) of a Briot-Bouquet equation plus the derived effective
/// exponent a = μ + η.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DominantSpec {
    pub eta: f64,
    pub mu: f64,
    pub a: f64,
    pub origin: DominantOrigin,
}

impl DominantSpec {
    /// Generic spec; requires η ≠ 0, μ ≥ 0 and a = μ + η > 0.
    pub fn generic(eta: f64, mu: f64) -> Result<Self> {
        if eta == 0.0 {
            return Err(Error::Param("dominant spec requires eta != 0".into()));
        }
        if !(mu >= 0.0) {
            return Err(Error::Param(format!("dominant spec requires mu >= 0, got {mu}")));
        }
        let a = mu + eta;
        // a + k = 0 can then never occur in the series weights.
        if !(a > 0.0) {
            return Err(Error::Param(format!("effective exponent a = mu + eta = {a} must be positive")));
        }
        Ok(DominantSpec { eta, mu, a, origin: DominantOrigin::Generic })
    }

    /// Dominant of the γ-recurrence equation: η = 1, μ = γ - 1, a = γ.
    pub fn thm31(gamma: f64) -> Result<Self> {
        if !(gamma > 0.0) {
            return Err(Error::Param(format!("gamma must be positive, got {gamma}")));
        }
        Ok(DominantSpec { eta: 1.0, mu: gamma - 1.0, a: gamma, origin: DominantOrigin::Thm31 })
    }

    /// Dominant of the β-recurrence equation: η = 1, a = β/α.
    pub fn thm32(alpha: f64, beta: f64) -> Result<Self> {
        if !(alpha > 0.0 && beta > 0.0) {
            return Err(Error::Param(format!(
                "alpha and beta must be positive, got alpha = {alpha}, beta = {beta}"
            )));
        }
        let a = beta / alpha;
        Ok(DominantSpec { eta: 1.0, mu: a - 1.0, a, origin: DominantOrigin::Thm32 })
    }

    /// Dominant of the Bernardi equation: η = 1, μ = σ, a = σ + 1.
    pub fn thm33(sigma: f64) -> Result<Self> {
        if !(sigma > -1.0) {
            return Err(Error::Param(format!("sigma must exceed -1, got {sigma}")));
        }
        Ok(DominantSpec { eta: 1.0, mu: sigma, a: sigma + 1.0, origin: DominantOrigin::Thm33 })
    }

    /// Series evaluator for this spec at truncation order `n` (n ≥ 16).
    pub fn evaluator(&self, n: usize) -> DominantEvaluator {
        DominantEvaluator::new(*self, n)
    }
}

/// Maclaurin coefficients g_0…g_N of e(z) = exp(η(4z/3 + z²/3)).
///
/// The coefficients satisfy the first-order recurrence
/// (k+1) g_{k+1} = η(4/3) g_k + η(2/3) g_{k-1} with g_{-1} = 0, exactly to
/// rounding, and decay superexponentially.
#[derive(Debug, Clone, PartialEq)]
pub struct ExpPolySeries {
    eta: f64,
    coeffs: Vec<f64>,
}

impl ExpPolySeries {
    /// Builds the coefficients g_0…g_n by the recurrence; n must be ≥ 2.
    pub fn new(eta: f64, n: usize) -> Self {
        assert!(n >= 2, "exponential series needs order >= 2, got {n}");
        let mut g = vec![0.0f64; n + 1];
        g[0] = 1.0;
        g[1] = eta * 4.0 / 3.0;
        for k in 1..n {
            g[k + 1] = eta * (4.0 / 3.0 * g[k] + 2.0 / 3.0 * g[k - 1]) / (k as f64 + 1.0);
        }
        ExpPolySeries { eta, coeffs: g }
    }

    pub fn eta(&self) -> f64 {
        self.eta
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    /// Horner sum Σ g_k z^k.
    pub fn evaluate(&self, z: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for &g in self.coeffs.iter().rev() {
            acc = acc * z + g;
        }
        acc
    }
}

/// The auxiliary function H(z) = z·exp(4z/3 + z²/3), by direct evaluation.
pub fn big_h(z: Complex64) -> Complex64 {
    z * (z * 4.0 / 3.0 + z * z / 3.0).exp()
}

/// Margin of the positivity condition Re(η h_c(z) + μ) > 0 on the disc,
/// relative to the closed-disc minimum.
///
/// min over |z| ≤ 1 of Re(4z/3 + 2z²/3) equals -1 (attained on the boundary
/// where cos t = -1/2), so the margin is a - 1. A zero margin means the
/// strict condition still holds on the open disc, with equality only in the
/// boundary limit.
pub fn p_condition_margin(a: f64) -> f64 {
    a - 1.0
}

/// Best dominant of the averaging-type equation φ + zφ'/μ ≺ h_c (μ > 0):
/// the μ-weighted radial average of h_c, in closed form
/// 1 + (4z/3)·μ/(μ+1) + (2z²/3)·μ/(μ+2).
pub fn lemma22_dominant(mu: f64, z: Complex64) -> Complex64 {
    assert!(mu > 0.0, "lemma22_dominant requires mu > 0, got {mu}");
    1.0 + z * (4.0 / 3.0 * mu / (mu + 1.0)) + z * z * (2.0 / 3.0 * mu / (mu + 2.0))
}

/// Prepared series data for evaluating one dominant and its ODE residual.
#[derive(Debug, Clone)]
pub struct DominantEvaluator {
    spec: DominantSpec,
    exp_series: ExpPolySeries,
    // g_k / (a + k), the weights of G
    g_weights: Vec<f64>,
}

impl DominantEvaluator {
    fn new(spec: DominantSpec, n: usize) -> Self {
        assert!(n >= 16, "dominant evaluation needs order >= 16, got {n}");
        let exp_series = ExpPolySeries::new(spec.eta, n);
        let g_weights = exp_series
            .coeffs()
            .iter()
            .enumerate()
            .map(|(k, &g)| g / (spec.a + k as f64))
            .collect();
        DominantEvaluator { spec, exp_series, g_weights }
    }

    pub fn spec(&self) -> &DominantSpec {
        &self.spec
    }

    fn sum_g(&self, z: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for &w in self.g_weights.iter().rev() {
            acc = acc * z + w;
        }
        acc
    }

    /// q(z) = e(z)/(η G(z)) - μ/η; exactly 1 at the origin.
    pub fn evaluate(&self, z: Complex64) -> Result<Complex64> {
        if z == Complex64::new(0.0, 0.0) {
            // limit value; avoids the rounding of e(0)/(η g0/a) - μ/η
            return Ok(Complex64::new(1.0, 0.0));
        }
        let g = self.sum_g(z);
        if g.norm() < DENOMINATOR_TOL {
            return Err(Error::DenominatorZero { z });
        }
        let e = self.exp_series.evaluate(z);
        Ok(e / (g * self.spec.eta) - self.spec.mu / self.spec.eta)
    }

    /// Residual q + zq'/(ηq + μ) - h_c(z), with q' from termwise
    /// differentiation of e and G (quotient rule).
    ///
    /// For the theorem specs η = 1 and ηq + μ = q + a - 1.
    pub fn ode_residual(&self, z: Complex64) -> Result<Complex64> {
        let q = self.evaluate(z)?;
        let denom = q * self.spec.eta + self.spec.mu;
        if denom.norm() <= ODE_DENOMINATOR_TOL {
            return Err(Error::SingularDenominator { z });
        }
        let g = self.sum_g(z);
        let e = self.exp_series.evaluate(z);
        let e_prime = horner_derivative(self.exp_series.coeffs(), z);
        let g_prime = horner_derivative(&self.g_weights, z);
        let q_prime = (e_prime * g - e * g_prime) / (g * g * self.spec.eta);
        Ok(q + z * q_prime / denom - hc(z))
    }
}

fn horner_derivative(coeffs: &[f64], z: Complex64) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    for k in (1..coeffs.len()).rev() {
        acc = acc * z + coeffs[k] * k as f64;
    }
    acc
}

/// Coefficients of exp(η(4z/3 + z²/3)) up to order `n`.
pub fn exp_poly_coeffs(eta: f64, n: usize) -> ExpPolySeries {
    ExpPolySeries::new(eta, n)
}

/// Dominant value q(z) at series order `n`.
pub fn dominant(spec: &DominantSpec, z: Complex64, n: usize) -> Result<Complex64> {
    spec.evaluator(n).evaluate(z)
}

/// ODE residual of the dominant at `z`, series order `n`.
pub fn ode_residual(spec: &DominantSpec, z: Complex64, n: usize) -> Result<Complex64> {
    spec.evaluator(n).ode_residual(z)
}
