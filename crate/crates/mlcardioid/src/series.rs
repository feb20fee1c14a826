//! Truncated power-series arithmetic, the Hadamard convolution, the
//! Mittag-Leffler convolution operator, the Bernardi integral operator, and
//! coefficientwise residuals of the operator identities.
//!
//! Series are truncated, never symbolic. All operator identities are
//! diagonal in the coefficient basis, so checking them coefficientwise up to
//! the common truncation order is exact apart from Gamma rounding.
//! Mixed-order arithmetic truncates to the shorter order; there is no
//! implicit zero-padding.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::special::{normalized_ml_series, MLParams};
use crate::{Error, Result};

/// Tolerance for the class-𝒜 normalization check (c0 = 0, c1 = 1).
pub const CLASS_A_TOL: f64 = 1e-12;

/// Finite Maclaurin coefficients c0…cN, index = power of z.
///
/// Coefficients are stored as complex values even when real, one
/// representation everywhere. Immutable after construction.
#[derive(Debug, Clone, PartialEq)]
pub struct PowerSeries {
    coeffs: Vec<Complex64>,
}

#[derive(Serialize, Deserialize)]
struct SeriesJson {
    coeffs: Vec<[f64; 2]>,
}

impl PowerSeries {
    /// Builds a series from coefficients; at least one is required.
    pub fn new(coeffs: Vec<Complex64>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::Param("a power series needs at least one coefficient".into()));
        }
        Ok(PowerSeries { coeffs })
    }

    /// Convenience constructor from real coefficients.
    pub fn from_real(coeffs: &[f64]) -> Result<Self> {
        PowerSeries::new(coeffs.iter().map(|&x| Complex64::new(x, 0.0)).collect())
    }

    /// Truncation degree N.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// Coefficient of z^k, zero beyond the truncation order.
    pub fn coeff(&self, k: usize) -> Complex64 {
        self.coeffs.get(k).copied().unwrap_or_else(|| Complex64::new(0.0, 0.0))
    }

    /// Whether the series is normalized as z + c2 z² + … (c0 = 0, c1 = 1).
    pub fn is_class_a(&self) -> bool {
        self.coeff(0).norm() <= CLASS_A_TOL && (self.coeff(1) - 1.0).norm() <= CLASS_A_TOL
    }

    /// Horner evaluation of the truncated polynomial.
    ///
    /// The truncation is only meaningful inside the unit disc; evaluation
    /// outside logs a warning rather than failing.
    pub fn evaluate(&self, z: Complex64) -> Complex64 {
        if z.norm() >= 1.0 {
            log::warn!("evaluating a truncated series at |z| = {} >= 1", z.norm());
        }
        let mut acc = Complex64::new(0.0, 0.0);
        for &c in self.coeffs.iter().rev() {
            acc = acc * z + c;
        }
        acc
    }

    /// Hadamard (coefficientwise) product, truncated to the shorter order.
    pub fn hadamard(&self, other: &PowerSeries) -> PowerSeries {
        let n = self.coeffs.len().min(other.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeffs[k] * other.coeffs[k]).collect();
        PowerSeries { coeffs }
    }

    /// The series of z·f'(z): coefficient k·c_k at index k.
    pub fn z_times_derivative(&self) -> PowerSeries {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, &c)| c * k as f64)
            .collect();
        PowerSeries { coeffs }
    }

    /// Coefficientwise scaling by a real factor.
    pub fn scaled(&self, s: f64) -> PowerSeries {
        PowerSeries { coeffs: self.coeffs.iter().map(|&c| c * s).collect() }
    }

    /// Coefficientwise sum, truncated to the shorter order.
    pub fn add(&self, other: &PowerSeries) -> PowerSeries {
        let n = self.coeffs.len().min(other.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeffs[k] + other.coeffs[k]).collect();
        PowerSeries { coeffs }
    }

    /// Maximum absolute coefficient difference up to the common order.
    pub fn max_abs_diff(&self, other: &PowerSeries) -> f64 {
        let n = self.coeffs.len().min(other.coeffs.len());
        (0..n)
            .map(|k| (self.coeffs[k] - other.coeffs[k]).norm())
            .fold(0.0, f64::max)
    }

    /// Serializes to the interface format `{"coeffs": [[re, im], ...]}`.
    pub fn to_json(&self) -> String {
        let j = SeriesJson { coeffs: self.coeffs.iter().map(|c| [c.re, c.im]).collect() };
        serde_json::to_string(&j).expect("series serialization cannot fail")
    }

    /// Parses the interface format; inverse of [`PowerSeries::to_json`].
    pub fn from_json(text: &str) -> Result<Self> {
        let j: SeriesJson = serde_json::from_str(text)?;
        PowerSeries::new(j.coeffs.into_iter().map(|[re, im]| Complex64::new(re, im)).collect())
    }
}

fn require_class_a(f: &PowerSeries) -> Result<()> {
    if !f.is_class_a() {
        return Err(Error::NotClassA { c0: f.coeff(0), c1: f.coeff(1) });
    }
    Ok(())
}

/// Applies the Mittag-Leffler convolution operator to a class-𝒜 series.
///
/// This is the Hadamard product with the normalized Mittag-Leffler
/// coefficients at the order of `f`; the result is again of class 𝒜.
pub fn apply_operator(p: &MLParams, f: &PowerSeries) -> Result<PowerSeries> {
    require_class_a(f)?;
    let e = normalized_ml_series(p, f.order().max(1));
    Ok(e.hadamard(f))
}

/// Bernardi-Libera-Livingston integral operator on coefficients.
///
/// Maps the coefficient of z^k to (σ+1)/(σ+k) times itself for k ≥ 1;
/// requires σ > -1 and a class-𝒜 input, and preserves class 𝒜.
pub fn bernardi(sigma: f64, f: &PowerSeries) -> Result<PowerSeries> {
    if !(sigma > -1.0) {
        return Err(Error::Param(format!("bernardi requires sigma > -1, got {sigma}")));
    }
    require_class_a(f)?;
    let coeffs = f
        .coeffs()
        .iter()
        .enumerate()
        .map(|(k, &c)| {
            if k == 0 {
                c
            } else {
                c * ((sigma + 1.0) / (sigma + k as f64))
            }
        })
        .collect();
    PowerSeries::new(coeffs)
}

/// Which operator identity to check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IdentityKind {
    /// z(ℰ[γ]f)' = (1-γ)ℰ[γ]f + γℰ[γ+1]f
    Rec1,
    /// αz(ℰ[β+1]f)' = βℰ[β]f + (α-β)ℰ[β+1]f
    Rec2,
    /// z(ℰ𝓛_σf)' = (σ+1)ℰf - σℰ𝓛_σf
    BernardiInt,
}

/// Maximum absolute coefficient difference between the two sides of an
/// operator identity, computed symbolically on coefficients.
///
/// The identities hold exactly; the residual only carries Gamma rounding,
/// so values above ~1e-10 indicate an implementation defect.
pub fn identity_residual(
    kind: IdentityKind,
    p: &MLParams,
    sigma: Option<f64>,
    f: &PowerSeries,
) -> Result<f64> {
    require_class_a(f)?;
    let (lhs, rhs) = match kind {
        IdentityKind::Rec1 => {
            let low = apply_operator(p, f)?;
            let high = apply_operator(&p.bump_gamma(), f)?;
            let lhs = low.z_times_derivative();
            let rhs = low.scaled(1.0 - p.gamma).add(&high.scaled(p.gamma));
            (lhs, rhs)
        }
        IdentityKind::Rec2 => {
            let base = apply_operator(p, f)?;
            let bumped = apply_operator(&p.bump_beta(), f)?;
            let lhs = bumped.z_times_derivative().scaled(p.alpha);
            let rhs = base.scaled(p.beta).add(&bumped.scaled(p.alpha - p.beta));
            (lhs, rhs)
        }
        IdentityKind::BernardiInt => {
            let sigma = sigma.ok_or_else(|| {
                Error::Param("the Bernardi identity needs a sigma value".into())
            })?;
            let lf = bernardi(sigma, f)?;
            let op_f = apply_operator(p, f)?;
            let op_lf = apply_operator(p, &lf)?;
            let lhs = op_lf.z_times_derivative();
            let rhs = op_f.scaled(sigma + 1.0).add(&op_lf.scaled(-sigma));
            (lhs, rhs)
        }
    };
    Ok(lhs.max_abs_diff(&rhs))
}
