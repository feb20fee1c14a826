//! Closed-form sharp lower bounds for the real part of the normalized
//! operator image, their ζ-th roots, and the extremal series that attains
//! them in the limit.
//!
//! The bound is the weighted radial average
//!
//! ```text
//! B(c) = c ∫₀¹ u^{c-1} (3 - 2u + u²/2)/3 du,
//! ```
//!
//! evaluated in closed form (the integrand is a polynomial against a power
//! weight, so termwise integration is exact). Quadrature of the raw integrand
//! is kept as a test oracle only.

use num_complex::Complex64;

use crate::{Error, Result};

/// Which theorem supplies the effective exponent.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BoundOrigin {
    /// c = γ/λ, requires λ > 0.
    Thm21 { gamma: f64, lambda: f64 },
    /// c = β/(λα), requires λ > 0.
    Thm22 { alpha: f64, beta: f64, lambda: f64 },
    /// c = (σ+1)/(1-λ), requires 0 < λ < 1 and σ > -1.
    Thm23 { sigma: f64, lambda: f64 },
}

/// Effective exponent c for the selected theorem.
pub fn effective_exponent(origin: &BoundOrigin) -> Result<f64> {
    match *origin {
        BoundOrigin::Thm21 { gamma, lambda } => {
            if !(lambda > 0.0) {
                return Err(Error::Param(format!("lambda must be positive, got {lambda}")));
            }
            if !(gamma > 0.0) {
                return Err(Error::Param(format!("gamma must be positive, got {gamma}")));
            }
            Ok(gamma / lambda)
        }
        BoundOrigin::Thm22 { alpha, beta, lambda } => {
            if !(lambda > 0.0) {
                return Err(Error::Param(format!("lambda must be positive, got {lambda}")));
            }
            if !(alpha > 0.0 && beta > 0.0) {
                return Err(Error::Param(format!(
                    "alpha and beta must be positive, got alpha = {alpha}, beta = {beta}"
                )));
            }
            Ok(beta / (lambda * alpha))
        }
        BoundOrigin::Thm23 { sigma, lambda } => {
            if !(lambda > 0.0 && lambda < 1.0) {
                return Err(Error::Param(format!("lambda must lie in (0,1), got {lambda}")));
            }
            if !(sigma > -1.0) {
                return Err(Error::Param(format!("sigma must exceed -1, got {sigma}")));
            }
            Ok((sigma + 1.0) / (1.0 - lambda))
        }
    }
}

/// Effective exponent and root index of a sharp-bound query.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundQuery {
    pub c: f64,
    pub zeta: f64,
    pub origin: Option<BoundOrigin>,
}

impl BoundQuery {
    /// Query from a theorem origin; ζ must be ≥ 1.
    pub fn from_origin(origin: BoundOrigin, zeta: f64) -> Result<Self> {
        let c = effective_exponent(&origin)?;
        if !(zeta >= 1.0) {
            return Err(Error::Param(format!("zeta must be >= 1, got {zeta}")));
        }
        Ok(BoundQuery { c, zeta, origin: Some(origin) })
    }

    /// Query from a raw exponent c > 0, ζ ≥ 1.
    pub fn direct(c: f64, zeta: f64) -> Result<Self> {
        if !(c > 0.0) {
            return Err(Error::Param(format!("exponent c must be positive, got {c}")));
        }
        if !(zeta >= 1.0) {
            return Err(Error::Param(format!("zeta must be >= 1, got {zeta}")));
        }
        Ok(BoundQuery { c, zeta, origin: None })
    }
}

/// Sharp bound B(c) in closed form.
///
/// The single-quotient arrangement
/// (3(c+1)(c+2) - 2c(c+2) + c(c+1)/2) / (3(c+1)(c+2)) keeps the value
/// correctly rounded for small integer c. Strictly between 1/2 and 1 and
/// strictly decreasing in c.
pub fn sharp_bound(c: f64) -> Result<f64> {
    if !(c > 0.0) {
        return Err(Error::Param(format!("exponent c must be positive, got {c}")));
    }
    let num = 3.0 * (c + 1.0) * (c + 2.0) - 2.0 * c * (c + 2.0) + c * (c + 1.0) / 2.0;
    let den = 3.0 * (c + 1.0) * (c + 2.0);
    Ok(num / den)
}

/// B(c)^{1/ζ}, the bound for the ζ-th-rooted conclusion.
pub fn sharp_bound_root(q: &BoundQuery) -> Result<f64> {
    Ok(sharp_bound(q.c)?.powf(1.0 / q.zeta))
}

/// Value of the extremal series 1 + (4c/(3(c+1)))z + (2c/(3(c+2)))z².
///
/// This is the normalized operator image of the extremal function: the
/// termwise integral of (3 + 4uz + 2(uz)²)/3 against c·u^{c-1} du. Its value
/// at z = -1/2 equals [`sharp_bound`] exactly.
pub fn extremal_series_value(c: f64, z: Complex64) -> Complex64 {
    debug_assert!(c > 0.0);
    1.0 + z * (4.0 * c / (3.0 * (c + 1.0))) + z * z * (2.0 * c / (3.0 * (c + 2.0)))
}
