//! The target function `h_c(z) = 1 + 4z/3 + 2z²/3`, the cardioid image
//! region it maps the unit disc onto, membership testing, and the
//! minimum-real-part geometry used by the sharpness checks.
//!
//! The image boundary lies on the quartic locus
//! `(9u² + 9v² - 18u + 5)² - 16(9u² + 9v² - 6u + 1) = 0`, and the quartic is
//! negative exactly on the open image region: writing X = (3u-1)² + 9v², the
//! locus factors through (√X - 2)² < 12u < (√X + 2)², whose only real zero
//! branch is the image curve itself. Membership queries therefore decide by
//! quartic sign away from the curve and fall back to a winding-number test
//! over the sampled boundary inside a narrow band, where the winding test is
//! authoritative.

use num_complex::Complex64;
use std::f64::consts::TAU;
use std::sync::LazyLock;

use crate::series::PowerSeries;
use crate::verify::{TheoremTag, VerificationReport};
use crate::{Error, Result};

/// Default number of boundary samples.
pub const DEFAULT_BOUNDARY_SAMPLES: usize = 2048;

/// Quartic magnitudes below this fall back to the winding test.
pub const QUARTIC_BAND: f64 = 1e-2;

/// Points closer than this to the sampled boundary are ambiguous.
pub const BOUNDARY_AMBIGUITY_TOL: f64 = 1e-9;

/// The cardioid target function h_c(z) = 1 + 4z/3 + 2z²/3.
pub fn hc(z: Complex64) -> Complex64 {
    (z * (2.0 / 3.0) + 4.0 / 3.0) * z + 1.0
}

/// Left-hand side of the cardioid quartic at u = Re w, v = Im w.
///
/// Negative on the image region, positive outside, zero on the boundary.
pub fn quartic_value(w: Complex64) -> f64 {
    let (u, v) = (w.re, w.im);
    let s = 9.0 * (u * u + v * v);
    let a = s - 18.0 * u + 5.0;
    let b = s - 6.0 * u + 1.0;
    a * a - 16.0 * b
}

/// Minimum of Re h_c over the circle |z| = r, in closed form h_c(-r).
///
/// The closed form is valid for 0 < r ≤ 1/2 only (the minimizing direction
/// leaves the real axis beyond that radius).
pub fn min_real_on_circle(r: f64) -> Result<f64> {
    if !(r > 0.0 && r <= 0.5) {
        return Err(Error::Param(format!(
            "min_real_on_circle needs 0 < r <= 1/2, got {r}"
        )));
    }
    Ok(1.0 - 4.0 * r / 3.0 + 2.0 * r * r / 3.0)
}

/// The image region of the unit disc under [`hc`], represented by a closed
/// sampled boundary polyline h_c(e^{it}).
#[derive(Debug, Clone)]
pub struct CardioidRegion {
    boundary: Vec<Complex64>,
}

static DEFAULT_REGION: LazyLock<CardioidRegion> =
    LazyLock::new(|| CardioidRegion::new(DEFAULT_BOUNDARY_SAMPLES));

/// Shared region with the default boundary resolution.
pub fn region() -> &'static CardioidRegion {
    &DEFAULT_REGION
}

/// Membership test against the shared default region.
pub fn contains(w: Complex64) -> Result<bool> {
    region().contains(w)
}

impl CardioidRegion {
    /// Samples the boundary at `samples` uniform angles (closed by
    /// wraparound).
    pub fn new(samples: usize) -> Self {
        assert!(samples >= 16, "boundary needs at least 16 samples");
        let boundary: Vec<Complex64> = (0..samples)
            .map(|k| hc(Complex64::from_polar(1.0, TAU * k as f64 / samples as f64)))
            .collect();
        debug_assert!(boundary.iter().all(|&w| quartic_value(w).abs() < 1e-9));
        CardioidRegion { boundary }
    }

    /// The boundary samples, in positive orientation.
    pub fn boundary(&self) -> &[Complex64] {
        &self.boundary
    }

    /// True iff `w` lies in the image region.
    ///
    /// Quartic sign decides outside the [`QUARTIC_BAND`] band; within it the
    /// winding number of the sampled boundary is authoritative, and points
    /// within [`BOUNDARY_AMBIGUITY_TOL`] of the polyline are reported as
    /// ambiguous for the caller to resolve.
    pub fn contains(&self, w: Complex64) -> Result<bool> {
        let f = quartic_value(w);
        if f.abs() > QUARTIC_BAND {
            return Ok(f < 0.0);
        }
        if self.distance_to_boundary(w) < BOUNDARY_AMBIGUITY_TOL {
            return Err(Error::BoundaryAmbiguous { w, tol: BOUNDARY_AMBIGUITY_TOL });
        }
        Ok(self.winding_number(w) != 0)
    }

    /// Winding number of the sampled boundary polyline around `w`.
    pub fn winding_number(&self, w: Complex64) -> i32 {
        // Crossing form of the winding number; the boundary wraps around.
        fn is_left(p0: Complex64, p1: Complex64, q: Complex64) -> f64 {
            (p1.re - p0.re) * (q.im - p0.im) - (q.re - p0.re) * (p1.im - p0.im)
        }
        let n = self.boundary.len();
        let mut wn = 0i32;
        for i in 0..n {
            let p0 = self.boundary[i];
            let p1 = self.boundary[(i + 1) % n];
            if p0.im <= w.im {
                if p1.im > w.im && is_left(p0, p1, w) > 0.0 {
                    wn += 1;
                }
            } else if p1.im <= w.im && is_left(p0, p1, w) < 0.0 {
                wn -= 1;
            }
        }
        wn
    }

    /// Euclidean distance from `w` to the sampled boundary polyline.
    pub fn distance_to_boundary(&self, w: Complex64) -> f64 {
        let n = self.boundary.len();
        let mut best = f64::INFINITY;
        for i in 0..n {
            let p0 = self.boundary[i];
            let p1 = self.boundary[(i + 1) % n];
            let seg = p1 - p0;
            let len2 = seg.norm_sqr();
            let t = if len2 == 0.0 {
                0.0
            } else {
                (((w - p0).re * seg.re + (w - p0).im * seg.im) / len2).clamp(0.0, 1.0)
            };
            best = best.min((w - (p0 + seg * t)).norm());
        }
        best
    }
}

/// Necessary-condition subordination test of `f ≺ h_c` by disc sampling.
///
/// Samples f on the circles |z| = r for each radius, requires f(0) = 1 and
/// membership of every sample in the image region. A sampler can refute
/// subordination but only probabilistically confirm it; the report's worst
/// margin is the largest quartic value seen (negative = inside).
/// Boundary-ambiguous samples count as contained.
pub fn is_subordinate_to_cardioid(
    f: &PowerSeries,
    radii: &[f64],
    samples_per_radius: usize,
) -> VerificationReport {
    debug_assert!(radii.iter().all(|&r| r > 0.0 && r < 1.0));
    let normalized = (f.evaluate(Complex64::new(0.0, 0.0)) - 1.0).norm() <= 1e-10;

    let mut worst = f64::NEG_INFINITY;
    let mut worst_point = Complex64::new(0.0, 0.0);
    let mut all_inside = true;
    let mut count = 0usize;
    for &r in radii {
        for k in 0..samples_per_radius {
            let z = Complex64::from_polar(r, TAU * k as f64 / samples_per_radius as f64);
            let w = f.evaluate(z);
            count += 1;
            let inside = region().contains(w).unwrap_or(true);
            if !inside {
                all_inside = false;
            }
            let margin = quartic_value(w);
            if margin > worst {
                worst = margin;
                worst_point = z;
            }
        }
    }

    let mut report = VerificationReport::new(TheoremTag::Subordination);
    report.params.insert("samples_per_radius".into(), samples_per_radius as f64);
    report.params.insert("radii".into(), radii.len() as f64);
    report.hypothesis_pass = normalized;
    report.hypothesis_margin = (f.evaluate(Complex64::new(0.0, 0.0)) - 1.0).norm();
    report.conclusion_pass = all_inside;
    report.conclusion_margin = worst;
    report.worst_point = worst_point;
    report.sample_count = count;
    report.finalize();
    report
}
