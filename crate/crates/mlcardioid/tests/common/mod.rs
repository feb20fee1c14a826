//! Shared test oracles: adaptive Gauss-Legendre quadrature and boundary
//! sampling helpers, independent of the library paths they cross-check.

#![allow(dead_code)]

use mlcardioid::Complex64;

/// Gauss-Legendre nodes and weights on [-1, 1] by Newton iteration on the
/// Legendre polynomial.
pub fn gauss_legendre(n: usize) -> Vec<(f64, f64)> {
    let mut rule = Vec::with_capacity(n);
    for i in 0..n {
        // Chebyshev-based initial guess
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        for _ in 0..100 {
            let (p, dp) = legendre_and_derivative(n, x);
            let dx = p / dp;
            x -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        let (_, dp) = legendre_and_derivative(n, x);
        rule.push((x, 2.0 / ((1.0 - x * x) * dp * dp)));
    }
    rule
}

fn legendre_and_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0f64;
    let mut p1 = x;
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, dp)
}

fn gl_sum(f: &dyn Fn(f64) -> f64, a: f64, b: f64, rule: &[(f64, f64)]) -> f64 {
    let mid = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    rule.iter().map(|&(x, w)| w * f(mid + half * x)).sum::<f64>() * half
}

/// Adaptive bisection quadrature with a 20-point Gauss-Legendre panel.
///
/// Open rule, so integrable endpoint singularities (u^{c-1} with c < 1) are
/// handled by recursion toward the endpoint. The acceptance threshold per
/// panel is the constant `tol` with a rounding floor, so only the panels
/// touching a singularity keep subdividing and the recursion stays linear.
pub fn adaptive_quad(f: &dyn Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> f64 {
    let rule = gauss_legendre(20);
    fn recurse(
        f: &dyn Fn(f64) -> f64,
        a: f64,
        b: f64,
        whole: f64,
        tol: f64,
        depth: usize,
        rule: &[(f64, f64)],
    ) -> f64 {
        let m = 0.5 * (a + b);
        let left = gl_sum(f, a, m, rule);
        let right = gl_sum(f, m, b, rule);
        let gap = (left + right - whole).abs();
        let floor = 4.0 * f64::EPSILON * (left.abs() + right.abs());
        if depth >= 160 || gap <= tol.max(floor) {
            return left + right;
        }
        recurse(f, a, m, left, tol, depth + 1, rule)
            + recurse(f, m, b, right, tol, depth + 1, rule)
    }
    let whole = gl_sum(f, a, b, &rule);
    recurse(f, a, b, whole, tol, 0, &rule)
}

/// The sharp-bound integrand c·u^{c-1}·(3 - 2u + u²/2)/3.
pub fn bound_integrand(c: f64, u: f64) -> f64 {
    c * u.powf(c - 1.0) * (3.0 - 2.0 * u + u * u / 2.0) / 3.0
}

/// Real-axis quadrature oracle for the dominant in its textbook form:
/// x^a e^{p(x)} (∫₀^x t^{a-1} e^{p(t)} dt)^{-1} - (a - 1) with
/// p(t) = 4t/3 + t²/3, for x > 0 on the real axis where powers are
/// unambiguous. Valid for a >= 1.
pub fn dominant_real_axis_oracle(a: f64, x: f64) -> f64 {
    assert!(x > 0.0 && a >= 1.0);
    let p = |t: f64| 4.0 * t / 3.0 + t * t / 3.0;
    let integral = adaptive_quad(&|t| t.powf(a - 1.0) * p(t).exp(), 0.0, x, 1e-13);
    x.powf(a) * p(x).exp() / integral - (a - 1.0)
}

/// Quadrature oracle for the μ-weighted radial average of h_c along [0, x]:
/// (μ/x^μ) ∫₀^x t^{μ-1} h_c(t) dt for real x.
pub fn radial_average_oracle(mu: f64, x: f64) -> f64 {
    assert!(x > 0.0 && mu > 0.0);
    let hc = |t: f64| 1.0 + 4.0 * t / 3.0 + 2.0 * t * t / 3.0;
    let integral = adaptive_quad(&|t| t.powf(mu - 1.0) * hc(t), 0.0, x, 1e-13);
    mu / x.powf(mu) * integral
}

/// Minimum of Re h_c over `samples` points of the circle |z| = r.
pub fn boundary_min_re(r: f64, samples: usize) -> f64 {
    (0..samples)
        .map(|k| {
            let z = Complex64::from_polar(r, std::f64::consts::TAU * k as f64 / samples as f64);
            mlcardioid::cardioid::hc(z).re
        })
        .fold(f64::INFINITY, f64::min)
}

/// Minimum of |h_c| over `samples` points of the circle |z| = r.
pub fn boundary_min_abs(r: f64, samples: usize) -> f64 {
    (0..samples)
        .map(|k| {
            let z = Complex64::from_polar(r, std::f64::consts::TAU * k as f64 / samples as f64);
            mlcardioid::cardioid::hc(z).norm()
        })
        .fold(f64::INFINITY, f64::min)
}

#[cfg(test)]
mod self_checks {
    use super::*;

    #[test]
    fn quadrature_integrates_polynomials() {
        let v = adaptive_quad(&|x| x * x, 0.0, 1.0, 1e-13);
        assert!((v - 1.0 / 3.0).abs() < 1e-13);
    }

    #[test]
    fn quadrature_handles_endpoint_singularity() {
        // ∫₀¹ u^{-3/4} du = 4
        let v = adaptive_quad(&|u| u.powf(-0.75), 0.0, 1.0, 1e-12);
        assert!((v - 4.0).abs() < 1e-9, "got {v}");
    }
}
