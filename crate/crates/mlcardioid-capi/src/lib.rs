//! C ABI for the mlcardioid library.
//!
//! Scalar results come back through out-pointers, aggregate objects through
//! opaque handles with explicit `_free` functions, and every fallible call
//! returns an [`MlcStatus`] code. The matching header is generated into
//! `include/mlcardioid.h` at build time.

use std::ffi::{c_char, CString};
use std::ptr;

use mlcardioid::briot_bouquet::DominantSpec;
use mlcardioid::cardioid::CardioidRegion;
use mlcardioid::series::{apply_operator, bernardi, PowerSeries};
use mlcardioid::special::{gamma, mittag_leffler, pochhammer, MLParams};
use mlcardioid::verify::randomized_sweep;
use mlcardioid::{Complex64, Error};

/// Status codes returned by every fallible function of this library.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MlcStatus {
    MlcOk = 0,
    /// A parameter is outside its admissible range.
    MlcErrParam = 1,
    /// Gamma evaluated at a non-positive integer.
    MlcErrPole = 2,
    /// Series did not converge within the term budget.
    MlcErrConvergence = 3,
    /// Series input must be normalized (c0 = 0, c1 = 1).
    MlcErrNotNormalized = 4,
    /// A series denominator vanished or is numerically singular.
    MlcErrSingular = 5,
    /// Membership query landed on the sampled boundary.
    MlcErrBoundaryAmbiguous = 6,
    /// Theorem hypothesis does not hold for these parameters.
    MlcErrHypothesis = 7,
    /// A required pointer argument was null.
    MlcErrNullArgument = 8,
}

fn status_of(e: &Error) -> MlcStatus {
    match e {
        Error::Pole { .. } => MlcStatus::MlcErrPole,
        Error::Convergence { .. } => MlcStatus::MlcErrConvergence,
        Error::NotClassA { .. } => MlcStatus::MlcErrNotNormalized,
        Error::Param(_) => MlcStatus::MlcErrParam,
        Error::DenominatorZero { .. } | Error::SingularDenominator { .. } => {
            MlcStatus::MlcErrSingular
        }
        Error::BoundaryAmbiguous { .. } => MlcStatus::MlcErrBoundaryAmbiguous,
        Error::Hypothesis(_) => MlcStatus::MlcErrHypothesis,
        Error::Io(_) => MlcStatus::MlcErrParam,
    }
}

unsafe fn write_complex(out_re: *mut f64, out_im: *mut f64, v: Complex64) -> MlcStatus {
    if out_re.is_null() || out_im.is_null() {
        return MlcStatus::MlcErrNullArgument;
    }
    *out_re = v.re;
    *out_im = v.im;
    MlcStatus::MlcOk
}

/// Complex Gamma function.
///
/// # Safety
/// `out_re` and `out_im` must be valid writable pointers.
#[no_mangle]
pub unsafe extern "C" fn mlc_gamma(
    z_re: f64,
    z_im: f64,
    out_re: *mut f64,
    out_im: *mut f64,
) -> MlcStatus {
    match gamma(Complex64::new(z_re, z_im)) {
        Ok(v) => write_complex(out_re, out_im, v),
        Err(e) => status_of(&e),
    }
}

/// Pochhammer symbol (g)_n.
///
/// # Safety
/// `out_re` and `out_im` must be valid writable pointers.
#[no_mangle]
pub unsafe extern "C" fn mlc_pochhammer(
    g_re: f64,
    g_im: f64,
    n: u32,
    out_re: *mut f64,
    out_im: *mut f64,
) -> MlcStatus {
    write_complex(out_re, out_im, pochhammer(Complex64::new(g_re, g_im), n))
}

/// Three-parameter Mittag-Leffler function E[alpha,beta,gamma](z).
///
/// # Safety
/// `out_re` and `out_im` must be valid writable pointers.
#[no_mangle]
pub unsafe extern "C" fn mlc_mittag_leffler(
    alpha: f64,
    beta: f64,
    gamma: f64,
    z_re: f64,
    z_im: f64,
    tol: f64,
    out_re: *mut f64,
    out_im: *mut f64,
) -> MlcStatus {
    let p = match MLParams::new(alpha, beta, gamma) {
        Ok(p) => p,
        Err(e) => return status_of(&e),
    };
    match mittag_leffler(&p, Complex64::new(z_re, z_im), tol) {
        Ok(v) => write_complex(out_re, out_im, v),
        Err(e) => status_of(&e),
    }
}

/// The cardioid target function h_c(z) = 1 + 4z/3 + 2z^2/3.
///
/// # Safety
/// `out_re` and `out_im` must be valid writable pointers.
#[no_mangle]
pub unsafe extern "C" fn mlc_hc(
    z_re: f64,
    z_im: f64,
    out_re: *mut f64,
    out_im: *mut f64,
) -> MlcStatus {
    write_complex(out_re, out_im, mlcardioid::cardioid::hc(Complex64::new(z_re, z_im)))
}

/// Cardioid quartic value at w; negative inside the image region.
#[no_mangle]
pub extern "C" fn mlc_quartic_value(w_re: f64, w_im: f64) -> f64 {
    mlcardioid::cardioid::quartic_value(Complex64::new(w_re, w_im))
}

/// Minimum of Re h_c over |z| = r, valid for 0 < r <= 1/2.
///
/// # Safety
/// `out` must be a valid writable pointer.
#[no_mangle]
pub unsafe extern "C" fn mlc_min_real_on_circle(r: f64, out: *mut f64) -> MlcStatus {
    if out.is_null() {
        return MlcStatus::MlcErrNullArgument;
    }
    match mlcardioid::cardioid::min_real_on_circle(r) {
        Ok(v) => {
            *out = v;
            MlcStatus::MlcOk
        }
        Err(e) => status_of(&e),
    }
}

/// Sharp lower bound B(c)^(1/zeta).
///
/// # Safety
/// `out` must be a valid writable pointer.
#[no_mangle]
pub unsafe extern "C" fn mlc_sharp_bound_root(c: f64, zeta: f64, out: *mut f64) -> MlcStatus {
    if out.is_null() {
        return MlcStatus::MlcErrNullArgument;
    }
    let query = match mlcardioid::bounds::BoundQuery::direct(c, zeta) {
        Ok(q) => q,
        Err(e) => return status_of(&e),
    };
    match mlcardioid::bounds::sharp_bound_root(&query) {
        Ok(v) => {
            *out = v;
            MlcStatus::MlcOk
        }
        Err(e) => status_of(&e),
    }
}

/// Positivity margin a - 1 of the dominant hypothesis.
#[no_mangle]
pub extern "C" fn mlc_p_condition_margin(a: f64) -> f64 {
    mlcardioid::briot_bouquet::p_condition_margin(a)
}

/// Best dominant q(z) for effective exponent `a` (eta defaults to 1 in the
/// CLI; pass it explicitly here), series order `order` >= 16.
///
/// # Safety
/// `out_re` and `out_im` must be valid writable pointers.
#[no_mangle]
pub unsafe extern "C" fn mlc_dominant(
    a: f64,
    eta: f64,
    z_re: f64,
    z_im: f64,
    order: usize,
    out_re: *mut f64,
    out_im: *mut f64,
) -> MlcStatus {
    let spec = match DominantSpec::generic(eta, a - eta) {
        Ok(s) => s,
        Err(e) => return status_of(&e),
    };
    if order < 16 {
        return MlcStatus::MlcErrParam;
    }
    match mlcardioid::briot_bouquet::dominant(&spec, Complex64::new(z_re, z_im), order) {
        Ok(v) => write_complex(out_re, out_im, v),
        Err(e) => status_of(&e),
    }
}

/// Residual of the Briot-Bouquet equation for the dominant at z.
///
/// # Safety
/// `out_re` and `out_im` must be valid writable pointers.
#[no_mangle]
pub unsafe extern "C" fn mlc_ode_residual(
    a: f64,
    eta: f64,
    z_re: f64,
    z_im: f64,
    order: usize,
    out_re: *mut f64,
    out_im: *mut f64,
) -> MlcStatus {
    let spec = match DominantSpec::generic(eta, a - eta) {
        Ok(s) => s,
        Err(e) => return status_of(&e),
    };
    if order < 16 {
        return MlcStatus::MlcErrParam;
    }
    match mlcardioid::briot_bouquet::ode_residual(&spec, Complex64::new(z_re, z_im), order) {
        Ok(v) => write_complex(out_re, out_im, v),
        Err(e) => status_of(&e),
    }
}

/// Opaque sampled cardioid region.
pub struct MlcCardioid(CardioidRegion);

/// Creates a region with `samples` boundary samples (>= 16). Returns null on
/// bad input. Free with `mlc_cardioid_free`.
#[no_mangle]
pub extern "C" fn mlc_cardioid_new(samples: usize) -> *mut MlcCardioid {
    if samples < 16 {
        return ptr::null_mut();
    }
    Box::into_raw(Box::new(MlcCardioid(CardioidRegion::new(samples))))
}

/// Membership of w in the image region; writes 1 or 0 to `out`.
///
/// # Safety
/// `region` must come from `mlc_cardioid_new` and not have been freed;
/// `out` must be a valid writable pointer.
#[no_mangle]
pub unsafe extern "C" fn mlc_cardioid_contains(
    region: *const MlcCardioid,
    w_re: f64,
    w_im: f64,
    out: *mut i32,
) -> MlcStatus {
    if region.is_null() || out.is_null() {
        return MlcStatus::MlcErrNullArgument;
    }
    match (*region).0.contains(Complex64::new(w_re, w_im)) {
        Ok(inside) => {
            *out = inside as i32;
            MlcStatus::MlcOk
        }
        Err(e) => status_of(&e),
    }
}

/// # Safety
/// `region` must come from `mlc_cardioid_new`; passing null is a no-op.
#[no_mangle]
pub unsafe extern "C" fn mlc_cardioid_free(region: *mut MlcCardioid) {
    if !region.is_null() {
        drop(Box::from_raw(region));
    }
}

/// Opaque truncated power series.
pub struct MlcSeries(PowerSeries);

/// Creates a series from `len` interleaved (re, im) coefficient pairs.
/// Returns null on empty input. Free with `mlc_series_free`.
///
/// # Safety
/// `coeffs` must point to `2 * len` readable doubles.
#[no_mangle]
pub unsafe extern "C" fn mlc_series_new(coeffs: *const f64, len: usize) -> *mut MlcSeries {
    if coeffs.is_null() || len == 0 {
        return ptr::null_mut();
    }
    let data = std::slice::from_raw_parts(coeffs, 2 * len);
    let coeffs: Vec<Complex64> =
        data.chunks_exact(2).map(|p| Complex64::new(p[0], p[1])).collect();
    match PowerSeries::new(coeffs) {
        Ok(s) => Box::into_raw(Box::new(MlcSeries(s))),
        Err(_) => ptr::null_mut(),
    }
}

/// Number of coefficients (truncation order + 1); 0 for null.
///
/// # Safety
/// `series` must come from this library or be null.
#[no_mangle]
pub unsafe extern "C" fn mlc_series_len(series: *const MlcSeries) -> usize {
    if series.is_null() {
        return 0;
    }
    (*series).0.coeffs().len()
}

/// Reads coefficient `k`.
///
/// # Safety
/// `series` must be a live handle; `out_re`, `out_im` valid pointers.
#[no_mangle]
pub unsafe extern "C" fn mlc_series_coeff(
    series: *const MlcSeries,
    k: usize,
    out_re: *mut f64,
    out_im: *mut f64,
) -> MlcStatus {
    if series.is_null() {
        return MlcStatus::MlcErrNullArgument;
    }
    write_complex(out_re, out_im, (*series).0.coeff(k))
}

/// Horner evaluation of the series at z.
///
/// # Safety
/// `series` must be a live handle; `out_re`, `out_im` valid pointers.
#[no_mangle]
pub unsafe extern "C" fn mlc_series_evaluate(
    series: *const MlcSeries,
    z_re: f64,
    z_im: f64,
    out_re: *mut f64,
    out_im: *mut f64,
) -> MlcStatus {
    if series.is_null() {
        return MlcStatus::MlcErrNullArgument;
    }
    write_complex(out_re, out_im, (*series).0.evaluate(Complex64::new(z_re, z_im)))
}

/// Applies the Mittag-Leffler convolution operator; writes a new handle.
///
/// # Safety
/// `series` must be a live handle; `out` a valid pointer slot.
#[no_mangle]
pub unsafe extern "C" fn mlc_series_apply_operator(
    series: *const MlcSeries,
    alpha: f64,
    beta: f64,
    gamma: f64,
    out: *mut *mut MlcSeries,
) -> MlcStatus {
    if series.is_null() || out.is_null() {
        return MlcStatus::MlcErrNullArgument;
    }
    let p = match MLParams::new(alpha, beta, gamma) {
        Ok(p) => p,
        Err(e) => return status_of(&e),
    };
    match apply_operator(&p, &(*series).0) {
        Ok(s) => {
            *out = Box::into_raw(Box::new(MlcSeries(s)));
            MlcStatus::MlcOk
        }
        Err(e) => status_of(&e),
    }
}

/// Applies the Bernardi integral operator; writes a new handle.
///
/// # Safety
/// `series` must be a live handle; `out` a valid pointer slot.
#[no_mangle]
pub unsafe extern "C" fn mlc_series_bernardi(
    series: *const MlcSeries,
    sigma: f64,
    out: *mut *mut MlcSeries,
) -> MlcStatus {
    if series.is_null() || out.is_null() {
        return MlcStatus::MlcErrNullArgument;
    }
    match bernardi(sigma, &(*series).0) {
        Ok(s) => {
            *out = Box::into_raw(Box::new(MlcSeries(s)));
            MlcStatus::MlcOk
        }
        Err(e) => status_of(&e),
    }
}

/// # Safety
/// `series` must come from this library; passing null is a no-op.
#[no_mangle]
pub unsafe extern "C" fn mlc_series_free(series: *mut MlcSeries) {
    if !series.is_null() {
        drop(Box::from_raw(series));
    }
}

/// Runs a deterministic randomized sweep and writes the number of
/// counterexamples (0 for a healthy build).
///
/// # Safety
/// `out_counterexamples` must be a valid writable pointer.
#[no_mangle]
pub unsafe extern "C" fn mlc_verify_sweep(
    seed: u64,
    trials: usize,
    out_counterexamples: *mut usize,
) -> MlcStatus {
    if out_counterexamples.is_null() {
        return MlcStatus::MlcErrNullArgument;
    }
    if trials == 0 {
        return MlcStatus::MlcErrParam;
    }
    let reports = randomized_sweep(seed, trials);
    *out_counterexamples = reports.iter().filter(|r| r.counterexample).count();
    MlcStatus::MlcOk
}

/// Runs a deterministic randomized sweep and returns the report array as a
/// JSON string. Free with `mlc_string_free`. Returns null for zero trials.
#[no_mangle]
pub extern "C" fn mlc_verify_sweep_json(seed: u64, trials: usize) -> *mut c_char {
    if trials == 0 {
        return ptr::null_mut();
    }
    let reports = randomized_sweep(seed, trials);
    let json = serde_json_string(&reports);
    CString::new(json).map(CString::into_raw).unwrap_or(ptr::null_mut())
}

fn serde_json_string(reports: &[mlcardioid::verify::VerificationReport]) -> String {
    let items: Vec<String> = reports.iter().map(|r| r.to_json()).collect();
    format!("[{}]", items.join(","))
}

/// # Safety
/// `s` must come from `mlc_verify_sweep_json`; passing null is a no-op.
#[no_mangle]
pub unsafe extern "C" fn mlc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
