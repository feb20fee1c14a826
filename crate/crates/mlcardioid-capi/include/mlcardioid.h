/* C interface to the mlcardioid library. */

#ifndef MLCARDIOID_H
#define MLCARDIOID_H

/* Generated by cbindgen; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Status codes returned by every fallible function of this library.
typedef enum MlcStatus {
  MLC_OK = 0,
  // A parameter is outside its admissible range.
  MLC_ERR_PARAM = 1,
  // Gamma evaluated at a non-positive integer.
  MLC_ERR_POLE = 2,
  // Series did not converge within the term budget.
  MLC_ERR_CONVERGENCE = 3,
  // Series input must be normalized (c0 = 0, c1 = 1).
  MLC_ERR_NOT_NORMALIZED = 4,
  // A series denominator vanished or is numerically singular.
  MLC_ERR_SINGULAR = 5,
  // Membership query landed on the sampled boundary.
  MLC_ERR_BOUNDARY_AMBIGUOUS = 6,
  // Theorem hypothesis does not hold for these parameters.
  MLC_ERR_HYPOTHESIS = 7,
  // A required pointer argument was null.
  MLC_ERR_NULL_ARGUMENT = 8,
} MlcStatus;

// Opaque sampled cardioid region.
typedef struct MlcCardioid MlcCardioid;

// Opaque truncated power series.
typedef struct MlcSeries MlcSeries;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Complex Gamma function.
//
// # Safety
// `out_re` and `out_im` must be valid writable pointers.
enum MlcStatus mlc_gamma(double z_re, double z_im, double *out_re, double *out_im);

// Pochhammer symbol (g)_n.
//
// # Safety
// `out_re` and `out_im` must be valid writable pointers.
enum MlcStatus mlc_pochhammer(double g_re, double g_im, uint32_t n, double *out_re, double *out_im);

// Three-parameter Mittag-Leffler function E[alpha,beta,gamma](z).
//
// # Safety
// `out_re` and `out_im` must be valid writable pointers.
enum MlcStatus mlc_mittag_leffler(double alpha,
                                  double beta,
                                  double gamma,
                                  double z_re,
                                  double z_im,
                                  double tol,
                                  double *out_re,
                                  double *out_im);

// The cardioid target function h_c(z) = 1 + 4z/3 + 2z^2/3.
//
// # Safety
// `out_re` and `out_im` must be valid writable pointers.
enum MlcStatus mlc_hc(double z_re, double z_im, double *out_re, double *out_im);

// Cardioid quartic value at w; negative inside the image region.
double mlc_quartic_value(double w_re, double w_im);

// Minimum of Re h_c over |z| = r, valid for 0 < r <= 1/2.
//
// # Safety
// `out` must be a valid writable pointer.
enum MlcStatus mlc_min_real_on_circle(double r, double *out);

// Sharp lower bound B(c)^(1/zeta).
//
// # Safety
// `out` must be a valid writable pointer.
enum MlcStatus mlc_sharp_bound_root(double c, double zeta, double *out);

// Positivity margin a - 1 of the dominant hypothesis.
double mlc_p_condition_margin(double a);

// Best dominant q(z) for effective exponent `a` (eta defaults to 1 in the
// CLI; pass it explicitly here), series order `order` >= 16.
//
// # Safety
// `out_re` and `out_im` must be valid writable pointers.
enum MlcStatus mlc_dominant(double a,
                            double eta,
                            double z_re,
                            double z_im,
                            size_t order,
                            double *out_re,
                            double *out_im);

// Residual of the Briot-Bouquet equation for the dominant at z.
//
// # Safety
// `out_re` and `out_im` must be valid writable pointers.
enum MlcStatus mlc_ode_residual(double a,
                                double eta,
                                double z_re,
                                double z_im,
                                size_t order,
                                double *out_re,
                                double *out_im);

// Creates a region with `samples` boundary samples (>= 16). Returns null on
// bad input. Free with `mlc_cardioid_free`.
struct MlcCardioid *mlc_cardioid_new(size_t samples);

// Membership of w in the image region; writes 1 or 0 to `out`.
//
// # Safety
// `region` must come from `mlc_cardioid_new` and not have been freed;
// `out` must be a valid writable pointer.
enum MlcStatus mlc_cardioid_contains(const struct MlcCardioid *region,
                                     double w_re,
                                     double w_im,
                                     int32_t *out);

// # Safety
// `region` must come from `mlc_cardioid_new`; passing null is a no-op.
void mlc_cardioid_free(struct MlcCardioid *region);

// Creates a series from `len` interleaved (re, im) coefficient pairs.
// Returns null on empty input. Free with `mlc_series_free`.
//
// # Safety
// `coeffs` must point to `2 * len` readable doubles.
struct MlcSeries *mlc_series_new(const double *coeffs, size_t len);

// Number of coefficients (truncation order + 1); 0 for null.
//
// # Safety
// `series` must come from this library or be null.
size_t mlc_series_len(const struct MlcSeries *series);

// Reads coefficient `k`.
//
// # Safety
// `series` must be a live handle; `out_re`, `out_im` valid pointers.
enum MlcStatus mlc_series_coeff(const struct MlcSeries *series,
                                size_t k,
                                double *out_re,
                                double *out_im);

// Horner evaluation of the series at z.
//
// # Safety
// `series` must be a live handle; `out_re`, `out_im` valid pointers.
enum MlcStatus mlc_series_evaluate(const struct MlcSeries *series,
                                   double z_re,
                                   double z_im,
                                   double *out_re,
                                   double *out_im);

// Applies the Mittag-Leffler convolution operator; writes a new handle.
//
// # Safety
// `series` must be a live handle; `out` a valid pointer slot.
enum MlcStatus mlc_series_apply_operator(const struct MlcSeries *series,
                                         double alpha,
                                         double beta,
                                         double gamma,
                                         struct MlcSeries **out);

// Applies the Bernardi integral operator; writes a new handle.
//
// # Safety
// `series` must be a live handle; `out` a valid pointer slot.
enum MlcStatus mlc_series_bernardi(const struct MlcSeries *series,
                                   double sigma,
                                   struct MlcSeries **out);

// # Safety
// `series` must come from this library; passing null is a no-op.
void mlc_series_free(struct MlcSeries *series);

// Runs a deterministic randomized sweep and writes the number of
// counterexamples (0 for a healthy build).
//
// # Safety
// `out_counterexamples` must be a valid writable pointer.
enum MlcStatus mlc_verify_sweep(uint64_t seed, size_t trials, size_t *out_counterexamples);

// Runs a deterministic randomized sweep and returns the report array as a
// JSON string. Free with `mlc_string_free`. Returns null for zero trials.
char *mlc_verify_sweep_json(uint64_t seed, size_t trials);

// # Safety
// `s` must come from `mlc_verify_sweep_json`; passing null is a no-op.
void mlc_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* MLCARDIOID_H */
