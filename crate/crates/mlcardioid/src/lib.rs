//! Mittag-Leffler convolution operators on the unit disc, the cardioid
//! target domain, and Briot-Bouquet best dominants.
//!
//! The crate evaluates the three-parameter (Prabhakar) Mittag-Leffler
//! function and the convolution operator it induces on normalized analytic
//! functions, models the cardioid image region of `h_c(z) = 1 + 4z/3 + 2z²/3`,
//! solves the associated Briot-Bouquet differential equations in a
//! branch-free series form, and numerically certifies the sharp real-part
//! bounds and subordination chains these objects satisfy.
//!
//! Module map:
//!
//! - [`special`] — complex Gamma, Pochhammer symbol, Mittag-Leffler series
//!   and its class-𝒜 normalization
//! - [`series`] — truncated power series, Hadamard convolution, the
//!   convolution operator, the Bernardi integral operator, and residual
//!   checks of the operator identities
//! - [`cardioid`] — the target function `h_c`, the sampled image boundary,
//!   winding-number membership and minimum-real-part geometry
//! - [`briot_bouquet`] — best-dominant family `q` via a branch-free series
//!   formulation and ODE residual certification
//! - [`bounds`] — closed-form sharp bounds, their roots and extremal series
//! - [`verify`] — Schwarz-function generators and end-to-end theorem checks
//!   producing structured reports
//! - [`cli`], [`svg`] — command-line front end and SVG plot emission

// Frozen high-precision reference constants keep their published digits,
// and parameter validation uses negated comparisons so NaN is rejected.
#![allow(clippy::excessive_precision)]
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod bounds;
pub mod briot_bouquet;
pub mod cardioid;
pub mod cli;
mod error;
pub mod series;
pub mod special;
pub mod svg;
pub mod verify;

pub use error::Error;
pub use num_complex::Complex64;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
