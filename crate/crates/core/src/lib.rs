//! Numerical core for bit-error-rate analysis over AWGN and Rayleigh fading.
//!
//! The crate fits the three-parameter Gaussian `a·exp(-((x-b)/c)²)` to AWGN
//! bit-error curves, evaluates the closed-form Rayleigh average of that
//! Gaussian, and provides the exact per-scheme fading formulas, quadrature
//! oracles and a seeded Monte Carlo estimator to check it against.
//!
//! Everything here is `no_std` (with `alloc`) and free of IO. Command-line
//! tooling, CSV output and multi-threaded Monte Carlo live in the `fadeber`
//! crate.

#![no_std]
#![allow(
    clippy::neg_cmp_op_on_partial_ord,
    clippy::needless_range_loop,
    clippy::excessive_precision
)]

extern crate alloc;
#[cfg(test)]
extern crate std;

mod error;

pub mod fading;
pub mod gaussfit;
pub mod modulation;
pub mod montecarlo;
pub mod numerics;
pub mod published;

pub use error::{Error, Result};
pub use fading::{
    average_over_rayleigh, chi2_pdf, compare_curves, exact_fading_ber, generalized_fading_ber,
    rayleigh_q2_average, rayleigh_q_average, ComparisonRow, FadingPoint,
};
pub use gaussfit::{
    fit_gaussian, gaussian_eval, goodness_of_fit, FitOptions, FitReport, GaussianFit,
};
pub use modulation::{
    awgn_ber, ber_curve, scheme_constants, BerCurve, Family, ModulationScheme, SchemeConstants,
};
pub use montecarlo::{
    bitlevel_qpsk_ber, draw_channel, semi_analytic_ber, ChannelSample, McConfig, McEstimate, McMode,
};
pub use numerics::{
    erf, erfc, erfcx, integrate_adaptive, q_craig, q_function, QuadratureResult, SnrDomain,
    SnrValue,
};
