//! Error-function family and the Gaussian Q-function.
//!
//! Two kernels cover the real line:
//!
//! * for `0 <= x < 2`, the all-positive series
//!   `erf(x) = (2/√π)·e^(-x²)·Σ 2ⁿx^(2n+1)/(2n+1)!!`, which has no
//!   cancellation;
//! * for `x >= 2`, the Laplace continued fraction
//!   `erfcx(x) = (1/√π) / (x + (1/2)/(x + 1/(x + (3/2)/(x + ...))))`,
//!   evaluated with the modified Lentz algorithm.
//!
//! Negative arguments follow from `erf(-x) = -erf(x)` and
//! `erfc(-x) = 2 - erfc(x)`.

use core::f64::consts::{FRAC_1_PI, FRAC_2_SQRT_PI, FRAC_PI_2, SQRT_2};

use libm::exp;

use super::quadrature::integrate_adaptive;
use crate::error::{invalid, Result};

const FRAC_1_SQRT_PI: f64 = 0.5 * FRAC_2_SQRT_PI;

/// Switch point between the series and the continued fraction.
const SERIES_LIMIT: f64 = 2.0;

/// Beyond this |x|, erf(x) rounds to ±1 in double precision.
const ERF_SATURATION: f64 = 6.0;

const CF_MAX_TERMS: usize = 500;

/// `Σ 2ⁿx^(2n+1)/(2n+1)!!` scaled by 2/√π, so `erf(x) = e^(-x²)·erf_series_scaled(x)`.
fn erf_series_scaled(x: f64) -> f64 {
    let two_x2 = 2.0 * x * x;
    let mut term = x;
    let mut sum = x;
    let mut k = 1.0;
    loop {
        k += 2.0;
        term *= two_x2 / k;
        sum += term;
        if term <= sum * 1e-17 {
            break;
        }
    }
    FRAC_2_SQRT_PI * sum
}

/// Continued fraction for erfcx, valid (and fast) for x >= 2.
fn erfcx_continued_fraction(x: f64) -> f64 {
    const TINY: f64 = 1e-300;
    let mut f = x;
    let mut c = x;
    let mut d = 0.0;
    for n in 1..=CF_MAX_TERMS {
        let a = 0.5 * n as f64;
        d = x + a * d;
        if d == 0.0 {
            d = TINY;
        }
        d = 1.0 / d;
        c = x + a / c;
        if c == 0.0 {
            c = TINY;
        }
        let delta = c * d;
        f *= delta;
        if (delta - 1.0).abs() < 1e-16 {
            break;
        }
    }
    FRAC_1_SQRT_PI / f
}

/// Error function `(2/√π)∫₀ˣ e^(-u²) du`.
pub fn erf(x: f64) -> f64 {
    if x.is_nan() {
        return x;
    }
    let ax = x.abs();
    let magnitude = if ax < SERIES_LIMIT {
        exp(-ax * ax) * erf_series_scaled(ax)
    } else if ax < ERF_SATURATION {
        1.0 - exp(-ax * ax) * erfcx_continued_fraction(ax)
    } else {
        1.0
    };
    magnitude.copysign(x)
}

/// Complementary error function `1 - erf(x)`, accurate in the upper tail.
pub fn erfc(x: f64) -> f64 {
    if x.is_nan() {
        return x;
    }
    if x < 0.0 {
        return 2.0 - erfc(-x);
    }
    if x < SERIES_LIMIT {
        1.0 - exp(-x * x) * erf_series_scaled(x)
    } else {
        exp(-x * x) * erfcx_continued_fraction(x)
    }
}

/// Scaled complementary error function `e^(x²)·erfc(x)`.
///
/// Finite for all non-negative `x`; behaves like `1/(x√π)` for large `x`.
/// Overflows to `+∞` for `x` below roughly `-26.6`.
pub fn erfcx(x: f64) -> f64 {
    if x.is_nan() {
        return x;
    }
    if x < 0.0 {
        return 2.0 * exp(x * x) - erfcx(-x);
    }
    if x < SERIES_LIMIT {
        exp(x * x) - erf_series_scaled(x)
    } else {
        erfcx_continued_fraction(x)
    }
}

/// Gaussian tail probability `Q(x) = P(N(0,1) > x) = erfc(x/√2)/2`.
pub fn q_function(x: f64) -> f64 {
    0.5 * erfc(x / SQRT_2)
}

/// Q-function through Craig's finite-range integral
/// `(1/π)∫₀^{π/2} exp(-x²/(2sin²θ)) dθ`, integrated adaptively to `abs_tol`.
///
/// Only defined for `x >= 0`. The integrand at θ = 0 is taken as its limit,
/// 0 for `x > 0`.
pub fn q_craig(x: f64, abs_tol: f64) -> Result<f64> {
    if !(x >= 0.0) || !x.is_finite() {
        return Err(invalid("x", "Craig's form requires a finite x >= 0"));
    }
    if !(abs_tol > 0.0) {
        return Err(invalid("abs_tol", "must be positive"));
    }
    if x == 0.0 {
        return Ok(0.5);
    }
    let half_x2 = 0.5 * x * x;
    let integrand = |theta: f64| {
        let s = libm::sin(theta);
        if s == 0.0 {
            0.0
        } else {
            FRAC_1_PI * exp(-half_x2 / (s * s))
        }
    };
    let res = integrate_adaptive(integrand, 0.0, FRAC_PI_2, abs_tol, 1e-15)?;
    Ok(res.value)
}
