//! Average bit-error probability over flat Rayleigh fading.
//!
//! With E[|h|²] = 1 the instantaneous SNR ξ = |h|²·Eb/N0 is exponential with
//! mean γ, `p(ξ) = e^(-ξ/γ)/γ`. Three ways of averaging a conditional BER
//! over that density are provided:
//!
//! * [`generalized_fading_ber`]: the closed form for a Gaussian conditional
//!   BER `a·exp(-((ξ-b)/c)²)`;
//! * [`exact_fading_ber`]: per-scheme closed forms for QPSK, M-QAM, M-FSK and M-ASK;
//! * [`average_over_rayleigh`]: adaptive quadrature of any bounded BER function.
//!
//! The Gaussian coefficients are applied to ξ in linear units even when they
//! were fitted against dB-scaled curves. That unit mix is deliberate; its
//! effect shows up in the `ratio` column of [`compare_curves`].

use alloc::vec::Vec;
use core::f64::consts::{FRAC_1_PI, PI};

use libm::{atan, exp, log, sqrt};

use crate::error::{invalid, Error, Result};
use crate::gaussfit::GaussianFit;
use crate::modulation::{awgn_ber_fn, scheme_constants, Family, ModulationScheme, SchemeConstants};
use crate::numerics::{erf, erfcx, integrate_adaptive_breakpoints, DEFAULT_MAX_EVALUATIONS};

const SQRT_PI: f64 = 1.772_453_850_905_516;

/// Density mass beyond the truncation point of the averaging integral.
pub const TRUNCATION_TAIL: f64 = 1e-16;

/// Geometric pre-splits of the averaging interval; the smallest panel is
/// `2⁻⁶⁰` of the range.
pub const GRADED_PANELS: usize = 60;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FadingPoint {
    /// Mean SNR E[|h|²]·Eb/N0, linear.
    pub gamma: f64,
    pub ber: f64,
}

/// One row of a generalized-vs-exact comparison.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComparisonRow {
    pub ebn0_db: f64,
    pub ber_generalized: f64,
    pub ber_exact: f64,
    pub ber_quadrature: f64,
    /// `ber_generalized / ber_exact`.
    pub ratio: f64,
}

fn check_gamma(gamma: f64) -> Result<()> {
    if gamma > 0.0 && gamma.is_finite() {
        Ok(())
    } else {
        Err(invalid("gamma", "mean SNR must be positive and finite"))
    }
}

/// Exponential density of ξ = |h|²·Eb/N0 with mean `gamma`.
pub fn chi2_pdf(xi: f64, gamma: f64) -> Result<f64> {
    check_gamma(gamma)?;
    if !(xi >= 0.0) {
        return Err(invalid("xi", "must be >= 0"));
    }
    Ok(exp(-xi / gamma) / gamma)
}

/// Closed-form Rayleigh average of the Gaussian BER model.
///
/// Evaluated as `(a·c·√π / 2γ)·e^(-b²/c²)·erfcx(c/(2γ) - b/c)`, which stays
/// finite as γ → 0⁺ where it tends to `a·e^(-b²/c²)`.
pub fn generalized_fading_ber(fit: &GaussianFit, gamma: f64) -> Result<f64> {
    check_gamma(gamma)?;
    let (a, b, c) = (fit.a(), fit.b(), fit.c());
    let z = c / (2.0 * gamma) - b / c;
    let prefactor = 0.5 * a * c * SQRT_PI / gamma;
    Ok(prefactor * exp(-(b * b) / (c * c)) * erfcx(z))
}

/// The closed form transcribed term for term:
/// `(a·c·√π/2γ)·exp[-b²/c² + (2b/c² - 1/γ)²·c²/4]·[1 + erf(b/c - c/(2γ))]`.
///
/// Overflows (and yields NaN) for small γ and loses accuracy when the erf
/// argument is strongly negative. Kept as a reference for
/// [`generalized_fading_ber`].
pub fn generalized_fading_ber_printed(fit: &GaussianFit, gamma: f64) -> f64 {
    let (a, b, c) = (fit.a(), fit.b(), fit.c());
    let slope = 2.0 * b / (c * c) - 1.0 / gamma;
    let exponent = -(b * b) / (c * c) + slope * slope * c * c / 4.0;
    let prefactor = a * c * SQRT_PI / (2.0 * gamma);
    prefactor * exp(exponent) * (1.0 + erf(b / c - c / (2.0 * gamma)))
}

/// Averages `ber_fn(ξ)` over the exponential density with mean `gamma`.
///
/// The integral is truncated at ξ = γ·ln(1/[`TRUNCATION_TAIL`]), so the
/// neglected tail is below `TRUNCATION_TAIL · sup ber_fn`. Integration runs
/// in t = ξ/γ over `[0, ln(1/TRUNCATION_TAIL)]`, pre-split at t = U·2⁻ᵏ
/// (k = 1..=[`GRADED_PANELS`]) so that structure of `ber_fn` near ξ = 0 is
/// resolved even when γ is large.
pub fn average_over_rayleigh<F>(ber_fn: F, gamma: f64, rel_tol: f64) -> Result<f64>
where
    F: Fn(f64) -> f64,
{
    check_gamma(gamma)?;
    if !(rel_tol > 0.0) {
        return Err(invalid("rel_tol", "must be positive"));
    }
    let upper = -log(TRUNCATION_TAIL);
    let mut points = [0.0; GRADED_PANELS + 2];
    for (k, p) in points.iter_mut().skip(1).enumerate() {
        *p = upper * libm::ldexp(1.0, k as i32 - GRADED_PANELS as i32);
    }
    let integrand = |t: f64| ber_fn(gamma * t) * exp(-t);
    let res = integrate_adaptive_breakpoints(
        integrand,
        &points,
        1e-300,
        rel_tol,
        DEFAULT_MAX_EVALUATIONS,
    )?;
    Ok(res.value)
}

/// μ = √(βγ/(βγ+2)).
fn mu(beta: f64, gamma: f64) -> f64 {
    sqrt(beta * gamma / (beta * gamma + 2.0))
}

/// `1 - μ` without cancellation: `(2/(βγ+2)) / (1 + μ)`.
fn one_minus_mu(beta: f64, gamma: f64) -> f64 {
    2.0 / (beta * gamma + 2.0) / (1.0 + mu(beta, gamma))
}

fn check_beta(beta: f64) -> Result<()> {
    if beta > 0.0 && beta.is_finite() {
        Ok(())
    } else {
        Err(invalid("beta", "must be positive and finite"))
    }
}

/// Rayleigh average of `Q(√(βξ))`: `(1 - μ)/2`.
pub fn rayleigh_q_average(beta: f64, gamma: f64) -> Result<f64> {
    check_beta(beta)?;
    check_gamma(gamma)?;
    Ok(0.5 * one_minus_mu(beta, gamma))
}

/// Rayleigh average of `Q²(√(βξ))`: `1/4 - (μ/π)·arctan(1/μ)`.
pub fn rayleigh_q2_average(beta: f64, gamma: f64) -> Result<f64> {
    check_beta(beta)?;
    check_gamma(gamma)?;
    let m = mu(beta, gamma);
    Ok(0.25 - FRAC_1_PI * m * atan(1.0 / m))
}

/// Exact average BER over Rayleigh fading for each scheme family:
///
/// * QPSK: `(1/2)(1 - √(γ/(γ+1)))`
/// * M-QAM: `K₁ + K₂·√(β₁γ/(β₁γ+2))` with
///   `K₁ = (2α₁ - α₁²)/log₂M`,
///   `K₂ = (4α₁²·arctan(√((β₁γ+2)/(β₁γ))) - 2πα₁)/(π·log₂M)`
/// * M-FSK: `(M/2)(1 - √(γ·log₂M/(γ·log₂M + 2)))`
/// * M-ASK: `(α₂/2)(1 - √(β₂γ/(β₂γ+2)))`
///
/// The `1 - √(·)` factors are computed in cancellation-free form. The M-FSK
/// prefactor is M/2, twice the average of the AWGN union bound from
/// [`crate::modulation::awgn_ber`].
pub fn exact_fading_ber(s: ModulationScheme, gamma: f64) -> Result<f64> {
    check_gamma(gamma)?;
    let log2m = s.bits_per_symbol() as f64;
    let value = match (s.family(), scheme_constants(s)) {
        // √(γ/(γ+1)) = μ at β = 2
        (Family::Qpsk, _) => 0.5 * one_minus_mu(2.0, gamma),
        (Family::Fsk, _) => 0.5 * s.order() as f64 * one_minus_mu(log2m, gamma),
        (Family::Ask, SchemeConstants::Ask { alpha2, beta2 }) => {
            0.5 * alpha2 * one_minus_mu(beta2, gamma)
        }
        (Family::Qam, SchemeConstants::Qam { alpha1, beta1 }) => {
            let k1 = (2.0 * alpha1 - alpha1 * alpha1) / log2m;
            let root = sqrt((beta1 * gamma + 2.0) / (beta1 * gamma));
            let k2 = (4.0 * alpha1 * alpha1 * atan(root) - 2.0 * PI * alpha1) / (PI * log2m);
            k1 + k2 * mu(beta1, gamma)
        }
        _ => unreachable!("constants always match the family"),
    };
    Ok(value)
}

/// Quadrature tolerance used for the `ber_quadrature` column.
pub const COMPARISON_REL_TOL: f64 = 1e-10;

/// Generalized, exact and quadrature averages over a dB grid of mean SNR.
pub fn compare_curves(
    s: ModulationScheme,
    fit: &GaussianFit,
    ebn0_db: &[f64],
) -> Result<Vec<ComparisonRow>> {
    if ebn0_db.is_empty() {
        return Err(Error::InvalidCurve("empty Eb/N0 grid"));
    }
    ebn0_db
        .iter()
        .map(|&db| comparison_row(s, fit, db))
        .collect()
}

/// A single [`ComparisonRow`]; rows are independent of each other.
pub fn comparison_row(
    s: ModulationScheme,
    fit: &GaussianFit,
    ebn0_db: f64,
) -> Result<ComparisonRow> {
    if !ebn0_db.is_finite() {
        return Err(invalid("ebn0_db", "must be finite"));
    }
    let gamma = libm::pow(10.0, ebn0_db / 10.0);
    let ber_generalized = generalized_fading_ber(fit, gamma)?;
    let ber_exact = exact_fading_ber(s, gamma)?;
    let ber_quadrature = average_over_rayleigh(|xi| fit.value_at(xi), gamma, COMPARISON_REL_TOL)?;
    Ok(ComparisonRow {
        ebn0_db,
        ber_generalized,
        ber_exact,
        ber_quadrature,
        ratio: ber_generalized / ber_exact,
    })
}

/// Rayleigh average of the scheme's AWGN BER by quadrature.
pub fn averaged_awgn_ber(s: ModulationScheme, gamma: f64, rel_tol: f64) -> Result<f64> {
    average_over_rayleigh(awgn_ber_fn(s), gamma, rel_tol)
}
