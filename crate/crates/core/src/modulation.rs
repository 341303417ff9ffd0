//! AWGN bit-error probabilities for QPSK, square M-QAM, M-FSK and M-ASK.
//!
//! The formulas are the ones whose Rayleigh averages give the exact fading
//! expressions in [`crate::fading::exact_fading_ber`]:
//!
//! | scheme | P_b(ξ) |
//! |--------|--------|
//! | QPSK   | Q(√(2ξ)) |
//! | M-ASK  | α₂·Q(√(β₂ξ)) |
//! | M-FSK  | (M/2)·Q(√(log₂M·ξ)) |
//! | M-QAM  | (4/log₂M)·[α₁Q(√(β₁ξ)) − α₁²Q²(√(β₁ξ))] |
//!
//! with ξ the linear Eb/N0, α₁ = (√M−1)/√M, β₁ = 3/(M−1),
//! α₂ = 2(M−1)/(M·log₂M), β₂ = 6·log₂M/(M²−1).
//!
//! The M-FSK expression is a union bound; for M ≥ 4 it exceeds 1/2 near ξ = 0.

use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use libm::sqrt;

use crate::error::{invalid, Error, Result};
use crate::numerics::{q_function, SnrDomain, SnrValue};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Qpsk,
    Qam,
    Fsk,
    Ask,
}

impl Family {
    fn name(self) -> &'static str {
        match self {
            Family::Qpsk => "QPSK",
            Family::Qam => "QAM",
            Family::Fsk => "FSK",
            Family::Ask => "ASK",
        }
    }
}

/// A modulation family together with a validated constellation order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ModulationScheme {
    family: Family,
    order: u32,
}

impl ModulationScheme {
    pub const QPSK: Self = Self {
        family: Family::Qpsk,
        order: 4,
    };

    pub fn new(family: Family, order: u32) -> Result<Self> {
        let err = Error::InvalidOrder {
            family: family.name(),
            order,
        };
        match family {
            Family::Qpsk if order == 4 => Ok(Self::QPSK),
            Family::Qpsk => Err(err),
            _ if order < 2 || !order.is_power_of_two() => Err(err),
            // square constellations only: log2(M) even
            Family::Qam if !order.trailing_zeros().is_multiple_of(2) => Err(err),
            _ => Ok(Self { family, order }),
        }
    }

    pub fn qam(order: u32) -> Result<Self> {
        Self::new(Family::Qam, order)
    }

    pub fn fsk(order: u32) -> Result<Self> {
        Self::new(Family::Fsk, order)
    }

    pub fn ask(order: u32) -> Result<Self> {
        Self::new(Family::Ask, order)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn bits_per_symbol(&self) -> u32 {
        self.order.trailing_zeros()
    }
}

impl fmt::Display for ModulationScheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::Qpsk => f.write_str("QPSK"),
            fam => write!(f, "{}-{}", self.order, fam.name()),
        }
    }
}

/// Parses `qpsk`, `bfsk`, `bask`, `16qam`, `qam16`, `4fsk`, `ask8`, `16-qam`, ...
impl FromStr for ModulationScheme {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let lower = s.trim().to_ascii_lowercase();
        let lower = lower.replace('-', "");
        match lower.as_str() {
            "qpsk" => return Ok(Self::QPSK),
            "bfsk" => return Self::fsk(2),
            "bask" => return Self::ask(2),
            _ => {}
        }
        for (tag, family) in [
            ("qam", Family::Qam),
            ("fsk", Family::Fsk),
            ("ask", Family::Ask),
        ] {
            let digits = lower.strip_suffix(tag).or_else(|| lower.strip_prefix(tag));
            if let Some(digits) = digits {
                let order = digits
                    .parse::<u32>()
                    .map_err(|_| invalid("scheme", "expected an order such as 16qam"))?;
                return Self::new(family, order);
            }
        }
        Err(invalid("scheme", "unknown modulation"))
    }
}

/// Parameters from the QAM and ASK expressions; QPSK and FSK carry none.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SchemeConstants {
    None,
    Qam { alpha1: f64, beta1: f64 },
    Ask { alpha2: f64, beta2: f64 },
}

pub fn scheme_constants(s: ModulationScheme) -> SchemeConstants {
    let m = s.order as f64;
    let log2m = s.bits_per_symbol() as f64;
    match s.family {
        Family::Qam => {
            let root = sqrt(m);
            SchemeConstants::Qam {
                alpha1: (root - 1.0) / root,
                beta1: 3.0 / (m - 1.0),
            }
        }
        Family::Ask => SchemeConstants::Ask {
            alpha2: 2.0 * (m - 1.0) / (m * log2m),
            beta2: 6.0 * log2m / (m * m - 1.0),
        },
        Family::Qpsk | Family::Fsk => SchemeConstants::None,
    }
}

fn awgn_ber_linear(s: ModulationScheme, xi: f64) -> f64 {
    let log2m = s.bits_per_symbol() as f64;
    match (s.family, scheme_constants(s)) {
        (Family::Qpsk, _) => q_function(sqrt(2.0 * xi)),
        (Family::Fsk, _) => 0.5 * s.order as f64 * q_function(sqrt(log2m * xi)),
        (Family::Ask, SchemeConstants::Ask { alpha2, beta2 }) => {
            alpha2 * q_function(sqrt(beta2 * xi))
        }
        (Family::Qam, SchemeConstants::Qam { alpha1, beta1 }) => {
            let q = q_function(sqrt(beta1 * xi));
            4.0 / log2m * (alpha1 * q - alpha1 * alpha1 * q * q)
        }
        _ => unreachable!("constants always match the family"),
    }
}

/// AWGN bit-error probability at `ebn0` (either unit; converted to linear).
pub fn awgn_ber(s: ModulationScheme, ebn0: SnrValue) -> Result<f64> {
    let xi = ebn0.to_linear().magnitude();
    if !xi.is_finite() {
        return Err(invalid("ebn0", "must be finite"));
    }
    Ok(awgn_ber_linear(s, xi))
}

/// `awgn_ber` on a raw linear Eb/N0, for use as an integrand.
pub fn awgn_ber_fn(s: ModulationScheme) -> impl Fn(f64) -> f64 + Copy + Send + Sync {
    move |xi| awgn_ber_linear(s, xi.max(0.0))
}

/// Ordered (SNR, BER) samples sharing one SNR unit.
#[derive(Debug, Clone, PartialEq)]
pub struct BerCurve {
    domain: SnrDomain,
    snr: Vec<f64>,
    ber: Vec<f64>,
}

impl BerCurve {
    pub const MIN_POINTS: usize = 4;

    /// Validates: SNR strictly increasing, BER in (0, 1), at least four points,
    /// non-negative SNR when linear.
    pub fn new(domain: SnrDomain, snr: Vec<f64>, ber: Vec<f64>) -> Result<Self> {
        if snr.len() != ber.len() {
            return Err(Error::InvalidCurve("snr and ber lengths differ"));
        }
        if snr.len() < Self::MIN_POINTS {
            return Err(Error::TooFewPoints {
                found: snr.len(),
                required: Self::MIN_POINTS,
            });
        }
        if snr.iter().any(|x| !x.is_finite()) {
            return Err(Error::InvalidCurve("non-finite SNR"));
        }
        if domain == SnrDomain::Linear && snr.iter().any(|&x| x < 0.0) {
            return Err(Error::InvalidCurve("negative linear SNR"));
        }
        if snr.windows(2).any(|w| !(w[0] < w[1])) {
            return Err(Error::InvalidCurve("SNR must be strictly increasing"));
        }
        if ber.iter().any(|&p| !(p > 0.0 && p < 1.0)) {
            return Err(Error::InvalidCurve("BER must lie in (0, 1)"));
        }
        Ok(Self { domain, snr, ber })
    }

    pub fn domain(&self) -> SnrDomain {
        self.domain
    }

    pub fn snr(&self) -> &[f64] {
        &self.snr
    }

    pub fn ber(&self) -> &[f64] {
        &self.ber
    }

    pub fn len(&self) -> usize {
        self.snr.len()
    }

    pub fn is_empty(&self) -> bool {
        self.snr.is_empty()
    }

    pub fn points(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        self.snr.iter().copied().zip(self.ber.iter().copied())
    }

    /// Same curve with every BER multiplied by `k`; fails if that leaves (0, 1).
    pub fn scaled(&self, k: f64) -> Result<Self> {
        Self::new(
            self.domain,
            self.snr.clone(),
            self.ber.iter().map(|p| p * k).collect(),
        )
    }

    /// Same curve with every SNR shifted by `delta` (in the curve's own unit).
    pub fn shifted(&self, delta: f64) -> Result<Self> {
        Self::new(
            self.domain,
            self.snr.iter().map(|x| x + delta).collect(),
            self.ber.clone(),
        )
    }
}

/// Evenly spaced grid `start, start+step, ...` up to `stop` (inclusive, with
/// a small slack for floating-point steps). Points are computed as
/// `start + i·step`, not by accumulation.
pub fn linear_grid(start: f64, stop: f64, step: f64) -> Result<Vec<f64>> {
    if !start.is_finite() || !stop.is_finite() || !step.is_finite() {
        return Err(Error::InvalidCurve("grid bounds must be finite"));
    }
    if !(step > 0.0) {
        return Err(Error::InvalidCurve("grid step must be positive"));
    }
    if stop < start {
        return Err(Error::InvalidCurve("grid stop is below start"));
    }
    let count = libm::floor((stop - start) / step + 1e-9) as usize + 1;
    Ok((0..count).map(|i| start + i as f64 * step).collect())
}

/// Samples [`awgn_ber`] on a grid in the unit of `start`/`stop`.
pub fn ber_curve(
    s: ModulationScheme,
    start: SnrValue,
    stop: SnrValue,
    step: f64,
) -> Result<BerCurve> {
    if start.domain() != stop.domain() {
        return Err(Error::DomainMismatch {
            expected: start.domain(),
            found: stop.domain(),
        });
    }
    if !(start.magnitude() < stop.magnitude()) {
        return Err(Error::InvalidCurve("grid start must be below stop"));
    }
    let domain = start.domain();
    let grid = linear_grid(start.magnitude(), stop.magnitude(), step)?;
    if grid.len() < BerCurve::MIN_POINTS {
        return Err(Error::TooFewPoints {
            found: grid.len(),
            required: BerCurve::MIN_POINTS,
        });
    }
    let ber = grid
        .iter()
        .map(|&x| awgn_ber(s, SnrValue::new(x, domain)?))
        .collect::<Result<Vec<_>>>()?;
    BerCurve::new(domain, grid, ber)
}
