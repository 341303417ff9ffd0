//! Seeded Monte Carlo estimates of the Rayleigh-averaged BER.
//!
//! The sample index range is cut into fixed blocks of [`BLOCK_SIZE`]. Block
//! `k` draws from a ChaCha8 generator seeded with the 64-bit run seed and set
//! to stream `k`, so every block is reproducible in isolation. Per-block
//! statistics are merged in block order; a parallel driver that computes
//! blocks on several threads and merges them the same way returns bit-identical
//! results.
//!
//! Normal variates come from the Box–Muller transform. Channel taps have
//! independent real and imaginary parts with mean 0 and variance 1/2, so
//! E[|h|²] = 1. Noise has zero mean.

use core::f64::consts::{FRAC_1_SQRT_2, TAU};

use libm::{cos, log, sin, sqrt};
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::error::{invalid, Result};

/// Samples per generator stream.
pub const BLOCK_SIZE: usize = 1 << 14;

pub const MIN_SAMPLES: usize = 1_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum McMode {
    /// Average the analytic conditional BER over drawn channel gains.
    SemiAnalytic,
    /// Transmit, fade, add noise, equalize and count QPSK bit errors.
    BitLevel,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct McConfig {
    pub seed: u64,
    pub n_samples: usize,
    pub mode: McMode,
}

impl McConfig {
    pub fn new(seed: u64, n_samples: usize, mode: McMode) -> Result<Self> {
        let cfg = Self {
            seed,
            n_samples,
            mode,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        if self.n_samples < MIN_SAMPLES {
            return Err(invalid("n_samples", "at least 1000 samples are required"));
        }
        Ok(())
    }

    pub fn block_count(&self) -> usize {
        self.n_samples.div_ceil(BLOCK_SIZE)
    }

    /// Number of samples in block `block` (the last one may be short).
    pub fn block_len(&self, block: usize) -> usize {
        let start = block * BLOCK_SIZE;
        self.n_samples.saturating_sub(start).min(BLOCK_SIZE)
    }

    /// Generator for block `block`.
    pub fn block_rng(&self, block: usize) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(block as u64);
        rng
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct McEstimate {
    pub mean: f64,
    /// Sample standard deviation divided by √n.
    pub std_error: f64,
    pub n: usize,
}

/// Streaming mean and variance (Welford), mergeable with Chan's update.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct RunningStats {
    n: usize,
    mean: f64,
    m2: f64,
}

impl RunningStats {
    pub fn push(&mut self, x: f64) {
        self.n += 1;
        let delta = x - self.mean;
        self.mean += delta / self.n as f64;
        self.m2 += delta * (x - self.mean);
    }

    pub fn merge(&mut self, other: &RunningStats) {
        if other.n == 0 {
            return;
        }
        if self.n == 0 {
            *self = *other;
            return;
        }
        let n = self.n + other.n;
        let delta = other.mean - self.mean;
        let (na, nb) = (self.n as f64, other.n as f64);
        self.mean += delta * nb / n as f64;
        self.m2 += other.m2 + delta * delta * na * nb / n as f64;
        self.n = n;
    }

    pub fn count(&self) -> usize {
        self.n
    }

    pub fn estimate(&self) -> McEstimate {
        let std_error = if self.n > 1 {
            sqrt(self.m2 / (self.n - 1) as f64) / sqrt(self.n as f64)
        } else {
            0.0
        };
        McEstimate {
            mean: self.mean,
            std_error,
            n: self.n,
        }
    }
}

/// Merges per-block statistics, which must be supplied in block order.
pub fn reduce_blocks<I: IntoIterator<Item = RunningStats>>(blocks: I) -> McEstimate {
    let mut total = RunningStats::default();
    for b in blocks {
        total.merge(&b);
    }
    total.estimate()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChannelSample {
    pub h_re: f64,
    pub h_im: f64,
}

impl ChannelSample {
    pub fn power(&self) -> f64 {
        self.h_re * self.h_re + self.h_im * self.h_im
    }
}

/// Uniform on (0, 1].
fn uniform_open0<R: RngCore>(rng: &mut R) -> f64 {
    ((rng.next_u64() >> 11) + 1) as f64 * (1.0 / (1u64 << 53) as f64)
}

/// Uniform on [0, 1).
fn uniform<R: RngCore>(rng: &mut R) -> f64 {
    (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

/// Two independent standard normal variates (Box–Muller).
pub fn standard_normal_pair<R: RngCore>(rng: &mut R) -> (f64, f64) {
    let r = sqrt(-2.0 * log(uniform_open0(rng)));
    let theta = TAU * uniform(rng);
    (r * cos(theta), r * sin(theta))
}

/// One Rayleigh tap with per-component variance 1/2.
pub fn draw_channel<R: RngCore>(rng: &mut R) -> ChannelSample {
    let (re, im) = standard_normal_pair(rng);
    ChannelSample {
        h_re: re * FRAC_1_SQRT_2,
        h_im: im * FRAC_1_SQRT_2,
    }
}

fn check_ebn0(ebn0_linear: f64) -> Result<()> {
    if ebn0_linear > 0.0 && ebn0_linear.is_finite() {
        Ok(())
    } else {
        Err(invalid("ebn0_linear", "must be positive and finite"))
    }
}

fn check_mode(cfg: &McConfig, mode: McMode) -> Result<()> {
    cfg.validate()?;
    if cfg.mode != mode {
        return Err(invalid(
            "mode",
            "configuration mode does not match the estimator",
        ));
    }
    Ok(())
}

/// Statistics of `ber_fn(|h|²·ebn0)` over one block.
pub fn semi_analytic_block<F>(
    ber_fn: &F,
    ebn0_linear: f64,
    cfg: &McConfig,
    block: usize,
) -> RunningStats
where
    F: Fn(f64) -> f64 + ?Sized,
{
    let mut rng = cfg.block_rng(block);
    let mut stats = RunningStats::default();
    for _ in 0..cfg.block_len(block) {
        let h = draw_channel(&mut rng);
        stats.push(ber_fn(h.power() * ebn0_linear));
    }
    stats
}

/// Per-symbol bit-error fraction of Gray-mapped QPSK over one block.
///
/// Symbols have unit energy, so Eb = 1/2 and each noise component has
/// variance N0/2 = 1/(4·Eb/N0). The receiver equalizes with the known tap.
pub fn bitlevel_block(ebn0_linear: f64, cfg: &McConfig, block: usize) -> RunningStats {
    let mut rng = cfg.block_rng(block);
    let sigma = 0.5 / sqrt(ebn0_linear);
    let mut stats = RunningStats::default();
    for _ in 0..cfg.block_len(block) {
        let bits = rng.next_u64();
        let (b0, b1) = (bits & 1, (bits >> 1) & 1);
        let s_re = (1.0 - 2.0 * b0 as f64) * FRAC_1_SQRT_2;
        let s_im = (1.0 - 2.0 * b1 as f64) * FRAC_1_SQRT_2;
        let h = draw_channel(&mut rng);
        let (n_re, n_im) = standard_normal_pair(&mut rng);
        let r_re = h.h_re * s_re - h.h_im * s_im + sigma * n_re;
        let r_im = h.h_re * s_im + h.h_im * s_re + sigma * n_im;
        // r / h = r·conj(h) / |h|²
        let p = h.power();
        let y_re = (r_re * h.h_re + r_im * h.h_im) / p;
        let y_im = (r_im * h.h_re - r_re * h.h_im) / p;
        let errors = u32::from((y_re < 0.0) != (b0 == 1)) + u32::from((y_im < 0.0) != (b1 == 1));
        stats.push(0.5 * errors as f64);
    }
    stats
}

/// Mean of `ber_fn` over sampled instantaneous SNRs `|h|²·ebn0_linear`.
pub fn semi_analytic_ber<F>(ber_fn: F, ebn0_linear: f64, cfg: &McConfig) -> Result<McEstimate>
where
    F: Fn(f64) -> f64,
{
    check_mode(cfg, McMode::SemiAnalytic)?;
    check_ebn0(ebn0_linear)?;
    Ok(reduce_blocks((0..cfg.block_count()).map(|b| {
        semi_analytic_block(&ber_fn, ebn0_linear, cfg, b)
    })))
}

/// Bit-level QPSK error rate over `2·n_samples` bits.
pub fn bitlevel_qpsk_ber(ebn0_linear: f64, cfg: &McConfig) -> Result<McEstimate> {
    check_mode(cfg, McMode::BitLevel)?;
    check_ebn0(ebn0_linear)?;
    Ok(reduce_blocks(
        (0..cfg.block_count()).map(|b| bitlevel_block(ebn0_linear, cfg, b)),
    ))
}

/// Validation shared with parallel drivers.
pub fn check_semi_analytic(ebn0_linear: f64, cfg: &McConfig) -> Result<()> {
    check_mode(cfg, McMode::SemiAnalytic)?;
    check_ebn0(ebn0_linear)
}

pub fn check_bitlevel(ebn0_linear: f64, cfg: &McConfig) -> Result<()> {
    check_mode(cfg, McMode::BitLevel)?;
    check_ebn0(ebn0_linear)
}
