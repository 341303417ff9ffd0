//! Globally adaptive 7/15-point Gauss–Kronrod quadrature.
//!
//! The interval with the largest error estimate is bisected until the summed
//! estimate meets `max(abs_tol, rel_tol·|value|)`. Subdivision order depends
//! only on the integrand values, so results are deterministic.

use alloc::collections::BinaryHeap;
use core::cmp::Ordering;

use crate::error::{invalid, Error, Result};

/// Evaluation budget used by [`integrate_adaptive`].
pub const DEFAULT_MAX_EVALUATIONS: usize = 1_000_000;

/// Kronrod abscissae on [-1, 1], descending; odd indices are the Gauss nodes.
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.000_000_000_000_000_000_000_000_000_000_000,
];

const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];

/// Gauss weights for the 7-point rule (nodes XGK[1], XGK[3], XGK[5], XGK[7]).
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

const KRONROD_POINTS: usize = 15;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureResult {
    pub value: f64,
    /// Absolute error estimate, always >= 0.
    pub error_estimate: f64,
    pub evaluations: usize,
}

#[derive(Debug, Clone, Copy)]
struct Panel {
    lo: f64,
    hi: f64,
    value: f64,
    error: f64,
}

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Panel {}

impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Panel {
    fn cmp(&self, other: &Self) -> Ordering {
        // Ties broken by position keeps the pop order reproducible.
        self.error
            .total_cmp(&other.error)
            .then_with(|| other.lo.total_cmp(&self.lo))
    }
}

fn kronrod_panel<F: FnMut(f64) -> f64>(f: &mut F, lo: f64, hi: f64) -> Result<Panel> {
    let center = 0.5 * (lo + hi);
    let half = 0.5 * (hi - lo);
    let fc = f(center);
    let mut kronrod = WGK[7] * fc;
    let mut gauss = WG[3] * fc;
    let mut samples = [0.0_f64; KRONROD_POINTS];
    samples[7] = fc;
    for j in 0..7 {
        let dx = half * XGK[j];
        let f1 = f(center - dx);
        let f2 = f(center + dx);
        samples[j] = f1;
        samples[14 - j] = f2;
        kronrod += WGK[j] * (f1 + f2);
        if j % 2 == 1 {
            gauss += WG[j / 2] * (f1 + f2);
        }
    }
    if samples.iter().any(|v| !v.is_finite()) {
        return Err(invalid("f", "integrand is not finite on the interval"));
    }
    let mean = 0.5 * kronrod;
    let mut asc = WGK[7] * (fc - mean).abs();
    for j in 0..7 {
        asc += WGK[j] * ((samples[j] - mean).abs() + (samples[14 - j] - mean).abs());
    }
    let value = kronrod * half;
    let resasc = asc * half.abs();
    let mut error = ((kronrod - gauss) * half).abs();
    if resasc != 0.0 && error != 0.0 {
        let scaled = libm::pow(200.0 * error / resasc, 1.5);
        error = resasc * if scaled < 1.0 { scaled } else { 1.0 };
    }
    Ok(Panel {
        lo,
        hi,
        value,
        error,
    })
}

/// Integrates `f` over `[lo, hi]` to `max(abs_tol, rel_tol·|value|)`.
///
/// Fails with [`Error::QuadratureNotConverged`] (carrying the best estimate)
/// once [`DEFAULT_MAX_EVALUATIONS`] integrand evaluations are spent.
pub fn integrate_adaptive<F>(
    f: F,
    lo: f64,
    hi: f64,
    abs_tol: f64,
    rel_tol: f64,
) -> Result<QuadratureResult>
where
    F: FnMut(f64) -> f64,
{
    integrate_adaptive_with_budget(f, lo, hi, abs_tol, rel_tol, DEFAULT_MAX_EVALUATIONS)
}

pub fn integrate_adaptive_with_budget<F>(
    f: F,
    lo: f64,
    hi: f64,
    abs_tol: f64,
    rel_tol: f64,
    max_evaluations: usize,
) -> Result<QuadratureResult>
where
    F: FnMut(f64) -> f64,
{
    if !lo.is_finite() || !hi.is_finite() || !(lo < hi) {
        return Err(invalid("bounds", "need finite lo < hi"));
    }
    integrate_adaptive_breakpoints(f, &[lo, hi], abs_tol, rel_tol, max_evaluations)
}

/// Like [`integrate_adaptive`], but starts from one panel per consecutive pair
/// of `points` (strictly increasing, at least two). Use this when the
/// integrand has features narrower than a single 15-point panel can see.
pub fn integrate_adaptive_breakpoints<F>(
    mut f: F,
    points: &[f64],
    abs_tol: f64,
    rel_tol: f64,
    max_evaluations: usize,
) -> Result<QuadratureResult>
where
    F: FnMut(f64) -> f64,
{
    if points.len() < 2
        || points.iter().any(|p| !p.is_finite())
        || points.windows(2).any(|w| !(w[0] < w[1]))
    {
        return Err(invalid(
            "bounds",
            "need finite, strictly increasing breakpoints",
        ));
    }
    if !(abs_tol > 0.0) || !(rel_tol > 0.0) {
        return Err(invalid("tolerance", "abs_tol and rel_tol must be positive"));
    }

    let mut heap = BinaryHeap::new();
    let mut evaluations = 0;
    for w in points.windows(2) {
        heap.push(kronrod_panel(&mut f, w[0], w[1])?);
        evaluations += KRONROD_POINTS;
    }
    let (mut value, mut error) = totals(&heap);

    loop {
        if error <= abs_tol.max(rel_tol * value.abs()) {
            break;
        }
        let best = QuadratureResult {
            value,
            error_estimate: error,
            evaluations,
        };
        if evaluations + 2 * KRONROD_POINTS > max_evaluations {
            return Err(Error::QuadratureNotConverged(best));
        }
        let Some(worst) = heap.pop() else { break };
        let mid = 0.5 * (worst.lo + worst.hi);
        if !(worst.lo < mid && mid < worst.hi) {
            // Interval exhausted at machine resolution.
            return Err(Error::QuadratureNotConverged(best));
        }
        heap.push(kronrod_panel(&mut f, worst.lo, mid)?);
        heap.push(kronrod_panel(&mut f, mid, worst.hi)?);
        evaluations += 2 * KRONROD_POINTS;
        (value, error) = totals(&heap);
    }

    Ok(QuadratureResult {
        value,
        error_estimate: error,
        evaluations,
    })
}

/// Re-summing every panel avoids drift from repeated subtract/add updates.
fn totals(heap: &BinaryHeap<Panel>) -> (f64, f64) {
    heap.iter()
        .fold((0.0, 0.0), |(v, e), p| (v + p.value, e + p.error))
}
