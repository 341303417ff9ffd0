//! Least-squares fit of `a·exp(-((x-b)/c)²)` to a BER curve.
//!
//! The optimizer is Levenberg–Marquardt with Marquardt's diagonal scaling:
//! each step solves `(JᵀJ + λ·diag(JᵀJ))·δ = Jᵀr`. λ starts at 1e-3, is
//! multiplied by 10 when a trial step raises the SSE or the system is
//! singular, and divided by 10 after an accepted step. Residuals are
//! unweighted and on the absolute BER scale.

use alloc::vec::Vec;

use libm::{exp, sqrt};

use crate::error::{invalid, Error, Result};
use crate::modulation::BerCurve;
use crate::numerics::{SnrDomain, SnrValue};

/// Number of model parameters.
const PARAMS: usize = 3;

const LAMBDA_INIT: f64 = 1e-3;
const LAMBDA_FACTOR: f64 = 10.0;
/// No descent direction survives this much damping at working precision.
const LAMBDA_MAX: f64 = 1e16;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GaussianFit {
    a: f64,
    b: f64,
    c: f64,
    domain: SnrDomain,
}

impl GaussianFit {
    /// Requires `a > 0` and `c != 0`; `c` is stored as `|c|` since the model is even in it.
    pub fn new(a: f64, b: f64, c: f64, domain: SnrDomain) -> Result<Self> {
        if !(a > 0.0) || !a.is_finite() {
            return Err(invalid("a", "amplitude must be positive and finite"));
        }
        if !b.is_finite() {
            return Err(invalid("b", "must be finite"));
        }
        if c == 0.0 || !c.is_finite() {
            return Err(invalid("c", "width must be non-zero and finite"));
        }
        Ok(Self {
            a,
            b,
            c: c.abs(),
            domain,
        })
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    pub fn domain(&self) -> SnrDomain {
        self.domain
    }

    /// Model value at a raw abscissa, with no unit check.
    pub fn value_at(&self, x: f64) -> f64 {
        model(self.a, self.b, self.c, x)
    }
}

#[inline]
fn model(a: f64, b: f64, c: f64, x: f64) -> f64 {
    let u = (x - b) / c;
    a * exp(-u * u)
}

/// Partial derivatives of the model with respect to (a, b, c) at `x`.
pub fn model_jacobian(a: f64, b: f64, c: f64, x: f64) -> [f64; PARAMS] {
    let u = (x - b) / c;
    let g = exp(-u * u);
    [g, 2.0 * a * u * g / c, 2.0 * a * u * u * g / c]
}

/// Evaluates the fitted Gaussian at `x`, which must be in the fit's unit.
pub fn gaussian_eval(fit: &GaussianFit, x: SnrValue) -> Result<f64> {
    if x.domain() != fit.domain {
        return Err(Error::DomainMismatch {
            expected: fit.domain,
            found: x.domain(),
        });
    }
    Ok(fit.value_at(x.magnitude()))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FitReport {
    pub sse: f64,
    pub r2: f64,
    pub adj_r2: f64,
    pub rmse: f64,
    pub iterations: usize,
    pub converged: bool,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FitOptions {
    pub max_iter: usize,
    /// Converged once an accepted step lowers the SSE by less than this fraction.
    pub sse_rel_tol: f64,
}

impl Default for FitOptions {
    fn default() -> Self {
        Self {
            max_iter: 200,
            sse_rel_tol: 1e-12,
        }
    }
}

fn sse_of(x: &[f64], y: &[f64], p: &[f64; PARAMS]) -> f64 {
    x.iter()
        .zip(y)
        .map(|(&xi, &yi)| {
            let r = yi - model(p[0], p[1], p[2], xi);
            r * r
        })
        .sum()
}

/// Solves the 3×3 system `m·v = rhs` by Gaussian elimination with partial pivoting.
fn solve3(mut m: [[f64; PARAMS]; PARAMS], mut rhs: [f64; PARAMS]) -> Option<[f64; PARAMS]> {
    for col in 0..PARAMS {
        let pivot = (col..PARAMS).max_by(|&i, &j| m[i][col].abs().total_cmp(&m[j][col].abs()))?;
        if !(m[pivot][col].abs() > 0.0) || !m[pivot][col].is_finite() {
            return None;
        }
        m.swap(col, pivot);
        rhs.swap(col, pivot);
        for row in col + 1..PARAMS {
            let factor = m[row][col] / m[col][col];
            for k in col..PARAMS {
                m[row][k] -= factor * m[col][k];
            }
            rhs[row] -= factor * rhs[col];
        }
    }
    let mut out = [0.0; PARAMS];
    for row in (0..PARAMS).rev() {
        let mut acc = rhs[row];
        for k in row + 1..PARAMS {
            acc -= m[row][k] * out[k];
        }
        out[row] = acc / m[row][row];
    }
    out.iter().all(|v| v.is_finite()).then_some(out)
}

/// Starting point: peak amplitude, its abscissa, and half the x span.
fn initial_guess(curve: &BerCurve) -> [f64; PARAMS] {
    let (x, y) = (curve.snr(), curve.ber());
    let (imax, &ymax) = y
        .iter()
        .enumerate()
        .max_by(|a, b| a.1.total_cmp(b.1))
        .expect("curve is non-empty");
    let span = x[x.len() - 1] - x[0];
    [ymax, x[imax], 0.5 * span]
}

/// Fits the Gaussian model to `curve` by damped Gauss–Newton.
///
/// Non-convergence is not an error: the best parameters found are returned
/// with `converged == false`.
pub fn fit_gaussian(
    curve: &BerCurve,
    init: Option<&GaussianFit>,
    opts: FitOptions,
) -> Result<(GaussianFit, FitReport)> {
    if curve.len() <= PARAMS {
        return Err(Error::TooFewPoints {
            found: curve.len(),
            required: PARAMS + 1,
        });
    }
    if let Some(init) = init {
        if init.domain != curve.domain() {
            return Err(Error::DomainMismatch {
                expected: curve.domain(),
                found: init.domain,
            });
        }
    }
    let (x, y) = (curve.snr(), curve.ber());
    let mut p = match init {
        Some(f) => [f.a, f.b, f.c],
        None => initial_guess(curve),
    };
    let mut sse = sse_of(x, y, &p);
    let mut lambda = LAMBDA_INIT;
    let mut converged = sse == 0.0;
    let mut iterations = 0;
    let mut jac: Vec<[f64; PARAMS]> = Vec::with_capacity(x.len());

    while !converged && iterations < opts.max_iter {
        iterations += 1;
        jac.clear();
        let mut jtj = [[0.0; PARAMS]; PARAMS];
        let mut jtr = [0.0; PARAMS];
        for (&xi, &yi) in x.iter().zip(y) {
            let row = model_jacobian(p[0], p[1], p[2], xi);
            let r = yi - model(p[0], p[1], p[2], xi);
            for i in 0..PARAMS {
                jtr[i] += row[i] * r;
                for k in 0..PARAMS {
                    jtj[i][k] += row[i] * row[k];
                }
            }
            jac.push(row);
        }

        loop {
            let mut damped = jtj;
            for (i, row) in damped.iter_mut().enumerate() {
                row[i] += lambda * jtj[i][i];
            }
            let trial = solve3(damped, jtr).map(|d| [p[0] + d[0], p[1] + d[1], p[2] + d[2]]);
            let trial_sse = trial.map(|t| sse_of(x, y, &t)).filter(|s| s.is_finite());
            match (trial, trial_sse) {
                (Some(t), Some(s)) if s <= sse => {
                    let decrease = sse - s;
                    p = t;
                    converged = s == 0.0 || decrease < opts.sse_rel_tol * sse;
                    sse = s;
                    lambda = (lambda / LAMBDA_FACTOR).max(f64::MIN_POSITIVE);
                    break;
                }
                _ => {
                    lambda *= LAMBDA_FACTOR;
                    if lambda > LAMBDA_MAX {
                        // Stationary to working precision: SSE can no longer change.
                        converged = true;
                        break;
                    }
                }
            }
        }
    }

    let fit = GaussianFit::new(p[0], p[1], p[2], curve.domain())?;
    let mut report = goodness_of_fit(curve, &fit)?;
    report.iterations = iterations;
    report.converged = converged;
    Ok((fit, report))
}

/// SSE, R², adjusted R² and RMSE of `fit` against `curve`, with p = 3
/// degrees of freedom removed for RMSE and adjusted R².
pub fn goodness_of_fit(curve: &BerCurve, fit: &GaussianFit) -> Result<FitReport> {
    if fit.domain != curve.domain() {
        return Err(Error::DomainMismatch {
            expected: curve.domain(),
            found: fit.domain,
        });
    }
    let n = curve.len();
    if n <= PARAMS {
        return Err(Error::TooFewPoints {
            found: n,
            required: PARAMS + 1,
        });
    }
    let y = curve.ber();
    let mean = y.iter().sum::<f64>() / n as f64;
    let sst: f64 = y.iter().map(|&v| (v - mean) * (v - mean)).sum();
    if sst == 0.0 {
        return Err(Error::ConstantData);
    }
    let sse: f64 = curve
        .points()
        .map(|(xi, yi)| {
            let r = yi - fit.value_at(xi);
            r * r
        })
        .sum();
    let dof = (n - PARAMS) as f64;
    Ok(FitReport {
        sse,
        r2: 1.0 - sse / sst,
        adj_r2: 1.0 - (sse / dof) / (sst / (n as f64 - 1.0)),
        rmse: sqrt(sse / dof),
        iterations: 0,
        converged: true,
    })
}
