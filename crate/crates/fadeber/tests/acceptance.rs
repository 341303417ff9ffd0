//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

use std::time::Instant;

use fadeber::cli;
use fadeber::parallel;
use fadeber_core::fading::{averaged_awgn_ber, generalized_fading_ber_printed};
use fadeber_core::modulation::awgn_ber_fn;
use fadeber_core::published::COEFFICIENTS;
use fadeber_core::*;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn rel(a: f64, b: f64) -> f64 {
    ((a - b) / b).abs()
}

fn check(cond: bool, msg: String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg)
    }
}

fn db(v: f64) -> SnrValue {
    SnrValue::decibel(v).unwrap()
}

/// Closed form vs quadrature of the Gaussian conditional BER.
fn closed_form_identity() -> Outcome {
    let mut worst: f64 = 0.0;
    for row in COEFFICIENTS {
        let fit = row.fit();
        for gamma in [0.1, 1.0, 10.0, 100.0, 1e4] {
            let closed = generalized_fading_ber(&fit, gamma).map_err(|e| e.to_string())?;
            let quad = average_over_rayleigh(|xi| fit.value_at(xi), gamma, 1e-12)
                .map_err(|e| e.to_string())?;
            let err = rel(closed, quad);
            worst = worst.max(err);
            check(
                err <= 1e-8,
                format!("{} γ={gamma}: rel err {err:e}", row.label),
            )?;
        }
    }
    Ok(format!("max rel err {worst:.2e} (bound 1e-8)"))
}

fn exact_average_consistency() -> Outcome {
    let mut worst: f64 = 0.0;
    let gammas = [0.1, 1.0, 10.0, 100.0];
    for gamma in gammas {
        let exact = exact_fading_ber(ModulationScheme::QPSK, gamma).unwrap();
        let quad =
            average_over_rayleigh(|xi| numerics::q_function((2.0 * xi).sqrt()), gamma, 1e-12)
                .map_err(|e| e.to_string())?;
        worst = worst.max(rel(exact, quad));
        check(rel(exact, quad) <= 1e-6, format!("QPSK γ={gamma}"))?;
    }
    let ask2 = ModulationScheme::ask(2).unwrap();
    for i in 0..200 {
        let gamma = 10f64.powf(-3.0 + 9.0 * i as f64 / 199.0);
        let (a, q) = (
            exact_fading_ber(ask2, gamma).unwrap(),
            exact_fading_ber(ModulationScheme::QPSK, gamma).unwrap(),
        );
        check(
            rel(a, q) <= f64::EPSILON,
            format!("2-ASK vs QPSK at γ={gamma}: {a:e} vs {q:e}"),
        )?;
    }
    for m in [4, 16, 64] {
        let s = ModulationScheme::qam(m).unwrap();
        for gamma in gammas {
            let err = rel(
                exact_fading_ber(s, gamma).unwrap(),
                averaged_awgn_ber(s, gamma, 1e-12).map_err(|e| e.to_string())?,
            );
            worst = worst.max(err);
            check(err <= 1e-6, format!("{s} γ={gamma}: {err:e}"))?;
        }
    }
    for m in [2, 4, 8] {
        let s = ModulationScheme::fsk(m).unwrap();
        for gamma in gammas {
            let quad = averaged_awgn_ber(s, gamma, 1e-12).map_err(|e| e.to_string())?;
            let err = rel(exact_fading_ber(s, gamma).unwrap(), 2.0 * quad);
            worst = worst.max(err);
            check(err <= 1e-6, format!("{s} γ={gamma}: {err:e}"))?;
        }
    }
    Ok(format!(
        "max rel err {worst:.2e} (bound 1e-6); 2-ASK ≡ QPSK"
    ))
}

fn reference_curve(s: ModulationScheme) -> BerCurve {
    ber_curve(s, db(0.0), db(10.0), 0.1).unwrap()
}

fn published_fit_quality() -> Outcome {
    let mut notes = Vec::new();
    for (label, bound) in [
        ("QPSK", 1e-3),
        ("BASK", 1e-3),
        ("BFSK", 2.5e-3),
        ("16-QAM", f64::INFINITY),
    ] {
        let row = COEFFICIENTS.iter().find(|r| r.label == label).unwrap();
        let r = goodness_of_fit(&reference_curve(row.scheme()), &row.fit())
            .map_err(|e| e.to_string())?;
        check(
            r.rmse <= bound,
            format!("{label}: RMSE {:.3e} > {bound:e}", r.rmse),
        )?;
        notes.push(format!("{label} {:.3e}", r.rmse));
    }
    Ok(format!("RMSE {} (16-QAM reported only)", notes.join(", ")))
}

fn optimizer_competitiveness() -> Outcome {
    let mut notes = Vec::new();
    for label in ["QPSK", "BASK", "BFSK"] {
        let row = COEFFICIENTS.iter().find(|r| r.label == label).unwrap();
        let curve = reference_curve(row.scheme());
        let (_, own) =
            fit_gaussian(&curve, None, FitOptions::default()).map_err(|e| e.to_string())?;
        let published = goodness_of_fit(&curve, &row.fit()).unwrap();
        check(
            own.converged && own.sse <= published.sse,
            format!("{label}: {:e} vs {:e}", own.sse, published.sse),
        )?;
        notes.push(format!("{label} {:.2e}≤{:.2e}", own.sse, published.sse));
    }
    let x: Vec<f64> = (0..=100).map(|i| i as f64 * 0.1).collect();
    let y = x
        .iter()
        .map(|&v| 0.1 * (-((v + 2.0) / 4.0).powi(2)).exp())
        .collect();
    let curve = BerCurve::new(SnrDomain::Decibel, x, y).unwrap();
    let (fit, _) = fit_gaussian(&curve, None, FitOptions::default()).map_err(|e| e.to_string())?;
    let dev = (fit.a() - 0.1)
        .abs()
        .max((fit.b() + 2.0).abs())
        .max((fit.c() - 4.0).abs());
    check(dev <= 1e-9, format!("noise-free recovery off by {dev:e}"))?;
    Ok(format!(
        "SSE {}; noise-free recovery {dev:.1e}",
        notes.join(", ")
    ))
}

fn special_functions() -> Outcome {
    let mut worst: f64 = 0.0;
    for i in 0..=800 {
        let x = i as f64 * 0.01;
        let d = (numerics::q_craig(x, 1e-12).map_err(|e| e.to_string())? - numerics::q_function(x))
            .abs();
        worst = worst.max(d);
        check(d <= 1e-10, format!("Craig vs erfc at x={x}: {d:e}"))?;
    }
    let e1 = numerics::erf(1.0);
    check(
        (e1 - 0.842_700_792_9).abs() <= 1e-10,
        format!("erf(1) = {e1}"),
    )?;
    Ok(format!("max |Craig − Q| {worst:.1e}; erf(1) = {e1:.10}"))
}

fn monte_carlo() -> Outcome {
    const EXACT: f64 = 0.023_268_7;
    let f = awgn_ber_fn(ModulationScheme::QPSK);
    let semi_cfg = McConfig::new(2024, 1_000_000, McMode::SemiAnalytic).unwrap();
    let bit_cfg = McConfig::new(2024, 1_000_000, McMode::BitLevel).unwrap();
    let semi1 = parallel::semi_analytic_ber(f, 10.0, &semi_cfg, 1).map_err(|e| e.to_string())?;
    let semi4 = parallel::semi_analytic_ber(f, 10.0, &semi_cfg, 4).map_err(|e| e.to_string())?;
    let semi_again =
        parallel::semi_analytic_ber(f, 10.0, &semi_cfg, 1).map_err(|e| e.to_string())?;
    let bit1 = parallel::bitlevel_qpsk_ber(10.0, &bit_cfg, 1).map_err(|e| e.to_string())?;
    let bit4 = parallel::bitlevel_qpsk_ber(10.0, &bit_cfg, 4).map_err(|e| e.to_string())?;
    let bit_again = parallel::bitlevel_qpsk_ber(10.0, &bit_cfg, 4).map_err(|e| e.to_string())?;
    for (name, e) in [("semi-analytic", semi1), ("bit-level", bit1)] {
        let z = (e.mean - EXACT).abs() / e.std_error;
        check(
            z <= 3.0,
            format!("{name}: {:.6e} is {z:.2} SE from {EXACT}", e.mean),
        )?;
    }
    check(
        semi1 == semi4 && semi1 == semi_again,
        "semi-analytic not deterministic".into(),
    )?;
    check(
        bit1 == bit4 && bit1 == bit_again,
        "bit-level not deterministic".into(),
    )?;
    Ok(format!(
        "semi {:.5e}±{:.1e}, bit {:.5e}±{:.1e}; identical for 1/4 workers",
        semi1.mean, semi1.std_error, bit1.mean, bit1.std_error
    ))
}

fn figure_csv(n: u32) -> Result<Vec<[f64; 5]>, String> {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let args = [
        "fadeber",
        "reproduce",
        "--figure",
        &n.to_string(),
        "--grid",
        "0:50:1",
    ];
    let code = cli::run(args, &mut out, &mut err, &|_| None);
    if code != 0 {
        return Err(format!(
            "reproduce exited {code}: {}",
            String::from_utf8_lossy(&err)
        ));
    }
    let text = String::from_utf8(out).map_err(|e| e.to_string())?;
    let mut lines = text.lines();
    check(
        lines.next() == Some("ebn0_db,ber_generalized,ber_exact,ber_quadrature,ratio"),
        "header".into(),
    )?;
    lines
        .map(|l| {
            let v: Vec<f64> = l
                .split(',')
                .map(|f| f.parse::<f64>().map_err(|e| e.to_string()))
                .collect::<Result<_, _>>()?;
            v.try_into().map_err(|_| "row width".to_string())
        })
        .collect()
}

fn figure_reproduction() -> Outcome {
    let mut summary = Vec::new();
    for (fig, target) in [(1, 0.708), (3, 0.54)] {
        let rows = figure_csv(fig)?;
        check(
            rows.len() == 51,
            format!("figure {fig}: {} rows", rows.len()),
        )?;
        for col in [1, 2] {
            check(
                rows.windows(2).all(|w| w[1][col] < w[0][col]),
                format!("figure {fig} column {col} not decreasing"),
            )?;
        }
        let mut last_ratio = 0.0;
        for r in rows.iter().filter(|r| r[0] > 30.0) {
            check(
                (r[4] - target).abs() <= 0.01,
                format!("figure {fig} ratio {:.4} at {} dB", r[4], r[0]),
            )?;
            last_ratio = r[4];
        }
        for col in [1, 2] {
            for (lo, hi) in [(30, 40), (40, 50)] {
                let slope = (rows[hi][col] / rows[lo][col]).log10();
                check(
                    (slope + 1.0).abs() <= 0.02,
                    format!("figure {fig} col {col} slope {slope:.4} over {lo}-{hi} dB"),
                )?;
            }
        }
        summary.push(format!("fig {fig} ratio@50dB {last_ratio:.4}"));
    }
    Ok(format!(
        "{}; slopes −1 dec/10 dB within 2%",
        summary.join(", ")
    ))
}

fn small_gamma_stability() -> Outcome {
    let mut worst: f64 = 0.0;
    for row in COEFFICIENTS {
        let fit = row.fit();
        let limit = fit.a() * (-(fit.b() / fit.c()).powi(2)).exp();
        let v = generalized_fading_ber(&fit, 1e-9).map_err(|e| e.to_string())?;
        check(
            v.is_finite() && rel(v, limit) <= 1e-6,
            format!("{}: {v:e} vs {limit:e}", row.label),
        )?;
        check(
            !generalized_fading_ber_printed(&fit, 1e-9).is_finite(),
            format!("{}: printed form finite", row.label),
        )?;
        worst = worst.max(rel(v, limit));
    }
    Ok(format!(
        "rel dev from γ→0 limit {worst:.1e}; printed form overflows"
    ))
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("AC1 closed-form identity", closed_form_identity),
        ("AC2 exact-average consistency", exact_average_consistency),
        (
            "AC3 published-coefficient fit quality",
            published_fit_quality,
        ),
        ("AC4 optimizer competitiveness", optimizer_competitiveness),
        ("AC5 special functions", special_functions),
        ("AC6 Monte Carlo", monte_carlo),
        ("AC7 figure data and discrepancy", figure_reproduction),
        ("AC8 small-γ stability", small_gamma_stability),
    ];
    let start = Instant::now();
    let mut failed = 0;
    for (name, run) in criteria {
        let t = Instant::now();
        match run() {
            Ok(detail) => println!("PASS {name}: {detail} [{:.2}s]", t.elapsed().as_secs_f64()),
            Err(detail) => {
                failed += 1;
                println!("FAIL {name}: {detail} [{:.2}s]", t.elapsed().as_secs_f64());
            }
        }
    }
    println!(
        "acceptance: {} of {} criteria passed in {:.1}s",
        8 - failed,
        8,
        start.elapsed().as_secs_f64()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
