//! Cross-checks between the closed forms and quadrature averages.

use fadeber_core::fading::{averaged_awgn_ber, generalized_fading_ber_printed};
use fadeber_core::modulation::awgn_ber_fn;
use fadeber_core::numerics::{erf, q_function};
use fadeber_core::published::COEFFICIENTS;
use fadeber_core::*;

const GAMMAS: [f64; 5] = [0.1, 1.0, 10.0, 100.0, 1e4];

fn rel(a: f64, b: f64) -> f64 {
    ((a - b) / b).abs()
}

fn log_grid(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    let (l, h) = (lo.log10(), hi.log10());
    (0..n)
        .map(|i| 10f64.powf(l + (h - l) * i as f64 / (n - 1) as f64))
        .collect()
}

#[test]
fn closed_form_equals_quadrature_for_published_fits() {
    for row in COEFFICIENTS {
        let fit = row.fit();
        for gamma in GAMMAS {
            let closed = generalized_fading_ber(&fit, gamma).unwrap();
            let quad = average_over_rayleigh(|xi| fit.value_at(xi), gamma, 1e-12).unwrap();
            assert!(
                rel(closed, quad) <= 1e-8,
                "{} γ={gamma}: {closed:e} vs {quad:e}",
                row.label
            );
        }
    }
}

#[test]
fn stable_form_equals_printed_form() {
    for row in COEFFICIENTS {
        let fit = row.fit();
        let (b, c) = (fit.b(), fit.c());
        for gamma in log_grid(c / 50.0, 1e6, 300) {
            let stable = generalized_fading_ber(&fit, gamma).unwrap();
            let printed = generalized_fading_ber_printed(&fit, gamma);
            assert!(printed.is_finite(), "{} overflowed at γ={gamma}", row.label);
            // 1 + erf(w) cancels for negative w; only compare where it is benign.
            if b / c - c / (2.0 * gamma) >= -2.0 {
                assert!(
                    rel(stable, printed) <= 1e-12,
                    "{} γ={gamma}: {stable:e} vs {printed:e}",
                    row.label
                );
            }
        }
    }
}

#[test]
fn generalized_and_exact_are_decreasing() {
    let grid = log_grid(1e-3, 1e6, 500);
    let schemes = [
        ModulationScheme::QPSK,
        ModulationScheme::qam(4).unwrap(),
        ModulationScheme::qam(16).unwrap(),
        ModulationScheme::qam(64).unwrap(),
        ModulationScheme::fsk(2).unwrap(),
        ModulationScheme::fsk(8).unwrap(),
        ModulationScheme::ask(2).unwrap(),
        ModulationScheme::ask(8).unwrap(),
    ];
    for s in schemes {
        let vals: Vec<f64> = grid
            .iter()
            .map(|&g| exact_fading_ber(s, g).unwrap())
            .collect();
        assert!(vals.windows(2).all(|w| w[1] < w[0]), "{s}");
    }
    for row in COEFFICIENTS {
        let fit = row.fit();
        // A Gaussian peaking at b > 0 first rises as the average SNR grows past zero.
        let start = if fit.b() > 0.0 { 1.0 } else { 1e-3 };
        let vals: Vec<f64> = log_grid(start, 1e6, 500)
            .iter()
            .map(|&g| generalized_fading_ber(&fit, g).unwrap())
            .collect();
        assert!(vals.windows(2).all(|w| w[1] < w[0]), "{}", row.label);
    }
}

#[test]
fn qpsk_average_matches_eq10() {
    for gamma in [0.1, 1.0, 10.0, 100.0] {
        let exact = exact_fading_ber(ModulationScheme::QPSK, gamma).unwrap();
        let quad = average_over_rayleigh(|xi| q_function((2.0 * xi).sqrt()), gamma, 1e-12).unwrap();
        assert!(rel(exact, quad) <= 1e-6);
        let via_awgn = averaged_awgn_ber(ModulationScheme::QPSK, gamma, 1e-12).unwrap();
        assert!(rel(exact, via_awgn) <= 1e-6);
    }
    let v = exact_fading_ber(ModulationScheme::QPSK, 10.0).unwrap();
    assert!((v - 0.023_268_705_377_203_84).abs() < 1e-15);
}

#[test]
fn qam_average_matches_eq11() {
    for m in [4, 16, 64] {
        let s = ModulationScheme::qam(m).unwrap();
        for gamma in [0.1, 1.0, 10.0, 100.0] {
            let exact = exact_fading_ber(s, gamma).unwrap();
            let quad = averaged_awgn_ber(s, gamma, 1e-12).unwrap();
            assert!(
                rel(exact, quad) <= 1e-6,
                "{s} γ={gamma}: {exact:e} vs {quad:e}"
            );
        }
    }
}

#[test]
fn fsk_eq12_is_twice_the_union_bound_average() {
    for m in [2, 4, 8] {
        let s = ModulationScheme::fsk(m).unwrap();
        for gamma in [0.1, 1.0, 10.0, 100.0] {
            let exact = exact_fading_ber(s, gamma).unwrap();
            let quad = averaged_awgn_ber(s, gamma, 1e-12).unwrap();
            assert!(rel(exact, 2.0 * quad) <= 1e-6, "{s} γ={gamma}");
        }
    }
}

#[test]
fn ask_average_matches_eq13() {
    for m in [2, 4, 8, 16] {
        let s = ModulationScheme::ask(m).unwrap();
        for gamma in [0.1, 1.0, 10.0, 100.0] {
            let exact = exact_fading_ber(s, gamma).unwrap();
            let quad = averaged_awgn_ber(s, gamma, 1e-12).unwrap();
            assert!(rel(exact, quad) <= 1e-6, "{s} γ={gamma}");
        }
    }
}

#[test]
fn q_and_q2_averages_match_quadrature() {
    for beta in [0.2, 1.0, 2.0] {
        for gamma in [0.1, 1.0, 10.0, 100.0] {
            let q1 = rayleigh_q_average(beta, gamma).unwrap();
            let quad1 =
                average_over_rayleigh(|xi| q_function((beta * xi).sqrt()), gamma, 1e-12).unwrap();
            assert!(rel(q1, quad1) <= 1e-8, "Q β={beta} γ={gamma}");
            let q2 = rayleigh_q2_average(beta, gamma).unwrap();
            let quad2 =
                average_over_rayleigh(|xi| q_function((beta * xi).sqrt()).powi(2), gamma, 1e-12)
                    .unwrap();
            assert!(rel(q2, quad2) <= 1e-7, "Q² β={beta} γ={gamma}");
        }
    }
}

#[test]
fn awgn_curve_families_reduce_to_qpsk() {
    let ask2 = awgn_ber_fn(ModulationScheme::ask(2).unwrap());
    let qpsk = awgn_ber_fn(ModulationScheme::QPSK);
    for gamma in log_grid(1e-3, 1e6, 200) {
        assert_eq!(ask2(gamma), qpsk(gamma));
        assert_eq!(
            exact_fading_ber(ModulationScheme::ask(2).unwrap(), gamma).unwrap(),
            exact_fading_ber(ModulationScheme::QPSK, gamma).unwrap()
        );
    }
}

#[test]
fn probabilities_stay_in_unit_interval() {
    // The M-FSK union bound exceeds 1/2 at low SNR for M >= 4; binary schemes and QAM do not.
    let schemes = [
        ModulationScheme::QPSK,
        ModulationScheme::qam(16).unwrap(),
        ModulationScheme::qam(64).unwrap(),
        ModulationScheme::fsk(2).unwrap(),
        ModulationScheme::ask(4).unwrap(),
    ];
    for s in schemes {
        for gamma in log_grid(1e-3, 1e6, 100) {
            let v = exact_fading_ber(s, gamma).unwrap();
            assert!(v > 0.0 && v < 1.0, "{s} γ={gamma}: {v}");
        }
    }
    for row in COEFFICIENTS {
        for gamma in log_grid(1e-9, 1e6, 100) {
            let v = generalized_fading_ber(&row.fit(), gamma).unwrap();
            assert!(v > 0.0 && v < 1.0);
        }
    }
    let gamma = 1e6;
    assert!(
        (gamma * exact_fading_ber(ModulationScheme::QPSK, gamma).unwrap() - 0.25).abs() <= 1e-4
    );
}

#[test]
fn bfsk_comparison_asymptote() {
    let row = COEFFICIENTS[2];
    let fit = row.fit();
    let asymptote =
        0.5 * fit.a() * fit.c() * std::f64::consts::PI.sqrt() * (1.0 + erf(fit.b() / fit.c()));
    assert!((asymptote - 0.5364).abs() < 5e-4, "{asymptote}");
    let rows = compare_curves(row.scheme(), &fit, &[10.0, 20.0, 30.0, 40.0, 50.0]).unwrap();
    let last = rows.last().unwrap();
    let gamma = 1e5;
    assert!(rel(last.ber_quadrature * gamma, asymptote) < 1e-3);
    assert!(rel(last.ber_exact * gamma, 1.0) < 1e-4);
    assert!((last.ratio - 0.54).abs() < 0.01);
}
