use std::io::Write;

use fadeber_core::modulation::awgn_ber_fn;
use fadeber_core::published::{figure_scheme, metrics_for, COEFFICIENTS};
use fadeber_core::{
    ber_curve, fit_gaussian, goodness_of_fit, FitOptions, McConfig, McMode, SnrValue,
};

use super::{CliError, Context, ReproduceArgs};
use crate::grid::GridSpec;
use crate::output::{csv_writer, num, COMPARISON_HEADER};
use crate::parallel;

const TABLE_GRID: GridSpec = GridSpec {
    start: 0.0,
    stop: 10.0,
    step: 0.1,
};
const FIGURE_GRID: GridSpec = GridSpec {
    start: 0.0,
    stop: 50.0,
    step: 1.0,
};

pub(super) fn run(args: &ReproduceArgs, ctx: &mut Context<'_>) -> Result<(), CliError> {
    match (args.table, args.figure) {
        (Some(t), None) => {
            if !(1..=2).contains(&t) {
                return Err(CliError::Usage(format!(
                    "unknown table {t}; expected 1 or 2"
                )));
            }
            let grid = args.grid.unwrap_or(TABLE_GRID);
            ctx.with_output(args.out.as_ref(), |w| {
                if t == 1 {
                    table1(w, grid)
                } else {
                    table2(w, grid)
                }
            })
        }
        (None, Some(f)) => {
            if figure_scheme(f).is_none() {
                return Err(CliError::Usage(format!(
                    "unknown figure {f}; expected 1 to 4"
                )));
            }
            ctx.with_output(args.out.as_ref(), |w| figure(w, f, args))
        }
        _ => Err(CliError::Usage(
            "pass exactly one of --table or --figure".into(),
        )),
    }
}

type Refit = (
    fadeber_core::GaussianFit,
    fadeber_core::FitReport,
    fadeber_core::FitReport,
);

/// Own fit plus the metrics of both the own fit and the reference coefficients.
fn refit(row: &fadeber_core::published::PublishedFit, grid: GridSpec) -> Result<Refit, CliError> {
    let curve = ber_curve(
        row.scheme(),
        SnrValue::decibel(grid.start)?,
        SnrValue::decibel(grid.stop)?,
        grid.step,
    )?;
    let (fit, own) = fit_gaussian(&curve, None, FitOptions::default())?;
    let reference = goodness_of_fit(&curve, &row.fit())?;
    Ok((fit, own, reference))
}

fn table1(w: &mut dyn Write, grid: GridSpec) -> Result<(), CliError> {
    let mut csv = csv_writer(w);
    csv.write_record([
        "scheme",
        "a_published",
        "b_published",
        "c_published",
        "a_refit",
        "b_refit",
        "c_refit",
        "delta_a",
        "delta_b",
        "delta_c",
    ])?;
    for row in COEFFICIENTS {
        let (fit, _, _) = refit(&row, grid)?;
        csv.write_record([
            row.label.to_string(),
            num(row.a),
            num(row.b),
            num(row.c),
            num(fit.a()),
            num(fit.b()),
            num(fit.c()),
            num(fit.a() - row.a),
            num(fit.b() - row.b),
            num(fit.c() - row.c),
        ])?;
    }
    csv.flush()?;
    Ok(())
}

fn table2(w: &mut dyn Write, grid: GridSpec) -> Result<(), CliError> {
    let mut csv = csv_writer(w);
    csv.write_record([
        "scheme",
        "metric",
        "published",
        "published_coefficients",
        "refit",
        "delta_published_coefficients",
        "delta_refit",
    ])?;
    for row in COEFFICIENTS {
        let published = metrics_for(row.scheme()).expect("every tabulated scheme has metrics");
        let (_, own, reference) = refit(&row, grid)?;
        let metrics = [
            ("sse", published.sse, reference.sse, own.sse),
            ("r2", published.r2, reference.r2, own.r2),
            ("adj_r2", published.adj_r2, reference.adj_r2, own.adj_r2),
            ("rmse", published.rmse, reference.rmse, own.rmse),
        ];
        for (name, published, with_published, with_refit) in metrics {
            csv.write_record([
                row.label.to_string(),
                name.to_string(),
                num(published),
                num(with_published),
                num(with_refit),
                num(with_published - published),
                num(with_refit - published),
            ])?;
        }
    }
    csv.flush()?;
    Ok(())
}

fn figure(w: &mut dyn Write, number: u32, args: &ReproduceArgs) -> Result<(), CliError> {
    let (scheme, row) = figure_scheme(number).expect("validated by caller");
    let fit = row.fit();
    let grid = args.grid.unwrap_or(FIGURE_GRID).points();
    let workers = args.workers.unwrap_or_else(parallel::default_workers);
    let rows = parallel::compare_curves(scheme, &fit, &grid, workers)?;

    let mut csv = csv_writer(w);
    let mut header: Vec<&str> = COMPARISON_HEADER.to_vec();
    if args.seed.is_some() {
        header.extend(["ber_mc", "mc_std_error"]);
    }
    csv.write_record(&header)?;
    for r in rows {
        let mut record: Vec<String> = [
            r.ebn0_db,
            r.ber_generalized,
            r.ber_exact,
            r.ber_quadrature,
            r.ratio,
        ]
        .into_iter()
        .map(num)
        .collect();
        if let Some(seed) = args.seed {
            let cfg = McConfig::new(seed, args.samples, McMode::SemiAnalytic)?;
            let gamma = SnrValue::decibel(r.ebn0_db)?.to_linear().magnitude();
            let est = parallel::semi_analytic_ber(awgn_ber_fn(scheme), gamma, &cfg, workers)?;
            record.extend([num(est.mean), num(est.std_error)]);
        }
        csv.write_record(&record)?;
    }
    csv.flush()?;
    Ok(())
}
