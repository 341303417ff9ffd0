use std::io::Write;

use fadeber_core::fading::COMPARISON_REL_TOL;
use fadeber_core::published::coefficients_for;
use fadeber_core::{
    average_over_rayleigh, awgn_ber, ber_curve, exact_fading_ber, fit_gaussian,
    generalized_fading_ber, FitOptions, GaussianFit, ModulationScheme, SnrDomain, SnrValue,
};

use super::{AwgnArgs, CliError, Context, FadingArgs, FadingMode};
use crate::output::{csv_writer, num, COMPARISON_HEADER};
use crate::parallel;

pub(super) fn run_awgn(args: &AwgnArgs, ctx: &mut Context<'_>) -> Result<(), CliError> {
    let scheme = args.target.scheme;
    let grid = args.target.grid.points();
    ctx.with_output(args.out.as_ref(), |w| {
        let mut csv = csv_writer(w);
        csv.write_record(["ebn0_db", "ber"])?;
        for db in grid {
            let ber = awgn_ber(scheme, SnrValue::decibel(db)?)?;
            csv.write_record([num(db), num(ber)])?;
        }
        csv.flush()?;
        Ok(())
    })
}

fn parse_fit(text: &str) -> Result<GaussianFit, CliError> {
    let vals: Vec<f64> = text
        .split(',')
        .map(|t| t.trim().parse::<f64>())
        .collect::<Result<_, _>>()
        .map_err(|_| CliError::Usage(format!("--fit expects a,b,c, got `{text}`")))?;
    let [a, b, c] = vals.as_slice() else {
        return Err(CliError::Usage(format!(
            "--fit expects three values, got {}",
            vals.len()
        )));
    };
    Ok(GaussianFit::new(*a, *b, *c, SnrDomain::Decibel)?)
}

/// `--fit` if given, otherwise the reference coefficients, otherwise a fit
/// to the scheme's AWGN curve on 0..10 dB in 0.1 dB steps.
pub(super) fn resolve_fit(
    scheme: ModulationScheme,
    explicit: Option<&str>,
) -> Result<GaussianFit, CliError> {
    if let Some(text) = explicit {
        return parse_fit(text);
    }
    if let Some(row) = coefficients_for(scheme) {
        return Ok(row.fit());
    }
    let curve = ber_curve(
        scheme,
        SnrValue::decibel(0.0)?,
        SnrValue::decibel(10.0)?,
        0.1,
    )?;
    let (fit, report) = fit_gaussian(&curve, None, FitOptions::default())?;
    if !report.converged {
        return Err(CliError::NotConverged(format!(
            "default fit for {scheme} did not converge"
        )));
    }
    Ok(fit)
}

pub(super) fn write_comparison(
    w: &mut dyn Write,
    scheme: ModulationScheme,
    fit: &GaussianFit,
    grid: &[f64],
) -> Result<(), CliError> {
    let rows = parallel::compare_curves(scheme, fit, grid, parallel::default_workers())?;
    let mut csv = csv_writer(w);
    csv.write_record(COMPARISON_HEADER)?;
    for r in rows {
        csv.write_record(
            [
                r.ebn0_db,
                r.ber_generalized,
                r.ber_exact,
                r.ber_quadrature,
                r.ratio,
            ]
            .map(num),
        )?;
    }
    csv.flush()?;
    Ok(())
}

pub(super) fn run_fading(args: &FadingArgs, ctx: &mut Context<'_>) -> Result<(), CliError> {
    let scheme = args.target.scheme;
    let grid = args.target.grid.points();
    let needs_fit = !matches!(args.mode, Some(FadingMode::Exact));
    let fit = if needs_fit {
        Some(resolve_fit(scheme, args.fit.as_deref())?)
    } else {
        None
    };

    ctx.with_output(args.out.as_ref(), |w| {
        let Some(mode) = args.mode else {
            let fit = fit.as_ref().expect("fit resolved for full comparison");
            return write_comparison(w, scheme, fit, &grid);
        };
        let column = match mode {
            FadingMode::ClosedForm => "ber_generalized",
            FadingMode::Exact => "ber_exact",
            FadingMode::Quadrature => "ber_quadrature",
        };
        let mut csv = csv_writer(w);
        csv.write_record(["ebn0_db", column])?;
        for db in grid {
            let gamma = SnrValue::decibel(db)?.to_linear().magnitude();
            let v = match (mode, fit.as_ref()) {
                (FadingMode::Exact, _) => exact_fading_ber(scheme, gamma)?,
                (FadingMode::ClosedForm, Some(f)) => generalized_fading_ber(f, gamma)?,
                (FadingMode::Quadrature, Some(f)) => {
                    average_over_rayleigh(|xi| f.value_at(xi), gamma, COMPARISON_REL_TOL)?
                }
                _ => unreachable!("fit resolved for Gaussian modes"),
            };
            csv.write_record([num(db), num(v)])?;
        }
        csv.flush()?;
        Ok(())
    })
}
