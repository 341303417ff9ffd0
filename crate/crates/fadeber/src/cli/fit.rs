use serde::Serialize;

use fadeber_core::{
    ber_curve, fit_gaussian, FitOptions, FitReport, GaussianFit, SnrDomain, SnrValue,
};

use super::{CliError, Context, FitArgs};

#[derive(Debug, Serialize)]
struct FitOutput {
    domain: &'static str,
    a: f64,
    b: f64,
    c: f64,
    sse: f64,
    r2: f64,
    adj_r2: f64,
    rmse: f64,
    iterations: usize,
    converged: bool,
}

impl FitOutput {
    fn new(fit: &GaussianFit, r: &FitReport) -> Self {
        Self {
            domain: match fit.domain() {
                SnrDomain::Decibel => "db",
                SnrDomain::Linear => "linear",
            },
            a: fit.a(),
            b: fit.b(),
            c: fit.c(),
            sse: r.sse,
            r2: r.r2,
            adj_r2: r.adj_r2,
            rmse: r.rmse,
            iterations: r.iterations,
            converged: r.converged,
        }
    }
}

pub(super) fn run(args: &FitArgs, ctx: &mut Context<'_>) -> Result<(), CliError> {
    let domain: SnrDomain = args.domain.into();
    let g = args.target.grid;
    let curve = ber_curve(
        args.target.scheme,
        SnrValue::new(g.start, domain)?,
        SnrValue::new(g.stop, domain)?,
        g.step,
    )?;
    let opts = FitOptions {
        max_iter: args.max_iter,
        ..FitOptions::default()
    };
    let (fit, report) = fit_gaussian(&curve, None, opts)?;
    let out = FitOutput::new(&fit, &report);

    if args.json {
        let text = serde_json::to_string_pretty(&out).map_err(|e| CliError::Io(e.into()))?;
        writeln!(ctx.stdout, "{text}")?;
    } else {
        let n = crate::output::num;
        writeln!(ctx.stdout, "domain {}", out.domain)?;
        writeln!(ctx.stdout, "a {}", n(out.a))?;
        writeln!(ctx.stdout, "b {}", n(out.b))?;
        writeln!(ctx.stdout, "c {}", n(out.c))?;
        writeln!(ctx.stdout, "sse {}", n(out.sse))?;
        writeln!(ctx.stdout, "r2 {}", n(out.r2))?;
        writeln!(ctx.stdout, "adj_r2 {}", n(out.adj_r2))?;
        writeln!(ctx.stdout, "rmse {}", n(out.rmse))?;
        writeln!(ctx.stdout, "iterations {}", out.iterations)?;
        writeln!(ctx.stdout, "converged {}", out.converged)?;
    }

    if report.converged {
        Ok(())
    } else {
        Err(CliError::NotConverged(format!(
            "fit did not converge within {} iterations",
            args.max_iter
        )))
    }
}
