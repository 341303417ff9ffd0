use fadeber_core::modulation::awgn_ber_fn;
use fadeber_core::{Family, McConfig, McMode, SnrValue};

use super::{CliError, Context, McArgs, SEED_ENV};
use crate::output::{csv_writer, num};
use crate::parallel;

pub(super) fn resolve_seed(flag: Option<u64>, ctx: &Context<'_>) -> Result<u64, CliError> {
    if let Some(seed) = flag {
        return Ok(seed);
    }
    match (ctx.env)(SEED_ENV) {
        Some(text) => text.trim().parse().map_err(|_| {
            CliError::Usage(format!("{SEED_ENV}=`{text}` is not a decimal 64-bit seed"))
        }),
        None => Ok(0),
    }
}

pub(super) fn run(args: &McArgs, ctx: &mut Context<'_>) -> Result<(), CliError> {
    let seed = resolve_seed(args.seed, ctx)?;
    let mode = if args.bit_level {
        McMode::BitLevel
    } else {
        McMode::SemiAnalytic
    };
    if mode == McMode::BitLevel && args.scheme.family() != Family::Qpsk {
        return Err(CliError::Usage(
            "--bit-level simulation supports qpsk only".into(),
        ));
    }
    let cfg = McConfig::new(seed, args.samples, mode)?;
    let ebn0 = SnrValue::decibel(args.ebn0_db)?.to_linear().magnitude();
    let workers = args.workers.unwrap_or_else(parallel::default_workers);

    let est = match mode {
        McMode::SemiAnalytic => {
            parallel::semi_analytic_ber(awgn_ber_fn(args.scheme), ebn0, &cfg, workers)?
        }
        McMode::BitLevel => parallel::bitlevel_qpsk_ber(ebn0, &cfg, workers)?,
    };

    let mode_name = match mode {
        McMode::SemiAnalytic => "semi-analytic",
        McMode::BitLevel => "bit-level",
    };
    let mut csv = csv_writer(&mut *ctx.stdout);
    csv.write_record([
        "scheme",
        "ebn0_db",
        "mode",
        "seed",
        "mean",
        "std_error",
        "n",
    ])?;
    csv.write_record([
        args.scheme.to_string(),
        num(args.ebn0_db),
        mode_name.to_string(),
        seed.to_string(),
        num(est.mean),
        num(est.std_error),
        est.n.to_string(),
    ])?;
    csv.flush()?;
    Ok(())
}
