//! `fadeber` subcommands: `fit`, `awgn`, `fading`, `mc`, `reproduce`.
//!
//! Exit codes: 0 success, 2 invalid arguments or inputs, 3 numerical
//! non-convergence (best-so-far output is still written), 1 IO failure.

mod evaluate;
mod fit;
mod mc;
mod reproduce;

use std::ffi::OsString;
use std::fmt;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use fadeber_core::{Error as CoreError, ModulationScheme, SnrDomain};

use crate::grid::GridSpec;

pub const SEED_ENV: &str = "FADEBER_SEED";

pub const EXIT_OK: i32 = 0;
pub const EXIT_IO: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_NOT_CONVERGED: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "fadeber",
    version,
    about = "BER curves over AWGN and Rayleigh fading"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Fit a Gaussian a·exp(-((x-b)/c)²) to a scheme's AWGN BER curve
    Fit(FitArgs),
    /// AWGN BER over an Eb/N0 grid (CSV)
    Awgn(AwgnArgs),
    /// Rayleigh-averaged BER over an Eb/N0 grid (CSV)
    Fading(FadingArgs),
    /// Seeded Monte Carlo estimate of the Rayleigh-averaged BER
    Mc(McArgs),
    /// Regenerate the reference tables and comparison figure data
    Reproduce(ReproduceArgs),
}

fn parse_scheme(s: &str) -> Result<ModulationScheme, String> {
    s.parse().map_err(|e: CoreError| e.to_string())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DomainArg {
    Db,
    Linear,
}

impl From<DomainArg> for SnrDomain {
    fn from(d: DomainArg) -> Self {
        match d {
            DomainArg::Db => SnrDomain::Decibel,
            DomainArg::Linear => SnrDomain::Linear,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FadingMode {
    ClosedForm,
    Exact,
    Quadrature,
}

#[derive(Debug, Args)]
pub struct SchemeGrid {
    /// Modulation: qpsk, bfsk, bask, <M>qam, <M>fsk, <M>ask
    #[arg(long, value_parser = parse_scheme)]
    pub scheme: ModulationScheme,
    /// Eb/N0 grid as start:stop:step
    #[arg(long, allow_hyphen_values = true)]
    pub grid: GridSpec,
}

#[derive(Debug, Args)]
pub struct FitArgs {
    #[command(flatten)]
    pub target: SchemeGrid,
    /// Unit of the grid values and of the fitted abscissa
    #[arg(long, value_enum, default_value = "db")]
    pub domain: DomainArg,
    /// Emit JSON instead of key/value lines
    #[arg(long)]
    pub json: bool,
    #[arg(long, default_value_t = 200)]
    pub max_iter: usize,
}

#[derive(Debug, Args)]
pub struct AwgnArgs {
    #[command(flatten)]
    pub target: SchemeGrid,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct FadingArgs {
    #[command(flatten)]
    pub target: SchemeGrid,
    /// Emit a single estimator column instead of the full comparison
    #[arg(long, value_enum)]
    pub mode: Option<FadingMode>,
    /// Gaussian coefficients a,b,c (defaults to the reference table, else a fresh fit)
    #[arg(long, allow_hyphen_values = true)]
    pub fit: Option<String>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct McArgs {
    #[arg(long, value_parser = parse_scheme)]
    pub scheme: ModulationScheme,
    /// Mean Eb/N0 in dB
    #[arg(long, allow_hyphen_values = true)]
    pub ebn0_db: f64,
    #[arg(long, default_value_t = 1_000_000)]
    pub samples: usize,
    /// 64-bit seed; falls back to $FADEBER_SEED, then 0
    #[arg(long)]
    pub seed: Option<u64>,
    /// Simulate QPSK symbols instead of averaging the analytic BER
    #[arg(long)]
    pub bit_level: bool,
    /// Worker threads (results do not depend on this)
    #[arg(long)]
    pub workers: Option<usize>,
}

#[derive(Debug, Args)]
#[command(group(clap::ArgGroup::new("what").required(true).multiple(false).args(["table", "figure"])))]
pub struct ReproduceArgs {
    /// Reference table: 1 coefficients, 2 goodness of fit
    #[arg(long)]
    pub table: Option<u32>,
    /// Comparison figure: 1 QPSK, 2 16-QAM, 3 BFSK, 4 BASK
    #[arg(long)]
    pub figure: Option<u32>,
    /// Eb/N0 grid (figures default to 0:50:1, tables refit on 0:10:0.1)
    #[arg(long, allow_hyphen_values = true)]
    pub grid: Option<GridSpec>,
    /// Adds semi-analytic Monte Carlo columns to figure output
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long, default_value_t = 100_000)]
    pub samples: usize,
    #[arg(long)]
    pub workers: Option<usize>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    NotConverged(String),
    Io(io::Error),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "error: {m}"),
            CliError::NotConverged(m) => write!(f, "error: {m}"),
            CliError::Io(e) => write!(f, "error: {e}"),
        }
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::NotConverged(_) => EXIT_NOT_CONVERGED,
            CliError::Io(_) => EXIT_IO,
        }
    }
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        match e {
            CoreError::QuadratureNotConverged(_) => CliError::NotConverged(e.to_string()),
            other => CliError::Usage(other.to_string()),
        }
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Io(e.into())
    }
}

/// Seed lookup for `mc` when `--seed` is absent.
pub type EnvLookup<'a> = &'a dyn Fn(&str) -> Option<String>;

pub(crate) struct Context<'a> {
    pub stdout: &'a mut dyn Write,
    pub env: EnvLookup<'a>,
}

impl Context<'_> {
    /// Runs `body` against `--out FILE` when given, stdout otherwise.
    pub fn with_output<T>(
        &mut self,
        out: Option<&PathBuf>,
        body: impl FnOnce(&mut dyn Write) -> Result<T, CliError>,
    ) -> Result<T, CliError> {
        match out {
            Some(path) => {
                let mut file = BufWriter::new(File::create(path)?);
                let v = body(&mut file)?;
                file.flush()?;
                Ok(v)
            }
            None => body(self.stdout),
        }
    }
}

/// Parses `args` (including the program name) and runs the subcommand.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write, env: EnvLookup<'_>) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = sink.write_all(rendered.as_bytes());
            return code;
        }
    };
    let mut ctx = Context { stdout, env };
    let result = match &cli.command {
        Command::Fit(a) => fit::run(a, &mut ctx),
        Command::Awgn(a) => evaluate::run_awgn(a, &mut ctx),
        Command::Fading(a) => evaluate::run_fading(a, &mut ctx),
        Command::Mc(a) => mc::run(a, &mut ctx),
        Command::Reproduce(a) => reproduce::run(a, &mut ctx),
    };
    let _ = ctx.stdout.flush();
    match result {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(stderr, "{e}");
            e.exit_code()
        }
    }
}

/// Entry point for the binary: real argv, stdout/stderr and environment.
pub fn main() -> i32 {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let mut err = io::stderr();
    let env = |k: &str| std::env::var(k).ok();
    run(std::env::args_os(), &mut out, &mut err, &env)
}
