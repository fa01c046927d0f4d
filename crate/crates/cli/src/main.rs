use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use evtper::{Execution, ModulationScheme};
use evtper_cli::{
    cmd_compare, cmd_constants, cmd_curve, parse_methods, write_compare_csv, write_constants_csv,
    write_curve_csv, CliError, RunConfig, SnrRange,
};

/// Packet error rate of uncoded modulations in AWGN and Nakagami-m fading.
///
/// Set EVTPER_THREADS to cap the number of worker threads.
#[derive(Parser)]
#[command(name = "evtper", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Average PER against average SNR for each requested method.
    Curve(SweepArgs),
    /// Error of each approximation against the quadrature reference.
    Compare(SweepArgs),
    /// Norming constants and ω₀ estimates for one scheme and packet length.
    Constants(ConstantsArgs),
}

#[derive(Args)]
struct SweepArgs {
    /// fsk, dpsk, bpsk, qam16, qam64 or custom:<q|exp>,<c>,<k>
    #[arg(long)]
    scheme: String,
    /// Packet length in bits.
    #[arg(long)]
    n: u64,
    /// Nakagami fading parameter (1 = Rayleigh).
    #[arg(long, default_value_t = 1.0)]
    m: f64,
    /// Average SNR sweep in dB, start:stop:step.
    #[arg(long, default_value = "0:30:1")]
    snr: String,
    /// Comma list of evt, quad, mc, series, threshold-numeric,
    /// threshold-liu, threshold-wu, chernoff.
    #[arg(long, default_value = "evt,quad")]
    methods: String,
    /// Absolute tolerance for numerical integration.
    #[arg(long, default_value_t = 1e-9)]
    tol: f64,
    /// Monte Carlo draws per SNR point.
    #[arg(long, default_value_t = 100_000)]
    draws: u64,
    /// Monte Carlo seed.
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Output file ('-' for stdout).
    #[arg(long, default_value = "-")]
    out: PathBuf,
}

#[derive(Args)]
struct ConstantsArgs {
    #[arg(long)]
    scheme: String,
    #[arg(long)]
    n: u64,
    #[arg(long, default_value_t = 1e-9)]
    tol: f64,
    #[arg(long, default_value = "-")]
    out: PathBuf,
}

fn parse_scheme(s: &str) -> Result<ModulationScheme, CliError> {
    s.parse()
        .map_err(|e: evtper::Error| CliError::Usage(e.to_string()))
}

impl SweepArgs {
    fn config(&self) -> Result<RunConfig, CliError> {
        Ok(RunConfig {
            scheme: parse_scheme(&self.scheme)?,
            n: self.n,
            m: self.m,
            snr_db: self.snr.parse::<SnrRange>()?,
            methods: parse_methods(&self.methods)?,
            tol: self.tol,
            draws: self.draws,
            seed: self.seed,
        })
    }
}

fn open_out(path: &PathBuf) -> Result<Box<dyn Write>, CliError> {
    if path.as_os_str() == "-" {
        Ok(Box::new(BufWriter::new(io::stdout().lock())))
    } else {
        Ok(Box::new(BufWriter::new(File::create(path)?)))
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    let exec = Execution::default();
    match cli.command {
        Command::Curve(args) => {
            let curve = cmd_curve(&args.config()?, exec)?;
            write_curve_csv(&curve, open_out(&args.out)?)
        }
        Command::Compare(args) => {
            let cmp = cmd_compare(&args.config()?, exec)?;
            write_compare_csv(&cmp, open_out(&args.out)?)
        }
        Command::Constants(args) => {
            let row = cmd_constants(&parse_scheme(&args.scheme)?, args.n, args.tol)?;
            write_constants_csv(&row, open_out(&args.out)?)
        }
    }
}

fn thread_cap() -> Result<Option<usize>, CliError> {
    match std::env::var("EVTPER_THREADS") {
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(n) if n >= 1 => Ok(Some(n)),
            _ => Err(CliError::Usage(format!(
                "EVTPER_THREADS must be a positive integer, got '{v}'"
            ))),
        },
        Err(_) => Ok(None),
    }
}

#[cfg(feature = "parallel")]
fn run_capped(cli: Cli, threads: Option<usize>) -> Result<(), CliError> {
    match threads {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| CliError::Usage(format!("cannot build thread pool: {e}")))?
            .install(|| run(cli)),
        None => run(cli),
    }
}

#[cfg(not(feature = "parallel"))]
fn run_capped(cli: Cli, _threads: Option<usize>) -> Result<(), CliError> {
    run(cli)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = thread_cap().and_then(|t| run_capped(cli, t));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("evtper: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
