//! Command-line front end for the `biham` library.
//!
//! Subcommands cover the full analysis surface: `simulate` integrates a
//! trajectory with the implicit mid-point rule, `classify` answers level and
//! equilibrium queries as JSON, `scan-image` labels a grid of (h, c) levels
//! as CSV, and `reproduce` reruns the reference experiments with pass/fail
//! reporting. Output is machine-readable data only; plotting is left to
//! external tools.
//!
//! Exit codes: 0 success, 1 reproduction outside tolerance (or an I/O
//! failure), 2 usage error, 3 numerical failure.

use std::fmt;
use std::path::PathBuf;
use std::process::ExitCode;

use biham::ecmap::Family;
use clap::error::ErrorKind;
use clap::{Args, CommandFactory, Parser, Subcommand, ValueEnum};

mod commands;
mod config;
mod output;

use config::{FileConfig, FormatChoice, SolverChoice};

#[derive(Debug, Parser)]
#[command(name = "biham", version, about = "Analysis toolkit for a three-dimensional bi-Hamiltonian system")]
struct Cli {
    /// Optional `key = value` file supplying defaults for flags.
    #[arg(long, global = true, value_name = "PATH")]
    config: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Integrate a trajectory with the implicit mid-point rule.
    Simulate(SimulateArgs),
    /// Classify an (h, c) level, or report an equilibrium stability verdict.
    Classify(ClassifyArgs),
    /// Label a grid of (h, c) levels as CSV.
    ScanImage(ScanImageArgs),
    /// Rerun a reference experiment and report pass/fail.
    Reproduce(ReproduceArgs),
}

#[derive(Debug, Args)]
struct SimulateArgs {
    /// Initial x coordinate.
    #[arg(long, allow_negative_numbers = true)]
    x0: f64,
    /// Initial y coordinate.
    #[arg(long, allow_negative_numbers = true)]
    y0: f64,
    /// Initial z coordinate.
    #[arg(long, allow_negative_numbers = true)]
    z0: f64,
    /// Time step; negative integrates backward.
    #[arg(long, allow_negative_numbers = true)]
    dt: Option<f64>,
    /// Number of mid-point steps.
    #[arg(long)]
    steps: Option<u64>,
    /// Inner-solver residual tolerance.
    #[arg(long)]
    tol: Option<f64>,
    /// Inner-iteration cap per step.
    #[arg(long)]
    max_inner_iters: Option<u32>,
    /// Inner solver: newton or picard.
    #[arg(long, value_enum)]
    solver: Option<SolverChoice>,
    /// Output format: csv or json.
    #[arg(long, value_enum)]
    format: Option<FormatChoice>,
    /// Output file; default is stdout, or `trajectory.{csv,json}` under the
    /// configured output directory.
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct ClassifyArgs {
    /// Energy level of an (h, c) query.
    #[arg(long, allow_negative_numbers = true)]
    h: Option<f64>,
    /// Casimir level of an (h, c) query.
    #[arg(long, allow_negative_numbers = true)]
    c: Option<f64>,
    /// Equilibrium family of a stability query: E1..E5.
    #[arg(long)]
    family: Option<Family>,
    /// Family parameter of a stability query.
    #[arg(long = "M", allow_negative_numbers = true)]
    m: Option<f64>,
}

#[derive(Debug, Args)]
struct ScanImageArgs {
    #[arg(long, allow_negative_numbers = true)]
    h_min: f64,
    #[arg(long, allow_negative_numbers = true)]
    h_max: f64,
    #[arg(long, allow_negative_numbers = true)]
    c_min: f64,
    #[arg(long, allow_negative_numbers = true)]
    c_max: f64,
    /// Number of grid values per axis.
    #[arg(long)]
    resolution: usize,
    /// Output file; default is stdout, or `scan.csv` under the configured
    /// output directory.
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Experiment {
    Heteroclinic,
    Period,
    Stability,
}

#[derive(Debug, Args)]
struct ReproduceArgs {
    /// Which reference experiment to rerun.
    #[arg(long, value_enum)]
    experiment: Experiment,
}

/// Runtime failures and their exit codes; usage errors exit through clap
/// with code 2 instead.
#[derive(Debug)]
enum CliError {
    Io(std::io::Error),
    Numerical(String),
    ToleranceExceeded,
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Io(_) | CliError::ToleranceExceeded => 1,
            CliError::Numerical(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Io(err) => write!(f, "{err}"),
            CliError::Numerical(msg) => write!(f, "{msg}"),
            CliError::ToleranceExceeded => write!(f, "reproduction outside tolerance"),
        }
    }
}

/// Prints a usage error through clap (consistent formatting) and exits 2.
fn usage_error(message: &str) -> ! {
    Cli::command().error(ErrorKind::ValueValidation, message).exit()
}

fn run(cli: Cli) -> Result<(), CliError> {
    let file_cfg = match &cli.config {
        Some(path) => {
            let text = match std::fs::read_to_string(path) {
                Ok(text) => text,
                Err(err) => usage_error(&format!("config {}: {err}", path.display())),
            };
            match config::parse_config(&text) {
                Ok(cfg) => cfg,
                Err(msg) => usage_error(&format!("config {}: {msg}", path.display())),
            }
        }
        None => FileConfig::default(),
    };

    match cli.command {
        Command::Simulate(args) => commands::simulate(args, &file_cfg),
        Command::Classify(args) => commands::classify(args),
        Command::ScanImage(args) => commands::scan_image(args, &file_cfg),
        Command::Reproduce(args) => commands::reproduce(args),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code())
        }
    }
}
