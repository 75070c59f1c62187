//! Optional `key = value` configuration files.
//!
//! A config file supplies defaults for the simulate and scan flags; a flag
//! given on the command line always wins over the file, and the file wins
//! over the built-in defaults. Blank lines and lines starting with `#` are
//! ignored. Unknown keys are rejected so typos fail loudly.

use std::path::PathBuf;

use biham::integrator::InnerSolver;
use clap::ValueEnum;

/// Inner-solver choice exposed on the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub(crate) enum SolverChoice {
    Newton,
    Picard,
}

impl From<SolverChoice> for InnerSolver {
    fn from(choice: SolverChoice) -> InnerSolver {
        match choice {
            SolverChoice::Newton => InnerSolver::Newton,
            SolverChoice::Picard => InnerSolver::Picard,
        }
    }
}

/// Trajectory output format.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub(crate) enum FormatChoice {
    Csv,
    Json,
}

impl FormatChoice {
    /// Default file name used when only an output directory is configured.
    pub(crate) fn trajectory_file_name(self) -> &'static str {
        match self {
            FormatChoice::Csv => "trajectory.csv",
            FormatChoice::Json => "trajectory.json",
        }
    }
}

/// Defaults read from a `key = value` file. Every field is optional; `None`
/// means "fall back to the flag or the built-in default".
#[derive(Debug, Clone, Default, PartialEq)]
pub(crate) struct FileConfig {
    pub dt: Option<f64>,
    pub steps: Option<u64>,
    pub newton_tol: Option<f64>,
    pub max_inner_iters: Option<u32>,
    pub solver: Option<SolverChoice>,
    pub format: Option<FormatChoice>,
    pub out_dir: Option<PathBuf>,
}

/// Parses a config file. Later lines override earlier ones; the error names
/// the offending line.
pub(crate) fn parse_config(text: &str) -> Result<FileConfig, String> {
    let mut cfg = FileConfig::default();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            return Err(format!("line {}: expected `key = value`, got `{line}`", idx + 1));
        };
        let key = key.trim();
        let value = value.trim();
        match key {
            "dt" => cfg.dt = Some(parse_value(idx, key, value)?),
            "steps" => cfg.steps = Some(parse_value(idx, key, value)?),
            "newton_tol" => cfg.newton_tol = Some(parse_value(idx, key, value)?),
            "max_inner_iters" => cfg.max_inner_iters = Some(parse_value(idx, key, value)?),
            "solver" => {
                cfg.solver = Some(
                    SolverChoice::from_str(value, true)
                        .map_err(|_| bad_value(idx, key, value, "newton or picard"))?,
                );
            }
            "format" => {
                cfg.format = Some(
                    FormatChoice::from_str(value, true)
                        .map_err(|_| bad_value(idx, key, value, "csv or json"))?,
                );
            }
            "out_dir" => cfg.out_dir = Some(PathBuf::from(value)),
            other => return Err(format!("line {}: unknown key `{other}`", idx + 1)),
        }
    }
    Ok(cfg)
}

fn parse_value<T: std::str::FromStr>(idx: usize, key: &str, value: &str) -> Result<T, String> {
    value
        .parse()
        .map_err(|_| bad_value(idx, key, value, std::any::type_name::<T>()))
}

fn bad_value(idx: usize, key: &str, value: &str, expected: &str) -> String {
    format!("line {}: invalid value `{value}` for `{key}` (expected {expected})", idx + 1)
}
