//! Argument definitions for the `qubit-geometry` binary.

use clap::{Args, Parser, Subcommand, ValueEnum};
use std::path::PathBuf;

#[derive(Debug, Parser)]
#[command(
    name = "qubit-geometry",
    version,
    about = "Angle-operator analysis of two-qubit entanglement",
    long_about = "Evaluates concurrence and trigonometric angle-operator statistics for \
                  two-qubit states, sweeps the pure-state parameter grid, verifies the \
                  operator-algebra properties, and compares the mixed-state concurrence \
                  formula against the Wootters oracle on random ensembles."
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate every concurrence and angle statistic for one state
    Eval(EvalArgs),
    /// Tabulate the (theta, phi) grid of S0 pure states
    Sweep(SweepArgs),
    /// Run the named property suite; exit 1 if anything fails
    Verify(VerifyArgs),
    /// Compare the mixed-state formula against the Wootters oracle on
    /// seeded random ensembles
    CompareRandom(CompareArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Csv,
    Json,
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    /// Read the state spec (JSON) from a file
    #[arg(long, value_name = "FILE", conflicts_with = "inline")]
    pub state: Option<PathBuf>,

    /// State spec as an inline JSON string
    #[arg(long, value_name = "JSON")]
    pub inline: Option<String>,

    /// Interpret input angles as degrees instead of radians
    #[arg(long)]
    pub degrees: bool,

    /// Output format [default: json]
    #[arg(long, value_enum)]
    pub format: Option<OutputFormat>,

    /// Write output to a file instead of stdout
    #[arg(long, value_name = "FILE")]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    /// Grid as THETA_STEPSxPHI_STEPS interval counts; the grid includes
    /// both endpoints, so T steps produce T+1 points per axis
    #[arg(long, value_name = "TxP", default_value = "50x50", value_parser = parse_grid)]
    pub grid: GridSpec,

    /// Output format [default: csv]
    #[arg(long, value_enum)]
    pub format: Option<OutputFormat>,

    /// Write output to a file instead of stdout
    #[arg(long, value_name = "FILE")]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Sample count for the randomized oracle-agreement property
    #[arg(long, default_value_t = 10_000)]
    pub samples: usize,

    /// Master seed for the randomized properties
    #[arg(long, default_value_t = 42)]
    pub seed: u64,

    /// Agreement tolerance for the randomized oracle property
    #[arg(long, default_value_t = 1e-9)]
    pub tolerance: f64,

    /// Output format [default: csv]
    #[arg(long, value_enum)]
    pub format: Option<OutputFormat>,

    /// Write output to a file instead of stdout
    #[arg(long, value_name = "FILE")]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CompareArgs {
    /// Number of random ensembles to draw
    #[arg(long, default_value_t = 10_000)]
    pub samples: usize,

    /// Master seed; sample i uses the derived seed hash(seed, i), so any
    /// parallel sharding produces identical results
    #[arg(long, default_value_t = 42)]
    pub seed: u64,

    /// Maximum allowed |c_mixed - c_wootters|; exceeding it exits 1
    #[arg(long, default_value_t = 1e-9)]
    pub tolerance: f64,

    /// Output format [default: json]
    #[arg(long, value_enum)]
    pub format: Option<OutputFormat>,

    /// Write output to a file instead of stdout
    #[arg(long, value_name = "FILE")]
    pub output: Option<PathBuf>,
}

/// Interval counts of the sweep grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GridSpec {
    pub theta_steps: usize,
    pub phi_steps: usize,
}

fn parse_grid(raw: &str) -> Result<GridSpec, String> {
    let (theta_raw, phi_raw) = raw
        .split_once(['x', 'X'])
        .ok_or_else(|| format!("expected THETAxPHI (e.g. 50x50), got {raw:?}"))?;
    let theta_steps: usize = theta_raw
        .trim()
        .parse()
        .map_err(|_| format!("invalid theta step count {theta_raw:?}"))?;
    let phi_steps: usize = phi_raw
        .trim()
        .parse()
        .map_err(|_| format!("invalid phi step count {phi_raw:?}"))?;
    if theta_steps < 2 || phi_steps < 2 {
        return Err("grid needs at least 2 steps per axis".into());
    }
    Ok(GridSpec {
        theta_steps,
        phi_steps,
    })
}
