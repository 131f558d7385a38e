//! `compare-random`: draws seeded random Sz²-symmetric ensembles and
//! reports the agreement between the mixed-state concurrence formula and
//! the Wootters oracle.
//!
//! Sample i is generated from the derived seed `sample_seed(master, i)`, so
//! the work can be sharded across any number of threads without changing a
//! single value; aggregation runs in index order, making the output
//! byte-identical for a fixed configuration.

use crate::args::{CompareArgs, OutputFormat};
use crate::error::CliError;
use crate::render::{csv_row, fmt_num, round_sig12};
use crate::statespec::StateSpec;
use crate::CommandOutput;
use qubit_geometry::entanglement::{mixed_concurrence, wootters_concurrence};
use qubit_geometry::states::sampling::ensemble_for_sample;
use qubit_geometry::states::ensemble_density;
use rayon::prelude::*;
use serde::Serialize;

const MAX_ENSEMBLE_TERMS: usize = 6;

#[derive(Debug, Serialize)]
pub struct WorstCase {
    pub index: u64,
    pub c_mixed: f64,
    pub c_wootters: f64,
    pub abs_diff: f64,
    pub ensemble: StateSpec,
}

#[derive(Debug, Serialize)]
pub struct CompareSummary {
    pub samples: usize,
    pub seed: u64,
    pub tolerance: f64,
    pub max_abs_diff: f64,
    pub mean_abs_diff: f64,
    pub within_tolerance: bool,
    pub worst: WorstCase,
}

/// Runs the comparison. Deterministic for a fixed (samples, seed) pair
/// under any parallel schedule.
pub fn compare(samples: usize, seed: u64, tolerance: f64) -> Result<CompareSummary, CliError> {
    if samples < 1 {
        return Err(CliError::Input("samples must be at least 1".into()));
    }
    if !(tolerance.is_finite() && tolerance > 0.0) {
        return Err(CliError::Input("tolerance must be positive".into()));
    }

    // Ordered by index regardless of scheduling.
    let diffs: Vec<f64> = (0..samples as u64)
        .into_par_iter()
        .map(|index| {
            let rho = ensemble_density(&ensemble_for_sample(seed, index, MAX_ENSEMBLE_TERMS));
            let mixed = mixed_concurrence(&rho)
                .expect("ensemble densities are Sz2-symmetric by construction");
            let oracle =
                wootters_concurrence(&rho).expect("ensemble densities are valid states");
            (mixed - oracle).abs()
        })
        .collect();

    // Sequential reduction in index order; first strict maximum wins.
    let mut worst_index = 0usize;
    let mut total = 0.0f64;
    for (k, &d) in diffs.iter().enumerate() {
        total += d;
        if d > diffs[worst_index] {
            worst_index = k;
        }
    }
    let max_abs_diff = diffs[worst_index];

    let worst_ensemble = ensemble_for_sample(seed, worst_index as u64, MAX_ENSEMBLE_TERMS);
    let worst_rho = ensemble_density(&worst_ensemble);
    let worst = WorstCase {
        index: worst_index as u64,
        c_mixed: round_sig12(mixed_concurrence(&worst_rho).expect("symmetric by construction")),
        c_wootters: round_sig12(wootters_concurrence(&worst_rho).expect("valid state")),
        abs_diff: round_sig12(max_abs_diff),
        ensemble: StateSpec::from_ensemble(&worst_ensemble),
    };

    Ok(CompareSummary {
        samples,
        seed,
        tolerance: round_sig12(tolerance),
        max_abs_diff: round_sig12(max_abs_diff),
        mean_abs_diff: round_sig12(total / samples as f64),
        within_tolerance: max_abs_diff <= tolerance,
        worst,
    })
}

pub fn render(summary: &CompareSummary, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => {
            let mut body =
                serde_json::to_string_pretty(summary).expect("summary serializes");
            body.push('\n');
            body
        }
        OutputFormat::Csv => {
            let mut out = csv_row(&["key".into(), "value".into()]);
            let mut push = |key: &str, value: String| {
                out.push_str(&csv_row(&[key.to_string(), value]));
            };
            push("samples", summary.samples.to_string());
            push("seed", summary.seed.to_string());
            push("tolerance", fmt_num(summary.tolerance));
            push("max_abs_diff", fmt_num(summary.max_abs_diff));
            push("mean_abs_diff", fmt_num(summary.mean_abs_diff));
            push("within_tolerance", summary.within_tolerance.to_string());
            push("worst_index", summary.worst.index.to_string());
            push("worst_c_mixed", fmt_num(summary.worst.c_mixed));
            push("worst_c_wootters", fmt_num(summary.worst.c_wootters));
            push("worst_abs_diff", fmt_num(summary.worst.abs_diff));
            push(
                "worst_ensemble",
                serde_json::to_string(&summary.worst.ensemble).expect("spec serializes"),
            );
            out
        }
    }
}

pub fn run(args: &CompareArgs) -> Result<CommandOutput, CliError> {
    let summary = compare(args.samples, args.seed, args.tolerance)?;
    let text = render(&summary, args.format.unwrap_or(OutputFormat::Json));
    let exit_code = if summary.within_tolerance { 0 } else { 1 };
    Ok(CommandOutput { text, exit_code })
}
