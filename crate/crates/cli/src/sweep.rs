//! `sweep`: tabulates concurrence and angle statistics over the (ϑ, φ)
//! grid of S0 pure states, theta-major, both endpoints included.

use crate::args::{GridSpec, OutputFormat, SweepArgs};
use crate::error::CliError;
use crate::render::{csv_row, fmt_num, round_sig12};
use crate::CommandOutput;
use qubit_geometry::entanglement::{
    big_phi_stats, trig_expectations, wootters_concurrence,
};
use qubit_geometry::spinops::Sector;
use qubit_geometry::states::{density_from_pure, pure_state, PureStateParams};
use serde::Serialize;
use std::f64::consts::{PI, TAU};

#[derive(Debug, Serialize)]
pub struct SweepRow {
    pub theta: f64,
    pub phi: f64,
    pub c_geometric: f64,
    pub c_wootters: f64,
    pub cos_mean: f64,
    pub sin_mean: f64,
    pub var_sum: f64,
    pub big_phi_mean: f64,
}

#[derive(Debug, Serialize)]
struct SweepReport {
    theta_steps: usize,
    phi_steps: usize,
    rows: Vec<SweepRow>,
}

/// Grid values: ϑ_i = π·i/T for i in 0..=T, φ_j = 2π·j/P for j in 0..=P.
pub fn grid_rows(grid: GridSpec) -> Result<Vec<SweepRow>, CliError> {
    let mut rows = Vec::with_capacity((grid.theta_steps + 1) * (grid.phi_steps + 1));
    for i in 0..=grid.theta_steps {
        let theta = PI * (i as f64) / (grid.theta_steps as f64);
        for j in 0..=grid.phi_steps {
            let phi = TAU * (j as f64) / (grid.phi_steps as f64);
            let params = PureStateParams::new(Sector::S0, theta.min(PI), phi)?;
            let rho = density_from_pure(&pure_state(&params));
            let e = trig_expectations(&rho, Sector::S0)?;
            let big_phi = big_phi_stats(&rho)?;
            rows.push(SweepRow {
                theta: round_sig12(theta),
                phi: round_sig12(phi),
                c_geometric: round_sig12(
                    (e.cos_mean * e.cos_mean + e.sin_mean * e.sin_mean).sqrt(),
                ),
                c_wootters: round_sig12(wootters_concurrence(&rho)?),
                cos_mean: round_sig12(e.cos_mean),
                sin_mean: round_sig12(e.sin_mean),
                var_sum: round_sig12(e.cos_variance + e.sin_variance),
                big_phi_mean: round_sig12(big_phi.mean),
            });
        }
    }
    Ok(rows)
}

const CSV_HEADER: [&str; 8] = [
    "theta",
    "phi",
    "c_geometric",
    "c_wootters",
    "cos_mean",
    "sin_mean",
    "var_sum",
    "big_phi_mean",
];

fn render_csv(rows: &[SweepRow]) -> String {
    let mut out = csv_row(&CSV_HEADER.iter().map(|s| s.to_string()).collect::<Vec<_>>());
    for row in rows {
        out.push_str(&csv_row(&[
            fmt_num(row.theta),
            fmt_num(row.phi),
            fmt_num(row.c_geometric),
            fmt_num(row.c_wootters),
            fmt_num(row.cos_mean),
            fmt_num(row.sin_mean),
            fmt_num(row.var_sum),
            fmt_num(row.big_phi_mean),
        ]));
    }
    out
}

pub fn run(args: &SweepArgs) -> Result<CommandOutput, CliError> {
    let rows = grid_rows(args.grid)?;
    let text = match args.format.unwrap_or(OutputFormat::Csv) {
        OutputFormat::Csv => render_csv(&rows),
        OutputFormat::Json => {
            let report = SweepReport {
                theta_steps: args.grid.theta_steps,
                phi_steps: args.grid.phi_steps,
                rows,
            };
            let mut body = serde_json::to_string_pretty(&report).expect("report serializes");
            body.push('\n');
            body
        }
    };
    Ok(CommandOutput { text, exit_code: 0 })
}
