//! `eval`: every concurrence and angle statistic for one state.

use crate::args::{EvalArgs, OutputFormat};
use crate::error::CliError;
use crate::render::{csv_row, fmt_num, round_sig12};
use crate::statespec::StateSpec;
use crate::CommandOutput;
use qubit_geometry::entanglement::{analyze, entanglement_of_formation, ConcurrenceReport};
use serde::Serialize;

#[derive(Debug, Serialize)]
struct SectorStats {
    cos_mean: f64,
    sin_mean: f64,
    cos_variance: f64,
    sin_variance: f64,
}

#[derive(Debug, Serialize)]
struct ProjectorStats {
    uu: f64,
    ud: f64,
    du: f64,
    dd: f64,
}

#[derive(Debug, Serialize)]
struct BigPhiOut {
    mean: f64,
    variance: f64,
}

/// The eval record; all numbers carry 12 significant digits.
#[derive(Debug, Serialize)]
struct EvalRecord {
    c_s0: f64,
    c_s1: f64,
    c_mixed: Option<f64>,
    c_mixed_reason: Option<String>,
    c_wootters: f64,
    eof: f64,
    s0: SectorStats,
    s1: SectorStats,
    projectors: ProjectorStats,
    big_phi: BigPhiOut,
    mixed_wootters_residual: Option<f64>,
}

const SYMMETRY_REASON: &str =
    "state is outside the Sz2-symmetry class (tolerance 1e-10); the mixed-state formula does not apply";

fn build_record(report: &ConcurrenceReport) -> Result<EvalRecord, CliError> {
    let eof = entanglement_of_formation(report.c_wootters)?;
    Ok(EvalRecord {
        c_s0: round_sig12(report.c_s0),
        c_s1: round_sig12(report.c_s1),
        c_mixed: report.c_mixed.map(round_sig12),
        c_mixed_reason: report
            .c_mixed
            .is_none()
            .then(|| SYMMETRY_REASON.to_string()),
        c_wootters: round_sig12(report.c_wootters),
        eof: round_sig12(eof),
        s0: SectorStats {
            cos_mean: round_sig12(report.s0.cos_mean),
            sin_mean: round_sig12(report.s0.sin_mean),
            cos_variance: round_sig12(report.s0.cos_variance),
            sin_variance: round_sig12(report.s0.sin_variance),
        },
        s1: SectorStats {
            cos_mean: round_sig12(report.s1.cos_mean),
            sin_mean: round_sig12(report.s1.sin_mean),
            cos_variance: round_sig12(report.s1.cos_variance),
            sin_variance: round_sig12(report.s1.sin_variance),
        },
        projectors: ProjectorStats {
            uu: round_sig12(report.proj_uu),
            ud: round_sig12(report.proj_ud),
            du: round_sig12(report.proj_du),
            dd: round_sig12(report.proj_dd),
        },
        big_phi: BigPhiOut {
            mean: round_sig12(report.big_phi.mean),
            variance: round_sig12(report.big_phi.variance),
        },
        mixed_wootters_residual: report.mixed_oracle_residual.map(round_sig12),
    })
}

const CSV_HEADER: [&str; 21] = [
    "c_s0",
    "c_s1",
    "c_mixed",
    "c_mixed_reason",
    "c_wootters",
    "eof",
    "s0_cos_mean",
    "s0_sin_mean",
    "s0_cos_variance",
    "s0_sin_variance",
    "s1_cos_mean",
    "s1_sin_mean",
    "s1_cos_variance",
    "s1_sin_variance",
    "proj_uu",
    "proj_ud",
    "proj_du",
    "proj_dd",
    "big_phi_mean",
    "big_phi_variance",
    "mixed_wootters_residual",
];

fn render_csv(record: &EvalRecord) -> String {
    let optional = |x: Option<f64>| x.map(fmt_num).unwrap_or_default();
    let header = csv_row(&CSV_HEADER.iter().map(|s| s.to_string()).collect::<Vec<_>>());
    let row = csv_row(&[
        fmt_num(record.c_s0),
        fmt_num(record.c_s1),
        optional(record.c_mixed),
        record.c_mixed_reason.clone().unwrap_or_default(),
        fmt_num(record.c_wootters),
        fmt_num(record.eof),
        fmt_num(record.s0.cos_mean),
        fmt_num(record.s0.sin_mean),
        fmt_num(record.s0.cos_variance),
        fmt_num(record.s0.sin_variance),
        fmt_num(record.s1.cos_mean),
        fmt_num(record.s1.sin_mean),
        fmt_num(record.s1.cos_variance),
        fmt_num(record.s1.sin_variance),
        fmt_num(record.projectors.uu),
        fmt_num(record.projectors.ud),
        fmt_num(record.projectors.du),
        fmt_num(record.projectors.dd),
        fmt_num(record.big_phi.mean),
        fmt_num(record.big_phi.variance),
        optional(record.mixed_wootters_residual),
    ]);
    format!("{header}{row}")
}

pub fn run(args: &EvalArgs) -> Result<CommandOutput, CliError> {
    let raw = match (&args.state, &args.inline) {
        (Some(path), None) => std::fs::read_to_string(path)
            .map_err(|e| CliError::Io(format!("cannot read {}: {e}", path.display())))?,
        (None, Some(inline)) => inline.clone(),
        (None, None) => {
            return Err(CliError::Input(
                "eval needs a state: pass --state FILE or --inline JSON".into(),
            ))
        }
        (Some(_), Some(_)) => unreachable!("clap rejects the combination"),
    };
    let spec = StateSpec::parse(&raw)?;
    let rho = spec.to_density(args.degrees)?;
    let report = analyze(&rho).map_err(|e| CliError::Input(e.to_string()))?;
    let record = build_record(&report)?;

    let text = match args.format.unwrap_or(OutputFormat::Json) {
        OutputFormat::Json => {
            let mut body = serde_json::to_string_pretty(&record)
                .expect("record serializes");
            body.push('\n');
            body
        }
        OutputFormat::Csv => render_csv(&record),
    };
    Ok(CommandOutput { text, exit_code: 0 })
}
