//! Number formatting and CSV helpers.
//!
//! Every number in an output is first rounded to 12 significant digits and
//! then printed in its shortest round-trip form, in both CSV and JSON, so
//! the two renderings of a run carry identical numeric values and residuals
//! near 1e-13 stay visible.

/// Rounds to 12 significant digits (returns the nearest f64 to that decimal).
pub fn round_sig12(x: f64) -> f64 {
    if x == 0.0 {
        return 0.0; // normalizes -0.0
    }
    format!("{x:.11e}").parse().expect("formatted float reparses")
}

/// Shortest round-trip rendering of the 12-significant-digit value, shared
/// verbatim between CSV cells and JSON numbers.
pub fn fmt_num(x: f64) -> String {
    serde_json::to_string(&round_sig12(x)).expect("finite float serializes")
}

/// CSV field quoting: only when the field contains a comma, quote, or
/// newline; embedded quotes are doubled.
pub fn csv_field(raw: &str) -> String {
    if raw.contains(',') || raw.contains('"') || raw.contains('\n') {
        format!("\"{}\"", raw.replace('"', "\"\""))
    } else {
        raw.to_string()
    }
}

/// One CSV line (LF-terminated) from preformatted fields.
pub fn csv_row(fields: &[String]) -> String {
    let mut line = fields
        .iter()
        .map(|f| csv_field(f))
        .collect::<Vec<_>>()
        .join(",");
    line.push('\n');
    line
}
