//! Report rows and the JSON/CSV emitters.
//!
//! Floating-point values are rounded to 12 significant digits before they
//! reach any output, and closed-form constants travel alongside as symbolic
//! strings, so reports are both readable and byte-reproducible.

use serde::Serialize;

use crate::catalog::CatalogEntry;
use crate::exact::ExactConstant;

/// One line of a bounds report.
#[derive(Debug, Clone, Serialize)]
pub struct ReportRow {
    pub manifold: String,
    pub lower: f64,
    pub upper: f64,
    pub exact: bool,
    pub lower_symbolic: String,
    pub upper_symbolic: String,
    pub provenance: String,
}

impl ReportRow {
    pub fn from_bounds(
        manifold: impl Into<String>,
        lo: &ExactConstant,
        hi: &ExactConstant,
        provenance: impl Into<String>,
    ) -> Self {
        let exact = lo == hi;
        Self {
            manifold: manifold.into(),
            lower: round_sig12(lo.to_f64()),
            upper: round_sig12(hi.to_f64()),
            exact,
            lower_symbolic: lo.symbolic(),
            upper_symbolic: hi.symbolic(),
            provenance: provenance.into(),
        }
    }

    pub fn from_catalog(entry: &CatalogEntry) -> Self {
        Self::from_bounds(
            entry.manifold,
            entry.value.lo(),
            entry.value.hi(),
            entry.provenance,
        )
    }
}

/// Formats with exactly 12 significant digits (plain decimal when the
/// exponent allows, scientific otherwise).
pub fn format_sig12(x: f64) -> String {
    format_significant(x, 12)
}

fn format_significant(x: f64, digits: usize) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let sci = format!("{:.*e}", digits - 1, x);
    let (_, exp) = sci.split_once('e').expect("e-format always has exponent");
    let exp: i32 = exp.parse().expect("exponent is an integer");
    let decimals = digits as i32 - 1 - exp;
    if (0..=24).contains(&decimals) {
        format!("{:.*}", decimals as usize, x)
    } else if exp > 0 && decimals < 0 && exp < 20 {
        // Large integers up to ~1e19: no fractional part needed.
        format!("{x:.0}")
    } else {
        sci
    }
}

/// Rounds to 12 significant digits (the report precision) by formatting and
/// parsing back.
pub fn round_sig12(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    format!("{x:.11e}").parse().expect("e-format round-trips")
}

pub fn emit_json(rows: &[ReportRow]) -> String {
    let mut out = serde_json::to_string_pretty(rows).expect("rows serialize");
    out.push('\n');
    out
}

fn csv_escape(field: &str) -> String {
    if field.contains([',', '"', '\n']) {
        format!("\"{}\"", field.replace('"', "\"\""))
    } else {
        field.to_string()
    }
}

pub fn emit_csv(rows: &[ReportRow]) -> String {
    let mut out =
        String::from("manifold,lower,upper,exact,lower_symbolic,upper_symbolic,provenance\n");
    for row in rows {
        out.push_str(&format!(
            "{},{},{},{},{},{},{}\n",
            csv_escape(&row.manifold),
            format_sig12(row.lower),
            format_sig12(row.upper),
            row.exact,
            csv_escape(&row.lower_symbolic),
            csv_escape(&row.upper_symbolic),
            csv_escape(&row.provenance),
        ));
    }
    out
}
