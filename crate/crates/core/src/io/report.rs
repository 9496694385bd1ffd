//! Certificate report emission: a fixed-column CSV for spreadsheets and
//! diffing, and a JSON mirror that keeps the optional fields.

use crate::analysis::GraphAnalysis;
use crate::bounds::BoundCertificate;
use serde::{Deserialize, Serialize};

/// Column order of the certificate CSV; kept bit-exact so golden files and
/// diffs stay stable.
pub const CSV_HEADER: &str = "graph_id,n,m,diameter,bound_id,kind,applicable,bound_value,\
                              observed_value,slack,equality_predicted,equality_observed,boundary";

/// One certificate annotated with the graph it was computed on.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CertificateRow {
    pub graph_id: String,
    pub n: usize,
    pub m: usize,
    pub diameter: u32,
    #[serde(flatten)]
    pub certificate: BoundCertificate,
}

impl CertificateRow {
    pub fn new(
        graph_id: impl Into<String>,
        a: &GraphAnalysis,
        certificate: BoundCertificate,
    ) -> Self {
        CertificateRow {
            graph_id: graph_id.into(),
            n: a.vertex_count(),
            m: a.edge_count(),
            diameter: a.diameter(),
            certificate,
        }
    }
}

/// Prints a real with 12 significant digits. Values within 1e-11 of zero
/// print as `0`, keeping rounding noise out of golden files; trailing
/// zeros are trimmed so exact integers print bare.
pub fn format_real(x: f64) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    if x.abs() < 1e-11 {
        return "0".to_string();
    }
    let exponent = x.abs().log10().floor() as i32;
    let (x, decimals) = if exponent > 11 {
        let scale = 10f64.powi(exponent - 11);
        ((x / scale).round() * scale, 0)
    } else {
        (x, (11 - exponent).clamp(0, 30) as usize)
    };
    let mut s = format!("{x:.decimals$}");
    if s.contains('.') {
        while s.ends_with('0') {
            s.pop();
        }
        if s.ends_with('.') {
            s.pop();
        }
    }
    if s == "-0" {
        "0".to_string()
    } else {
        s
    }
}

fn opt_real(x: Option<f64>) -> String {
    x.map(format_real).unwrap_or_default()
}

fn opt_bool(x: Option<bool>) -> String {
    x.map(|b| b.to_string()).unwrap_or_default()
}

/// Quotes a CSV field only when it needs it.
fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn csv_line(row: &CertificateRow) -> String {
    let c = &row.certificate;
    [
        csv_field(&row.graph_id),
        row.n.to_string(),
        row.m.to_string(),
        row.diameter.to_string(),
        c.bound_id.to_string(),
        c.kind.to_string(),
        c.applicable.to_string(),
        opt_real(c.bound_value),
        opt_real(c.observed_value),
        opt_real(c.slack),
        opt_bool(c.equality_predicted),
        opt_bool(c.equality_observed),
        c.boundary.to_string(),
    ]
    .join(",")
}

/// Renders certificate rows as CSV with the fixed header.
pub fn write_certificates_csv(rows: &[CertificateRow]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for row in rows {
        out.push_str(&csv_line(row));
        out.push('\n');
    }
    out
}

/// Renders certificate rows as pretty-printed JSON. Unlike the CSV, this
/// keeps the inapplicability reason, notes, and the advisory marker.
pub fn write_certificates_json(rows: &[CertificateRow]) -> String {
    let mut out = serde_json::to_string_pretty(rows).expect("rows serialize");
    out.push('\n');
    out
}

/// Reads rows back from [`write_certificates_json`] output.
pub fn read_certificates_json(text: &str) -> Result<Vec<CertificateRow>, serde_json::Error> {
    serde_json::from_str(text)
}
