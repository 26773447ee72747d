//! Report rendering: JSON, CSV and a plain text table.

use std::fmt::Write as _;

use serde::{Serialize, Serializer};
use serde_json::value::RawValue;

use crate::registry::{
    EntryOutcome, Expected, Mode, PointFailure, Provenance, RunSettings, Status, Summary, Symbol,
    Verdict,
};
use crate::series::rational_to_string;

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

/// A float written with 17 significant digits.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Float17(pub f64);

impl Serialize for Float17 {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        if !self.0.is_finite() {
            return s.serialize_none();
        }
        let raw = RawValue::from_string(format!("{:.16e}", self.0))
            .map_err(serde::ser::Error::custom)?;
        raw.serialize(s)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ReportDocument {
    pub tool_version: String,
    pub timestamp: String,
    pub settings: ReportSettings,
    pub entries: Vec<ReportEntry>,
    pub overall: Overall,
}

#[derive(Debug, Clone, Serialize)]
pub struct ReportSettings {
    pub mode: Mode,
    pub order: usize,
    pub tol: Float17,
    pub grid_size: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct Overall {
    pub agree: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct ReportEntry {
    pub id: String,
    pub provenance: Provenance,
    pub expected: Expected,
    pub exact_capable: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exact_verdict: Option<Status>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exact_via: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub numeric_verdict: Option<Status>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_mismatch: Option<MismatchDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual_stats: Option<ResidualDoc>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub point_failures: Vec<PointFailureDoc>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    pub agree: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct MismatchDoc {
    pub order: usize,
    pub symbol: Symbol,
    pub difference: String,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub case: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct ResidualDoc {
    pub max_abs: Float17,
    pub argmax_x: Float17,
    pub grid_size: usize,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub case: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct PointFailureDoc {
    pub x: Float17,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub case: String,
    pub message: String,
}

impl From<&PointFailure> for PointFailureDoc {
    fn from(p: &PointFailure) -> Self {
        Self {
            x: Float17(p.x),
            case: p.case.clone(),
            message: p.message.clone(),
        }
    }
}

fn entry_doc(e: &EntryOutcome) -> ReportEntry {
    let exact = e.exact.as_ref();
    let numeric = e.numeric.as_ref();
    let notes = exact
        .and_then(|v| v.note.clone())
        .into_iter()
        .chain(numeric.and_then(|v| v.note.clone()))
        .collect();
    ReportEntry {
        id: e.id.clone(),
        provenance: e.provenance,
        expected: e.expected,
        exact_capable: e.exact_capable,
        exact_verdict: exact.map(|v| v.status),
        exact_via: exact.and_then(|v| v.via.clone()),
        numeric_verdict: numeric.map(|v| v.status),
        first_mismatch: exact.and_then(|v| v.first_mismatch.as_ref()).map(|m| MismatchDoc {
            order: m.order,
            symbol: m.symbol,
            difference: rational_to_string(&m.difference),
            case: m.case.clone(),
        }),
        residual_stats: numeric.and_then(|v| v.residual_stats.as_ref()).map(|r| ResidualDoc {
            max_abs: Float17(r.max_abs),
            argmax_x: Float17(r.argmax_x),
            grid_size: r.grid_size,
            case: r.case.clone(),
        }),
        point_failures: numeric
            .map(|v| v.failures.iter().map(PointFailureDoc::from).collect())
            .unwrap_or_default(),
        notes,
        agree: e.agree,
    }
}

impl ReportDocument {
    pub fn new(summary: &Summary, settings: &RunSettings, timestamp: String) -> Self {
        Self {
            tool_version: TOOL_VERSION.to_string(),
            timestamp,
            settings: ReportSettings {
                mode: settings.mode,
                order: settings.order,
                tol: Float17(settings.tol),
                grid_size: settings.grid.len(),
            },
            entries: summary.entries.iter().map(entry_doc).collect(),
            overall: Overall {
                agree: summary.agree,
            },
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }
}

pub fn now_iso8601() -> String {
    chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Secs, true)
}

/// One row per (entry, mode) pair.
pub fn to_csv(summary: &Summary) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record([
        "id",
        "mode",
        "status",
        "mismatch_order",
        "mismatch_symbol",
        "mismatch_diff",
        "max_residual",
        "argmax_x",
    ])
    .expect("in-memory write");
    for e in &summary.entries {
        for v in e.exact.iter().chain(e.numeric.iter()) {
            let mode = match v.mode {
                Mode::Exact => "exact",
                _ => "numeric",
            };
            let m = v.first_mismatch.as_ref();
            let r = v.residual_stats.as_ref();
            w.write_record([
                e.id.clone(),
                mode.to_string(),
                v.status.to_string(),
                m.map(|m| m.order.to_string()).unwrap_or_default(),
                m.map(|m| m.symbol.to_string()).unwrap_or_default(),
                m.map(|m| rational_to_string(&m.difference)).unwrap_or_default(),
                r.map(|r| format!("{:.16e}", r.max_abs)).unwrap_or_default(),
                r.map(|r| format!("{:.16e}", r.argmax_x)).unwrap_or_default(),
            ])
            .expect("in-memory write");
        }
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
}

fn describe(v: &Verdict) -> String {
    let mut s = v.status.to_string();
    if let Some(via) = &v.via {
        let _ = write!(s, " via {via}");
    }
    if let Some(m) = &v.first_mismatch {
        let _ = write!(s, " @x^{} {} {}", m.order, m.symbol, m.difference);
    }
    if let Some(r) = &v.residual_stats {
        let _ = write!(s, " max {:.3e} @x={}", r.max_abs, r.argmax_x);
    }
    if !v.failures.is_empty() {
        let _ = write!(s, " ({} point errors)", v.failures.len());
    }
    s
}

pub fn to_text(summary: &Summary) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{:<10} {:<10} {:<8} {:<34} {:<34} AGREE",
        "ID", "SOURCE", "EXPECTED", "EXACT", "NUMERIC"
    );
    for e in &summary.entries {
        let exact = e.exact.as_ref().map(describe).unwrap_or_else(|| "-".into());
        let numeric = e.numeric.as_ref().map(describe).unwrap_or_else(|| "-".into());
        let _ = writeln!(
            out,
            "{:<10} {:<10} {:<8} {:<34} {:<34} {}",
            e.id,
            e.provenance.to_string(),
            e.expected.to_string(),
            exact,
            numeric,
            if e.agree { "yes" } else { "NO" }
        );
    }
    let _ = writeln!(
        out,
        "overall: {}",
        if summary.agree {
            "all verdicts match expectations"
        } else {
            "MISMATCH against expectations"
        }
    );
    out
}
