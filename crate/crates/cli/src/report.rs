//! Report documents and their JSON/CSV encodings.

use serde::ser::{Serialize, Serializer};
use serde_json::value::RawValue;

/// A float written with 17 significant digits; non-finite values become `null`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Num(pub f64);

impl Num {
    pub fn text(&self) -> String {
        if self.0.is_finite() {
            format!("{:.16e}", self.0)
        } else {
            "null".to_string()
        }
    }
}

impl Serialize for Num {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let raw = RawValue::from_string(self.text()).map_err(serde::ser::Error::custom)?;
        raw.serialize(s)
    }
}

impl From<f64> for Num {
    fn from(v: f64) -> Self {
        Num(v)
    }
}

#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct SchemeInfo {
    pub m: Num,
    pub eps: Vec<Num>,
    pub tol_quadrature: Num,
    pub tol_limit: Num,
    pub degree: usize,
}

#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct Sample {
    pub eps: Num,
    pub value: Num,
    pub abs_error: Num,
    pub analytic: Num,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ErrorKind {
    Relative,
    Absolute,
}

#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct Entry {
    pub kind: &'static str,
    pub name: String,
    /// Analytic value at `D = 1`.
    pub analytic: Option<Num>,
    pub quadrature: Vec<Sample>,
    pub extrapolated: Option<Num>,
    pub extrapolation_error: Option<Num>,
    pub exact_limit: Option<Num>,
    pub rel_err: Option<Num>,
    pub error_kind: ErrorKind,
    pub tolerance: Num,
    pub pass: bool,
    pub error: Option<String>,
}

impl Entry {
    pub fn new(kind: &'static str, name: impl Into<String>, tolerance: f64) -> Self {
        Entry {
            kind,
            name: name.into(),
            analytic: None,
            quadrature: Vec::new(),
            extrapolated: None,
            extrapolation_error: None,
            exact_limit: None,
            rel_err: None,
            error_kind: ErrorKind::Relative,
            tolerance: Num(tolerance),
            pass: false,
            error: None,
        }
    }

    /// Marks the entry failed with a message.
    pub fn failed(mut self, err: impl std::fmt::Display) -> Self {
        self.pass = false;
        self.error = Some(err.to_string());
        self
    }
}

#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct ReportDocument {
    pub scheme: SchemeInfo,
    pub entries: Vec<Entry>,
    pub pass: bool,
}

impl ReportDocument {
    pub fn new(scheme: SchemeInfo, entries: Vec<Entry>) -> Self {
        let pass = !entries.is_empty() && entries.iter().all(|e| e.pass);
        ReportDocument {
            scheme,
            entries,
            pass,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// One row per entry per sample, then one `limit` row per entry.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        let opt = |n: &Option<Num>| n.map(|v| v.text()).unwrap_or_default();
        w.write_record([
            "kind",
            "name",
            "eps",
            "value",
            "abs_error",
            "analytic",
            "exact_limit",
            "rel_err",
            "pass",
        ])
        .expect("in-memory write");
        for e in &self.entries {
            for s in &e.quadrature {
                w.write_record([
                    e.kind,
                    &e.name,
                    &s.eps.text(),
                    &s.value.text(),
                    &s.abs_error.text(),
                    &s.analytic.text(),
                    "",
                    "",
                    "",
                ])
                .expect("in-memory write");
            }
            w.write_record([
                e.kind,
                &e.name,
                "limit",
                &opt(&e.extrapolated),
                &opt(&e.extrapolation_error),
                &opt(&e.analytic),
                &opt(&e.exact_limit),
                &opt(&e.rel_err),
                if e.pass { "true" } else { "false" },
            ])
            .expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("ascii csv")
    }
}
