//! Report assembly and rendering.

use schubert_hodge::{Weight, Q};
use serde::Serialize;
use serde_json::{json, Value};

use crate::Format;

pub const SCHEMA_VERSION: u32 = 1;

/// Output of one command; JSON and table views of the same rows.
#[derive(Debug, Serialize)]
pub struct Report {
    pub schema_version: u32,
    pub query: Value,
    pub rows: Vec<Value>,
    pub diagnostics: Vec<String>,
    #[serde(skip)]
    pub title: String,
    #[serde(skip)]
    pub headers: Vec<&'static str>,
    #[serde(skip)]
    pub cells: Vec<Vec<String>>,
    /// False when a cross-check failed.
    #[serde(skip)]
    pub consistent: bool,
}

impl Report {
    pub fn new(query: Value, title: String, headers: Vec<&'static str>) -> Report {
        Report {
            schema_version: SCHEMA_VERSION,
            query,
            rows: Vec::new(),
            diagnostics: Vec::new(),
            title,
            headers,
            cells: Vec::new(),
            consistent: true,
        }
    }

    pub fn push(&mut self, row: Value, cells: Vec<String>) {
        debug_assert_eq!(cells.len(), self.headers.len());
        self.rows.push(row);
        self.cells.push(cells);
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(self).expect("report serializes");
                s.push('\n');
                s
            }
            Format::Table => self.table(),
        }
    }

    fn table(&self) -> String {
        let width = |s: &str| s.chars().count();
        let mut widths: Vec<usize> = self.headers.iter().map(|h| width(h)).collect();
        for row in &self.cells {
            for (w, c) in widths.iter_mut().zip(row) {
                *w = (*w).max(width(c));
            }
        }
        let line = |cells: &[String]| -> String {
            let padded: Vec<String> = cells
                .iter()
                .zip(&widths)
                .map(|(c, &w)| format!("{c}{}", " ".repeat(w - width(c))))
                .collect();
            padded.join("  ").trim_end().to_string()
        };
        let mut out = format!("# {}\n", self.title);
        let headers: Vec<String> = self.headers.iter().map(|h| h.to_string()).collect();
        out += &line(&headers);
        out.push('\n');
        out += &line(&widths.iter().map(|&w| "-".repeat(w)).collect::<Vec<_>>());
        out.push('\n');
        for row in &self.cells {
            out += &line(row);
            out.push('\n');
        }
        for d in &self.diagnostics {
            out += &format!("note: {d}\n");
        }
        out
    }
}

/// Integers as numbers, other rationals as `"p/q"`.
pub fn rational(q: &Q) -> Value {
    if q.is_integer() {
        json!(q.to_integer())
    } else {
        json!(format!("{}/{}", q.numer(), q.denom()))
    }
}

pub fn weight(w: &Weight) -> Value {
    Value::Array(w.0.iter().map(rational).collect())
}

pub fn join<T: ToString>(xs: &[T], sep: &str) -> String {
    xs.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(sep)
}
