//! Run reports: JSON, CSV and a plain-text table.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::io::Write;
use std::path::Path;

use serde::Serialize;
use serde_json::{Map, Value};

use crate::error::Result;

pub const SCHEMA_VERSION: u32 = 1;

/// A graph6 line that failed to decode, or was rejected by a command.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MalformedLine {
    pub line_no: usize,
    pub text: String,
    pub error: String,
}

/// A counterexample or failed check.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Violation {
    pub line_no: Option<usize>,
    /// Offending graph in graph6, or a grid point description.
    pub subject: String,
    pub detail: String,
    pub spectral_value: Option<f64>,
    pub oracle_status: Option<String>,
    pub tolerance: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RunReport {
    pub schema_version: u32,
    pub command: String,
    pub config: Value,
    pub inputs: usize,
    pub counts: BTreeMap<String, u64>,
    pub rows: Vec<Map<String, Value>>,
    pub violations: Vec<Violation>,
    pub malformed: Vec<MalformedLine>,
    pub notes: Vec<String>,
    pub timing_seconds: Option<f64>,
}

impl RunReport {
    pub fn new(command: &str, config: impl Serialize) -> Self {
        RunReport {
            schema_version: SCHEMA_VERSION,
            command: command.to_string(),
            config: serde_json::to_value(config).expect("config serializes"),
            inputs: 0,
            counts: BTreeMap::new(),
            rows: Vec::new(),
            violations: Vec::new(),
            malformed: Vec::new(),
            notes: Vec::new(),
            timing_seconds: None,
        }
    }

    /// Success iff there are no violations and no malformed inputs.
    pub fn success(&self) -> bool {
        self.violations.is_empty() && self.malformed.is_empty()
    }

    pub fn bump(&mut self, key: impl Into<String>) {
        *self.counts.entry(key.into()).or_default() += 1;
    }

    pub fn push_row(&mut self, row: impl Serialize) {
        match serde_json::to_value(row).expect("row serializes") {
            Value::Object(map) => self.rows.push(map),
            other => panic!("report rows must be objects, got {other}"),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn write_json(&self, path: impl AsRef<Path>) -> Result<()> {
        let mut text = self.to_json();
        text.push('\n');
        std::fs::write(path, text)?;
        Ok(())
    }

    /// Rows as CSV; columns follow the first row's keys.
    pub fn to_csv(&self) -> String {
        let mut writer = csv::Writer::from_writer(Vec::new());
        if let Some(first) = self.rows.first() {
            let header: Vec<&String> = first.keys().collect();
            writer.write_record(&header).expect("in-memory write");
            for row in &self.rows {
                let record: Vec<String> = header.iter().map(|k| cell(row.get(*k))).collect();
                writer.write_record(&record).expect("in-memory write");
            }
        }
        String::from_utf8(writer.into_inner().expect("flush")).expect("utf-8")
    }

    pub fn write_csv(&self, path: impl AsRef<Path>) -> Result<()> {
        std::fs::write(path, self.to_csv())?;
        Ok(())
    }

    /// Aligned table of the rows followed by counts, violations and notes.
    pub fn to_table(&self) -> String {
        let mut out = String::new();
        if let Some(first) = self.rows.first() {
            let header: Vec<&String> = first.keys().collect();
            let cells: Vec<Vec<String>> =
                self.rows.iter().map(|r| header.iter().map(|k| cell(r.get(*k))).collect()).collect();
            let widths: Vec<usize> = header
                .iter()
                .enumerate()
                .map(|(i, h)| cells.iter().map(|r| r[i].len()).chain([h.len()]).max().unwrap_or(0))
                .collect();
            let line = |values: Vec<&str>| {
                values
                    .iter()
                    .zip(&widths)
                    .map(|(v, w)| format!("{v:<w$}"))
                    .collect::<Vec<_>>()
                    .join("  ")
                    .trim_end()
                    .to_string()
            };
            writeln!(out, "{}", line(header.iter().map(|h| h.as_str()).collect())).unwrap();
            for row in &cells {
                writeln!(out, "{}", line(row.iter().map(String::as_str).collect())).unwrap();
            }
        }
        writeln!(out, "command: {}  inputs: {}", self.command, self.inputs).unwrap();
        for (k, v) in &self.counts {
            writeln!(out, "  {k}: {v}").unwrap();
        }
        for m in &self.malformed {
            writeln!(out, "malformed line {}: {:?} ({})", m.line_no, m.text, m.error).unwrap();
        }
        for v in &self.violations {
            let line = v.line_no.map(|l| format!("line {l}: ")).unwrap_or_default();
            writeln!(out, "VIOLATION {line}{} {}", v.subject, v.detail).unwrap();
        }
        for note in &self.notes {
            writeln!(out, "note: {note}").unwrap();
        }
        if let Some(t) = self.timing_seconds {
            writeln!(out, "time: {t:.3}s").unwrap();
        }
        writeln!(out, "{}", if self.success() { "OK" } else { "FAILED" }).unwrap();
        out
    }

    pub fn print_table(&self, mut sink: impl Write) -> std::io::Result<()> {
        sink.write_all(self.to_table().as_bytes())
    }
}

fn cell(value: Option<&Value>) -> String {
    match value {
        None | Some(Value::Null) => String::new(),
        Some(Value::String(s)) => s.clone(),
        Some(v) => v.to_string(),
    }
}
