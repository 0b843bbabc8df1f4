use std::fmt::Write as _;

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};

pub type Row = IndexMap<String, String>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Table,
    Csv,
    Json,
}

/// The result of one invocation.
///
/// Every cell is a string: rationals as `p/q`, inexact numbers as decimals
/// cut to their certain digits, error bounds in columns ending in `_bound`.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct OutputRecord {
    pub command: String,
    pub parameters: IndexMap<String, String>,
    pub rows: Vec<Row>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verdict: Option<String>,
}

impl OutputRecord {
    pub fn new(command: &str) -> Self {
        Self {
            command: command.into(),
            ..Self::default()
        }
    }

    pub fn param(&mut self, key: &str, value: impl ToString) -> &mut Self {
        self.parameters.insert(key.into(), value.to_string());
        self
    }

    /// Column names, taken from the first row.
    pub fn columns(&self) -> Vec<&str> {
        self.rows
            .first()
            .map(|r| r.keys().map(String::as_str).collect())
            .unwrap_or_default()
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Table => self.to_table(),
            Format::Csv => self.to_csv(),
            Format::Json => self.to_json(),
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("string maps always serialize");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }

    /// Header plus one line per row. Fields that do not read as numbers,
    /// `p/q` rationals among them, are quoted.
    pub fn to_csv(&self) -> String {
        let mut w = csv::WriterBuilder::new()
            .quote_style(csv::QuoteStyle::NonNumeric)
            .from_writer(Vec::new());
        let columns = self.columns();
        if !columns.is_empty() {
            w.write_record(&columns).expect("in-memory write");
        }
        for row in &self.rows {
            w.write_record(
                columns
                    .iter()
                    .map(|c| row.get(*c).map_or("", String::as_str)),
            )
            .expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("UTF-8 input")
    }

    pub fn to_table(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{}", self.command);
        for (k, v) in &self.parameters {
            let _ = writeln!(out, "  {k} = {v}");
        }
        let columns = self.columns();
        if !columns.is_empty() {
            let widths: Vec<usize> = columns
                .iter()
                .map(|c| {
                    self.rows
                        .iter()
                        .filter_map(|r| r.get(*c))
                        .map(|v| v.chars().count())
                        .chain([c.chars().count()])
                        .max()
                        .unwrap_or(0)
                })
                .collect();
            out.push('\n');
            let line = |cells: Vec<&str>| {
                let mut l = String::new();
                for (i, (cell, w)) in cells.iter().zip(&widths).enumerate() {
                    if i > 0 {
                        l.push_str("  ");
                    }
                    let _ = write!(l, "{cell:<w$}");
                }
                l.trim_end().to_string()
            };
            let _ = writeln!(out, "{}", line(columns.clone()));
            let rule: Vec<String> = widths.iter().map(|w| "-".repeat(*w)).collect();
            let _ = writeln!(out, "{}", line(rule.iter().map(String::as_str).collect()));
            for row in &self.rows {
                let cells = columns
                    .iter()
                    .map(|c| row.get(*c).map_or("", String::as_str))
                    .collect();
                let _ = writeln!(out, "{}", line(cells));
            }
        }
        if let Some(v) = &self.verdict {
            let _ = writeln!(out, "\nverdict: {v}");
        }
        out
    }
}
