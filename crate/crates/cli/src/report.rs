//! One data model for every subcommand's output, rendered as text, CSV,
//! JSON or Markdown.

use std::time::{Duration, Instant};

use anyhow::Result;
use clap::ValueEnum;
use serde::Serialize;
use serde_json::{Map, Value};

use crate::claims::Claim;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Csv,
    Json,
    Md,
}

/// Rows of named fields in column order.
#[derive(Clone, Debug, Default)]
pub struct Table {
    pub rows: Vec<Map<String, Value>>,
}

impl Table {
    pub fn push(&mut self, row: impl Serialize) -> Result<()> {
        match serde_json::to_value(row)? {
            Value::Object(m) => self.rows.push(m),
            other => anyhow::bail!("table rows must be objects, got {other}"),
        }
        Ok(())
    }

    fn columns(&self) -> Vec<String> {
        let mut cols: Vec<String> = Vec::new();
        for r in &self.rows {
            for k in r.keys() {
                if !cols.contains(k) {
                    cols.push(k.clone());
                }
            }
        }
        cols
    }

    pub fn render(&self, format: Format) -> Result<String> {
        let cols = self.columns();
        let cell = |r: &Map<String, Value>, c: &str| match r.get(c) {
            None | Some(Value::Null) => String::new(),
            Some(Value::String(s)) => s.clone(),
            Some(v) => v.to_string(),
        };
        Ok(match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.rows)?;
                s.push('\n');
                s
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(&cols)?;
                for r in &self.rows {
                    w.write_record(cols.iter().map(|c| cell(r, c)))?;
                }
                String::from_utf8(w.into_inner()?)?
            }
            Format::Md | Format::Text => {
                let esc = |s: String| s.replace('|', "\\|");
                let mut s = format!("| {} |\n|{}\n", cols.join(" | "), "---|".repeat(cols.len()));
                for r in &self.rows {
                    let cells: Vec<String> = cols.iter().map(|c| esc(cell(r, c))).collect();
                    s.push_str(&format!("| {} |\n", cells.join(" | ")));
                }
                s
            }
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ReportRow {
    pub claim: String,
    pub pass: bool,
    pub witness: Value,
    pub runtime_ms: f64,
}

/// Verdicts keyed by claim, in execution order.
#[derive(Clone, Debug, Default)]
pub struct Report {
    pub rows: Vec<ReportRow>,
}

impl Report {
    pub fn push(&mut self, claim: Claim, pass: bool, witness: impl Serialize, elapsed: Duration) {
        let witness = serde_json::to_value(witness).unwrap_or_else(|e| Value::String(format!("unserializable: {e}")));
        self.rows.push(ReportRow { claim: claim.to_string(), pass, witness, runtime_ms: elapsed.as_secs_f64() * 1e3 });
    }

    /// Run `f`, recording its verdict; an error becomes a failing row.
    pub fn check<W: Serialize>(&mut self, claim: Claim, f: impl FnOnce() -> Result<(bool, W)>) {
        let start = Instant::now();
        match f() {
            Ok((pass, w)) => self.push(claim, pass, w, start.elapsed()),
            Err(e) => self.push(claim, false, serde_json::json!({ "error": format!("{e:#}") }), start.elapsed()),
        }
    }

    pub fn extend(&mut self, other: Report) {
        self.rows.extend(other.rows);
    }

    pub fn all_pass(&self) -> bool {
        self.rows.iter().all(|r| r.pass)
    }

    pub fn render(&self, format: Format) -> Result<String> {
        if format == Format::Text {
            let mut s = String::new();
            for r in &self.rows {
                s.push_str(&format!(
                    "{}  {}  ({:.0} ms)\n",
                    if r.pass { "PASS" } else { "FAIL" },
                    r.claim,
                    r.runtime_ms
                ));
                if !r.pass {
                    s.push_str(&format!("      witness: {}\n", r.witness));
                }
            }
            let passed = self.rows.iter().filter(|r| r.pass).count();
            s.push_str(&format!("{passed}/{} claims verified\n", self.rows.len()));
            return Ok(s);
        }
        let mut t = Table::default();
        for r in &self.rows {
            t.push(r)?;
        }
        t.render(format)
    }
}
