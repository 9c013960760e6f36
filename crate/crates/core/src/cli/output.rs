//! Records, tables and their human / CSV / JSON renderings.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

/// Output encoding shared by all subcommands.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Human,
    Csv,
    Json,
}

/// An input value: a number, or a label such as a formula name.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(untagged)]
pub enum InputValue {
    Number(f64),
    Text(String),
}

impl From<f64> for InputValue {
    fn from(v: f64) -> Self {
        InputValue::Number(v)
    }
}

impl From<&str> for InputValue {
    fn from(v: &str) -> Self {
        InputValue::Text(v.to_owned())
    }
}

impl From<String> for InputValue {
    fn from(v: String) -> Self {
        InputValue::Text(v)
    }
}

/// One evaluated quantity, optionally checked against an oracle.
///
/// `residual` is present exactly when `oracle` is, and equals `|value - oracle|`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OutputRecord {
    pub command: String,
    pub inputs: BTreeMap<String, InputValue>,
    pub value: f64,
    pub oracle: Option<f64>,
    pub residual: Option<f64>,
}

impl OutputRecord {
    pub fn new(command: impl Into<String>, value: f64) -> Self {
        Self {
            command: command.into(),
            inputs: BTreeMap::new(),
            value,
            oracle: None,
            residual: None,
        }
    }

    pub fn input(mut self, key: &str, value: impl Into<InputValue>) -> Self {
        self.inputs.insert(key.to_owned(), value.into());
        self
    }

    pub fn with_oracle(mut self, oracle: f64) -> Self {
        self.oracle = Some(oracle);
        self.residual = Some((self.value - oracle).abs());
        self
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Human => {
                let mut line = self.command.clone();
                for (k, v) in &self.inputs {
                    let _ = write!(line, " {k}={}", human_input(v));
                }
                let _ = write!(line, " value={}", human(self.value));
                if let (Some(o), Some(r)) = (self.oracle, self.residual) {
                    let _ = write!(line, " oracle={} residual={}", human(o), human(r));
                }
                line + "\n"
            }
            Format::Csv => {
                let mut out = String::from("command");
                for k in self.inputs.keys() {
                    let _ = write!(out, ",{k}");
                }
                out.push_str(",value,oracle,residual\n");
                out.push_str(&self.command);
                for v in self.inputs.values() {
                    let _ = write!(out, ",{}", csv_input(v));
                }
                let opt = |v: Option<f64>| v.map(machine).unwrap_or_default();
                let _ = writeln!(
                    out,
                    ",{},{},{}",
                    machine(self.value),
                    opt(self.oracle),
                    opt(self.residual)
                );
                out
            }
            Format::Json => json_line(self),
        }
    }
}

/// 17 significant digits: round-trips every `f64`.
pub fn machine(v: f64) -> String {
    format!("{v:.16e}")
}

/// 10 significant digits.
pub fn human(v: f64) -> String {
    let a = v.abs();
    if a == 0.0 || (1e-4..1e9).contains(&a) {
        let digits = 9 - a.log10().floor().max(0.0) as i32;
        let s = format!("{v:.*}", digits.max(0) as usize);
        if s.contains('.') {
            s.trim_end_matches('0').trim_end_matches('.').to_owned()
        } else {
            s
        }
    } else {
        format!("{v:.9e}")
    }
}

fn human_input(v: &InputValue) -> String {
    match v {
        InputValue::Number(x) => human(*x),
        InputValue::Text(s) => s.clone(),
    }
}

fn csv_input(v: &InputValue) -> String {
    match v {
        InputValue::Number(x) => machine(*x),
        InputValue::Text(s) => s.clone(),
    }
}

pub(crate) fn json_line<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("records serialize") + "\n"
}

/// A table cell.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(untagged)]
pub enum Cell {
    Int(u64),
    Real(f64),
    Text(String),
}

impl Cell {
    fn csv(&self) -> String {
        match self {
            Cell::Int(n) => n.to_string(),
            Cell::Real(x) => machine(*x),
            Cell::Text(s) => s.clone(),
        }
    }

    fn human(&self) -> String {
        match self {
            Cell::Int(n) => n.to_string(),
            Cell::Real(x) => human(*x),
            Cell::Text(s) => s.clone(),
        }
    }
}

/// A table with a fixed header.
#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(header: Vec<&'static str>) -> Self {
        Self {
            header,
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }

    pub fn render(&self, format: Format) -> String {
        let mut out = String::new();
        match format {
            Format::Csv => {
                out.push_str(&self.header.join(","));
                out.push('\n');
                for row in &self.rows {
                    let cells: Vec<String> = row.iter().map(Cell::csv).collect();
                    out.push_str(&cells.join(","));
                    out.push('\n');
                }
            }
            Format::Human => {
                let body: Vec<Vec<String>> = self
                    .rows
                    .iter()
                    .map(|row| row.iter().map(Cell::human).collect())
                    .collect();
                let widths: Vec<usize> = (0..self.header.len())
                    .map(|i| {
                        body.iter()
                            .map(|r| r[i].len())
                            .chain(std::iter::once(self.header[i].len()))
                            .max()
                            .unwrap_or(0)
                    })
                    .collect();
                let line = |cells: Vec<&str>| {
                    let padded: Vec<String> = cells
                        .iter()
                        .zip(&widths)
                        .map(|(c, w)| format!("{c:>w$}"))
                        .collect();
                    padded.join("  ").trim_end().to_owned() + "\n"
                };
                out.push_str(&line(self.header.clone()));
                for row in &body {
                    out.push_str(&line(row.iter().map(String::as_str).collect()));
                }
            }
            Format::Json => {
                for row in &self.rows {
                    let obj: BTreeMap<&str, &Cell> =
                        self.header.iter().copied().zip(row.iter()).collect();
                    out.push_str(&json_line(&obj));
                }
            }
        }
        out
    }
}
