//! Report values and their text / JSON renderings.
//!
//! Text mode writes one `name=value` line per scalar with six decimals, or
//! six-digit scientific notation at magnitudes of 1e6 and above. JSON mode
//! writes a single object in insertion order with full precision. Unbounded
//! or infinite values render as `inf` in both modes.

use std::io::{self, Write};

use infocog_core::cogaug::Ratio;
use serde_json::{Map, Number, Value};

#[derive(Debug, Clone, PartialEq)]
pub enum Val {
    Num(f64),
    Int(u64),
    Str(String),
    List(Vec<Val>),
    Nested(Report),
}

impl From<f64> for Val {
    fn from(x: f64) -> Self {
        Val::Num(x)
    }
}

impl From<u64> for Val {
    fn from(x: u64) -> Self {
        Val::Int(x)
    }
}

impl From<usize> for Val {
    fn from(x: usize) -> Self {
        Val::Int(x as u64)
    }
}

impl From<&str> for Val {
    fn from(s: &str) -> Self {
        Val::Str(s.to_owned())
    }
}

impl From<String> for Val {
    fn from(s: String) -> Self {
        Val::Str(s)
    }
}

impl From<Ratio> for Val {
    fn from(r: Ratio) -> Self {
        Val::Num(r.as_f64())
    }
}

impl From<Report> for Val {
    fn from(r: Report) -> Self {
        Val::Nested(r)
    }
}

/// Ordered list of named values.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Report {
    entries: Vec<(String, Val)>,
    /// Text mode joins all entries on one line, separated by spaces.
    pub single_line: bool,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, name: impl Into<String>, value: impl Into<Val>) -> &mut Self {
        self.entries.push((name.into(), value.into()));
        self
    }

    pub fn push_opt(&mut self, name: impl Into<String>, value: Option<f64>) -> &mut Self {
        if let Some(v) = value {
            self.push(name, v);
        }
        self
    }

    pub fn entries(&self) -> &[(String, Val)] {
        &self.entries
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

pub fn format_number(x: f64) -> String {
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    // fold -0.0 into 0.0
    let x = if x == 0.0 { 0.0 } else { x };
    if x.abs() >= 1e6 {
        format!("{x:.6e}")
    } else {
        format!("{x:.6}")
    }
}

fn format_scalar(v: &Val) -> String {
    match v {
        Val::Num(x) => format_number(*x),
        Val::Int(i) => i.to_string(),
        Val::Str(s) => s.clone(),
        Val::List(items) => items
            .iter()
            .map(format_scalar)
            .collect::<Vec<_>>()
            .join(","),
        Val::Nested(_) => String::new(),
    }
}

fn flatten(prefix: &str, report: &Report, out: &mut Vec<String>) {
    for (name, value) in &report.entries {
        let key = if prefix.is_empty() {
            name.clone()
        } else {
            format!("{prefix}.{name}")
        };
        match value {
            Val::Nested(inner) => flatten(&key, inner, out),
            other => out.push(format!("{key}={}", format_scalar(other))),
        }
    }
}

pub fn to_text(report: &Report) -> String {
    let mut lines = Vec::new();
    flatten("", report, &mut lines);
    if report.single_line {
        let mut s = lines.join(" ");
        s.push('\n');
        s
    } else {
        lines.iter().map(|l| format!("{l}\n")).collect()
    }
}

fn json_value(v: &Val) -> Value {
    match v {
        Val::Num(x) => Number::from_f64(*x)
            .map(Value::Number)
            .unwrap_or_else(|| Value::String(format_number(*x))),
        Val::Int(i) => Value::Number((*i).into()),
        Val::Str(s) => Value::String(s.clone()),
        Val::List(items) => Value::Array(items.iter().map(json_value).collect()),
        Val::Nested(r) => to_json_value(r),
    }
}

pub fn to_json_value(report: &Report) -> Value {
    let mut map = Map::new();
    for (name, value) in &report.entries {
        map.insert(name.clone(), json_value(value));
    }
    Value::Object(map)
}

pub fn to_json(report: &Report) -> String {
    let mut s = serde_json::to_string_pretty(&to_json_value(report)).expect("report serializes");
    s.push('\n');
    s
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Text,
    Json,
}

pub fn emit(out: &mut dyn Write, report: &Report, mode: Mode) -> io::Result<()> {
    let rendered = match mode {
        Mode::Text => to_text(report),
        Mode::Json => to_json(report),
    };
    out.write_all(rendered.as_bytes())
}
