//! Tabular results rendered as JSON, CSV or an aligned text table.
//!
//! Numbers are rounded to 12 significant digits before rendering, so every format shows
//! the same value and repeated runs give byte-identical output.

use std::fmt::Write as _;
use std::str::FromStr;

use serde_json::{Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
    #[default]
    Table,
}

impl FromStr for OutputFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        <Self as clap::ValueEnum>::from_str(s, true)
    }
}

/// Rounds to 12 significant digits.
pub fn round12(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    format!("{x:.11e}").parse().unwrap_or(x)
}

/// A JSON number rounded to 12 significant digits; non-finite values become `null`.
pub fn num(x: f64) -> Value {
    serde_json::Number::from_f64(round12(x)).map_or(Value::Null, Value::Number)
}

/// Rounds every float inside a JSON value.
pub fn round_all(v: Value) -> Value {
    match v {
        Value::Number(n) if !n.is_i64() && !n.is_u64() => num(n.as_f64().unwrap_or(f64::NAN)),
        Value::Array(a) => Value::Array(a.into_iter().map(round_all).collect()),
        Value::Object(o) => Value::Object(o.into_iter().map(|(k, v)| (k, round_all(v))).collect()),
        v => v,
    }
}

/// Rows of named fields. `single` reports render as one JSON object instead of an array.
#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Value>>,
    pub single: bool,
}

impl Report {
    pub fn new(columns: &[&str]) -> Self {
        Report {
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
            single: false,
        }
    }

    /// A one-row report with the given fields.
    pub fn record(fields: Vec<(&str, Value)>) -> Self {
        let mut r = Report::new(&fields.iter().map(|f| f.0).collect::<Vec<_>>());
        r.rows.push(fields.into_iter().map(|f| round_all(f.1)).collect());
        r.single = true;
        r
    }

    pub fn push(&mut self, row: Vec<Value>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row.into_iter().map(round_all).collect());
    }

    fn objects(&self) -> Vec<Value> {
        self.rows
            .iter()
            .map(|row| {
                let m: Map<String, Value> = self.columns.iter().cloned().zip(row.iter().cloned()).collect();
                Value::Object(m)
            })
            .collect()
    }

    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Json => {
                let v = if self.single && self.rows.len() == 1 {
                    self.objects().remove(0)
                } else {
                    Value::Array(self.objects())
                };
                let mut s = serde_json::to_string_pretty(&v).expect("values serialize");
                s.push('\n');
                s
            }
            OutputFormat::Csv => {
                let mut s = self.columns.iter().map(|c| csv_field(c)).collect::<Vec<_>>().join(",");
                s.push('\n');
                for row in &self.rows {
                    let cells: Vec<String> = row.iter().map(|v| csv_field(&text(v))).collect();
                    s.push_str(&cells.join(","));
                    s.push('\n');
                }
                s
            }
            OutputFormat::Table => {
                let cells: Vec<Vec<String>> = self.rows.iter().map(|r| r.iter().map(text).collect()).collect();
                let widths: Vec<usize> = (0..self.columns.len())
                    .map(|i| {
                        cells
                            .iter()
                            .map(|r| r[i].chars().count())
                            .chain([self.columns[i].chars().count()])
                            .max()
                            .unwrap_or(0)
                    })
                    .collect();
                let mut s = String::new();
                let line = |s: &mut String, items: &[String]| {
                    let padded: Vec<String> = items
                        .iter()
                        .zip(&widths)
                        .map(|(c, &w)| format!("{c:<w$}"))
                        .collect();
                    let _ = writeln!(s, "{}", padded.join("  ").trim_end());
                };
                line(&mut s, &self.columns);
                line(
                    &mut s,
                    &widths.iter().map(|&w| "-".repeat(w)).collect::<Vec<_>>(),
                );
                for r in &cells {
                    line(&mut s, r);
                }
                s
            }
        }
    }
}

/// Plain-text form of a cell.
fn text(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        Value::Array(a) => a.iter().map(text).collect::<Vec<_>>().join(" "),
        v => v.to_string(),
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn rounding_keeps_twelve_digits() {
        assert_eq!(round12(2.0f64.sqrt()), 1.41421356237);
        assert_eq!(round12(1e-20 / 3.0), 3.33333333333e-21);
        assert_eq!(num(f64::NAN), Value::Null);
    }

    #[test]
    fn renders_all_formats() {
        let mut r = Report::new(&["name", "value"]);
        r.push(vec![json!("a,b"), json!(1.0 / 3.0)]);
        r.push(vec![json!("c"), json!(2)]);
        assert_eq!(r.render(OutputFormat::Csv), "name,value\n\"a,b\",0.333333333333\nc,2\n");
        assert_eq!(
            r.render(OutputFormat::Table),
            "name  value\n----  --------------\na,b   0.333333333333\nc     2\n"
        );
        let j: Value = serde_json::from_str(&r.render(OutputFormat::Json)).unwrap();
        assert_eq!(j[1]["value"], json!(2));
    }

    #[test]
    fn single_records_are_objects() {
        let r = Report::record(vec![("x", json!(1.5))]);
        assert!(r.render(OutputFormat::Json).starts_with('{'));
    }
}
