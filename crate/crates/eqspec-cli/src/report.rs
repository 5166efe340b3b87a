//! Report bundles: every subcommand produces one machine-readable JSON
//! document plus one CSV file per table. Floats are serialized with 17
//! significant digits; multiples of π carry both the symbolic and the
//! numeric form. Output is byte-deterministic for identical invocations.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use eqspec::closed_form::NormalizedEigenvalue;
use serde_json::{json, Map, Number, Value};

/// One table cell.
#[derive(Debug, Clone)]
pub enum Cell {
    Int(i64),
    Float(f64),
    Pi(NormalizedEigenvalue),
    Text(String),
    Bool(bool),
}

impl Cell {
    fn to_json(&self) -> Value {
        match self {
            Cell::Int(v) => json!(v),
            Cell::Float(v) => float_value(*v),
            Cell::Pi(v) => json!({
                "symbolic": v.symbolic(),
                "value": float_value(v.as_f64()),
            }),
            Cell::Text(s) => json!(s),
            Cell::Bool(b) => json!(b),
        }
    }

    fn to_csv(&self) -> String {
        match self {
            Cell::Int(v) => v.to_string(),
            Cell::Float(v) => format_float(*v),
            Cell::Pi(v) => format!("{} ({})", v.symbolic(), format_float(v.as_f64())),
            Cell::Text(s) => {
                if s.contains(',') || s.contains('"') {
                    format!("\"{}\"", s.replace('"', "\"\""))
                } else {
                    s.clone()
                }
            }
            Cell::Bool(b) => b.to_string(),
        }
    }
}

/// 17 significant digits, scientific.
pub fn format_float(x: f64) -> String {
    format!("{x:.16e}")
}

fn float_value(x: f64) -> Value {
    Value::Number(Number::from_str(&format_float(x)).expect("float literal"))
}

#[derive(Debug, Clone)]
pub struct Table {
    pub name: String,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(name: impl Into<String>, columns: &[&str]) -> Self {
        Self {
            name: name.into(),
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }
}

/// One embedded verification row.
#[derive(Debug, Clone)]
pub struct CheckRow {
    pub name: String,
    pub expected: String,
    pub actual: String,
    pub passed: bool,
    /// Expected-value origin: "reference", "exact" or "computed".
    pub source: &'static str,
}

/// Everything a subcommand reports.
#[derive(Debug, Clone, Default)]
pub struct ReportBundle {
    pub command: String,
    pub parameters: BTreeMap<String, String>,
    pub tables: Vec<Table>,
    pub checks: Vec<CheckRow>,
    pub artifacts: Vec<PathBuf>,
}

impl ReportBundle {
    pub fn new(command: &str) -> Self {
        Self { command: command.into(), ..Default::default() }
    }

    pub fn param(&mut self, key: &str, value: impl ToString) {
        self.parameters.insert(key.into(), value.to_string());
    }

    pub fn check(
        &mut self,
        name: impl Into<String>,
        expected: impl ToString,
        actual: impl ToString,
        passed: bool,
        source: &'static str,
    ) {
        self.checks.push(CheckRow {
            name: name.into(),
            expected: expected.to_string(),
            actual: actual.to_string(),
            passed,
            source,
        });
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    fn to_json(&self) -> Value {
        let params: Map<String, Value> = self
            .parameters
            .iter()
            .map(|(k, v)| (k.clone(), json!(v)))
            .collect();
        let tables: Vec<Value> = self
            .tables
            .iter()
            .map(|t| {
                json!({
                    "name": t.name,
                    "columns": t.columns,
                    "rows": t
                        .rows
                        .iter()
                        .map(|r| Value::Array(r.iter().map(Cell::to_json).collect()))
                        .collect::<Vec<_>>(),
                })
            })
            .collect();
        let checks: Vec<Value> = self
            .checks
            .iter()
            .map(|c| {
                json!({
                    "name": c.name,
                    "expected": c.expected,
                    "actual": c.actual,
                    "passed": c.passed,
                    "source": c.source,
                })
            })
            .collect();
        json!({
            "schema": 1,
            "command": self.command,
            "parameters": params,
            "tables": tables,
            "checks": checks,
            "artifacts": self
                .artifacts
                .iter()
                .map(|p| p.display().to_string())
                .collect::<Vec<_>>(),
        })
    }

    /// Write `<out>/<command>.json` and one CSV per table; returns the
    /// list of written paths.
    pub fn write(&mut self, out_dir: &Path) -> std::io::Result<Vec<PathBuf>> {
        fs::create_dir_all(out_dir)?;
        let mut written = Vec::new();
        for t in &self.tables {
            let path = out_dir.join(format!("{}_{}.csv", self.command, t.name));
            let mut body = t.columns.join(",");
            body.push('\n');
            for row in &t.rows {
                body.push_str(&row.iter().map(Cell::to_csv).collect::<Vec<_>>().join(","));
                body.push('\n');
            }
            fs::write(&path, body)?;
            written.push(path);
        }
        self.artifacts.extend(written.iter().cloned());
        let json_path = out_dir.join(format!("{}.json", self.command));
        let mut body = serde_json::to_string_pretty(&self.to_json()).expect("serialize");
        body.push('\n');
        fs::write(&json_path, body)?;
        written.push(json_path);
        Ok(written)
    }

    /// Human summary to stdout: checks with pass/fail marks.
    pub fn print_summary(&self) {
        for t in &self.tables {
            println!("table {} ({} rows)", t.name, t.rows.len());
        }
        for c in &self.checks {
            let mark = if c.passed { "ok  " } else { "FAIL" };
            println!("[{mark}] ({}) {}: expected {}, got {}", c.source, c.name, c.expected, c.actual);
        }
    }
}

/// Minimal standalone SVG polyline plot; a convenience artifact, never
/// load-bearing for checks.
pub fn write_svg_line_plot(
    path: &Path,
    title: &str,
    points: &[(f64, f64)],
    x_label: &str,
    y_label: &str,
) -> std::io::Result<()> {
    assert!(points.len() >= 2);
    let (w, h, m) = (640.0, 420.0, 50.0);
    let xs: Vec<f64> = points.iter().map(|p| p.0).collect();
    let ys: Vec<f64> = points.iter().map(|p| p.1).collect();
    let (x0, x1) = (xs.iter().cloned().fold(f64::INFINITY, f64::min), xs.iter().cloned().fold(f64::NEG_INFINITY, f64::max));
    let (y0, y1) = (ys.iter().cloned().fold(f64::INFINITY, f64::min), ys.iter().cloned().fold(f64::NEG_INFINITY, f64::max));
    let xr = (x1 - x0).max(1e-12);
    let yr = (y1 - y0).max(1e-12);
    let px = |x: f64| m + (x - x0) / xr * (w - 2.0 * m);
    let py = |y: f64| h - m - (y - y0) / yr * (h - 2.0 * m);
    let poly: Vec<String> = points.iter().map(|&(x, y)| format!("{:.2},{:.2}", px(x), py(y))).collect();
    let svg = format!(
        concat!(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\">\n",
            "<rect width=\"{w}\" height=\"{h}\" fill=\"white\"/>\n",
            "<text x=\"{tx}\" y=\"20\" text-anchor=\"middle\" font-family=\"monospace\" font-size=\"14\">{title}</text>\n",
            "<line x1=\"{m}\" y1=\"{ybase}\" x2=\"{xmax}\" y2=\"{ybase}\" stroke=\"black\"/>\n",
            "<line x1=\"{m}\" y1=\"{m}\" x2=\"{m}\" y2=\"{ybase}\" stroke=\"black\"/>\n",
            "<text x=\"{tx}\" y=\"{h_lab}\" text-anchor=\"middle\" font-family=\"monospace\" font-size=\"12\">{x_label}</text>\n",
            "<text x=\"14\" y=\"{ty}\" text-anchor=\"middle\" font-family=\"monospace\" font-size=\"12\" transform=\"rotate(-90 14 {ty})\">{y_label}</text>\n",
            "<text x=\"{m}\" y=\"{h_lab}\" text-anchor=\"middle\" font-family=\"monospace\" font-size=\"10\">{x0:.3}</text>\n",
            "<text x=\"{xmax}\" y=\"{h_lab}\" text-anchor=\"middle\" font-family=\"monospace\" font-size=\"10\">{x1:.3}</text>\n",
            "<text x=\"{m}\" y=\"{ymin_lab}\" text-anchor=\"end\" font-family=\"monospace\" font-size=\"10\">{y1:.4}</text>\n",
            "<text x=\"{m}\" y=\"{ybase}\" text-anchor=\"end\" font-family=\"monospace\" font-size=\"10\">{y0:.4}</text>\n",
            "<polyline points=\"{poly}\" fill=\"none\" stroke=\"steelblue\" stroke-width=\"1.5\"/>\n",
            "</svg>\n"
        ),
        w = w,
        h = h,
        m = m,
        tx = w / 2.0,
        ty = h / 2.0,
        ybase = h - m,
        xmax = w - m,
        h_lab = h - 18.0,
        ymin_lab = m + 4.0,
        title = title,
        x_label = x_label,
        y_label = y_label,
        x0 = x0,
        x1 = x1,
        y0 = y0,
        y1 = y1,
        poly = poly.join(" "),
    );
    fs::write(path, svg)
}
