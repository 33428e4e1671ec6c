use serde::Serialize;
use serde_json::{json, Map, Value};
use std::fmt::Write;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Table,
    Csv,
}

#[derive(Clone, Debug, Serialize, serde::Deserialize, PartialEq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

/// Output of one command. The process exits 0 exactly when every check passed.
#[derive(Clone, Debug, Serialize, serde::Deserialize, PartialEq)]
pub struct Report {
    pub command: String,
    pub params: Map<String, Value>,
    pub result: Value,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report {
            command: command.to_string(),
            params: Map::new(),
            result: Value::Null,
            checks: vec![],
        }
    }

    pub fn param(&mut self, key: &str, v: impl Serialize) -> &mut Self {
        self.params.insert(key.to_string(), json!(v));
        self
    }

    pub fn check(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) -> &mut Self {
        self.checks.push(Check {
            name: name.into(),
            passed,
            detail: detail.into(),
        });
        self
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => serde_json::to_string_pretty(self).expect("serializable") + "\n",
            Format::Table => self.render_table(),
            Format::Csv => self.render_csv(),
        }
    }

    /// A result of the form {"table": {"header": [...], "rows": [[...]]}}.
    fn table(&self) -> Option<(Vec<String>, Vec<Vec<String>>)> {
        let t = self.result.get("table")?;
        let cell = |v: &Value| match v {
            Value::String(s) => s.clone(),
            other => other.to_string(),
        };
        let header = t.get("header")?.as_array()?.iter().map(cell).collect();
        let rows = t
            .get("rows")?
            .as_array()?
            .iter()
            .map(|r| r.as_array().map(|r| r.iter().map(cell).collect()).unwrap_or_default())
            .collect();
        Some((header, rows))
    }

    fn render_table(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{}", self.command);
        for (k, v) in &self.params {
            let _ = writeln!(out, "  {k} = {v}");
        }
        match self.table() {
            Some((header, rows)) => {
                let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
                for r in &rows {
                    for (i, c) in r.iter().enumerate() {
                        if i < widths.len() {
                            widths[i] = widths[i].max(c.chars().count());
                        }
                    }
                }
                let line = |cells: &[String]| {
                    cells
                        .iter()
                        .zip(&widths)
                        .map(|(c, w)| format!("{c:<w$}"))
                        .collect::<Vec<_>>()
                        .join("  ")
                };
                let _ = writeln!(out, "{}", line(&header));
                for r in &rows {
                    let _ = writeln!(out, "{}", line(r));
                }
                if let Value::Object(m) = &self.result {
                    for (k, v) in m.iter().filter(|(k, _)| *k != "table") {
                        let _ = writeln!(out, "{k}: {v}");
                    }
                }
            }
            None => {
                let _ = writeln!(out, "{}", serde_json::to_string_pretty(&self.result).expect("serializable"));
            }
        }
        for c in &self.checks {
            let mark = if c.passed { "PASS" } else { "FAIL" };
            let _ = writeln!(out, "[{mark}] {} {}", c.name, c.detail);
        }
        out
    }

    fn render_csv(&self) -> String {
        let esc = |s: &str| {
            if s.contains([',', '"', '\n']) {
                format!("\"{}\"", s.replace('"', "\"\""))
            } else {
                s.to_string()
            }
        };
        let mut out = String::new();
        match self.table() {
            Some((header, rows)) => {
                let _ = writeln!(out, "{}", header.iter().map(|h| esc(h)).collect::<Vec<_>>().join(","));
                for r in rows {
                    let _ = writeln!(out, "{}", r.iter().map(|c| esc(c)).collect::<Vec<_>>().join(","));
                }
            }
            None => {
                let _ = writeln!(out, "check,passed,detail");
                for c in &self.checks {
                    let _ = writeln!(out, "{},{},{}", esc(&c.name), c.passed, esc(&c.detail));
                }
            }
        }
        out
    }
}

pub fn table(header: Vec<String>, rows: Vec<Vec<String>>) -> Value {
    json!({ "header": header, "rows": rows })
}
