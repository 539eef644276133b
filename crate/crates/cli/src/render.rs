//! Output documents: one JSON value plus the tables used for csv and markdown.

use serde_json::Value;

use crate::config::Format;
use crate::error::{CliError, CliResult};

#[derive(Clone, Debug)]
pub struct Table {
    pub title: String,
    pub headers: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(title: impl Into<String>, headers: &[&str]) -> Self {
        Table {
            title: title.into(),
            headers: headers.iter().map(|h| h.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    /// Two columns, one row per top-level field of a JSON object.
    pub fn from_object(title: impl Into<String>, v: &Value) -> Self {
        let mut t = Table::new(title, &["field", "value"]);
        if let Value::Object(map) = v {
            for (k, v) in map {
                t.rows.push(vec![k.clone(), cell(v)]);
            }
        }
        t
    }
}

/// A value as a table cell: strings bare, everything else as compact JSON.
pub fn cell(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        other => other.to_string(),
    }
}

#[derive(Clone, Debug)]
pub struct Document {
    pub json: Value,
    pub tables: Vec<Table>,
}

impl Document {
    /// A document whose tables are derived from the JSON object.
    pub fn from_json(title: &str, json: Value) -> Self {
        let tables = vec![Table::from_object(title, &json)];
        Document { json, tables }
    }

    pub fn render(&self, format: Format) -> CliResult<String> {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.json).map_err(|e| CliError::Format(e.to_string()))?;
                s.push('\n');
                Ok(s)
            }
            Format::Markdown => Ok(self.tables.iter().map(markdown).collect::<Vec<_>>().join("\n")),
            Format::Csv => {
                let parts: CliResult<Vec<String>> = self.tables.iter().map(csv_table).collect();
                Ok(parts?.join("\n"))
            }
        }
    }
}

fn markdown(t: &Table) -> String {
    let escape = |s: &str| s.replace('|', "\\|");
    let mut out = format!("### {}\n\n", t.title);
    out.push_str(&format!("| {} |\n", t.headers.iter().map(|h| escape(h)).collect::<Vec<_>>().join(" | ")));
    out.push_str(&format!("|{}\n", "---|".repeat(t.headers.len())));
    for row in &t.rows {
        out.push_str(&format!("| {} |\n", row.iter().map(|c| escape(c)).collect::<Vec<_>>().join(" | ")));
    }
    out
}

fn csv_table(t: &Table) -> CliResult<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let err = |e: csv::Error| CliError::Format(e.to_string());
    w.write_record(&t.headers).map_err(err)?;
    for row in &t.rows {
        w.write_record(row).map_err(err)?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::Format(e.to_string()))?;
    Ok(format!("# {}\n{}", t.title, String::from_utf8_lossy(&bytes)))
}
