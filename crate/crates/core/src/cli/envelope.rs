use std::collections::BTreeMap;
use std::fmt::Write as _;

use clap::ValueEnum;
use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Provenance {
    pub tool: String,
    pub version: String,
}

impl Provenance {
    pub fn current() -> Self {
        Self {
            tool: env!("CARGO_PKG_NAME").into(),
            version: env!("CARGO_PKG_VERSION").into(),
        }
    }
}

/// What every command prints in `json` mode: a single object.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OutputEnvelope {
    pub command: String,
    pub parameters: BTreeMap<String, Value>,
    pub result: Value,
    pub format: Format,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub provenance: Option<Provenance>,
}

/// Header plus rows; fields never contain commas or quotes.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CsvTable {
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

impl CsvTable {
    pub fn new(header: Vec<&'static str>) -> Self {
        Self { header, rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.header.len());
        debug_assert!(row.iter().all(|f| !f.contains([',', '"', '\n'])));
        self.rows.push(row);
    }

    pub fn render(&self) -> String {
        let mut out = self.header.join(",");
        out.push('\n');
        for row in &self.rows {
            out.push_str(&row.join(","));
            out.push('\n');
        }
        out
    }
}

/// A finished command: the three renderings plus its exit code.
#[derive(Debug)]
pub struct CommandOutput {
    pub command: &'static str,
    pub parameters: BTreeMap<String, Value>,
    pub result: Value,
    pub text: String,
    pub csv: CsvTable,
    pub exit_code: i32,
}

impl CommandOutput {
    pub fn new(command: &'static str) -> Self {
        Self {
            command,
            parameters: BTreeMap::new(),
            result: Value::Null,
            text: String::new(),
            csv: CsvTable::default(),
            exit_code: 0,
        }
    }

    pub fn param(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.parameters.insert(key.into(), value.into());
        self
    }

    pub fn line(&mut self, s: impl AsRef<str>) {
        let _ = writeln!(self.text, "{}", s.as_ref());
    }

    pub fn envelope(&self, format: Format, provenance: bool) -> OutputEnvelope {
        OutputEnvelope {
            command: self.command.into(),
            parameters: self.parameters.clone(),
            result: self.result.clone(),
            format,
            provenance: provenance.then(Provenance::current),
        }
    }

    pub fn render(&self, format: Format, provenance: bool) -> String {
        match format {
            Format::Text => self.text.clone(),
            Format::Csv => self.csv.render(),
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.envelope(format, provenance))
                    .expect("envelope serialises");
                s.push('\n');
                s
            }
        }
    }
}
