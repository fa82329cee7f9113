use std::fmt;

use clap::ValueEnum;
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// Human-readable lines.
    Text,
    /// One JSON object per result row, keys in a fixed order.
    #[value(name = "json-lines")]
    JsonLines,
}

/// Output of a command in both renderings.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Report {
    text: String,
    records: Vec<Value>,
    failed: bool,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    /// One text line that is also the record `{key: text}`.
    pub fn single(key: &str, value: impl fmt::Display) -> Self {
        let value = value.to_string();
        let mut r = Report::new();
        r.record(serde_json::json!({ key: value.clone() }));
        r.line(value);
        r
    }

    pub fn line(&mut self, s: impl fmt::Display) -> &mut Self {
        self.text.push_str(&s.to_string());
        self.text.push('\n');
        self
    }

    pub fn record(&mut self, v: Value) -> &mut Self {
        self.records.push(v);
        self
    }

    /// Marks a report whose content describes a failure, giving exit code 1.
    pub fn fail(&mut self) -> &mut Self {
        self.failed = true;
        self
    }

    pub fn exit_code(&self) -> i32 {
        i32::from(self.failed)
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.text.clone(),
            Format::JsonLines => self.records.iter().map(|r| format!("{r}\n")).collect(),
        }
    }
}
