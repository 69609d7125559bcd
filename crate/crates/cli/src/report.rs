use glvar_core::{Polynomial, Rational};
use serde_json::{json, Value};

/// Output of one command: text lines plus the JSON fields.
pub struct Report {
    pub command: String,
    pub inputs: Value,
    pub result: Value,
    pub certificates: Value,
    pub lines: Vec<String>,
    /// Set when a self-check did not hold.
    pub failed: bool,
}

impl Report {
    pub fn new(command: &str, inputs: Value) -> Self {
        Report {
            command: command.to_string(),
            inputs,
            result: Value::Null,
            certificates: json!({}),
            lines: Vec::new(),
            failed: false,
        }
    }

    pub fn line(&mut self, s: impl Into<String>) {
        self.lines.push(s.into());
    }

    pub fn to_json(&self) -> String {
        let v = json!({
            "command": self.command,
            "inputs": self.inputs,
            "result": self.result,
            "certificates": self.certificates,
        });
        serde_json::to_string_pretty(&v).expect("values serialize")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for l in &self.lines {
            out.push_str(l);
            out.push('\n');
        }
        out
    }
}

pub fn poly_strings(ps: &[Polynomial]) -> Vec<String> {
    ps.iter().map(ToString::to_string).collect()
}

pub fn rational_strings(vs: &[Rational]) -> Vec<String> {
    vs.iter().map(ToString::to_string).collect()
}
