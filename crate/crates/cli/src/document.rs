//! The report envelope shared by every subcommand.

use serde::Serialize;
use serde_json::{Map, Value};

use crate::args::Output;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Field order here is the order in the emitted JSON. `params` and `details`
/// are `serde_json` maps, which keep their keys sorted.
#[derive(Clone, Debug, Serialize)]
pub struct ReportDocument {
    pub version: String,
    pub command: String,
    pub params: Map<String, Value>,
    pub passed: bool,
    pub details: Value,
}

/// What a command produced, before rendering.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub passed: bool,
    pub details: Value,
    pub lines: Vec<String>,
}

impl Outcome {
    pub fn new(passed: bool, details: Value, lines: Vec<String>) -> Self {
        Outcome {
            passed,
            details,
            lines,
        }
    }
}

/// Invalid input; maps to exit status 2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvalidParams(pub String);

impl std::fmt::Display for InvalidParams {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

pub fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("report payloads serialize")
}

pub fn render(
    output: Output,
    command: &str,
    params: Map<String, Value>,
    outcome: &Outcome,
) -> String {
    match output {
        Output::Json => {
            let doc = ReportDocument {
                version: VERSION.to_string(),
                command: command.to_string(),
                params,
                passed: outcome.passed,
                details: outcome.details.clone(),
            };
            let mut s = serde_json::to_string_pretty(&doc).expect("report serializes");
            s.push('\n');
            s
        }
        Output::Text => {
            let verdict = if outcome.passed { "PASS" } else { "FAIL" };
            let mut s = format!("{command}: {verdict}\n");
            for line in &outcome.lines {
                s.push_str("  ");
                s.push_str(line);
                s.push('\n');
            }
            s
        }
    }
}

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
