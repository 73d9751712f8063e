//! Command-line front end for `virasoro-hc`.
//!
//! Every subcommand produces an [`document::Outcome`], rendered either as a
//! short text summary or as a [`document::ReportDocument`] in JSON. Output for
//! a given command line and seed is byte-for-byte reproducible.

pub mod args;
pub mod commands;
pub mod document;
pub mod suite;

use serde_json::{Map, Value};

use args::{Cli, Command};
use document::{render, InvalidParams, EXIT_FAIL, EXIT_INVALID, EXIT_PASS};

/// Rendered output plus exit status.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunResult {
    pub stdout: String,
    pub stderr: String,
    pub status: i32,
}

fn dispatch(
    cli: &Cli,
) -> (
    &'static str,
    Map<String, Value>,
    Result<document::Outcome, InvalidParams>,
) {
    match &cli.command {
        Command::Jacobi(a) => ("jacobi", commands::algebra_params(a), commands::jacobi(a)),
        Command::Cocycle(a) => ("cocycle", commands::cocycle_params(a), commands::cocycle(a)),
        Command::Delta(a) => ("delta", commands::delta_params(a), Ok(commands::delta(a))),
        Command::Classify(a) => (
            "classify",
            commands::classify_params(a),
            commands::classify(a),
        ),
        Command::ModuleCheck(a) => (
            "module-check",
            commands::module_check_params(a),
            commands::module_check(a),
        ),
        Command::Cyclicity(a) => (
            "cyclicity",
            commands::cyclicity_params(a),
            commands::cyclicity(a),
        ),
        Command::Reproduce(a) => (
            "reproduce",
            commands::reproduce_params(a, cli.seed),
            commands::reproduce(a, cli.seed),
        ),
    }
}

pub fn run(cli: &Cli) -> RunResult {
    let (command, params, result) = dispatch(cli);
    match result {
        Ok(outcome) => RunResult {
            stdout: render(cli.output, command, params, &outcome),
            stderr: String::new(),
            status: if outcome.passed { EXIT_PASS } else { EXIT_FAIL },
        },
        Err(e) => RunResult {
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
            status: EXIT_INVALID,
        },
    }
}
