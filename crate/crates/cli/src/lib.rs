//! Command-line front end: builds codes from JSON specifications, runs verification
//! suites and reproduces the worked examples. Every command prints one JSON report.

use std::ffi::OsString;

use clap::{Parser, Subcommand};
use serde::de::DeserializeOwned;
use serde_json::Value;

mod commands;
mod report;
mod suites;

pub use report::{render_table, Outcome};
pub use suites::{verify_suite, SUITES};

pub const DEFAULT_SEED: u64 = 1;
pub const DEFAULT_TRIALS: usize = 1000;

#[derive(Debug, Clone, Parser)]
#[command(name = "skewcodes", version, about = "Skew cyclic and constacyclic codes over F_q + uF_q + vF_q + uvF_q")]
pub struct JobSpec {
    #[command(subcommand)]
    pub command: Command,
    /// Path to a JSON file, or inline JSON.
    #[arg(long, global = true)]
    pub input: Option<String>,
    /// Work budget for searches and distance computations.
    #[arg(long, global = true, env = "SKEWCODES_BUDGET")]
    pub budget: Option<u64>,
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Randomized trials per identity check.
    #[arg(long, global = true, default_value_t = DEFAULT_TRIALS)]
    pub trials: usize,
    #[arg(long, global = true, conflicts_with = "table")]
    pub json: bool,
    /// Render the report as a two-column table.
    #[arg(long, global = true)]
    pub table: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Validate a code specification and summarize it.
    Build,
    /// Gray image parameters [length, dimension, distance].
    Params,
    /// The dual code and the dual theorem checks.
    Dual,
    /// Generator matrix of the Gray image.
    GrayImage,
    /// Monic right divisors of x^n - alpha of a given degree.
    DivisorSearch,
    /// Idempotent generator and dual idempotent of a component code.
    Idempotent,
    /// Run named verification suites.
    Verify { suites: Vec<String> },
    /// Reproduce worked example 1 to 4.
    Example {
        #[arg(value_parser = clap::value_parser!(u8).range(1..=4))]
        number: u8,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Build => "build",
            Command::Params => "params",
            Command::Dual => "dual",
            Command::GrayImage => "gray-image",
            Command::DivisorSearch => "divisor-search",
            Command::Idempotent => "idempotent",
            Command::Verify { .. } => "verify",
            Command::Example { .. } => "example",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{0}")]
    Input(#[from] skewcodes::Error),
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
}

/// Process exit status and the text written to standard output.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: Option<String>,
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFICATION: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

pub fn run<I, T>(args: I) -> RunOutput
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match JobSpec::try_parse_from(args) {
        Ok(job) => execute(&job),
        Err(e) => match e.kind() {
            clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                RunOutput { code: EXIT_OK, stdout: e.render().to_string(), stderr: None }
            }
            _ => {
                let err = CliError::Parse(e.render().to_string().trim().to_string());
                let text = report::error_report(None, &err);
                RunOutput { code: EXIT_INPUT, stdout: text, stderr: Some(err.to_string()) }
            }
        },
    }
}

/// Runs one job. Output depends only on the job.
pub fn execute(job: &JobSpec) -> RunOutput {
    let result = if job.budget == Some(0) {
        Err(CliError::Parse("budget must be positive".into()))
    } else {
        commands::dispatch(job)
    };
    match result {
        Ok(outcome) => {
            let code = if outcome.verified { EXIT_OK } else { EXIT_VERIFICATION };
            let value = report::envelope(job, &outcome, code);
            let stdout = if job.table { render_table(&value) } else { report::to_json(&value) };
            RunOutput { code, stdout, stderr: None }
        }
        Err(err) => RunOutput { code: EXIT_INPUT, stdout: report::error_report(Some(job), &err), stderr: Some(err.to_string()) },
    }
}

fn load_input<T: DeserializeOwned>(input: Option<&str>) -> Result<T, CliError> {
    let raw = input.ok_or_else(|| CliError::Parse("--input is required for this command".into()))?;
    let trimmed = raw.trim_start();
    let text = if trimmed.starts_with('{') || trimmed.starts_with('[') {
        raw.to_string()
    } else {
        std::fs::read_to_string(raw).map_err(|e| CliError::Parse(format!("{raw}: {e}")))?
    };
    serde_json::from_str(&text).map_err(|e| CliError::Parse(e.to_string()))
}

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("report values serialize")
}
