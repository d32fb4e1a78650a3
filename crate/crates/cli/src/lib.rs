//! Request handling for the `copra` command-line tool.
//!
//! Each subcommand reads one JSON document, validates it against the
//! subcommand's schema, runs the library operation and emits a report with
//! the result and a `verified` block that re-checks the result's
//! certificates. Reports are deterministic: object keys are sorted and
//! every algebraic value is in canonical form.

mod commands;

use std::fmt;

use copra_core::AlgebraError;
use serde_json::{json, Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Subcommand {
    Snf,
    Kernel,
    Solve,
    Decompose,
    SameModule,
    Quasifactor,
    Polygcd,
    Separable,
    Primary,
    Bound,
}

impl Subcommand {
    pub const ALL: [Subcommand; 10] = [
        Subcommand::Snf,
        Subcommand::Kernel,
        Subcommand::Solve,
        Subcommand::Decompose,
        Subcommand::SameModule,
        Subcommand::Quasifactor,
        Subcommand::Polygcd,
        Subcommand::Separable,
        Subcommand::Primary,
        Subcommand::Bound,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Subcommand::Snf => "snf",
            Subcommand::Kernel => "kernel",
            Subcommand::Solve => "solve",
            Subcommand::Decompose => "decompose",
            Subcommand::SameModule => "same-module",
            Subcommand::Quasifactor => "quasifactor",
            Subcommand::Polygcd => "polygcd",
            Subcommand::Separable => "separable",
            Subcommand::Primary => "primary",
            Subcommand::Bound => "bound",
        }
    }

    pub fn from_name(name: &str) -> Option<Subcommand> {
        Subcommand::ALL.into_iter().find(|s| s.name() == name)
    }
}

impl fmt::Display for Subcommand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Format {
    #[default]
    Structured,
    Plain,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Request {
    pub subcommand: Subcommand,
    pub format: Format,
    pub verify: bool,
}

/// Process exit status.
pub mod exit {
    pub const OK: i32 = 0;
    /// A `verified` check came back false.
    pub const VERIFICATION: i32 = 1;
    /// Unreadable input, malformed JSON or a schema violation.
    pub const PARSE: i32 = 2;
    /// The ring lacks a capability the operation needs.
    pub const CAPABILITY: i32 = 3;
    /// Well-formed input outside the operation's domain.
    pub const PRECONDITION: i32 = 4;
}

/// What a run writes and how it exits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Error raised while serving a request.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CliError {
    Input(String),
    Algebra(AlgebraError),
}

impl From<AlgebraError> for CliError {
    fn from(e: AlgebraError) -> Self {
        CliError::Algebra(e)
    }
}

impl CliError {
    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Input(_) | CliError::Algebra(AlgebraError::Parse(_)) => "parse",
            CliError::Algebra(AlgebraError::CapabilityMissing { .. } | AlgebraError::UnsupportedRing(_)) => {
                "capability"
            }
            CliError::Algebra(_) => "precondition",
        }
    }

    pub fn code(&self) -> i32 {
        match self.kind() {
            "parse" => exit::PARSE,
            "capability" => exit::CAPABILITY,
            _ => exit::PRECONDITION,
        }
    }

    pub fn message(&self) -> String {
        match self {
            CliError::Input(msg) => msg.clone(),
            CliError::Algebra(e) => e.to_string(),
        }
    }

    /// Single-line structured error record.
    pub fn record(&self, subcommand: Subcommand) -> String {
        let record = json!({
            "error": {
                "code": self.code(),
                "kind": self.kind(),
                "message": self.message(),
                "subcommand": subcommand.name(),
            }
        });
        format!("{record}\n")
    }
}

/// A computed result: the structured data, its plain rendering, and the
/// named self-checks.
pub(crate) struct Report {
    pub ring: String,
    pub result: Value,
    pub plain: Vec<String>,
    pub checks: Vec<(&'static str, bool)>,
}

/// Runs one request on the raw input text.
pub fn run(request: Request, input: &str) -> Outcome {
    match serve(request, input) {
        Ok((stdout, ok)) => Outcome {
            code: if ok { exit::OK } else { exit::VERIFICATION },
            stdout,
            stderr: String::new(),
        },
        Err(e) => failure(request.subcommand, &e),
    }
}

/// Outcome for an error raised before the request could be served, such as
/// an unreadable input file.
pub fn failure(subcommand: Subcommand, e: &CliError) -> Outcome {
    Outcome {
        code: e.code(),
        stdout: String::new(),
        stderr: e.record(subcommand),
    }
}

fn serve(request: Request, input: &str) -> Result<(String, bool), CliError> {
    let value: Value = serde_json::from_str(input).map_err(|e| CliError::Input(format!("invalid JSON: {e}")))?;
    let parsed = commands::parse(request.subcommand, &value)?;
    let report = commands::execute(parsed, request.verify)?;
    let ok = report.checks.iter().all(|&(_, passed)| passed);
    let text = match request.format {
        Format::Structured => structured(request, &report),
        Format::Plain => plain(request, &report),
    };
    Ok((text, ok))
}

fn structured(request: Request, report: &Report) -> String {
    let mut doc = Map::new();
    doc.insert("subcommand".into(), json!(request.subcommand.name()));
    doc.insert("ring".into(), json!(report.ring));
    doc.insert("result".into(), report.result.clone());
    if request.verify {
        let mut verified = Map::new();
        for &(name, passed) in &report.checks {
            verified.insert(name.into(), json!(passed));
        }
        let all = report.checks.iter().all(|&(_, passed)| passed);
        verified.insert("all".into(), json!(all));
        doc.insert("verified".into(), Value::Object(verified));
    }
    let mut text = serde_json::to_string_pretty(&Value::Object(doc)).expect("serializable");
    text.push('\n');
    text
}

fn plain(request: Request, report: &Report) -> String {
    let mut out = format!("{} over {}\n", request.subcommand, report.ring);
    for line in &report.plain {
        out.push_str(line);
        out.push('\n');
    }
    if request.verify {
        let all = report.checks.iter().all(|&(_, passed)| passed);
        let detail: Vec<String> = report.checks.iter().map(|(n, p)| format!("{n}={p}")).collect();
        out.push_str(&format!("verified: {all} ({})\n", detail.join(", ")));
    }
    out
}
