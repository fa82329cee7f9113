//! The `lwb` command line: argument parsing, dispatch to the workbench
//! modules, and plain or json-lines output.

mod commands;
pub mod corpus;
mod output;

use std::ffi::OsString;
use std::fmt;

use clap::{Parser, Subcommand};

pub use output::{Format, Report};

#[derive(Debug, Parser)]
#[command(
    name = "lwb",
    version,
    about = "Logic workbench",
    propagate_version = true
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Propositional sentences.
    #[command(subcommand)]
    Prop(commands::prop::PropCmd),
    /// Combinatorial problems through propositional satisfiability.
    #[command(subcommand)]
    Sat(commands::sat::SatCmd),
    /// First-order formulas and finite structures.
    #[command(subcommand)]
    Fol(commands::fol::FolCmd),
    /// Normal forms and Herbrand's theorem.
    #[command(subcommand)]
    Nf(commands::nf::NfCmd),
    /// Turing machines.
    #[command(subcommand)]
    Tm(commands::tm::TmCmd),
    /// Ordinals in Cantor normal form.
    #[command(subcommand)]
    Ord(commands::ord::OrdCmd),
    /// Hereditarily finite sets and arithmetization.
    #[command(subcommand)]
    Hf(commands::hf::HfCmd),
    /// Golden-output case directories.
    #[command(subcommand)]
    Corpus(corpus::CorpusCmd),
}

/// Exit status and captured streams of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug)]
pub(crate) enum CliError {
    /// Bad invocation; exit code 2.
    Usage(String),
    /// The operation itself failed; exit code 1.
    Domain(String),
}

impl CliError {
    pub(crate) fn usage(msg: impl fmt::Display) -> Self {
        CliError::Usage(msg.to_string())
    }

    pub(crate) fn domain(msg: impl fmt::Display) -> Self {
        CliError::Domain(msg.to_string())
    }
}

impl<E: std::error::Error> From<E> for CliError {
    fn from(e: E) -> Self {
        CliError::Domain(e.to_string())
    }
}

pub(crate) type CliResult = Result<Report, CliError>;

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            let code = e.exit_code();
            return if e.use_stderr() {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    let result = match cli.command {
        Command::Prop(c) => commands::prop::dispatch(c),
        Command::Sat(c) => commands::sat::dispatch(c),
        Command::Fol(c) => commands::fol::dispatch(c),
        Command::Nf(c) => commands::nf::dispatch(c),
        Command::Tm(c) => commands::tm::dispatch(c),
        Command::Ord(c) => commands::ord::dispatch(c),
        Command::Hf(c) => commands::hf::dispatch(c),
        Command::Corpus(c) => corpus::dispatch(c),
    };
    match result {
        Ok(report) => Outcome {
            code: report.exit_code(),
            stdout: report.render(cli.format),
            stderr: String::new(),
        },
        Err(CliError::Domain(msg)) => Outcome {
            code: 1,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        },
        Err(CliError::Usage(msg)) => Outcome {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {msg}\n\nUsage: lwb [--format <FORMAT>] <COMMAND>\n\nFor more information, try '--help'.\n"),
        },
    }
}

/// Inline text, or the contents of a file when written `@path`.
pub(crate) fn text_arg(arg: &str) -> Result<String, CliError> {
    match arg.strip_prefix('@') {
        Some(path) => read_file(path),
        None => Ok(arg.to_string()),
    }
}

pub(crate) fn read_file(path: &str) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::domain(format!("{path}: {e}")))
}

/// Splits `a=b` pairs given as repeated flags or comma-separated lists.
pub(crate) fn key_values(items: &[String]) -> Result<Vec<(String, String)>, CliError> {
    let mut out = Vec::new();
    for item in items {
        for part in split_top_level(item) {
            let part = part.trim();
            if part.is_empty() {
                continue;
            }
            let (k, v) = part
                .split_once('=')
                .ok_or_else(|| CliError::usage(format!("expected NAME=VALUE, found `{part}`")))?;
            out.push((k.trim().to_string(), v.trim().to_string()));
        }
    }
    Ok(out)
}

// Commas inside braces belong to set literals.
fn split_top_level(s: &str) -> Vec<&str> {
    let mut parts = Vec::new();
    let (mut depth, mut start) = (0i32, 0);
    for (i, c) in s.char_indices() {
        match c {
            '{' => depth += 1,
            '}' => depth -= 1,
            ',' if depth == 0 => {
                parts.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(&s[start..]);
    parts
}
