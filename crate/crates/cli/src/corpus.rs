//! Golden cases: `NAME.cmd` holds one `lwb` command line (without the
//! program name; `{dir}` expands to the case directory), `NAME.out` the
//! exact expected stdout and the optional `NAME.exit` the expected exit
//! code, 0 when absent.

use std::fs;
use std::path::{Path, PathBuf};

use clap::Subcommand;
use serde_json::json;

use crate::{run, CliError, CliResult, Report};

#[derive(Debug, Subcommand)]
pub enum CorpusCmd {
    /// Run every case and compare stdout byte for byte.
    Run { dir: PathBuf },
    /// Rewrite the expected outputs from the current implementation.
    Bless { dir: PathBuf },
}

/// Result of one case.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CaseResult {
    pub name: String,
    /// `None` when the case passed.
    pub failure: Option<String>,
}

fn cases(dir: &Path) -> Result<Vec<(String, PathBuf)>, CliError> {
    let entries =
        fs::read_dir(dir).map_err(|e| CliError::domain(format!("{}: {e}", dir.display())))?;
    let mut out = Vec::new();
    for entry in entries {
        let path = entry.map_err(|e| CliError::domain(e.to_string()))?.path();
        if path.extension().is_some_and(|x| x == "cmd") {
            let name = path
                .file_stem()
                .unwrap_or_default()
                .to_string_lossy()
                .into_owned();
            out.push((name, path));
        }
    }
    out.sort();
    Ok(out)
}

fn command_line(dir: &Path, cmd_file: &Path) -> Result<Vec<String>, String> {
    let text = fs::read_to_string(cmd_file).map_err(|e| format!("cannot read command: {e}"))?;
    let line: String = text
        .lines()
        .filter(|l| !l.trim_start().starts_with('#'))
        .collect::<Vec<_>>()
        .join(" ");
    let words = shlex::split(&line).ok_or("unbalanced quotes in command")?;
    if words.is_empty() {
        return Err("empty command".into());
    }
    let dir = dir.to_string_lossy();
    Ok(words
        .into_iter()
        .map(|w| w.replace("{dir}", &dir))
        .collect())
}

fn invoke(words: &[String]) -> crate::Outcome {
    run(std::iter::once("lwb".to_string()).chain(words.iter().cloned()))
}

fn check_case(dir: &Path, name: &str, cmd_file: &Path) -> CaseResult {
    let failure = (|| {
        let words = command_line(dir, cmd_file)?;
        let expected = fs::read(dir.join(format!("{name}.out")))
            .map_err(|e| format!("missing expected output: {e}"))?;
        let want_code = match fs::read_to_string(dir.join(format!("{name}.exit"))) {
            Ok(s) => s
                .trim()
                .parse::<i32>()
                .map_err(|_| "bad exit file".to_string())?,
            Err(_) => 0,
        };
        let got = invoke(&words);
        if got.code != want_code {
            return Err(format!(
                "exit code {} (expected {want_code}) {}",
                got.code,
                got.stderr.trim()
            ));
        }
        if got.stdout.as_bytes() != expected.as_slice() {
            let want = String::from_utf8_lossy(&expected);
            let line = got
                .stdout
                .lines()
                .zip(want.lines())
                .position(|(a, b)| a != b)
                .unwrap_or_else(|| got.stdout.lines().count().min(want.lines().count()));
            return Err(format!("output differs at line {}", line + 1));
        }
        Ok(())
    })()
    .err();
    CaseResult {
        name: name.to_string(),
        failure,
    }
}

/// Runs every case in `dir` in name order.
pub fn run_corpus(dir: &Path) -> Result<Vec<CaseResult>, String> {
    Ok(cases(dir)
        .map_err(|e| match e {
            CliError::Usage(m) | CliError::Domain(m) => m,
        })?
        .into_iter()
        .map(|(name, path)| check_case(dir, &name, &path))
        .collect())
}

pub(crate) fn dispatch(cmd: CorpusCmd) -> CliResult {
    let mut r = Report::new();
    match cmd {
        CorpusCmd::Run { dir } => {
            let results = run_corpus(&dir).map_err(CliError::Domain)?;
            let passed = results.iter().filter(|c| c.failure.is_none()).count();
            for c in &results {
                match &c.failure {
                    None => r.line(format!("PASS {}", c.name)),
                    Some(why) => r.line(format!("FAIL {}: {why}", c.name)),
                };
                r.record(json!({"case": c.name, "pass": c.failure.is_none(), "reason": c.failure}));
            }
            r.line(format!("passed {passed}/{}", results.len()));
            if passed != results.len() {
                r.fail();
            }
        }
        CorpusCmd::Bless { dir } => {
            for (name, path) in cases(&dir)? {
                let words = command_line(&dir, &path)
                    .map_err(|e| CliError::domain(format!("{name}: {e}")))?;
                let got = invoke(&words);
                let write = |file: String, body: &[u8]| {
                    fs::write(dir.join(file), body).map_err(|e| CliError::domain(e.to_string()))
                };
                write(format!("{name}.out"), got.stdout.as_bytes())?;
                let exit = dir.join(format!("{name}.exit"));
                if got.code == 0 {
                    if exit.exists() {
                        fs::remove_file(exit).map_err(|e| CliError::domain(e.to_string()))?;
                    }
                } else {
                    write(format!("{name}.exit"), format!("{}\n", got.code).as_bytes())?;
                }
                r.line(format!("wrote {name} (exit {})", got.code));
            }
        }
    }
    Ok(r)
}
