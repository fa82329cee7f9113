use clap::Subcommand;
use logic_workbench::turing::{
    compute_numeric, compute_on, decode_machine, encode_machine, enumerate_we, fixtures, run,
    trace, utm_run, Machine, MachineCode, RunOutcome, UtmOutcome,
};
use serde_json::json;

use crate::{read_file, text_arg, CliError, CliResult, Report};

const DEFAULT_FUEL: u64 = 1_000_000;

#[derive(Debug, Subcommand)]
pub enum TmCmd {
    /// Run a machine file (or fixture name) on an input word.
    Run {
        machine: String,
        #[arg(long, default_value = "")]
        input: String,
        #[arg(long, default_value_t = DEFAULT_FUEL)]
        fuel: u64,
        /// Print the number of 1s left on the tape instead of the output word.
        #[arg(long)]
        numeric: bool,
        /// Run on n written in base one and print the number of 1s left.
        #[arg(long, conflicts_with_all = ["input", "numeric"])]
        unary: Option<usize>,
    },
    /// Print every configuration of a run.
    Trace {
        machine: String,
        #[arg(long, default_value = "")]
        input: String,
        #[arg(long, default_value_t = 1000)]
        fuel: u64,
    },
    /// Prime-power code of a machine.
    Encode { machine: String },
    /// Machine file for a code (decimal or `@file`).
    Decode { code: String },
    /// Run the machine coded by a number through the universal interpreter.
    Utm {
        code: String,
        #[arg(long, default_value = "")]
        input: String,
        #[arg(long, default_value_t = DEFAULT_FUEL)]
        fuel: u64,
    },
    /// Inputs n <= fuel, in base one, on which the coded machine halts
    /// within fuel steps.
    We {
        code: String,
        #[arg(long, default_value_t = 20)]
        fuel: u64,
    },
    /// List the built-in fixture machines.
    Fixtures,
}

fn machine(arg: &str) -> Result<Machine, CliError> {
    if std::path::Path::new(arg).is_file() {
        return Ok(read_file(arg)?.parse()?);
    }
    fixtures::by_name(arg)
        .ok_or_else(|| CliError::domain(format!("`{arg}` is neither a machine file nor a fixture")))
}

fn code(arg: &str) -> Result<MachineCode, CliError> {
    text_arg(arg)?
        .parse()
        .map_err(|_| CliError::usage(format!("`{arg}` is not a natural number")))
}

pub fn dispatch(cmd: TmCmd) -> CliResult {
    let mut r = Report::new();
    match cmd {
        TmCmd::Run {
            machine: m,
            input,
            fuel,
            numeric,
            unary,
        } => {
            let m = machine(&m)?;
            if let Some(n) = unary {
                match compute_numeric(&m, n, fuel)? {
                    Some(v) => r.line(v).record(json!({"status": "HALTED", "value": v})),
                    None => r
                        .line("OUT OF FUEL")
                        .record(json!({"status": "OUT OF FUEL"})),
                };
                return Ok(r);
            }
            if numeric {
                match compute_on(&m, &input, fuel)? {
                    Some(n) => r.line(n).record(json!({"status": "HALTED", "value": n})),
                    None => r
                        .line("OUT OF FUEL")
                        .record(json!({"status": "OUT OF FUEL"})),
                };
                return Ok(r);
            }
            match run(&m, &input, fuel)? {
                RunOutcome::Halted { output, steps, .. } => {
                    r.line(&output)
                        .record(json!({"status": "HALTED", "output": output, "steps": steps}));
                }
                RunOutcome::OutOfFuel { .. } => {
                    r.line(format!("OUT OF FUEL after {fuel} steps"))
                        .record(json!({"status": "OUT OF FUEL", "steps": fuel}));
                }
            }
        }
        TmCmd::Trace {
            machine: m,
            input,
            fuel,
        } => {
            for (i, c) in trace(&machine(&m)?, &input, fuel)?.iter().enumerate() {
                r.line(c)
                    .record(json!({"step": i, "configuration": c.to_string()}));
            }
        }
        TmCmd::Encode { machine: m } => {
            r = Report::single("code", encode_machine(&machine(&m)?));
        }
        TmCmd::Decode { code: c } => {
            let text = decode_machine(&code(&c)?)?.to_string();
            r.line(text.trim_end()).record(json!({"machine": text}));
        }
        TmCmd::Utm {
            code: c,
            input,
            fuel,
        } => match utm_run(&code(&c)?, &input, fuel)? {
            UtmOutcome::Halted { output, steps } => {
                r.line(&output)
                    .record(json!({"status": "HALTED", "output": output, "steps": steps}));
            }
            UtmOutcome::OutOfFuel => {
                r.line(format!("OUT OF FUEL after {fuel} steps"))
                    .record(json!({"status": "OUT OF FUEL", "steps": fuel}));
            }
            UtmOutcome::Diverges => {
                r.line("DIVERGES: not the code of a machine")
                    .record(json!({"status": "DIVERGES"}));
            }
        },
        TmCmd::We { code: c, fuel } => {
            let found: Vec<u64> = enumerate_we(&code(&c)?, fuel).into_iter().collect();
            let text: Vec<String> = found.iter().map(u64::to_string).collect();
            r.line(format!("{{{}}}", text.join(", ")))
                .record(json!({"members": found}));
        }
        TmCmd::Fixtures => {
            for (name, m) in fixtures::all() {
                r.line(format!("{name}: {} states", m.states().len()))
                    .record(json!({"name": name, "states": m.states().len()}));
            }
        }
    }
    Ok(r)
}
