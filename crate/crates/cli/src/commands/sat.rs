use clap::{Args, Subcommand};
use logic_workbench::prop::parse_prop;
use logic_workbench::sat::{
    decode_witness, parse_instance, solve_with, SatProblem, SolveMode, SolveOutcome, Witness,
    DEFAULT_FUEL,
};
use serde_json::json;

use super::{parse_tf, tf};
use crate::{key_values, read_file, text_arg, CliError, CliResult, Report};

#[derive(Debug, Args)]
pub struct ProblemArgs {
    /// Instance file (order, color, transversal, exactcover or split).
    instance: Option<String>,
    /// Propositional constraints instead of an instance file.
    #[arg(long = "sentence", short, conflicts_with = "instance")]
    sentences: Vec<String>,
}

#[derive(Debug, Subcommand)]
pub enum SatCmd {
    /// Find a satisfying assignment and decode it, or print UNSAT.
    Solve {
        #[command(flatten)]
        problem: ProblemArgs,
        /// Scan all assignments instead of backtracking.
        #[arg(long)]
        exhaustive: bool,
        /// Node limit for backtracking.
        #[arg(long, default_value_t = DEFAULT_FUEL)]
        fuel: u64,
        /// Print the assignment instead of the decoded object.
        #[arg(long)]
        raw: bool,
    },
    /// Print the atoms and constraints of the encoding.
    Encode {
        #[command(flatten)]
        problem: ProblemArgs,
    },
    /// Decode a witness given as `A=T,B=F` or `@file` with one pair per line.
    Decode {
        #[command(flatten)]
        problem: ProblemArgs,
        #[arg(long, short)]
        witness: String,
    },
}

fn problem(args: &ProblemArgs) -> Result<SatProblem, CliError> {
    match &args.instance {
        Some(path) => Ok(parse_instance(&read_file(path)?)?),
        None if args.sentences.is_empty() => {
            Err(CliError::usage("give an instance file or --sentence"))
        }
        None => {
            let cs = args
                .sentences
                .iter()
                .map(|s| Ok(parse_prop(&text_arg(s)?)?))
                .collect::<Result<Vec<_>, CliError>>()?;
            Ok(SatProblem::from_constraints(cs))
        }
    }
}

fn witness_json(w: &Witness) -> serde_json::Value {
    let m: serde_json::Map<String, serde_json::Value> =
        w.iter().map(|(a, v)| (a.clone(), json!(tf(*v)))).collect();
    serde_json::Value::Object(m)
}

fn decoded(p: &SatProblem, w: &Witness, raw: bool) -> CliResult {
    let mut r = Report::new();
    if raw {
        for (a, v) in w {
            r.line(format!("{a}={}", tf(*v)));
        }
    } else {
        r.line(decode_witness(p, w)?);
    }
    r.record(json!({"status": "SAT", "decoded": decode_witness(p, w)?.to_string(), "witness": witness_json(w)}));
    Ok(r)
}

pub fn dispatch(cmd: SatCmd) -> CliResult {
    match cmd {
        SatCmd::Solve {
            problem: args,
            exhaustive,
            fuel,
            raw,
        } => {
            let p = problem(&args)?;
            let mode = if exhaustive {
                SolveMode::Exhaustive
            } else {
                SolveMode::Backtracking { fuel }
            };
            match solve_with(&p, mode)? {
                SolveOutcome::Sat(w) => decoded(&p, &w, raw),
                SolveOutcome::Unsat => {
                    let mut r = Report::new();
                    r.line("UNSAT").record(json!({"status": "UNSAT"}));
                    Ok(r)
                }
            }
        }
        SatCmd::Encode { problem: args } => {
            let p = problem(&args)?;
            let mut r = Report::new();
            r.line(format!("atoms: {}", p.atoms().join(" ")));
            for (i, c) in p.constraints().iter().enumerate() {
                r.line(c);
                r.record(json!({"index": i, "constraint": c.to_string()}));
            }
            Ok(r)
        }
        SatCmd::Decode {
            problem: args,
            witness,
        } => {
            let p = problem(&args)?;
            let text = text_arg(&witness)?;
            let items: Vec<String> = text.lines().map(str::to_string).collect();
            let mut w = Witness::new();
            for (k, v) in key_values(&items)? {
                let b = parse_tf(&v)
                    .ok_or_else(|| CliError::usage(format!("`{v}` is not a truth value")))?;
                w.insert(k, b);
            }
            decoded(&p, &w, false)
        }
    }
}
