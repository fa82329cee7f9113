use clap::Subcommand;
use logic_workbench::prop::{
    classify, enumerate_truth_functions, equivalent, evaluate, is_adequate, is_dnf, parse_prop,
    to_dnf, truth_table, TruthEvaluation, TruthFunction, MAX_ADEQUACY_ARITY,
};
use serde_json::json;

use super::{parse_tf, tf};
use crate::{key_values, text_arg, CliError, CliResult, Report};

#[derive(Debug, Subcommand)]
pub enum PropCmd {
    /// Print the canonical fully parenthesized form.
    Parse { sentence: String },
    /// Evaluate under a truth assignment.
    Eval {
        sentence: String,
        /// Atom values, e.g. `P=T,Q=F`.
        #[arg(long = "assign", short)]
        assign: Vec<String>,
    },
    /// Truth table over the atoms of the sentence.
    Table { sentence: String },
    /// VALIDITY, CONTRADICTION or CONTINGENT.
    Classify { sentence: String },
    /// Whether two sentences have the same truth table.
    Equiv { left: String, right: String },
    /// Disjunctive normal form.
    Dnf { sentence: String },
    /// Whether truth functions generate every truth function.
    Adequate {
        /// Names (not, and, or, imp, iff, xor, nand, nor) or tables such as `0111`.
        functions: Vec<String>,
        /// Check generation of all functions up to this arity.
        #[arg(long, default_value_t = MAX_ADEQUACY_ARITY)]
        max_arity: usize,
        /// List the sixteen binary truth functions and which are adequate alone.
        #[arg(long)]
        census: bool,
    },
}

fn sentence(arg: &str) -> Result<logic_workbench::prop::PropSentence, CliError> {
    Ok(parse_prop(&text_arg(arg)?)?)
}

fn table_string(f: &TruthFunction) -> String {
    f.table()
        .iter()
        .map(|b| if *b { '1' } else { '0' })
        .collect()
}

fn truth_function(spec: &str) -> Result<TruthFunction, CliError> {
    let named = match spec {
        "not" => Some(TruthFunction::negation()),
        "and" => Some(TruthFunction::binary_from(|a, b| a && b)),
        "or" => Some(TruthFunction::binary_from(|a, b| a || b)),
        "imp" => Some(TruthFunction::binary_from(|a, b| !a || b)),
        "iff" => Some(TruthFunction::binary_from(|a, b| a == b)),
        "xor" => Some(TruthFunction::binary_from(|a, b| a != b)),
        "nand" => Some(TruthFunction::nand()),
        "nor" => Some(TruthFunction::nor()),
        _ => None,
    };
    if let Some(f) = named {
        return Ok(f);
    }
    let bits: Option<Vec<bool>> = spec
        .chars()
        .map(|c| match c {
            '0' | 'F' => Some(false),
            '1' | 'T' => Some(true),
            _ => None,
        })
        .collect();
    let bits = bits.ok_or_else(|| CliError::usage(format!("unknown truth function `{spec}`")))?;
    if !bits.len().is_power_of_two() {
        return Err(CliError::usage(format!(
            "table `{spec}` length is not a power of two"
        )));
    }
    Ok(TruthFunction::new(
        bits.len().trailing_zeros() as usize,
        bits,
    )?)
}

pub fn dispatch(cmd: PropCmd) -> CliResult {
    match cmd {
        PropCmd::Parse { sentence: s } => Ok(Report::single("sentence", sentence(&s)?)),
        PropCmd::Eval {
            sentence: s,
            assign,
        } => {
            let s = sentence(&s)?;
            let mut e = TruthEvaluation::new();
            for (k, v) in key_values(&assign)? {
                let b = parse_tf(&v)
                    .ok_or_else(|| CliError::usage(format!("`{v}` is not a truth value")))?;
                e.insert(k, b);
            }
            Ok(Report::single("value", tf(evaluate(&s, &e)?)))
        }
        PropCmd::Table { sentence: s } => {
            let s = sentence(&s)?;
            let atoms: Vec<String> = s.atoms().into_iter().collect();
            let mut r = Report::new();
            r.line(format!("{} | {}", atoms.join(" "), s));
            for (e, v) in truth_table(&s)? {
                let vals: Vec<&str> = atoms.iter().map(|a| tf(e[a])).collect();
                r.line(format!("{} | {}", vals.join(" "), tf(v)));
                let row: serde_json::Map<String, serde_json::Value> =
                    atoms.iter().map(|a| (a.clone(), json!(tf(e[a])))).collect();
                r.record(json!({"atoms": row, "value": tf(v)}));
            }
            Ok(r)
        }
        PropCmd::Classify { sentence: s } => Ok(Report::single(
            "classification",
            classify(&sentence(&s)?)?.label(),
        )),
        PropCmd::Equiv { left, right } => {
            let eq = equivalent(&sentence(&left)?, &sentence(&right)?)?;
            let mut r = Report::new();
            r.line(if eq { "EQUIVALENT" } else { "NOT EQUIVALENT" });
            r.record(json!({"equivalent": eq}));
            Ok(r)
        }
        PropCmd::Dnf { sentence: s } => {
            let d = to_dnf(&sentence(&s)?)?;
            debug_assert!(is_dnf(&d));
            Ok(Report::single("dnf", d))
        }
        PropCmd::Adequate {
            functions,
            max_arity,
            census,
        } => {
            let mut r = Report::new();
            if census {
                if !functions.is_empty() {
                    return Err(CliError::usage("--census takes no functions"));
                }
                let all = enumerate_truth_functions(2)?;
                let mut count = 0;
                for f in &all {
                    let ok = is_adequate(std::slice::from_ref(f), max_arity)?;
                    count += usize::from(ok);
                    r.line(format!(
                        "{} {}",
                        table_string(f),
                        if ok { "adequate" } else { "-" }
                    ));
                    r.record(json!({"table": table_string(f), "adequate": ok}));
                }
                r.line(format!("adequate alone: {count} of {}", all.len()));
                return Ok(r);
            }
            if functions.is_empty() {
                return Err(CliError::usage(
                    "give at least one truth function or --census",
                ));
            }
            let basis = functions
                .iter()
                .map(|f| truth_function(f))
                .collect::<Result<Vec<_>, _>>()?;
            let ok = is_adequate(&basis, max_arity)?;
            r.line(if ok { "ADEQUATE" } else { "NOT ADEQUATE" });
            r.record(json!({"adequate": ok}));
            Ok(r)
        }
    }
}
