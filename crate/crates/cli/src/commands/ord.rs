use std::cmp::Ordering;

use clap::Subcommand;
use logic_workbench::ordinal::{goodstein_run, hereditary_expand, parse_ordinal, CnfOrdinal};
use num_bigint::BigUint;
use serde_json::json;

use crate::{CliError, CliResult, Report};

#[derive(Debug, Subcommand)]
pub enum OrdCmd {
    /// Compare two ordinals: <, = or >.
    Cmp {
        left: String,
        right: String,
    },
    Add {
        left: String,
        right: String,
    },
    Mul {
        left: String,
        right: String,
    },
    Pow {
        base: String,
        exponent: String,
    },
    /// Left division: a = b*q + r with r < b.
    Divmod {
        dividend: String,
        divisor: String,
    },
    /// Whether an ordinal has the form w^b.
    Indec {
        ordinal: String,
    },
    /// Hereditary base-b expansion of a natural number.
    Expand {
        n: BigUint,
        #[arg(long, default_value_t = BigUint::from(2u32))]
        base: BigUint,
    },
    /// Goodstein sequence as CSV: step,base,ordinal,value.
    Goodstein {
        m: BigUint,
        #[arg(long, default_value_t = BigUint::from(2u32))]
        base: BigUint,
        #[arg(long, default_value_t = 10)]
        steps: u64,
    },
}

fn ord(src: &str) -> Result<CnfOrdinal, CliError> {
    Ok(parse_ordinal(src)?)
}

pub fn dispatch(cmd: OrdCmd) -> CliResult {
    let result = |o: CnfOrdinal| Ok(Report::single("ordinal", o));
    match cmd {
        OrdCmd::Cmp { left, right } => {
            let sym = match ord(&left)?.compare(&ord(&right)?) {
                Ordering::Less => "<",
                Ordering::Equal => "=",
                Ordering::Greater => ">",
            };
            Ok(Report::single("order", sym))
        }
        OrdCmd::Add { left, right } => result(ord(&left)?.add(&ord(&right)?)),
        OrdCmd::Mul { left, right } => result(ord(&left)?.mul(&ord(&right)?)),
        OrdCmd::Pow { base, exponent } => result(ord(&base)?.pow(&ord(&exponent)?)),
        OrdCmd::Divmod { dividend, divisor } => {
            let (q, rem) = ord(&dividend)?.divmod(&ord(&divisor)?)?;
            let mut r = Report::new();
            r.line(format!("quotient: {q}"))
                .line(format!("remainder: {rem}"))
                .record(json!({"quotient": q.to_string(), "remainder": rem.to_string()}));
            Ok(r)
        }
        OrdCmd::Indec { ordinal } => {
            let yes = ord(&ordinal)?.is_indecomposable()?;
            let mut r = Report::new();
            r.line(if yes {
                "INDECOMPOSABLE"
            } else {
                "DECOMPOSABLE"
            })
            .record(json!({"indecomposable": yes}));
            Ok(r)
        }
        OrdCmd::Expand { n, base } => {
            Ok(Report::single("expansion", hereditary_expand(&n, &base)?))
        }
        OrdCmd::Goodstein { m, base, steps } => {
            let run = goodstein_run(&m, &base, steps)?;
            let mut r = Report::new();
            for line in run.to_csv().lines() {
                r.line(line);
            }
            for row in &run.rows {
                r.record(json!({
                    "step": row.step,
                    "base": row.base.to_string(),
                    "ordinal": row.ordinal.to_string(),
                    "value": row.value.to_string(),
                }));
            }
            if !run.finished {
                r.record(json!({"status": "UNFINISHED"}));
            }
            Ok(r)
        }
    }
}
