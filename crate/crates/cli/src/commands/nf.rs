use clap::{Args, Subcommand};
use logic_workbench::fol::Formula;
use logic_workbench::nf::{
    check_mp_step, decide_quantifier_free, herbrand_universe, herbrand_validity, is_nnf, skolemize,
    to_nnf, to_prenex, HerbrandOutcome, QfVerdict,
};
use serde_json::json;

use super::fol::{formula, signature};
use crate::{CliError, CliResult, Report};

#[derive(Debug, Args)]
pub struct FormulaArgs {
    formula: String,
    /// Symbols, e.g. `P/1, fn f/1, const c`.
    #[arg(long, default_value = "")]
    sig: String,
}

impl FormulaArgs {
    fn parse(&self) -> Result<Formula, CliError> {
        formula(&signature(&self.sig)?, &self.formula)
    }
}

#[derive(Debug, Subcommand)]
pub enum NfCmd {
    /// Negation normal form.
    Nnf(FormulaArgs),
    /// Prenex normal form of a sentence.
    Prenex(FormulaArgs),
    /// Skolem normal form of a sentence and the extended signature.
    Skolem(FormulaArgs),
    /// Search for a Herbrand certificate of validity.
    Herbrand {
        #[command(flatten)]
        args: FormulaArgs,
        /// Largest number of ground instances to try.
        #[arg(long, default_value_t = 50)]
        budget: usize,
    },
    /// Ground terms up to a depth.
    Universe {
        #[arg(long, default_value = "")]
        sig: String,
        #[arg(long, default_value_t = 2)]
        depth: usize,
    },
    /// Decide validity of a variable-free, quantifier-free sentence.
    Qfree {
        #[command(flatten)]
        args: FormulaArgs,
        /// Interpret `=` as equality instead of an opaque atom.
        #[arg(long)]
        equality: bool,
    },
    /// Whether the conclusion follows from the premises by modus ponens.
    Mp {
        conclusion: String,
        #[arg(long = "premise", short, required = true)]
        premises: Vec<String>,
        #[arg(long, default_value = "")]
        sig: String,
    },
}

pub fn dispatch(cmd: NfCmd) -> CliResult {
    match cmd {
        NfCmd::Nnf(a) => {
            let g = to_nnf(&a.parse()?);
            debug_assert!(is_nnf(&g));
            Ok(Report::single("formula", g))
        }
        NfCmd::Prenex(a) => Ok(Report::single("formula", to_prenex(&a.parse()?)?)),
        NfCmd::Skolem(a) => {
            let sig = signature(&a.sig)?;
            let (p, extended) = skolemize(&formula(&sig, &a.formula)?, &sig)?;
            let mut r = Report::new();
            r.line(&p)
                .line(format!("signature: {extended}"))
                .record(json!({"formula": p.to_string(), "signature": extended.to_string()}));
            Ok(r)
        }
        NfCmd::Herbrand { args, budget } => {
            let mut r = Report::new();
            match herbrand_validity(&args.parse()?, budget)? {
                HerbrandOutcome::Valid(cert) => {
                    r.line("VALID").line(&cert).record(json!({
                        "status": "VALID",
                        "instances": cert.instances.len(),
                        "tautology": cert.tautology.to_string(),
                    }));
                }
                HerbrandOutcome::Unknown { instances_tried } => {
                    r.line(format!("UNKNOWN after {instances_tried} instances"))
                        .record(json!({"status": "UNKNOWN", "instances": instances_tried}));
                }
            }
            Ok(r)
        }
        NfCmd::Universe { sig, depth } => {
            let mut r = Report::new();
            for t in herbrand_universe(&signature(&sig)?, depth) {
                r.line(&t).record(json!({"term": t.to_string()}));
            }
            Ok(r)
        }
        NfCmd::Qfree { args, equality } => {
            let v = decide_quantifier_free(&args.parse()?, equality)?;
            let label = match v {
                QfVerdict::Valid => "VALID",
                QfVerdict::NotValid => "NOT VALID",
            };
            Ok(Report::single("verdict", label))
        }
        NfCmd::Mp {
            conclusion,
            premises,
            sig,
        } => {
            let sig = signature(&sig)?;
            let ps = premises
                .iter()
                .map(|p| formula(&sig, p))
                .collect::<Result<Vec<_>, _>>()?;
            let ok = check_mp_step(&ps, &formula(&sig, &conclusion)?);
            let mut r = Report::new();
            r.line(if ok { "FOLLOWS" } else { "DOES NOT FOLLOW" })
                .record(json!({"follows": ok}));
            Ok(r)
        }
    }
}
