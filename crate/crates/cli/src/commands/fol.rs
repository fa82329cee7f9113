use clap::Subcommand;
use logic_workbench::fol::{
    alpha_equivalent, enumerate_structures, eval_term, find_isomorphism, models_theory,
    parse_formula, parse_term, reduct, satisfies, substitute, Assignment, FiniteStructure, Formula,
    Signature,
};
use serde_json::json;

use super::tf;
use crate::{key_values, read_file, text_arg, CliError, CliResult, Report};

#[derive(Debug, Subcommand)]
pub enum FolCmd {
    /// Print the canonical form of a formula (or term) over a signature.
    Parse {
        formula: String,
        /// Symbols, e.g. `R/2, fn f/1, const c`.
        #[arg(long, default_value = "")]
        sig: String,
        /// Parse a term instead of a formula.
        #[arg(long)]
        term: bool,
    },
    /// Truth of a formula (or value of a term) in a structure file.
    Check {
        structure: String,
        formula: String,
        /// Values of free variables, by index or element name.
        #[arg(long = "assign", short)]
        assign: Vec<String>,
        #[arg(long)]
        term: bool,
    },
    /// Check axioms against one structure, or count their models of a size.
    Models {
        axioms: Vec<String>,
        #[arg(long, conflicts_with_all = ["sig", "size"])]
        structure: Option<String>,
        #[arg(long, requires = "size")]
        sig: Option<String>,
        #[arg(long, requires = "sig")]
        size: Option<usize>,
    },
    /// Restrict a structure to a smaller signature.
    Reduct {
        structure: String,
        #[arg(long)]
        sig: String,
    },
    /// Search for an isomorphism between two structures.
    Iso { left: String, right: String },
    /// Substitute a term for the free occurrences of a variable.
    Subst {
        formula: String,
        #[arg(long)]
        var: String,
        #[arg(long)]
        by: String,
        #[arg(long, default_value = "")]
        sig: String,
    },
    /// Whether two formulas differ only in bound variable names.
    Alpha {
        left: String,
        right: String,
        #[arg(long, default_value = "")]
        sig: String,
    },
}

pub(crate) fn signature(src: &str) -> Result<Signature, CliError> {
    Ok(text_arg(src)?.parse()?)
}

pub(crate) fn formula(sig: &Signature, src: &str) -> Result<Formula, CliError> {
    Ok(parse_formula(sig, &text_arg(src)?)?)
}

fn structure(path: &str) -> Result<FiniteStructure, CliError> {
    Ok(read_file(path)?.parse()?)
}

fn element(m: &FiniteStructure, v: &str) -> Result<usize, CliError> {
    if let Some(i) = m.element_names().iter().position(|n| n == v) {
        return Ok(i);
    }
    v.parse().map_err(|_| {
        CliError::usage(format!(
            "`{v}` is neither an element index nor an element name"
        ))
    })
}

fn element_label(m: &FiniteStructure, x: usize) -> String {
    m.element_names()
        .get(x)
        .cloned()
        .unwrap_or_else(|| x.to_string())
}

fn verdict(r: &mut Report, ok: bool) {
    r.line(tf(ok)).record(json!({"value": tf(ok)}));
}

pub fn dispatch(cmd: FolCmd) -> CliResult {
    match cmd {
        FolCmd::Parse {
            formula: src,
            sig,
            term,
        } => {
            let sig = signature(&sig)?;
            let mut r = Report::new();
            if term {
                let t = parse_term(&sig, &text_arg(&src)?)?;
                r.line(&t).record(json!({"term": t.to_string()}));
            } else {
                let f = formula(&sig, &src)?;
                let free: Vec<String> = f.free_vars().into_iter().collect();
                r.line(&f)
                    .record(json!({"formula": f.to_string(), "free": free}));
            }
            Ok(r)
        }
        FolCmd::Check {
            structure: path,
            formula: src,
            assign,
            term,
        } => {
            let m = structure(&path)?;
            let mut a = Assignment::new();
            for (k, v) in key_values(&assign)? {
                a.insert(k, element(&m, &v)?);
            }
            let mut r = Report::new();
            if term {
                let t = parse_term(m.signature(), &text_arg(&src)?)?;
                let v = element_label(&m, eval_term(&m, &t, &a)?);
                r.line(&v).record(json!({"element": v}));
            } else {
                verdict(&mut r, satisfies(&m, &formula(m.signature(), &src)?, &a)?);
            }
            Ok(r)
        }
        FolCmd::Models {
            axioms,
            structure: path,
            sig,
            size,
        } => match (path, sig, size) {
            (Some(path), _, _) => {
                let m = structure(&path)?;
                let axs = axioms
                    .iter()
                    .map(|s| formula(m.signature(), s))
                    .collect::<Result<Vec<_>, _>>()?;
                let check = models_theory(&m, &axs)?;
                let mut r = Report::new();
                match check.first_failure {
                    None => r.line("MODEL").record(json!({"model": true})),
                    Some(i) => r
                        .line(format!("NOT A MODEL: axiom {} fails: {}", i + 1, axs[i]))
                        .record(json!({"model": false, "failing_axiom": i + 1})),
                };
                Ok(r)
            }
            (None, Some(sig), Some(size)) => {
                let sig = signature(&sig)?;
                let axs = axioms
                    .iter()
                    .map(|s| formula(&sig, s))
                    .collect::<Result<Vec<_>, _>>()?;
                let (mut total, mut models) = (0u64, 0u64);
                for m in enumerate_structures(&sig, size)? {
                    total += 1;
                    models += u64::from(models_theory(&m, &axs)?.holds());
                }
                let mut r = Report::new();
                r.line(format!(
                    "{models} of {total} structures of size {size} are models"
                ))
                .record(json!({"size": size, "models": models, "structures": total}));
                Ok(r)
            }
            _ => Err(CliError::usage(
                "give --structure FILE, or --sig and --size",
            )),
        },
        FolCmd::Reduct {
            structure: path,
            sig,
        } => {
            let m = reduct(&structure(&path)?, &signature(&sig)?)?;
            let text = m.to_string();
            let mut r = Report::new();
            r.line(text.trim_end()).record(json!({"structure": text}));
            Ok(r)
        }
        FolCmd::Iso { left, right } => {
            let (a, b) = (structure(&left)?, structure(&right)?);
            let mut r = Report::new();
            match find_isomorphism(&a, &b)? {
                Some(map) => {
                    let pairs: Vec<String> = map
                        .iter()
                        .enumerate()
                        .map(|(x, y)| {
                            format!("{}->{}", element_label(&a, x), element_label(&b, *y))
                        })
                        .collect();
                    r.line("ISOMORPHIC")
                        .line(pairs.join(" "))
                        .record(json!({"isomorphic": true, "map": map}));
                }
                None => {
                    r.line("NOT ISOMORPHIC")
                        .record(json!({"isomorphic": false}));
                }
            }
            Ok(r)
        }
        FolCmd::Subst {
            formula: src,
            var,
            by,
            sig,
        } => {
            let sig = signature(&sig)?;
            let f = formula(&sig, &src)?;
            let t = parse_term(&sig, &by)?;
            Ok(Report::single("formula", substitute(&f, &var, &t)))
        }
        FolCmd::Alpha { left, right, sig } => {
            let sig = signature(&sig)?;
            let same = alpha_equivalent(&formula(&sig, &left)?, &formula(&sig, &right)?);
            let mut r = Report::new();
            r.line(if same {
                "ALPHA-EQUIVALENT"
            } else {
                "DIFFERENT"
            })
            .record(json!({"alpha_equivalent": same}));
            Ok(r)
        }
    }
}
