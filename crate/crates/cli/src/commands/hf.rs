use clap::Subcommand;
use logic_workbench::fol::Signature;
use logic_workbench::hf::{
    beta_decode, beta_encode, check_fin_axioms, crt_solve, diagonal_sentence, eval_delta0,
    eval_sigma1_bounded, godel_decode, godel_number, godel_sequence, hf_pair, membership_structure,
    parse_bounded, prop_formula, self_apply, vn_universe, Env, HFSet, Sigma1Verdict, SymbolTable,
    MAX_VN,
};
use logic_workbench::prop::parse_prop;
use num_bigint::BigUint;
use serde_json::json;

use super::fol::{formula, signature};
use super::tf;
use crate::{key_values, read_file, text_arg, CliError, CliResult, Report};

/// Symbols every Gödel table starts with: membership and numerals.
const BASE_SIGNATURE: &str = "E/2, fn S/1, const zero";

#[derive(Debug, Subcommand)]
pub enum HfCmd {
    /// The sets of V_n, one per line.
    Vn {
        n: usize,
        /// Print only the number of sets.
        #[arg(long)]
        count: bool,
    },
    /// Evaluate a bounded formula; leading `exists x.` quantifiers are searched.
    Eval {
        formula: String,
        /// Values of free variables, e.g. `a={{}}`.
        #[arg(long = "env", short)]
        env: Vec<String>,
        /// Rank bound for witness search.
        #[arg(long, default_value_t = 3)]
        search_rank: usize,
    },
    /// The ordered pair {{x},{x,y}}.
    Pair { left: String, right: String },
    /// Least solution of x = r_i mod m_i.
    Crt {
        #[arg(long, value_delimiter = ',', required = true)]
        moduli: Vec<BigUint>,
        #[arg(long, value_delimiter = ',', required = true)]
        residues: Vec<BigUint>,
    },
    /// Encode a sequence as (x, y), or decode with --x, --y and --len.
    Beta {
        values: Vec<BigUint>,
        #[arg(long, requires_all = ["y", "len"], conflicts_with = "values")]
        x: Option<BigUint>,
        #[arg(long, requires = "x")]
        y: Option<BigUint>,
        #[arg(long, requires = "x")]
        len: Option<usize>,
    },
    /// Gödel number of a formula, or the formula of a number with --decode.
    Godel {
        formula: Option<String>,
        /// Extra symbols beyond membership E/2, successor S/1 and zero.
        #[arg(long, default_value = "")]
        sig: String,
        /// Symbol table file; replaces the table built from --sig.
        #[arg(long)]
        table: Option<String>,
        #[arg(long, conflicts_with = "formula")]
        decode: Option<BigUint>,
        /// Print the exponent sequence instead of the number.
        #[arg(long)]
        sequence: bool,
        /// Read the formula as a propositional sentence.
        #[arg(long)]
        prop: bool,
        /// Print the symbol table.
        #[arg(long)]
        emit_table: bool,
    },
    /// Diagonal sentence for psi(x) and a relation chi, or rho(numeral of rho).
    Diag {
        psi: String,
        #[arg(long, required_unless_present = "self_apply")]
        chi: Option<String>,
        #[arg(long, default_value = "")]
        sig: String,
        /// Substitute the formula's own Gödel numeral instead.
        #[arg(long)]
        self_apply: bool,
    },
    /// Which FIN axioms hold in (V_n, in).
    Fin {
        n: usize,
        /// Print the membership structure instead.
        #[arg(long)]
        structure: bool,
    },
}

fn set(src: &str) -> Result<HFSet, CliError> {
    Ok(text_arg(src)?.parse()?)
}

fn table(sig: &str, file: Option<&str>) -> Result<SymbolTable, CliError> {
    if let Some(path) = file {
        return Ok(read_file(path)?.parse()?);
    }
    let mut full: Signature = BASE_SIGNATURE.parse()?;
    full.extend(&signature(sig)?);
    Ok(SymbolTable::from_signature(&full))
}

pub fn dispatch(cmd: HfCmd) -> CliResult {
    let mut r = Report::new();
    match cmd {
        HfCmd::Vn { n, count } => {
            if n > MAX_VN {
                return Err(CliError::domain(format!(
                    "V_{n} is beyond the limit V_{MAX_VN}"
                )));
            }
            let sets = vn_universe(n)?;
            if count {
                return Ok(Report::single("count", sets.len()));
            }
            for s in sets {
                r.line(&s)
                    .record(json!({"set": s.to_string(), "rank": s.rank()}));
            }
        }
        HfCmd::Eval {
            formula: src,
            env,
            search_rank,
        } => {
            let f = parse_bounded(&text_arg(&src)?)?;
            let mut e = Env::new();
            for (k, v) in key_values(&env)? {
                e.insert(k, set(&v)?);
            }
            if f.unbounded.is_empty() {
                let v = eval_delta0(&f, &e)?;
                r.line(tf(v)).record(json!({"value": tf(v)}));
            } else {
                match eval_sigma1_bounded(&f, &e, search_rank)? {
                    Sigma1Verdict::True(w) => {
                        r.line("T");
                        let mut witness = serde_json::Map::new();
                        for (k, v) in &w {
                            r.line(format!("{k}={v}"));
                            witness.insert(k.clone(), json!(v.to_string()));
                        }
                        r.record(json!({"value": "T", "witness": witness}));
                    }
                    Sigma1Verdict::Unknown => {
                        r.line(format!("UNKNOWN: no witness of rank below {search_rank}"))
                            .record(json!({"value": "UNKNOWN"}));
                    }
                }
            }
        }
        HfCmd::Pair { left, right } => {
            return Ok(Report::single("set", hf_pair(&set(&left)?, &set(&right)?)))
        }
        HfCmd::Crt { moduli, residues } => {
            return Ok(Report::single("solution", crt_solve(&moduli, &residues)?))
        }
        HfCmd::Beta { values, x, y, len } => match (x, y, len) {
            (Some(x), Some(y), Some(len)) => {
                let xs: Vec<String> = (0..len)
                    .map(|i| beta_decode(i, &x, &y).to_string())
                    .collect();
                r.line(xs.join(" ")).record(json!({"values": xs}));
            }
            _ => {
                let (x, y) = beta_encode(&values)?;
                r.line(format!("x={x}"))
                    .line(format!("y={y}"))
                    .record(json!({"x": x.to_string(), "y": y.to_string()}));
            }
        },
        HfCmd::Godel {
            formula: src,
            sig,
            table: file,
            decode,
            sequence,
            prop,
            emit_table,
        } => {
            let t = table(&sig, file.as_deref())?;
            if emit_table {
                r.line(t.to_string().trim_end());
            }
            match (src, decode) {
                (_, Some(n)) => {
                    let f = godel_decode(&n, &t)?;
                    r.line(&f).record(json!({"formula": f.to_string()}));
                }
                (Some(src), None) => {
                    let f = if prop {
                        prop_formula(&parse_prop(&text_arg(&src)?)?)
                    } else {
                        formula(&t.signature(), &src)?
                    };
                    if sequence {
                        let seq = godel_sequence(&f, &t)?;
                        let text: Vec<String> = seq.iter().map(u64::to_string).collect();
                        r.line(text.join(" ")).record(json!({"sequence": seq}));
                    } else {
                        let n = godel_number(&f, &t)?;
                        r.line(&n).record(json!({"number": n.to_string()}));
                    }
                }
                (None, None) if emit_table => {}
                (None, None) => {
                    return Err(CliError::usage(
                        "give a formula, --decode N or --emit-table",
                    ))
                }
            }
        }
        HfCmd::Diag {
            psi,
            chi,
            sig,
            self_apply: own,
        } => {
            let t = table(&sig, None)?;
            let f = formula(&t.signature(), &psi)?;
            let theta = match chi {
                Some(chi) if !own => diagonal_sentence(&f, &chi, &t)?,
                _ => self_apply(&f, &t)?,
            };
            r.line(&theta)
                .record(json!({"sentence": theta.to_string()}));
        }
        HfCmd::Fin { n, structure } => {
            if structure {
                let text = membership_structure(&vn_universe(n)?)?.to_string();
                r.line(text.trim_end()).record(json!({"structure": text}));
            } else {
                for (name, holds) in check_fin_axioms(n)?.as_list() {
                    r.line(format!("{name}: {}", tf(holds)))
                        .record(json!({"axiom": name, "holds": holds}));
                }
            }
        }
    }
    Ok(r)
}
