use std::collections::BTreeSet;
use std::fmt;

use super::nnf::to_nnf;
use super::{require_sentence, NfError};
use crate::fol::{fresh_variable, substitute, Formula, Term};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Quantifier {
    Forall,
    Exists,
}

/// A quantifier prefix over a quantifier-free matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrenexFormula {
    pub prefix: Vec<(Quantifier, String)>,
    pub matrix: Formula,
}

impl PrenexFormula {
    pub fn to_formula(&self) -> Formula {
        self.prefix
            .iter()
            .rev()
            .fold(self.matrix.clone(), |acc, (q, v)| match q {
                Quantifier::Forall => Formula::forall(v, acc),
                Quantifier::Exists => Formula::exists(v, acc),
            })
    }

    pub fn is_universal(&self) -> bool {
        self.prefix.iter().all(|(q, _)| *q == Quantifier::Forall)
    }
}

impl fmt::Display for PrenexFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_formula())
    }
}

/// Prenex form of a sentence: NNF, bound variables renamed apart with
/// primes, then quantifiers pulled out left to right.
pub fn to_prenex(f: &Formula) -> Result<PrenexFormula, NfError> {
    require_sentence(f)?;
    Ok(prenex_of(f))
}

pub(crate) fn prenex_of(f: &Formula) -> PrenexFormula {
    let mut used: BTreeSet<String> = f.free_vars();
    let renamed = rename_apart(&to_nnf(f), &mut used);
    let mut prefix = Vec::new();
    let matrix = pull(&renamed, &mut prefix);
    PrenexFormula { prefix, matrix }
}

// Gives every binder a distinct name, in pre-order.
fn rename_apart(f: &Formula, used: &mut BTreeSet<String>) -> Formula {
    use Formula::*;
    match f {
        Eq(..) | Rel(..) => f.clone(),
        Not(g) => Formula::not(rename_apart(g, used)),
        And(a, b) => {
            let a = rename_apart(a, used);
            Formula::and(a, rename_apart(b, used))
        }
        Or(a, b) => {
            let a = rename_apart(a, used);
            Formula::or(a, rename_apart(b, used))
        }
        Implies(a, b) => {
            let a = rename_apart(a, used);
            Formula::implies(a, rename_apart(b, used))
        }
        Iff(a, b) => {
            let a = rename_apart(a, used);
            Formula::iff(a, rename_apart(b, used))
        }
        Exists(v, g) | Forall(v, g) => {
            let fresh = fresh_variable(v, used);
            used.insert(fresh.clone());
            let body = if &fresh == v {
                (**g).clone()
            } else {
                substitute(g, v, &Term::Var(fresh.clone()))
            };
            let body = rename_apart(&body, used);
            match f {
                Exists(..) => Formula::exists(&fresh, body),
                _ => Formula::forall(&fresh, body),
            }
        }
    }
}

fn pull(f: &Formula, prefix: &mut Vec<(Quantifier, String)>) -> Formula {
    use Formula::*;
    match f {
        Exists(v, g) => {
            prefix.push((Quantifier::Exists, v.clone()));
            pull(g, prefix)
        }
        Forall(v, g) => {
            prefix.push((Quantifier::Forall, v.clone()));
            pull(g, prefix)
        }
        And(a, b) => {
            let a = pull(a, prefix);
            Formula::and(a, pull(b, prefix))
        }
        Or(a, b) => {
            let a = pull(a, prefix);
            Formula::or(a, pull(b, prefix))
        }
        _ => f.clone(),
    }
}
