use std::collections::BTreeSet;

use super::{Formula, Term};

/// `base` followed by as few primes as needed to avoid every name in `avoid`.
pub fn fresh_variable(base: &str, avoid: &BTreeSet<String>) -> String {
    let mut name = base.to_string();
    while avoid.contains(&name) {
        name.push('\'');
    }
    name
}

fn substitute_term(t: &Term, var: &str, by: &Term) -> Term {
    match t {
        Term::Var(v) if v == var => by.clone(),
        Term::Apply(f, args) => Term::Apply(
            f.clone(),
            args.iter().map(|a| substitute_term(a, var, by)).collect(),
        ),
        _ => t.clone(),
    }
}

/// Replaces the free occurrences of `var` by `by`, priming bound variables
/// that would capture a variable of `by`.
pub fn substitute(f: &Formula, var: &str, by: &Term) -> Formula {
    let by_vars = by.vars();
    subst(f, var, by, &by_vars)
}

fn subst(f: &Formula, var: &str, by: &Term, by_vars: &BTreeSet<String>) -> Formula {
    let rec = |g: &Formula| Box::new(subst(g, var, by, by_vars));
    match f {
        Formula::Eq(a, b) => Formula::Eq(substitute_term(a, var, by), substitute_term(b, var, by)),
        Formula::Rel(r, args) => Formula::Rel(
            r.clone(),
            args.iter().map(|a| substitute_term(a, var, by)).collect(),
        ),
        Formula::Not(g) => Formula::Not(rec(g)),
        Formula::Or(a, b) => Formula::Or(rec(a), rec(b)),
        Formula::And(a, b) => Formula::And(rec(a), rec(b)),
        Formula::Implies(a, b) => Formula::Implies(rec(a), rec(b)),
        Formula::Iff(a, b) => Formula::Iff(rec(a), rec(b)),
        Formula::Exists(y, body) | Formula::Forall(y, body) => {
            let rebuild = |v: String, g: Formula| match f {
                Formula::Exists(..) => Formula::Exists(v, Box::new(g)),
                _ => Formula::Forall(v, Box::new(g)),
            };
            if y == var || !body.free_vars().contains(var) {
                return f.clone();
            }
            if by_vars.contains(y) {
                let mut avoid = body.all_vars();
                avoid.extend(by_vars.iter().cloned());
                avoid.insert(var.to_string());
                let renamed = fresh_variable(y, &avoid);
                let body = substitute(body, y, &Term::Var(renamed.clone()));
                rebuild(renamed, subst(&body, var, by, by_vars))
            } else {
                rebuild(y.clone(), subst(body, var, by, by_vars))
            }
        }
    }
}

/// Equality up to renaming of bound variables.
pub fn alpha_equivalent(a: &Formula, b: &Formula) -> bool {
    alpha(a, b, &mut Vec::new(), &mut Vec::new())
}

fn alpha_term(s: &Term, t: &Term, ls: &[String], rs: &[String]) -> bool {
    match (s, t) {
        (Term::Var(x), Term::Var(y)) => {
            let i = ls.iter().rposition(|v| v == x);
            let j = rs.iter().rposition(|v| v == y);
            match (i, j) {
                (Some(i), Some(j)) => i == j,
                (None, None) => x == y,
                _ => false,
            }
        }
        (Term::Apply(f, xs), Term::Apply(g, ys)) => {
            f == g
                && xs.len() == ys.len()
                && xs.iter().zip(ys).all(|(x, y)| alpha_term(x, y, ls, rs))
        }
        _ => s == t,
    }
}

fn alpha(a: &Formula, b: &Formula, ls: &mut Vec<String>, rs: &mut Vec<String>) -> bool {
    use Formula::*;
    match (a, b) {
        (Eq(s1, t1), Eq(s2, t2)) => alpha_term(s1, s2, ls, rs) && alpha_term(t1, t2, ls, rs),
        (Rel(r, xs), Rel(q, ys)) => {
            r == q
                && xs.len() == ys.len()
                && xs.iter().zip(ys).all(|(x, y)| alpha_term(x, y, ls, rs))
        }
        (Not(x), Not(y)) => alpha(x, y, ls, rs),
        (Or(a1, b1), Or(a2, b2))
        | (And(a1, b1), And(a2, b2))
        | (Implies(a1, b1), Implies(a2, b2))
        | (Iff(a1, b1), Iff(a2, b2)) => alpha(a1, a2, ls, rs) && alpha(b1, b2, ls, rs),
        (Exists(x, f), Exists(y, g)) | (Forall(x, f), Forall(y, g)) => {
            ls.push(x.clone());
            rs.push(y.clone());
            let same = alpha(f, g, ls, rs);
            ls.pop();
            rs.pop();
            same
        }
        _ => false,
    }
}
