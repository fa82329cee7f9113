use crate::fol::Formula;

/// Negation normal form: only `&`, `|`, quantifiers and negated atoms.
/// `->` and `<->` are eliminated.
pub fn to_nnf(f: &Formula) -> Formula {
    nnf(f, true)
}

fn nnf(f: &Formula, positive: bool) -> Formula {
    use Formula::*;
    match f {
        Eq(..) | Rel(..) => {
            if positive {
                f.clone()
            } else {
                Formula::not(f.clone())
            }
        }
        Not(g) => nnf(g, !positive),
        And(a, b) if positive => Formula::and(nnf(a, true), nnf(b, true)),
        And(a, b) => Formula::or(nnf(a, false), nnf(b, false)),
        Or(a, b) if positive => Formula::or(nnf(a, true), nnf(b, true)),
        Or(a, b) => Formula::and(nnf(a, false), nnf(b, false)),
        Implies(a, b) if positive => Formula::or(nnf(a, false), nnf(b, true)),
        Implies(a, b) => Formula::and(nnf(a, true), nnf(b, false)),
        Iff(a, b) if positive => Formula::and(
            Formula::or(nnf(a, false), nnf(b, true)),
            Formula::or(nnf(a, true), nnf(b, false)),
        ),
        Iff(a, b) => Formula::or(
            Formula::and(nnf(a, true), nnf(b, false)),
            Formula::and(nnf(a, false), nnf(b, true)),
        ),
        Exists(v, g) if positive => Formula::exists(v, nnf(g, true)),
        Exists(v, g) => Formula::forall(v, nnf(g, false)),
        Forall(v, g) if positive => Formula::forall(v, nnf(g, true)),
        Forall(v, g) => Formula::exists(v, nnf(g, false)),
    }
}

/// Whether negation is applied only to atoms and no `->` or `<->` occurs.
pub fn is_nnf(f: &Formula) -> bool {
    use Formula::*;
    match f {
        Eq(..) | Rel(..) => true,
        Not(g) => matches!(**g, Eq(..) | Rel(..)),
        And(a, b) | Or(a, b) => is_nnf(a) && is_nnf(b),
        Implies(..) | Iff(..) => false,
        Exists(_, g) | Forall(_, g) => is_nnf(g),
    }
}
