use super::semantics::table_values;
use super::{Connective, PropError, PropSentence};

/// Disjunctive normal form built from the satisfying rows of the truth table.
///
/// Rows are visited from all-true down to all-false, and each satisfying row
/// contributes the conjunction of its literals in atom order. A contradiction
/// has no satisfying rows; it is rendered as `(A & ~A)` over its first atom.
pub fn to_dnf(s: &PropSentence) -> Result<PropSentence, PropError> {
    let atoms: Vec<String> = s.atoms().into_iter().collect();
    let values = table_values(s, &atoms)?;
    let k = atoms.len();
    let disjuncts = (0..values.len())
        .rev()
        .filter(|row| values[*row])
        .map(|row| {
            let literals = atoms.iter().enumerate().map(|(i, a)| {
                if (row >> (k - 1 - i)) & 1 == 1 {
                    PropSentence::atom(a.clone())
                } else {
                    PropSentence::not(PropSentence::atom(a.clone()))
                }
            });
            PropSentence::conjunction(literals).expect("sentence has at least one atom")
        });
    Ok(PropSentence::disjunction(disjuncts).unwrap_or_else(|| {
        let first = atoms.first().cloned().unwrap_or_else(|| "P".to_string());
        PropSentence::and(
            PropSentence::atom(first.clone()),
            PropSentence::not(PropSentence::atom(first)),
        )
    }))
}

fn is_literal(s: &PropSentence) -> bool {
    match s {
        PropSentence::Atom(_) => true,
        PropSentence::Not(inner) => matches!(**inner, PropSentence::Atom(_)),
        PropSentence::Binary(..) => false,
    }
}

fn is_conjunction_of_literals(s: &PropSentence) -> bool {
    match s {
        PropSentence::Binary(Connective::And, l, r) => {
            is_conjunction_of_literals(l) && is_conjunction_of_literals(r)
        }
        other => is_literal(other),
    }
}

/// True when `s` is a disjunction of conjunctions of literals.
pub fn is_dnf(s: &PropSentence) -> bool {
    match s {
        PropSentence::Binary(Connective::Or, l, r) => is_dnf(l) && is_dnf(r),
        other => is_conjunction_of_literals(other),
    }
}
