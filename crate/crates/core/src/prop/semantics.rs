use std::collections::BTreeMap;

use super::{PropError, PropSentence};

/// Largest number of atoms for which a full truth table is built.
pub const MAX_TABLE_ATOMS: usize = 24;

/// Assignment of truth values to atoms.
pub type TruthEvaluation = BTreeMap<String, bool>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Classification {
    Validity,
    Contradiction,
    Contingent,
}

impl Classification {
    pub fn label(self) -> &'static str {
        match self {
            Classification::Validity => "VALIDITY",
            Classification::Contradiction => "CONTRADICTION",
            Classification::Contingent => "CONTINGENT",
        }
    }
}

pub fn evaluate(s: &PropSentence, e: &TruthEvaluation) -> Result<bool, PropError> {
    match s {
        PropSentence::Atom(a) => e
            .get(a)
            .copied()
            .ok_or_else(|| PropError::MissingAtom(a.clone())),
        PropSentence::Not(inner) => Ok(!evaluate(inner, e)?),
        PropSentence::Binary(c, l, r) => Ok(c.apply(evaluate(l, e)?, evaluate(r, e)?)),
    }
}

// Evaluates with atoms resolved to indices; bit `k - 1 - i` of `row` is atom i.
fn eval_indexed(s: &PropSentence, index: &BTreeMap<&str, usize>, k: usize, row: u64) -> bool {
    match s {
        PropSentence::Atom(a) => (row >> (k - 1 - index[a.as_str()])) & 1 == 1,
        PropSentence::Not(inner) => !eval_indexed(inner, index, k, row),
        PropSentence::Binary(c, l, r) => c.apply(
            eval_indexed(l, index, k, row),
            eval_indexed(r, index, k, row),
        ),
    }
}

fn guard(count: usize) -> Result<(), PropError> {
    if count > MAX_TABLE_ATOMS {
        Err(PropError::TooManyAtoms {
            count,
            limit: MAX_TABLE_ATOMS,
        })
    } else {
        Ok(())
    }
}

/// Values of `s` on every row, rows in lexicographic order with F < T and
/// the alphabetically first atom most significant.
pub(crate) fn table_values(s: &PropSentence, atoms: &[String]) -> Result<Vec<bool>, PropError> {
    guard(atoms.len())?;
    let index: BTreeMap<&str, usize> = atoms
        .iter()
        .enumerate()
        .map(|(i, a)| (a.as_str(), i))
        .collect();
    for a in s.atoms() {
        if !index.contains_key(a.as_str()) {
            return Err(PropError::MissingAtom(a));
        }
    }
    let k = atoms.len();
    Ok((0..1u64 << k)
        .map(|row| eval_indexed(s, &index, k, row))
        .collect())
}

pub(crate) fn row_evaluation(atoms: &[String], row: u64) -> TruthEvaluation {
    let k = atoms.len();
    atoms
        .iter()
        .enumerate()
        .map(|(i, a)| (a.clone(), (row >> (k - 1 - i)) & 1 == 1))
        .collect()
}

/// One row per assignment to the atoms of `s`.
pub fn truth_table(s: &PropSentence) -> Result<Vec<(TruthEvaluation, bool)>, PropError> {
    let atoms: Vec<String> = s.atoms().into_iter().collect();
    let values = table_values(s, &atoms)?;
    Ok(values
        .into_iter()
        .enumerate()
        .map(|(row, v)| (row_evaluation(&atoms, row as u64), v))
        .collect())
}

pub fn classify(s: &PropSentence) -> Result<Classification, PropError> {
    let atoms: Vec<String> = s.atoms().into_iter().collect();
    let values = table_values(s, &atoms)?;
    Ok(if values.iter().all(|v| *v) {
        Classification::Validity
    } else if values.iter().all(|v| !*v) {
        Classification::Contradiction
    } else {
        Classification::Contingent
    })
}

/// Truth-table equivalence over the union of both atom sets.
pub fn equivalent(a: &PropSentence, b: &PropSentence) -> Result<bool, PropError> {
    let mut atoms = a.atoms();
    atoms.extend(b.atoms());
    let atoms: Vec<String> = atoms.into_iter().collect();
    Ok(table_values(a, &atoms)? == table_values(b, &atoms)?)
}
