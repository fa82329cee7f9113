use super::prenex::{prenex_of, PrenexFormula, Quantifier};
use super::{require_sentence, NfError};
use crate::fol::{substitute, Formula, Signature, SymbolKind, Term};

/// Replaces each existential of the prenex form, left to right, by a fresh
/// function `sk1`, `sk2`, ... of the universals governing it (a constant
/// when there are none). Returns the universal sentence and `sig` extended
/// with the symbols of `f` and the new ones.
pub fn skolemize(f: &Formula, sig: &Signature) -> Result<(PrenexFormula, Signature), NfError> {
    require_sentence(f)?;
    let mut sig = sig.clone();
    sig.extend(&f.symbols());
    let prenex = prenex_of(f);
    let mut universals: Vec<String> = Vec::new();
    let mut matrix = prenex.matrix;
    let mut counter = 0;
    for (q, v) in prenex.prefix {
        match q {
            Quantifier::Forall => universals.push(v),
            Quantifier::Exists => {
                let name = loop {
                    counter += 1;
                    let candidate = format!("sk{counter}");
                    if !sig.contains(&candidate) {
                        break candidate;
                    }
                };
                let witness = if universals.is_empty() {
                    sig.insert(&name, SymbolKind::Constant, 0);
                    Term::Const(name)
                } else {
                    sig.insert(&name, SymbolKind::Function, universals.len());
                    Term::Apply(
                        name,
                        universals.iter().map(|u| Term::Var(u.clone())).collect(),
                    )
                };
                matrix = substitute(&matrix, &v, &witness);
            }
        }
    }
    let prefix = universals
        .into_iter()
        .map(|v| (Quantifier::Forall, v))
        .collect();
    Ok((PrenexFormula { prefix, matrix }, sig))
}
