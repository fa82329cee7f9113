use super::{vn_universe, HFSet, HfError, MEMBERSHIP};
use crate::fol::{parse_formula, satisfies, Assignment, FiniteStructure, Formula, Signature};

const AXIOMS: [(&str, &str); 4] = [
    ("Empty Set", "exists x. forall y. ~E(y,x)"),
    (
        "Extensionality",
        "forall x. forall y. (x = y <-> forall z. (E(z,x) <-> E(z,y)))",
    ),
    (
        "Pairing",
        "forall x. forall y. exists z. forall u. (E(u,z) <-> (u = x | u = y))",
    ),
    (
        "Union",
        "forall x. exists y. forall z. (E(z,y) <-> exists u. (E(u,x) & E(z,u)))",
    ),
];

fn signature() -> Signature {
    Signature::new().with_relation(MEMBERSHIP, 2)
}

/// The four axioms of FIN over `E/2`, with their names.
pub fn fin_axioms() -> Vec<(&'static str, Formula)> {
    let sig = signature();
    AXIOMS
        .iter()
        .map(|(name, src)| {
            (
                *name,
                parse_formula(&sig, src).expect("axiom text is well formed"),
            )
        })
        .collect()
}

/// `(universe, in)` as a finite structure over `E/2`; element `i` is
/// `universe[i]`.
pub fn membership_structure(universe: &[HFSet]) -> Result<FiniteStructure, HfError> {
    let mut m = FiniteStructure::new(universe.len(), &signature())?;
    m.define_relation(MEMBERSHIP, |a| universe[a[1]].contains(&universe[a[0]]))?;
    Ok(m)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FinReport {
    pub n: usize,
    pub empty_set: bool,
    pub extensionality: bool,
    pub pairing: bool,
    pub union: bool,
}

impl FinReport {
    pub fn as_list(&self) -> [(&'static str, bool); 4] {
        [
            (AXIOMS[0].0, self.empty_set),
            (AXIOMS[1].0, self.extensionality),
            (AXIOMS[2].0, self.pairing),
            (AXIOMS[3].0, self.union),
        ]
    }
}

/// Evaluates each FIN axiom in `(V_n, in)` for `1 <= n <= 4`.
pub fn check_fin_axioms(n: usize) -> Result<FinReport, HfError> {
    if !(1..=4).contains(&n) {
        return Err(HfError::FinRange(n));
    }
    let m = membership_structure(&vn_universe(n)?)?;
    let mut truth = [false; 4];
    for (slot, (_, ax)) in truth.iter_mut().zip(fin_axioms()) {
        *slot = satisfies(&m, &ax, &Assignment::new())?;
    }
    Ok(FinReport {
        n,
        empty_set: truth[0],
        extensionality: truth[1],
        pairing: truth[2],
        union: truth[3],
    })
}
