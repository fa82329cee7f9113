//! Normal forms for first-order sentences and a Herbrand-expansion search
//! for validity.

mod herbrand;
mod nnf;
mod prenex;
mod qf;
mod skolem;

use thiserror::Error;

use crate::fol::FolError;
use crate::sat::SatError;

pub use herbrand::{
    herbrand_universe, herbrand_validity, HerbrandCertificate, HerbrandOutcome, INJECTED_CONSTANT,
};
pub use nnf::{is_nnf, to_nnf};
pub use prenex::{to_prenex, PrenexFormula, Quantifier};
pub use qf::{check_mp_step, decide_quantifier_free, QfVerdict, MAX_QF_ATOMS};
pub use skolem::skolemize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NfError {
    #[error("formula is not a sentence; free variables: {0}")]
    NotASentence(String),
    #[error("equality is not supported here")]
    EqualityPresent,
    #[error("formula is not quantifier-free and variable-free")]
    NotGround,
    #[error("{count} distinct atoms exceed the limit of {limit}")]
    TooManyAtoms { count: usize, limit: usize },
    #[error(transparent)]
    Fol(#[from] FolError),
    #[error(transparent)]
    Sat(#[from] SatError),
}

pub(crate) fn require_sentence(f: &crate::fol::Formula) -> Result<(), NfError> {
    let free = f.free_vars();
    if free.is_empty() {
        Ok(())
    } else {
        Err(NfError::NotASentence(
            free.into_iter().collect::<Vec<_>>().join(", "),
        ))
    }
}
