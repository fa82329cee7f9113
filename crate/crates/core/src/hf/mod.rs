//! Hereditarily finite sets, bounded formulas over `(HF, in)`, the theory
//! FIN on truncations `V_n`, Chinese remaindering, beta coding and Gödel
//! numbering with the diagonal construction.

mod arith;
mod bounded;
mod fin;
mod godel;
mod set;

use thiserror::Error;

use crate::fol::FolError;

pub use arith::{beta_decode, beta_encode, crt_solve};
pub use bounded::{
    eval_delta0, eval_sigma1_bounded, parse_bounded, BoundedFormula, Delta0, Env, Sigma1Verdict,
    MAX_SEARCH, MEMBERSHIP,
};
pub use fin::{check_fin_axioms, fin_axioms, membership_structure, FinReport};
pub use godel::{
    diagonal_sentence, godel_decode, godel_number, godel_sequence, prop_formula, self_apply,
    SymbolTable, FIRST_SYMBOL_CODE,
};
pub use set::{hf_pair, vn_universe, HFSet, MAX_VN};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HfError {
    #[error("V_{n} is too large to enumerate (limit {limit})")]
    TooLarge { n: usize, limit: usize },
    #[error("syntax error at {pos}: {message}")]
    Syntax { pos: usize, message: String },
    #[error("quantifier over `{0}` is not bounded")]
    UnboundedQuantifier(String),
    #[error("variable `{0}` has no value")]
    UnassignedVariable(String),
    #[error("a variable may not bound its own quantifier: `{0}`")]
    SelfBound(String),
    #[error("witness search over {tuples} tuples exceeds the limit")]
    SearchTooLarge { tuples: u128 },
    #[error("FIN is checked on V_1 .. V_4 only, not V_{0}")]
    FinRange(usize),
    #[error("{moduli} moduli but {residues} residues")]
    LengthMismatch { moduli: usize, residues: usize },
    #[error("modulus {0} is zero")]
    ZeroModulus(usize),
    #[error("residue {0} is not below its modulus")]
    ResidueOutOfRange(usize),
    #[error("moduli {0} and {1} are not relatively prime")]
    NotCoprime(usize, usize),
    #[error("the sequence is empty")]
    EmptySequence,
    #[error("symbol `{0}` is not in the symbol table")]
    UnregisteredSymbol(String),
    #[error("not the Gödel number of a formula")]
    NotACode,
    #[error("expected exactly one free variable, found {0}")]
    FreeVariables(usize),
    #[error("numerals need a constant `zero` and a unary function `S` in the table")]
    NoNumeralSymbols,
    #[error("`{0}` is not a binary relation in the table")]
    NotABinaryRelation(String),
    #[error("symbol table line {line}: {message}")]
    SymbolTable { line: usize, message: String },
    #[error(transparent)]
    Fol(#[from] FolError),
}

impl From<crate::coding::NotACode> for HfError {
    fn from(_: crate::coding::NotACode) -> Self {
        HfError::NotACode
    }
}
