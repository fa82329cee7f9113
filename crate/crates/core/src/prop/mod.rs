//! Propositional logic: syntax, truth-table semantics, normal forms and
//! truth-function adequacy.
//!
//! Sentences are built from named atoms with `~`, `&`, `|`, `->` and `<->`.
//! The concrete grammar accepts unparenthesized input with the precedence
//! `~` > `&` > `|` > `->` > `<->` (the last two associate to the right); the
//! printer always emits the fully parenthesized form.

mod connectives;
mod dnf;
mod parse;
mod semantics;

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

pub use connectives::{enumerate_truth_functions, is_adequate, TruthFunction, MAX_ADEQUACY_ARITY};
pub use dnf::{is_dnf, to_dnf};
pub use parse::parse_prop;
pub use semantics::{
    classify, equivalent, evaluate, truth_table, Classification, TruthEvaluation, MAX_TABLE_ATOMS,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PropError {
    #[error("syntax error at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("unknown operator `{op}` at offset {offset}")]
    UnknownOperator { offset: usize, op: String },
    #[error("truth evaluation has no value for atom `{0}`")]
    MissingAtom(String),
    #[error("{count} atoms exceed the truth-table limit of {limit}")]
    TooManyAtoms { count: usize, limit: usize },
    #[error("arity {arity} exceeds the limit of {limit}")]
    ArityTooLarge { arity: usize, limit: usize },
    #[error("truth table of length {len} does not match arity {arity}")]
    BadTable { arity: usize, len: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Connective {
    And,
    Or,
    Implies,
    Iff,
}

impl Connective {
    pub fn symbol(self) -> &'static str {
        match self {
            Connective::And => "&",
            Connective::Or => "|",
            Connective::Implies => "->",
            Connective::Iff => "<->",
        }
    }

    pub fn apply(self, a: bool, b: bool) -> bool {
        match self {
            Connective::And => a && b,
            Connective::Or => a || b,
            Connective::Implies => !a || b,
            Connective::Iff => a == b,
        }
    }
}

/// A propositional sentence over named atoms.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PropSentence {
    Atom(String),
    Not(Box<PropSentence>),
    Binary(Connective, Box<PropSentence>, Box<PropSentence>),
}

impl PropSentence {
    pub fn atom(name: impl Into<String>) -> Self {
        PropSentence::Atom(name.into())
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(s: PropSentence) -> Self {
        PropSentence::Not(Box::new(s))
    }

    pub fn binary(c: Connective, l: PropSentence, r: PropSentence) -> Self {
        PropSentence::Binary(c, Box::new(l), Box::new(r))
    }

    pub fn and(l: PropSentence, r: PropSentence) -> Self {
        Self::binary(Connective::And, l, r)
    }

    pub fn or(l: PropSentence, r: PropSentence) -> Self {
        Self::binary(Connective::Or, l, r)
    }

    pub fn implies(l: PropSentence, r: PropSentence) -> Self {
        Self::binary(Connective::Implies, l, r)
    }

    pub fn iff(l: PropSentence, r: PropSentence) -> Self {
        Self::binary(Connective::Iff, l, r)
    }

    /// Right-nested conjunction `(a1 & (a2 & ...))`; `None` when empty.
    pub fn conjunction(items: impl IntoIterator<Item = PropSentence>) -> Option<Self> {
        Self::fold_right(Connective::And, items)
    }

    /// Right-nested disjunction `(a1 | (a2 | ...))`; `None` when empty.
    pub fn disjunction(items: impl IntoIterator<Item = PropSentence>) -> Option<Self> {
        Self::fold_right(Connective::Or, items)
    }

    fn fold_right(c: Connective, items: impl IntoIterator<Item = PropSentence>) -> Option<Self> {
        let items: Vec<_> = items.into_iter().collect();
        let mut iter = items.into_iter().rev();
        let last = iter.next()?;
        Some(iter.fold(last, |acc, item| Self::binary(c, item, acc)))
    }

    /// Atoms occurring in the sentence, sorted by name.
    pub fn atoms(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_atoms(&mut out);
        out
    }

    fn collect_atoms(&self, out: &mut BTreeSet<String>) {
        match self {
            PropSentence::Atom(a) => {
                out.insert(a.clone());
            }
            PropSentence::Not(s) => s.collect_atoms(out),
            PropSentence::Binary(_, l, r) => {
                l.collect_atoms(out);
                r.collect_atoms(out);
            }
        }
    }

    /// Replaces every occurrence of atom `from` by `to`.
    pub fn rename_atom(&self, from: &str, to: &str) -> PropSentence {
        match self {
            PropSentence::Atom(a) if a == from => PropSentence::Atom(to.to_string()),
            PropSentence::Atom(_) => self.clone(),
            PropSentence::Not(s) => PropSentence::not(s.rename_atom(from, to)),
            PropSentence::Binary(c, l, r) => {
                PropSentence::binary(*c, l.rename_atom(from, to), r.rename_atom(from, to))
            }
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            PropSentence::Atom(_) => 0,
            PropSentence::Not(s) => 1 + s.depth(),
            PropSentence::Binary(_, l, r) => 1 + l.depth().max(r.depth()),
        }
    }
}

impl fmt::Display for PropSentence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PropSentence::Atom(a) => f.write_str(a),
            PropSentence::Not(s) => write!(f, "~{s}"),
            PropSentence::Binary(c, l, r) => write!(f, "({l} {} {r})", c.symbol()),
        }
    }
}

impl std::str::FromStr for PropSentence {
    type Err = PropError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_prop(s)
    }
}
