//! Finite combinatorial problems as propositional satisfiability.
//!
//! Each encoder produces a [`SatProblem`] tagged with its [`ProblemKind`], so
//! [`decode_witness`] can turn a satisfying assignment back into the
//! combinatorial object without any side information.

mod encode;
mod instance;
mod solver;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

use crate::prop::{evaluate, PropSentence};

pub use encode::{
    encode_coloring, encode_exact_cover, encode_linear_extension, encode_splitting,
    encode_transversal,
};
pub use instance::parse_instance;
pub use solver::{solve, solve_with, SolveMode, SolveOutcome, DEFAULT_FUEL, MAX_EXHAUSTIVE_ATOMS};

/// A satisfying (or candidate) assignment.
pub type Witness = BTreeMap<String, bool>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SatError {
    #[error("search exhausted its fuel of {fuel} nodes")]
    FuelExhausted { fuel: u64 },
    #[error("{count} atoms exceed the exhaustive-search limit of {limit}")]
    TooManyAtoms { count: usize, limit: usize },
    #[error("constraint mentions undeclared atom `{0}`")]
    UndeclaredAtom(String),
    #[error("relation is not the strict part of a partial order: {0}")]
    NotAPartialOrder(String),
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),
    #[error("element {value} out of range 0..{bound}")]
    OutOfRange { value: usize, bound: usize },
    #[error("set {0} of the family is empty")]
    EmptySet(usize),
    #[error("set {0} of the family has fewer than two elements")]
    SingletonSet(usize),
    #[error("witness does not satisfy the problem")]
    UnsatisfyingWitness,
    #[error("instance line {line}: {message}")]
    Instance { line: usize, message: String },
}

/// Which encoder produced a problem, with the data needed to decode it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ProblemKind {
    Plain,
    LinearExtension {
        n: usize,
    },
    Coloring {
        vertices: usize,
        colors: usize,
    },
    Transversal {
        family: Vec<BTreeSet<u64>>,
    },
    ExactCover {
        points: usize,
        family: Vec<BTreeSet<usize>>,
    },
    Splitting {
        family: Vec<BTreeSet<u64>>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SatProblem {
    atoms: Vec<String>,
    constraints: Vec<PropSentence>,
    kind: ProblemKind,
}

impl SatProblem {
    /// Builds a problem; every atom of the constraints must be declared.
    pub fn new(
        atoms: Vec<String>,
        constraints: Vec<PropSentence>,
        kind: ProblemKind,
    ) -> Result<Self, SatError> {
        let mut seen = BTreeSet::new();
        let atoms: Vec<String> = atoms
            .into_iter()
            .filter(|a| seen.insert(a.clone()))
            .collect();
        for c in &constraints {
            if let Some(a) = c.atoms().into_iter().find(|a| !seen.contains(a)) {
                return Err(SatError::UndeclaredAtom(a));
            }
        }
        Ok(SatProblem {
            atoms,
            constraints,
            kind,
        })
    }

    /// A plain problem whose atoms are those of the constraints, sorted.
    pub fn from_constraints(constraints: Vec<PropSentence>) -> Self {
        let atoms: BTreeSet<String> = constraints.iter().flat_map(|c| c.atoms()).collect();
        SatProblem {
            atoms: atoms.into_iter().collect(),
            constraints,
            kind: ProblemKind::Plain,
        }
    }

    pub fn atoms(&self) -> &[String] {
        &self.atoms
    }

    pub fn constraints(&self) -> &[PropSentence] {
        &self.constraints
    }

    pub fn kind(&self) -> &ProblemKind {
        &self.kind
    }

    pub fn is_satisfied_by(&self, w: &Witness) -> bool {
        self.atoms.iter().all(|a| w.contains_key(a))
            && self
                .constraints
                .iter()
                .all(|c| evaluate(c, w).unwrap_or(false))
    }
}

/// The combinatorial object carried by a witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Decoded {
    /// Elements listed from least to greatest.
    Order(Vec<usize>),
    /// Color of each vertex.
    Coloring(Vec<usize>),
    /// Chosen element of each set.
    Choice(Vec<u64>),
    /// Indices of the chosen sets.
    Subfamily(Vec<usize>),
    /// The splitting set.
    Split(BTreeSet<u64>),
    Assignment(Witness),
}

impl fmt::Display for Decoded {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn join<T: fmt::Display>(xs: impl IntoIterator<Item = T>) -> String {
            xs.into_iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        }
        match self {
            Decoded::Order(xs) => write!(f, "order={}", join(xs)),
            Decoded::Coloring(cs) => {
                let lines: Vec<String> = cs
                    .iter()
                    .enumerate()
                    .map(|(v, c)| format!("vertex{v}={c}"))
                    .collect();
                f.write_str(&lines.join("\n"))
            }
            Decoded::Choice(xs) => {
                let lines: Vec<String> = xs
                    .iter()
                    .enumerate()
                    .map(|(i, x)| format!("set{i}={x}"))
                    .collect();
                f.write_str(&lines.join("\n"))
            }
            Decoded::Subfamily(xs) => write!(f, "chosen={}", join(xs)),
            Decoded::Split(y) => write!(f, "split={}", join(y)),
            Decoded::Assignment(w) => {
                let lines: Vec<String> = w
                    .iter()
                    .map(|(a, v)| format!("{a}={}", if *v { "T" } else { "F" }))
                    .collect();
                f.write_str(&lines.join("\n"))
            }
        }
    }
}

/// Decodes a satisfying witness according to the problem's tag.
pub fn decode_witness(p: &SatProblem, w: &Witness) -> Result<Decoded, SatError> {
    if !p.is_satisfied_by(w) {
        return Err(SatError::UnsatisfyingWitness);
    }
    Ok(match &p.kind {
        ProblemKind::Plain => Decoded::Assignment(w.clone()),
        ProblemKind::LinearExtension { n } => {
            let n = *n;
            // a <= b holds for exactly (number of elements below b) + 1 values of a
            let mut order: Vec<usize> = (0..n).collect();
            order.sort_by_key(|b| (0..n).filter(|a| w[&encode::order_atom(*a, *b)]).count());
            Decoded::Order(order)
        }
        ProblemKind::Coloring { vertices, colors } => Decoded::Coloring(
            (0..*vertices)
                .map(|v| {
                    (0..*colors)
                        .find(|c| w[&encode::color_atom(v, *c)])
                        .expect("at-least-one constraint holds")
                })
                .collect(),
        ),
        ProblemKind::Transversal { family } => Decoded::Choice(
            family
                .iter()
                .enumerate()
                .map(|(i, set)| {
                    *set.iter()
                        .find(|x| w[&encode::choice_atom(i, **x)])
                        .expect("at-least-one constraint holds")
                })
                .collect(),
        ),
        ProblemKind::ExactCover { family, .. } => Decoded::Subfamily(
            (0..family.len())
                .filter(|i| w[&encode::member_atom(*i)])
                .collect(),
        ),
        ProblemKind::Splitting { family } => Decoded::Split(
            family
                .iter()
                .flatten()
                .copied()
                .filter(|x| w[&encode::split_atom(*x)])
                .collect(),
        ),
    })
}
