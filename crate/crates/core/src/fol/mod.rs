//! First-order syntax and finite-structure semantics.
//!
//! Formulas keep the derived connectives (`&`, `->`, `<->`, `forall`) as
//! their own nodes; [`Formula::expand_abbreviations`] rewrites them into the
//! primitive `~`, `|`, `exists` forms. Satisfaction is defined through
//! variable assignments rather than by naming every element with a constant;
//! on finite structures the two readings agree.

mod iso;
mod parse;
mod semantics;
mod structure;
mod subst;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigUint;
use thiserror::Error;

pub use iso::{find_isomorphism, MAX_ISO_SIZE};
pub use parse::{parse_formula, parse_term};
pub use semantics::{eval_term, models_theory, satisfies, Assignment, TheoryCheck};
pub use structure::{enumerate_structures, reduct, FiniteStructure};
pub use subst::{alpha_equivalent, fresh_variable, substitute};

/// Name of the constant that numerals count up from.
pub const NUMERAL_ZERO: &str = "zero";
/// Name of the unary successor symbol used by numerals.
pub const NUMERAL_SUCC: &str = "S";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FolError {
    #[error("syntax error at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),
    #[error("`{name}` expects {expected} argument(s), got {found}")]
    ArityMismatch {
        name: String,
        expected: usize,
        found: usize,
    },
    #[error("`{name}` is a {found}, expected a {expected}")]
    WrongKind {
        name: String,
        expected: SymbolKind,
        found: SymbolKind,
    },
    #[error("bad signature entry `{0}`")]
    BadSignature(String),
    #[error("free variable `{0}` has no value")]
    UnassignedVariable(String),
    #[error("value {value} for `{name}` is outside the universe of size {size}")]
    OutOfUniverse {
        name: String,
        value: usize,
        size: usize,
    },
    #[error("axiom {index} is not a sentence")]
    NotASentence { index: usize },
    #[error("symbol `{0}` is not in the larger signature with the same kind and arity")]
    NotASubsignature(String),
    #[error("structures have different signatures")]
    SignatureMismatch,
    #[error("structure size {size} exceeds the limit of {limit}")]
    TooLarge { size: usize, limit: usize },
    #[error("structure line {line}: {message}")]
    StructureFile { line: usize, message: String },
    #[error("universe must have at least one element")]
    EmptyUniverse,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SymbolKind {
    Relation,
    Function,
    Constant,
}

impl fmt::Display for SymbolKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SymbolKind::Relation => "relation",
            SymbolKind::Function => "function",
            SymbolKind::Constant => "constant",
        })
    }
}

/// Non-logical symbols with their kinds and arities. Equality is implicit.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Signature {
    symbols: BTreeMap<String, (SymbolKind, usize)>,
}

impl Signature {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_relation(mut self, name: &str, arity: usize) -> Self {
        self.symbols
            .insert(name.to_string(), (SymbolKind::Relation, arity));
        self
    }

    pub fn with_function(mut self, name: &str, arity: usize) -> Self {
        self.symbols
            .insert(name.to_string(), (SymbolKind::Function, arity));
        self
    }

    pub fn with_constant(mut self, name: &str) -> Self {
        self.symbols
            .insert(name.to_string(), (SymbolKind::Constant, 0));
        self
    }

    /// Adds or replaces a symbol; constants are forced to arity 0.
    pub fn insert(&mut self, name: &str, kind: SymbolKind, arity: usize) {
        let arity = if kind == SymbolKind::Constant {
            0
        } else {
            arity
        };
        self.symbols.insert(name.to_string(), (kind, arity));
    }

    pub fn get(&self, name: &str) -> Option<(SymbolKind, usize)> {
        self.symbols.get(name).copied()
    }

    pub fn contains(&self, name: &str) -> bool {
        self.symbols.contains_key(name)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, SymbolKind, usize)> {
        self.symbols.iter().map(|(n, (k, a))| (n.as_str(), *k, *a))
    }

    pub fn of_kind(&self, kind: SymbolKind) -> impl Iterator<Item = (&str, usize)> {
        self.iter()
            .filter(move |(_, k, _)| *k == kind)
            .map(|(n, _, a)| (n, a))
    }

    pub fn is_subsignature_of(&self, other: &Signature) -> Result<(), FolError> {
        for (name, kind, arity) in self.iter() {
            if other.get(name) != Some((kind, arity)) {
                return Err(FolError::NotASubsignature(name.to_string()));
            }
        }
        Ok(())
    }

    /// Merges `other` into `self`; entries of `other` win on conflict.
    pub fn extend(&mut self, other: &Signature) {
        for (name, kind, arity) in other.iter() {
            self.insert(name, kind, arity);
        }
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .iter()
            .map(|(n, k, a)| match k {
                SymbolKind::Relation => format!("{n}/{a}"),
                SymbolKind::Function => format!("fn {n}/{a}"),
                SymbolKind::Constant => format!("const {n}"),
            })
            .collect();
        f.write_str(&parts.join(", "))
    }
}

impl std::str::FromStr for Signature {
    type Err = FolError;

    /// Parses `R/2, fn f/1, const c`: relations by default, `fn` marks a
    /// function and `const` a constant.
    fn from_str(s: &str) -> Result<Self, FolError> {
        let mut sig = Signature::new();
        for entry in s.split(',').map(str::trim).filter(|e| !e.is_empty()) {
            let bad = || FolError::BadSignature(entry.to_string());
            let words: Vec<&str> = entry.split_whitespace().collect();
            let (kind, spec) = match words.as_slice() {
                ["const", name] => {
                    sig.insert(name, SymbolKind::Constant, 0);
                    continue;
                }
                ["fn", spec] => (SymbolKind::Function, *spec),
                ["rel", spec] | [spec] => (SymbolKind::Relation, *spec),
                _ => return Err(bad()),
            };
            let (name, arity) = spec.split_once('/').ok_or_else(bad)?;
            let arity: usize = arity.parse().map_err(|_| bad())?;
            if name.is_empty() || !name.chars().all(|c| c.is_alphanumeric() || c == '_') {
                return Err(bad());
            }
            sig.insert(name, kind, arity);
        }
        Ok(sig)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Term {
    Var(String),
    Const(String),
    Apply(String, Vec<Term>),
    /// The numeral `S(S(...S(zero)...))` with the given number of `S`s,
    /// kept in compact form.
    Numeral(BigUint),
}

impl Term {
    pub fn var(name: &str) -> Self {
        Term::Var(name.to_string())
    }

    pub fn constant(name: &str) -> Self {
        Term::Const(name.to_string())
    }

    pub fn apply(name: &str, args: Vec<Term>) -> Self {
        Term::Apply(name.to_string(), args)
    }

    pub fn vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut BTreeSet<String>) {
        match self {
            Term::Var(v) => {
                out.insert(v.clone());
            }
            Term::Apply(_, args) => args.iter().for_each(|a| a.collect_vars(out)),
            Term::Const(_) | Term::Numeral(_) => {}
        }
    }

    pub fn is_ground(&self) -> bool {
        match self {
            Term::Var(_) => false,
            Term::Apply(_, args) => args.iter().all(Term::is_ground),
            Term::Const(_) | Term::Numeral(_) => true,
        }
    }

    /// Nesting depth of function applications; constants have depth 0.
    pub fn depth(&self) -> usize {
        match self {
            Term::Apply(_, args) => 1 + args.iter().map(Term::depth).max().unwrap_or(0),
            _ => 0,
        }
    }

    fn collect_symbols(&self, sig: &mut Signature) {
        match self {
            Term::Var(_) => {}
            Term::Const(c) => sig.insert(c, SymbolKind::Constant, 0),
            Term::Apply(f, args) => {
                sig.insert(f, SymbolKind::Function, args.len());
                args.iter().for_each(|a| a.collect_symbols(sig));
            }
            Term::Numeral(_) => {
                sig.insert(NUMERAL_ZERO, SymbolKind::Constant, 0);
                sig.insert(NUMERAL_SUCC, SymbolKind::Function, 1);
            }
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Var(v) | Term::Const(v) => f.write_str(v),
            Term::Numeral(n) => write!(f, "{n}"),
            Term::Apply(name, args) => {
                write!(f, "{name}(")?;
                for (i, a) in args.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{a}")?;
                }
                f.write_str(")")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Formula {
    Eq(Term, Term),
    Rel(String, Vec<Term>),
    Not(Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
    Iff(Box<Formula>, Box<Formula>),
    Exists(String, Box<Formula>),
    Forall(String, Box<Formula>),
}

impl Formula {
    pub fn eq(a: Term, b: Term) -> Self {
        Formula::Eq(a, b)
    }

    pub fn rel(name: &str, args: Vec<Term>) -> Self {
        Formula::Rel(name.to_string(), args)
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(f: Formula) -> Self {
        Formula::Not(Box::new(f))
    }

    pub fn or(a: Formula, b: Formula) -> Self {
        Formula::Or(Box::new(a), Box::new(b))
    }

    pub fn and(a: Formula, b: Formula) -> Self {
        Formula::And(Box::new(a), Box::new(b))
    }

    pub fn implies(a: Formula, b: Formula) -> Self {
        Formula::Implies(Box::new(a), Box::new(b))
    }

    pub fn iff(a: Formula, b: Formula) -> Self {
        Formula::Iff(Box::new(a), Box::new(b))
    }

    pub fn exists(v: &str, f: Formula) -> Self {
        Formula::Exists(v.to_string(), Box::new(f))
    }

    pub fn forall(v: &str, f: Formula) -> Self {
        Formula::Forall(v.to_string(), Box::new(f))
    }

    /// Variables with at least one free occurrence.
    pub fn free_vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_free(&mut Vec::new(), &mut out);
        out
    }

    fn collect_free(&self, bound: &mut Vec<String>, out: &mut BTreeSet<String>) {
        let mut terms = |ts: &[&Term]| {
            for t in ts {
                for v in t.vars() {
                    if !bound.contains(&v) {
                        out.insert(v);
                    }
                }
            }
        };
        match self {
            Formula::Eq(a, b) => terms(&[a, b]),
            Formula::Rel(_, args) => terms(&args.iter().collect::<Vec<_>>()),
            Formula::Not(g) => g.collect_free(bound, out),
            Formula::Or(a, b)
            | Formula::And(a, b)
            | Formula::Implies(a, b)
            | Formula::Iff(a, b) => {
                a.collect_free(bound, out);
                b.collect_free(bound, out);
            }
            Formula::Exists(v, g) | Formula::Forall(v, g) => {
                bound.push(v.clone());
                g.collect_free(bound, out);
                bound.pop();
            }
        }
    }

    pub fn is_sentence(&self) -> bool {
        self.free_vars().is_empty()
    }

    /// Every variable name occurring anywhere, bound or free.
    pub fn all_vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.visit(&mut |f| match f {
            Formula::Eq(a, b) => {
                out.extend(a.vars());
                out.extend(b.vars());
            }
            Formula::Rel(_, args) => args.iter().for_each(|t| out.extend(t.vars())),
            Formula::Exists(v, _) | Formula::Forall(v, _) => {
                out.insert(v.clone());
            }
            _ => {}
        });
        out
    }

    /// Pre-order traversal.
    pub fn visit(&self, f: &mut impl FnMut(&Formula)) {
        f(self);
        match self {
            Formula::Eq(..) | Formula::Rel(..) => {}
            Formula::Not(g) | Formula::Exists(_, g) | Formula::Forall(_, g) => g.visit(f),
            Formula::Or(a, b)
            | Formula::And(a, b)
            | Formula::Implies(a, b)
            | Formula::Iff(a, b) => {
                a.visit(f);
                b.visit(f);
            }
        }
    }

    pub fn is_quantifier_free(&self) -> bool {
        let mut qf = true;
        self.visit(&mut |f| {
            if matches!(f, Formula::Exists(..) | Formula::Forall(..)) {
                qf = false;
            }
        });
        qf
    }

    pub fn has_equality(&self) -> bool {
        let mut eq = false;
        self.visit(&mut |f| {
            if matches!(f, Formula::Eq(..)) {
                eq = true;
            }
        });
        eq
    }

    pub fn quantifier_depth(&self) -> usize {
        match self {
            Formula::Eq(..) | Formula::Rel(..) => 0,
            Formula::Not(g) => g.quantifier_depth(),
            Formula::Or(a, b)
            | Formula::And(a, b)
            | Formula::Implies(a, b)
            | Formula::Iff(a, b) => a.quantifier_depth().max(b.quantifier_depth()),
            Formula::Exists(_, g) | Formula::Forall(_, g) => 1 + g.quantifier_depth(),
        }
    }

    /// Smallest signature covering every symbol used, with kinds and arities
    /// as they occur.
    pub fn symbols(&self) -> Signature {
        let mut sig = Signature::new();
        self.visit(&mut |f| match f {
            Formula::Eq(a, b) => {
                a.collect_symbols(&mut sig);
                b.collect_symbols(&mut sig);
            }
            Formula::Rel(r, args) => {
                sig.insert(r, SymbolKind::Relation, args.len());
                args.iter().for_each(|t| t.collect_symbols(&mut sig));
            }
            _ => {}
        });
        sig
    }

    /// Rewrites `&`, `->`, `<->` and `forall` into `~`, `|` and `exists`.
    pub fn expand_abbreviations(&self) -> Formula {
        use Formula::*;
        match self {
            Eq(..) | Rel(..) => self.clone(),
            Not(g) => Formula::not(g.expand_abbreviations()),
            Or(a, b) => Formula::or(a.expand_abbreviations(), b.expand_abbreviations()),
            And(a, b) => Formula::not(Formula::or(
                Formula::not(a.expand_abbreviations()),
                Formula::not(b.expand_abbreviations()),
            )),
            Implies(a, b) => Formula::or(
                Formula::not(a.expand_abbreviations()),
                b.expand_abbreviations(),
            ),
            Iff(a, b) => {
                let (a, b) = (a.expand_abbreviations(), b.expand_abbreviations());
                let forward = Formula::or(Formula::not(a.clone()), b.clone());
                let backward = Formula::or(Formula::not(b), a);
                Formula::not(Formula::or(Formula::not(forward), Formula::not(backward)))
            }
            Exists(v, g) => Formula::exists(v, g.expand_abbreviations()),
            Forall(v, g) => {
                Formula::not(Formula::exists(v, Formula::not(g.expand_abbreviations())))
            }
        }
    }

    // True when the printed form ends in a quantifier body that would swallow
    // a following binary operator.
    fn ends_open(&self) -> bool {
        match self {
            Formula::Exists(..) | Formula::Forall(..) => true,
            Formula::Not(g) => g.ends_open(),
            _ => false,
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let binary = |f: &mut fmt::Formatter<'_>, a: &Formula, op: &str, b: &Formula| {
            if a.ends_open() {
                write!(f, "(({a}) {op} {b})")
            } else {
                write!(f, "({a} {op} {b})")
            }
        };
        match self {
            Formula::Eq(a, b) => write!(f, "{a} = {b}"),
            Formula::Rel(r, args) if args.is_empty() => f.write_str(r),
            Formula::Rel(r, args) => {
                write!(f, "{r}(")?;
                for (i, a) in args.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{a}")?;
                }
                f.write_str(")")
            }
            Formula::Not(g) => write!(f, "~{g}"),
            Formula::Or(a, b) => binary(f, a, "|", b),
            Formula::And(a, b) => binary(f, a, "&", b),
            Formula::Implies(a, b) => binary(f, a, "->", b),
            Formula::Iff(a, b) => binary(f, a, "<->", b),
            Formula::Exists(v, g) => write!(f, "exists {v}. {g}"),
            Formula::Forall(v, g) => write!(f, "forall {v}. {g}"),
        }
    }
}
