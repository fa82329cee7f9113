#![allow(dead_code)]

use logic_workbench::fol::{FiniteStructure, Formula, Signature, SymbolKind, Term};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub mod ordinals;
pub mod propositional;
pub mod sat;

pub fn small_signature() -> Signature {
    "R/2, P/1, fn f/1, const c".parse().unwrap()
}

pub const VARS: [&str; 3] = ["x", "y", "z"];

pub fn term() -> impl Strategy<Value = Term> {
    let leaf = prop_oneof![
        3 => prop::sample::select(&VARS[..]).prop_map(Term::var),
        1 => Just(Term::constant("c")),
    ];
    leaf.prop_recursive(2, 4, 1, |inner| {
        inner.prop_map(|t| Term::apply("f", vec![t]))
    })
}

/// Formulas over [`small_signature`] using every connective.
pub fn formula() -> impl Strategy<Value = Formula> {
    let atom = prop_oneof![
        (term(), term()).prop_map(|(a, b)| Formula::eq(a, b)),
        (term(), term()).prop_map(|(a, b)| Formula::rel("R", vec![a, b])),
        term().prop_map(|a| Formula::rel("P", vec![a])),
    ];
    atom.prop_recursive(4, 24, 2, |inner| {
        let var = prop::sample::select(&VARS[..]);
        prop_oneof![
            inner.clone().prop_map(Formula::not),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::or(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::and(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::implies(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::iff(a, b)),
            (var.clone(), inner.clone()).prop_map(|(v, f)| Formula::exists(v, f)),
            (var, inner).prop_map(|(v, f)| Formula::forall(v, f)),
        ]
    })
}

/// Closes a formula by universally quantifying its free variables.
pub fn close(f: Formula) -> Formula {
    f.free_vars()
        .into_iter()
        .rev()
        .fold(f, |acc, v| Formula::forall(&v, acc))
}

pub fn random_structure(sig: &Signature, size: usize, seed: u64) -> FiniteStructure {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut m = FiniteStructure::new(size, sig).unwrap();
    for (name, kind, _) in sig.iter() {
        match kind {
            SymbolKind::Relation => m.define_relation(name, |_| rng.gen_bool(0.5)).unwrap(),
            SymbolKind::Function => m.define_function(name, |_| rng.gen_range(0..size)).unwrap(),
            SymbolKind::Constant => m.set_constant(name, rng.gen_range(0..size)).unwrap(),
        }
    }
    m
}

pub fn structure(sig: Signature, max_size: usize) -> impl Strategy<Value = FiniteStructure> {
    (1..=max_size, any::<u64>()).prop_map(move |(n, seed)| random_structure(&sig, n, seed))
}

pub fn corpus_signature() -> Signature {
    "R/2, fn f/1".parse().unwrap()
}

/// The 50-odd sentences of `data/sentences.txt`.
pub fn sentence_corpus() -> Vec<Formula> {
    include_str!("../data/sentences.txt")
        .lines()
        .filter(|l| !l.trim().is_empty() && !l.starts_with('#'))
        .map(|l| logic_workbench::fol::parse_formula(&corpus_signature(), l).unwrap())
        .collect()
}

pub fn validity_signature() -> Signature {
    "P/1, Q/1, R/2, fn f/1".parse().unwrap()
}

/// Equality-free valid sentences.
pub const CURATED_VALIDITIES: [&str; 10] = [
    "exists x. (P(x) -> forall y. P(y))",
    "exists x. (P(x) | ~P(x))",
    "(forall x. P(x)) -> exists x. P(x)",
    "(exists x. forall y. R(x,y)) -> forall y. exists x. R(x,y)",
    "(forall x. (P(x) -> Q(x))) -> ((forall x. P(x)) -> forall x. Q(x))",
    "exists x. ((exists y. P(y)) -> P(x))",
    "~exists x. forall y. (R(y,x) <-> ~R(y,y))",
    "(forall x. R(x,x)) -> forall x. exists y. R(x,y)",
    "((forall x. P(x)) | (forall x. Q(x))) -> forall x. (P(x) | Q(x))",
    "exists x. (P(x) -> P(f(x)))",
];

/// Whether `f` has a model with exactly `size` elements over `sig`.
pub fn has_model(f: &Formula, sig: &Signature, size: usize) -> bool {
    logic_workbench::fol::enumerate_structures(sig, size)
        .unwrap()
        .any(|m| logic_workbench::fol::satisfies(&m, f, &Default::default()).unwrap())
}

pub fn has_countermodel(f: &Formula, max_size: usize) -> bool {
    let negated = Formula::not(f.clone());
    let sig = f.symbols();
    (1..=max_size).any(|n| has_model(&negated, &sig, n))
}

/// `n` distinct formulas from [`formula`], the same on every run.
pub fn formula_corpus(n: usize) -> Vec<Formula> {
    use proptest::strategy::ValueTree;
    use proptest::test_runner::TestRunner;
    let mut runner = TestRunner::deterministic();
    let strategy = formula();
    let mut seen = std::collections::BTreeSet::new();
    let mut out = Vec::new();
    while out.len() < n {
        let f = strategy.new_tree(&mut runner).unwrap().current();
        if seen.insert(f.clone()) {
            out.push(f);
        }
    }
    out
}

/// Free variables of the random bounded formulas; `x` and `y` are also
/// quantified.
pub const HF_VARS: [&str; 4] = ["a", "b", "x", "y"];

pub fn delta0() -> impl Strategy<Value = logic_workbench::hf::Delta0> {
    use logic_workbench::hf::Delta0;
    let var = || prop::sample::select(&HF_VARS[..]).prop_map(str::to_string);
    let leaf = prop_oneof![
        (var(), var()).prop_map(|(u, v)| Delta0::In(u, v)),
        (var(), var()).prop_map(|(u, v)| Delta0::Eq(u, v)),
    ];
    leaf.prop_recursive(4, 24, 2, move |inner| {
        let bound = prop::sample::select(&["x", "y"][..]);
        prop_oneof![
            inner.clone().prop_map(|f| Delta0::Not(Box::new(f))),
            (inner.clone(), inner.clone()).prop_map(|(f, g)| Delta0::Or(Box::new(f), Box::new(g))),
            (inner.clone(), inner.clone()).prop_map(|(f, g)| Delta0::And(Box::new(f), Box::new(g))),
            (inner.clone(), inner.clone())
                .prop_map(|(f, g)| Delta0::Implies(Box::new(f), Box::new(g))),
            (bound.clone(), var(), inner.clone(), any::<bool>()).prop_map(
                |(x, y, f, universal)| {
                    // a variable never bounds its own quantifier
                    let y = if x == y { "a".to_string() } else { y };
                    if universal {
                        Delta0::ForallIn(x.to_string(), y, Box::new(f))
                    } else {
                        Delta0::ExistsIn(x.to_string(), y, Box::new(f))
                    }
                }
            ),
        ]
    })
}

pub fn godel_table() -> logic_workbench::hf::SymbolTable {
    let mut sig: Signature = small_signature();
    sig.extend(&"fn S/1, const zero".parse().unwrap());
    logic_workbench::hf::SymbolTable::from_signature(&sig)
}

fn numeral_in_term(t: &Term) -> Option<num_bigint::BigUint> {
    match t {
        Term::Numeral(n) => Some(n.clone()),
        Term::Apply(_, args) => args.iter().find_map(numeral_in_term),
        Term::Var(_) | Term::Const(_) => None,
    }
}

/// A numeral occurring anywhere in the terms of `f`.
pub fn numeral_in(f: &Formula) -> Option<num_bigint::BigUint> {
    let mut found = None;
    f.visit(&mut |g: &Formula| {
        let terms: Vec<&Term> = match g {
            Formula::Rel(_, args) => args.iter().collect(),
            Formula::Eq(a, b) => vec![a, b],
            _ => Vec::new(),
        };
        if found.is_none() {
            found = terms.into_iter().find_map(numeral_in_term);
        }
    });
    found
}
