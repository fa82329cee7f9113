use logic_workbench::prop::{Connective, PropSentence};
use proptest::prelude::*;

pub const ATOMS: [&str; 4] = ["P", "Q", "R", "S"];

pub fn sentence(depth: u32) -> impl Strategy<Value = PropSentence> {
    let leaf = prop::sample::select(&ATOMS[..]).prop_map(PropSentence::atom);
    leaf.prop_recursive(depth, 40, 2, |inner| {
        let conn = prop::sample::select(vec![
            Connective::And,
            Connective::Or,
            Connective::Implies,
            Connective::Iff,
        ]);
        prop_oneof![
            inner.clone().prop_map(PropSentence::not),
            (conn, inner.clone(), inner).prop_map(|(c, a, b)| PropSentence::binary(c, a, b)),
        ]
    })
}

// Reference semantics: atom i of ATOMS is bit i of `row`.
pub fn value(s: &PropSentence, row: u32) -> bool {
    match s {
        PropSentence::Atom(a) => {
            let i = ATOMS.iter().position(|x| x == a).expect("known atom");
            row >> i & 1 == 1
        }
        PropSentence::Not(g) => !value(g, row),
        PropSentence::Binary(c, l, r) => {
            let (a, b) = (value(l, row), value(r, row));
            match c {
                Connective::And => a && b,
                Connective::Or => a || b,
                Connective::Implies => !a || b,
                Connective::Iff => a == b,
            }
        }
    }
}

pub fn table(s: &PropSentence) -> u16 {
    (0..16).fold(0, |m, r| m | (u16::from(value(s, r)) << r))
}

pub fn is_literal(s: &PropSentence) -> bool {
    match s {
        PropSentence::Atom(_) => true,
        PropSentence::Not(g) => matches!(**g, PropSentence::Atom(_)),
        _ => false,
    }
}

pub fn flatten(s: &PropSentence, c: Connective, out: &mut Vec<PropSentence>) {
    match s {
        PropSentence::Binary(d, l, r) if *d == c => {
            flatten(l, c, out);
            flatten(r, c, out);
        }
        other => out.push(other.clone()),
    }
}

pub fn dnf_grammar(s: &PropSentence) -> bool {
    let mut disjuncts = Vec::new();
    flatten(s, Connective::Or, &mut disjuncts);
    disjuncts.iter().all(|d| {
        let mut lits = Vec::new();
        flatten(d, Connective::And, &mut lits);
        lits.iter().all(is_literal)
    })
}
