mod common;

use common::{close, formula, small_signature, structure, term, VARS};
use logic_workbench::fol::{
    eval_term, find_isomorphism, parse_formula, satisfies, substitute, Assignment, FiniteStructure,
    Formula, Signature,
};
use proptest::prelude::*;

fn assignments(size: usize) -> impl Iterator<Item = Assignment> {
    (0..size.pow(3)).map(move |i| {
        VARS.iter()
            .enumerate()
            .map(|(k, v)| (v.to_string(), (i / size.pow(k as u32)) % size))
            .collect()
    })
}

// Duplicator's winning condition for the Ehrenfeucht-Fraisse game: the
// pebbled elements must form a partial isomorphism.
fn partial_iso(m1: &FiniteStructure, m2: &FiniteStructure, a: &[usize], b: &[usize]) -> bool {
    for i in 0..a.len() {
        for j in 0..a.len() {
            if (a[i] == a[j]) != (b[i] == b[j]) {
                return false;
            }
            if m1.holds("R", &[a[i], a[j]]) != m2.holds("R", &[b[i], b[j]]) {
                return false;
            }
        }
    }
    true
}

fn duplicator_wins(
    m1: &FiniteStructure,
    m2: &FiniteStructure,
    a: &mut Vec<usize>,
    b: &mut Vec<usize>,
    rounds: usize,
) -> bool {
    if !partial_iso(m1, m2, a, b) {
        return false;
    }
    if rounds == 0 {
        return true;
    }
    for x in 0..m1.size() {
        a.push(x);
        let answered = (0..m2.size()).any(|y| {
            b.push(y);
            let ok = duplicator_wins(m1, m2, a, b, rounds - 1);
            b.pop();
            ok
        });
        a.pop();
        if !answered {
            return false;
        }
    }
    for y in 0..m2.size() {
        b.push(y);
        let answered = (0..m1.size()).any(|x| {
            a.push(x);
            let ok = duplicator_wins(m1, m2, a, b, rounds - 1);
            a.pop();
            ok
        });
        b.pop();
        if !answered {
            return false;
        }
    }
    true
}

fn permutation(n: usize, seed: u64) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    let mut s = seed;
    for i in (1..n).rev() {
        s = s
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        p.swap(i, (s >> 33) as usize % (i + 1));
    }
    p
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn printing_round_trips(f in formula()) {
        let printed = f.to_string();
        prop_assert_eq!(parse_formula(&small_signature(), &printed).unwrap(), f);
    }

    #[test]
    fn substitution_lemma(f in formula(), t in term(), m in structure(small_signature(), 3)) {
        let g = substitute(&f, "x", &t);
        for a in assignments(m.size()) {
            let mut shifted = a.clone();
            shifted.insert("x".into(), eval_term(&m, &t, &a).unwrap());
            prop_assert_eq!(satisfies(&m, &g, &a).unwrap(), satisfies(&m, &f, &shifted).unwrap());
        }
    }

    #[test]
    fn free_variables_after_substitution(f in formula(), t in term()) {
        prop_assume!(f.free_vars().contains("x"));
        let mut expected = f.free_vars();
        expected.remove("x");
        expected.extend(t.vars());
        prop_assert_eq!(substitute(&f, "x", &t).free_vars(), expected);
    }

    #[test]
    fn derived_connectives_agree_with_expansions(f in formula(), m in structure(small_signature(), 3)) {
        let expanded = f.expand_abbreviations();
        for a in assignments(m.size()) {
            prop_assert_eq!(satisfies(&m, &f, &a).unwrap(), satisfies(&m, &expanded, &a).unwrap());
        }
    }

    #[test]
    fn isomorphisms_preserve_sentences(
        m in structure(small_signature(), 4),
        seed in any::<u64>(),
        sentences in prop::collection::vec(formula().prop_map(close), 10),
    ) {
        let relabelled = m.permuted(&permutation(m.size(), seed));
        let j = find_isomorphism(&m, &relabelled).unwrap();
        prop_assert!(j.is_some());
        prop_assert_eq!(m.permuted(&j.unwrap()), relabelled.clone());
        for s in sentences.iter().filter(|s| s.quantifier_depth() <= 3) {
            let a = Assignment::new();
            prop_assert_eq!(satisfies(&m, s, &a).unwrap(), satisfies(&relabelled, s, &a).unwrap());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(120))]

    // Agreement on all sentences of quantifier depth d is decided by the
    // d-round game; with d the universe size it forces an isomorphism.
    #[test]
    fn elementary_equivalence_forces_isomorphism(
        m1 in structure("R/2".parse::<Signature>().unwrap(), 4),
        m2 in structure("R/2".parse::<Signature>().unwrap(), 4),
        relabel in any::<bool>(),
        seed in any::<u64>(),
    ) {
        let m2 = if relabel { m1.permuted(&permutation(m1.size(), seed)) } else { m2 };
        let rounds = m1.size().max(m2.size());
        let equivalent = duplicator_wins(&m1, &m2, &mut Vec::new(), &mut Vec::new(), rounds);
        let iso = find_isomorphism(&m1, &m2).unwrap();
        if equivalent {
            prop_assert!(iso.is_some());
        }
        if let Some(j) = iso {
            prop_assert!(equivalent);
            prop_assert_eq!(m1.permuted(&j), m2);
        }
    }
}

#[test]
fn substitution_avoids_capture_semantically() {
    // naive replacement would turn the free y into a bound one
    let sig: Signature = "R/2".parse().unwrap();
    let f = parse_formula(&sig, "exists y. R(x,y)").unwrap();
    let naive = parse_formula(&sig, "exists y. R(y,y)").unwrap();
    let good = substitute(&f, "x", &logic_workbench::fol::Term::var("y"));
    let mut m = FiniteStructure::new(2, &sig).unwrap();
    m.set_holds("R", &[0, 1], true).unwrap();
    let a: Assignment = [("y".to_string(), 0)].into();
    assert!(satisfies(&m, &good, &a).unwrap());
    assert!(!satisfies(&m, &naive, &a).unwrap());
}

#[test]
fn reduct_preserves_sentences_of_the_smaller_language() {
    let full = small_signature();
    let sub: Signature = "R/2, fn f/1".parse().unwrap();
    let corpus = [
        "forall x. exists y. R(x,f(y))",
        "exists x. R(f(x), x) -> forall y. R(y,y)",
        "forall x. (f(f(x)) = x <-> R(x,x))",
    ];
    for seed in 0..50 {
        let m = common::random_structure(&full, 1 + seed as usize % 3, seed);
        let r = logic_workbench::fol::reduct(&m, &sub).unwrap();
        for src in corpus {
            let s: Formula = parse_formula(&sub, src).unwrap();
            let a = Assignment::new();
            assert_eq!(
                satisfies(&m, &s, &a).unwrap(),
                satisfies(&r, &s, &a).unwrap(),
                "{src}"
            );
        }
    }
}
