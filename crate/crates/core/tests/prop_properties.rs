mod common;

use std::collections::BTreeMap;

use logic_workbench::prop::{
    classify, enumerate_truth_functions, equivalent, evaluate, is_adequate, parse_prop, to_dnf,
    truth_table, Classification, PropSentence, TruthEvaluation, TruthFunction,
};
use proptest::prelude::*;

use common::propositional::{dnf_grammar, sentence, table, value, ATOMS};

fn evaluation(row: u32, extra: bool) -> TruthEvaluation {
    let mut e: TruthEvaluation = ATOMS
        .iter()
        .enumerate()
        .map(|(i, a)| (a.to_string(), row >> i & 1 == 1))
        .collect();
    e.insert("Unused".into(), extra);
    e
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn extension_is_unique_and_matches_reference(s in sentence(6)) {
        for row in 0..16 {
            let a = evaluate(&s, &evaluation(row, false)).unwrap();
            let b = evaluate(&s, &evaluation(row, true)).unwrap();
            prop_assert_eq!(a, b);
            prop_assert_eq!(a, value(&s, row));
        }
    }

    #[test]
    fn equivalence_is_validity_of_the_biconditional(a in sentence(4), b in sentence(4)) {
        let eq = equivalent(&a, &b).unwrap();
        prop_assert_eq!(eq, table(&a) == table(&b));
        let iff = classify(&PropSentence::iff(a, b)).unwrap();
        prop_assert_eq!(eq, iff == Classification::Validity);
    }

    #[test]
    fn classification_matches_reference(s in sentence(5)) {
        let t = table(&s);
        let n = s.atoms().len();
        // only rows over the sentence's own atoms matter, but the full table is an
        // extension of them, so all-ones and all-zeros carry over
        let expected = match t {
            0xffff => Classification::Validity,
            0 => Classification::Contradiction,
            _ => Classification::Contingent,
        };
        prop_assert_eq!(classify(&s).unwrap(), expected);
        prop_assert_eq!(truth_table(&s).unwrap().len(), 1 << n);
    }

    #[test]
    fn dnf_has_the_grammar_and_the_table(s in sentence(5)) {
        let d = to_dnf(&s).unwrap();
        prop_assert!(dnf_grammar(&d), "not in DNF: {}", d);
        prop_assert_eq!(table(&d), table(&s));
    }

    #[test]
    fn printer_round_trips(s in sentence(6)) {
        prop_assert_eq!(parse_prop(&s.to_string()).unwrap(), s);
    }

    #[test]
    fn identifying_letters_preserves_validity(a in sentence(4), b in sentence(4)) {
        // validities built from arbitrary parts
        let candidates = [
            PropSentence::or(a.clone(), PropSentence::not(a.clone())),
            PropSentence::implies(a.clone(), PropSentence::implies(b.clone(), a.clone())),
            PropSentence::iff(a.clone(), to_dnf(&a).unwrap()),
            PropSentence::iff(PropSentence::not(PropSentence::and(a.clone(), b.clone())),
                PropSentence::or(PropSentence::not(a.clone()), PropSentence::not(b.clone()))),
            PropSentence::or(a.clone(), b.clone()),
        ];
        for theta in candidates {
            if classify(&theta).unwrap() != Classification::Validity {
                continue;
            }
            for (from, to) in [("P", "Q"), ("Q", "P"), ("R", "S")] {
                let renamed = theta.rename_atom(from, to);
                prop_assert!(!renamed.atoms().contains(from));
                prop_assert_eq!(classify(&renamed).unwrap(), Classification::Validity);
            }
        }
    }
}

// Post's five maximal clones, on tables indexed with argument 0 as the most
// significant bit of the row.
fn post_classes(f: &TruthFunction) -> [bool; 5] {
    let t = f.table();
    let rows = t.len();
    let mask = rows - 1;
    let preserves_false = !t[0];
    let preserves_true = t[mask];
    let self_dual = (0..rows).all(|r| t[r] != t[!r & mask]);
    let monotone = (0..rows).all(|r| (0..rows).all(|s| r & s != r || !t[r] || t[s]));
    let affine = (0..rows).any(|a| {
        (0..2).any(|c| (0..rows).all(|r| t[r] == ((c + (r & a).count_ones() as usize) % 2 == 1)))
    });
    [preserves_false, preserves_true, self_dual, monotone, affine]
}

fn post_adequate(basis: &[TruthFunction]) -> bool {
    (0..5).all(|k| basis.iter().any(|f| !post_classes(f)[k]))
}

#[test]
fn exactly_two_binary_connectives_are_adequate_alone() {
    let all = enumerate_truth_functions(2).unwrap();
    assert_eq!(all.len(), 16);
    let adequate: Vec<&TruthFunction> = all
        .iter()
        .filter(|f| is_adequate(&[(*f).clone()], 2).unwrap())
        .collect();
    assert_eq!(adequate.len(), 2);
    assert!(adequate.contains(&&TruthFunction::nand()));
    assert!(adequate.contains(&&TruthFunction::nor()));
    let oracle = all
        .iter()
        .filter(|f| post_adequate(&[(*f).clone()]))
        .count();
    assert_eq!(oracle, 2);
}

#[test]
fn pairs_of_binary_connectives_match_post() {
    let all = enumerate_truth_functions(2).unwrap();
    let mut adequate_pairs = 0;
    for i in 0..all.len() {
        for j in i..all.len() {
            let basis = [all[i].clone(), all[j].clone()];
            let got = is_adequate(&basis, 2).unwrap();
            assert_eq!(
                got,
                post_adequate(&basis),
                "{:?} {:?}",
                all[i].table(),
                all[j].table()
            );
            adequate_pairs += usize::from(got);
        }
    }
    assert!(adequate_pairs > 2);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn ternary_bases_match_post(tables in prop::collection::vec(prop::collection::vec(any::<bool>(), 8), 1..3)) {
        let basis: Vec<TruthFunction> = tables.into_iter().map(|t| TruthFunction::new(3, t).unwrap()).collect();
        prop_assert_eq!(is_adequate(&basis, 2).unwrap(), post_adequate(&basis));
    }
}

#[test]
fn familiar_bases() {
    let not = TruthFunction::negation();
    let and = TruthFunction::binary_from(|a, b| a && b);
    let or = TruthFunction::binary_from(|a, b| a || b);
    let imp = TruthFunction::binary_from(|a, b| !a || b);
    let iff = TruthFunction::binary_from(|a, b| a == b);
    let cases: BTreeMap<&str, (Vec<TruthFunction>, bool)> = [
        ("not-and", (vec![not.clone(), and.clone()], true)),
        ("not-or", (vec![not.clone(), or.clone()], true)),
        ("not-imp", (vec![not.clone(), imp.clone()], true)),
        ("and-or", (vec![and, or], false)),
        ("not-iff", (vec![not, iff], false)),
        ("imp", (vec![imp], false)),
    ]
    .into_iter()
    .collect();
    for (name, (basis, expected)) in cases {
        assert_eq!(is_adequate(&basis, 3).unwrap(), expected, "{name}");
        assert_eq!(post_adequate(&basis), expected, "{name}");
    }
}
