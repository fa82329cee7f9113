mod common;

use std::cmp::Ordering;

use logic_workbench::ordinal::{goodstein_run, parse_ordinal, CnfOrdinal};
use num_bigint::BigUint;
use proptest::prelude::*;

use common::ordinals::ordinal;

fn nat(n: u64) -> CnfOrdinal {
    CnfOrdinal::from(n)
}

// Ordinals below w^w as coefficient vectors, index = exponent.
mod poly {
    pub type P = Vec<u64>;

    fn trim(mut p: P) -> P {
        while p.last() == Some(&0) {
            p.pop();
        }
        p
    }

    fn lead(p: &P) -> Option<usize> {
        p.iter().rposition(|c| *c != 0)
    }

    pub fn add(a: &P, b: &P) -> P {
        let Some(k) = lead(b) else {
            return trim(a.clone());
        };
        let mut out = vec![0; a.len().max(b.len())];
        for (i, c) in a.iter().enumerate() {
            if i > k {
                out[i] = *c;
            }
        }
        out[k] = a.get(k).copied().unwrap_or(0) + b[k];
        out[..k].copy_from_slice(&b[..k]);
        trim(out)
    }

    // a * b as a sum over b's terms from the top: a*(w^j*c) = w^(lead a + j)*c
    // for j > 0, and a*c keeps a's tail.
    pub fn mul(a: &P, b: &P) -> P {
        let Some(la) = lead(a) else { return Vec::new() };
        let mut acc: P = Vec::new();
        for j in (0..b.len()).rev() {
            if b[j] == 0 {
                continue;
            }
            let mut part = vec![0; la + j + 1];
            if j > 0 {
                part[la + j] = b[j];
            } else {
                part[..=la].copy_from_slice(&a[..=la]);
                part[la] = a[la] * b[0];
            }
            acc = add(&acc, &part);
        }
        acc
    }

    pub fn cmp(a: &P, b: &P) -> std::cmp::Ordering {
        let (a, b) = (trim(a.clone()), trim(b.clone()));
        a.len()
            .cmp(&b.len())
            .then_with(|| a.iter().rev().cmp(b.iter().rev()))
    }
}

fn to_poly(o: &CnfOrdinal) -> poly::P {
    let mut p = Vec::new();
    for (e, c) in o.terms() {
        let k: usize = e.as_natural().unwrap().try_into().unwrap();
        if p.len() <= k {
            p.resize(k + 1, 0);
        }
        p[k] = c.try_into().unwrap();
    }
    p
}

fn small() -> BoxedStrategy<CnfOrdinal> {
    // exponents are naturals: below w^w
    proptest::collection::vec((0u64..4, 1u64..4), 0..4)
        .prop_map(|ts| {
            let mut ts = ts;
            ts.sort_by_key(|t| std::cmp::Reverse(t.0));
            ts.dedup_by(|a, b| a.0 == b.0);
            CnfOrdinal::from_terms(ts.into_iter().map(|(e, c)| (nat(e), BigUint::from(c))))
        })
        .boxed()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn addition_associative(a in ordinal(3), b in ordinal(3), c in ordinal(3)) {
        prop_assert_eq!(a.add(&b.add(&c)), a.add(&b).add(&c));
    }

    #[test]
    fn multiplication_associative(a in ordinal(3), b in ordinal(3), c in ordinal(3)) {
        prop_assert_eq!(a.mul(&b.mul(&c)), a.mul(&b).mul(&c));
    }

    #[test]
    fn left_distributive(a in ordinal(3), b in ordinal(3), c in ordinal(3)) {
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
    }

    #[test]
    fn addition_strictly_monotone_on_the_right(a in ordinal(3), b in ordinal(3), c in ordinal(3)) {
        prop_assert_eq!(b < c, a.add(&b) < a.add(&c));
    }

    #[test]
    fn left_cancellation(a in ordinal(3), b in ordinal(3), c in ordinal(3)) {
        prop_assert_eq!(a.add(&b) == a.add(&c), b == c);
        if !a.is_zero() {
            prop_assert_eq!(a.mul(&b) == a.mul(&c), b == c);
        }
    }

    #[test]
    fn exponent_laws(a in ordinal(2), b in ordinal(2), c in ordinal(2)) {
        prop_assert_eq!(a.pow(&b.add(&c)), a.pow(&b).mul(&a.pow(&c)));
        prop_assert_eq!(a.pow(&b).pow(&c), a.pow(&b.mul(&c)));
    }

    #[test]
    fn successor_clauses(a in ordinal(3), b in ordinal(3)) {
        let b1 = b.add(&nat(1));
        prop_assert_eq!(a.add(&b1), a.add(&b).add(&nat(1)));
        prop_assert_eq!(a.mul(&b1), a.mul(&b).add(&a));
        prop_assert_eq!(a.pow(&b1), a.pow(&b).mul(&a));
    }

    #[test]
    fn divmod_reconstructs(a in ordinal(3), b in ordinal(3)) {
        match a.divmod(&b) {
            Ok((q, r)) => {
                prop_assert_eq!(b.mul(&q).add(&r), a);
                prop_assert_eq!(r.compare(&b), Ordering::Less);
            }
            Err(_) => prop_assert!(b.is_zero()),
        }
    }

    #[test]
    fn compare_is_a_total_order(a in ordinal(3), b in ordinal(3), c in ordinal(3)) {
        prop_assert_eq!(a.compare(&b), b.compare(&a).reverse());
        prop_assert_eq!(a.compare(&b) == Ordering::Equal, a == b);
        if a <= b && b <= c {
            prop_assert!(a <= c);
        }
    }

    #[test]
    fn printer_round_trips(a in ordinal(3)) {
        prop_assert_eq!(parse_ordinal(&a.to_string()).unwrap(), a);
    }

    #[test]
    fn indecomposables_absorb_smaller_summands(a in ordinal(3), b in ordinal(3)) {
        if !a.is_zero() && a.is_indecomposable().unwrap() && b < a {
            prop_assert_eq!(b.add(&a), a.clone());
        }
        // a sum of two smaller parts never gives an indecomposable
        if !a.is_zero() && !b.is_zero() {
            let s = a.add(&b);
            if a < s && b < s {
                prop_assert!(!s.is_indecomposable().unwrap());
            }
        }
    }

    #[test]
    fn naturals_agree_with_bignums(x in 0u64..200, y in 0u64..200, e in 0u32..6) {
        let (a, b) = (nat(x), nat(y));
        prop_assert_eq!(a.add(&b), nat(x + y));
        prop_assert_eq!(a.mul(&b), nat(x * y));
        prop_assert_eq!(a.pow(&nat(e as u64)), CnfOrdinal::nat(BigUint::from(x).pow(e)));
        prop_assert_eq!(a.cmp(&b), x.cmp(&y));
        if let Some(q) = x.checked_div(y) {
            prop_assert_eq!(a.divmod(&b).unwrap(), (nat(q), nat(x % y)));
        }
    }

    #[test]
    fn below_omega_to_the_omega_agrees_with_coefficient_vectors(a in small(), b in small()) {
        prop_assert_eq!(to_poly(&a.add(&b)), poly::add(&to_poly(&a), &to_poly(&b)));
        prop_assert_eq!(to_poly(&a.mul(&b)), poly::mul(&to_poly(&a), &to_poly(&b)));
        prop_assert_eq!(a.compare(&b), poly::cmp(&to_poly(&a), &to_poly(&b)));
    }

    #[test]
    fn goodstein_majorant_decreases(m in 1u64..16, base in 2u64..6) {
        let run = goodstein_run(&BigUint::from(m), &BigUint::from(base), 200).unwrap();
        for pair in run.rows.windows(2) {
            prop_assert!(pair[1].ordinal < pair[0].ordinal, "{} then {}", pair[0].ordinal, pair[1].ordinal);
        }
    }
}

#[test]
fn five_ordinals_sorted() {
    let o = |s: &str| parse_ordinal(s).unwrap();
    // (w+w)(w^w) = w*2*w^w = w*w^w = w^(1+w) = w^w
    let a = o("(w+w)*(w^w)");
    // w*w^w = w^w, so the sum is w^w*2
    let b = o("w*w^w + w*w^w");
    // w^w*w = w^(w+1), and w*w^w = w^w
    let c = o("w^w*w + w*w^w");
    // (w^w)(w*2) = w^(w+1)*2
    let d = o("(w^w)*(w+w)");
    // w^(w+1) + w^(w+1)
    let e = o("w^w*w + w^w*w");
    assert_eq!(a, o("w^w"));
    assert_eq!(b, o("w^w*2"));
    assert_eq!(c, o("w^{w+1} + w^w"));
    assert_eq!(d, o("w^{w+1}*2"));
    assert_eq!(d, e);
    assert!(a < b && b < c && c < d);
}

#[test]
fn mirrored_division_can_fail() {
    // w = g*2 + d with d < 2 has no solution: finite g gives a finite
    // right side, and g >= w gives g*2 >= w*2 > w.
    let w = CnfOrdinal::omega();
    for g in (0..50)
        .map(nat)
        .chain([w.clone(), w.add(&nat(1)), w.mul(&nat(2))])
    {
        for d in [nat(0), nat(1)] {
            assert_ne!(g.mul(&nat(2)).add(&d), w);
        }
    }
    // the left-handed version always succeeds
    assert_eq!(w.divmod(&nat(2)).unwrap(), (w.clone(), nat(0)));
}
