use std::collections::BTreeSet;

use itertools::Itertools;
use logic_workbench::prop::evaluate;
use logic_workbench::sat::{
    decode_witness, solve, solve_with, Decoded, SatProblem, SolveMode, SolveOutcome,
};
use proptest::prelude::*;

// strict partial order on 0..n: forward pairs, transitively closed
pub fn partial_order(max_n: usize) -> impl Strategy<Value = (usize, BTreeSet<(usize, usize)>)> {
    (1..=max_n).prop_flat_map(|n| {
        let forward: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .collect();
        let len = forward.len();
        // relabel so the order is not always compatible with 0 < 1 < ...
        let perm = Just((0..n).collect::<Vec<usize>>()).prop_shuffle();
        (prop::sample::subsequence(forward, 0..=len), perm).prop_map(move |(chosen, perm)| {
            let order = transitive_closure(n, chosen.into_iter().collect());
            (
                n,
                order.into_iter().map(|(a, b)| (perm[a], perm[b])).collect(),
            )
        })
    })
}

pub fn transitive_closure(n: usize, mut rel: BTreeSet<(usize, usize)>) -> BTreeSet<(usize, usize)> {
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if rel.contains(&(i, k)) && rel.contains(&(k, j)) {
                    rel.insert((i, j));
                }
            }
        }
    }
    rel
}

pub fn graph(max_v: usize) -> impl Strategy<Value = (usize, BTreeSet<(usize, usize)>, usize)> {
    (1..=max_v, 1usize..=3).prop_flat_map(|(v, k)| {
        let all: Vec<(usize, usize)> = (0..v)
            .flat_map(|i| (i + 1..v).map(move |j| (i, j)))
            .collect();
        let len = all.len();
        (
            Just(v),
            prop::sample::subsequence(all, 0..=len).prop_map(|e| e.into_iter().collect()),
            Just(k),
        )
    })
}

pub fn family(
    universe: u64,
    max_sets: usize,
    min_size: usize,
) -> impl Strategy<Value = Vec<BTreeSet<u64>>> {
    prop::collection::vec(
        prop::collection::btree_set(0..universe, min_size..=min_size.max(3)),
        1..=max_sets,
    )
}

pub fn extends(order: &[usize], n: usize, pairs: &BTreeSet<(usize, usize)>) -> bool {
    let mut pos = vec![usize::MAX; n];
    for (i, x) in order.iter().enumerate() {
        if *x >= n || pos[*x] != usize::MAX {
            return false;
        }
        pos[*x] = i;
    }
    order.len() == n && pairs.iter().all(|(a, b)| pos[*a] < pos[*b])
}

pub fn proper(colors: &[usize], edges: &BTreeSet<(usize, usize)>, k: usize) -> bool {
    colors.iter().all(|c| *c < k) && edges.iter().all(|(u, v)| colors[*u] != colors[*v])
}

pub fn is_transversal(choice: &[u64], fam: &[BTreeSet<u64>]) -> bool {
    choice.len() == fam.len()
        && choice.iter().zip(fam).all(|(x, s)| s.contains(x))
        && choice.iter().all_unique()
}

pub fn covers_exactly(chosen: &[usize], points: usize, fam: &[BTreeSet<usize>]) -> bool {
    let mut hits = vec![0; points];
    for i in chosen {
        for x in &fam[*i] {
            hits[*x] += 1;
        }
    }
    hits.iter().all(|h| *h == 1)
}

pub fn splits(y: &BTreeSet<u64>, fam: &[BTreeSet<u64>]) -> bool {
    fam.iter().all(|s| !s.is_disjoint(y) && !s.is_subset(y))
}

/// Like [`solve_checked`] without the exhaustive-mode comparison.
pub fn solve_decoded(p: &SatProblem) -> Option<Decoded> {
    match solve(p).unwrap() {
        SolveOutcome::Unsat => None,
        SolveOutcome::Sat(w) => {
            for c in p.constraints() {
                assert!(evaluate(c, &w).unwrap(), "constraint {c} fails");
            }
            Some(decode_witness(p, &w).unwrap())
        }
    }
}

// Solves, checks the witness against every constraint, and decodes.
pub fn solve_checked(p: &SatProblem) -> Option<Decoded> {
    if p.atoms().len() <= 16 {
        let exhaustive = solve_with(p, SolveMode::Exhaustive).unwrap();
        assert_eq!(solve(p).unwrap().is_sat(), exhaustive.is_sat());
    }
    solve_decoded(p)
}
