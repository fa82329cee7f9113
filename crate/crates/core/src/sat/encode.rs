use std::collections::{BTreeSet, HashSet};

use super::{ProblemKind, SatError, SatProblem};
use crate::prop::PropSentence;

const FALSUM_ATOM: &str = "BOT";

pub(crate) fn order_atom(a: usize, b: usize) -> String {
    format!("P_{a}_{b}")
}

pub(crate) fn color_atom(v: usize, c: usize) -> String {
    format!("C_{v}_{c}")
}

pub(crate) fn choice_atom(i: usize, x: u64) -> String {
    format!("F_{i}_{x}")
}

pub(crate) fn member_atom(i: usize) -> String {
    format!("S_{i}")
}

pub(crate) fn split_atom(x: u64) -> String {
    format!("Y_{x}")
}

fn atom(name: String) -> PropSentence {
    PropSentence::Atom(name)
}

// Collects atoms in first-use order and supplies an unsatisfiable sentence
// for empty disjunctions.
#[derive(Default)]
struct Builder {
    atoms: Vec<String>,
    constraints: Vec<PropSentence>,
}

impl Builder {
    fn declare(&mut self, name: String) {
        self.atoms.push(name);
    }

    fn require(&mut self, c: PropSentence) {
        self.constraints.push(c);
    }

    fn any_of(&mut self, items: Vec<PropSentence>) {
        match PropSentence::disjunction(items) {
            Some(d) => self.require(d),
            None => {
                self.declare(FALSUM_ATOM.to_string());
                let bot = atom(FALSUM_ATOM.to_string());
                self.require(PropSentence::and(bot.clone(), PropSentence::not(bot)));
            }
        }
    }

    fn not_both(&mut self, a: PropSentence, b: PropSentence) {
        self.require(PropSentence::not(PropSentence::and(a, b)));
    }

    fn finish(self, kind: ProblemKind) -> SatProblem {
        SatProblem::new(self.atoms, self.constraints, kind).expect("encoder declares its atoms")
    }
}

/// Linear orders of `0..n` extending the strict order `pairs`, with one
/// atom `P_a_b` per ordered pair meaning `a <= b`.
pub fn encode_linear_extension(
    n: usize,
    pairs: &BTreeSet<(usize, usize)>,
) -> Result<SatProblem, SatError> {
    for &(i, j) in pairs {
        for v in [i, j] {
            if v >= n {
                return Err(SatError::OutOfRange { value: v, bound: n });
            }
        }
        if i == j {
            return Err(SatError::NotAPartialOrder(format!(
                "({i},{i}) is reflexive"
            )));
        }
    }
    for &(i, j) in pairs {
        for &(k, l) in pairs {
            if j == k && !pairs.contains(&(i, l)) {
                return Err(SatError::NotAPartialOrder(format!(
                    "({i},{j}) and ({j},{l}) without ({i},{l})"
                )));
            }
        }
    }
    let p = |a: usize, b: usize| atom(order_atom(a, b));
    let mut b = Builder::default();
    for x in 0..n {
        for y in 0..n {
            b.declare(order_atom(x, y));
        }
    }
    for x in 0..n {
        b.require(p(x, x));
    }
    for x in 0..n {
        for y in x + 1..n {
            b.require(PropSentence::or(p(x, y), p(y, x)));
            b.not_both(p(x, y), p(y, x));
        }
    }
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if x != y && y != z && x != z {
                    b.require(PropSentence::implies(
                        PropSentence::and(p(x, y), p(y, z)),
                        p(x, z),
                    ));
                }
            }
        }
    }
    for &(i, j) in pairs {
        b.require(p(i, j));
    }
    Ok(b.finish(ProblemKind::LinearExtension { n }))
}

/// Proper `k`-colorings; atom `C_v_c` says vertex `v` has color `c`.
pub fn encode_coloring(
    vertices: usize,
    edges: &BTreeSet<(usize, usize)>,
    k: usize,
) -> Result<SatProblem, SatError> {
    let mut sym = BTreeSet::new();
    for &(i, j) in edges {
        for v in [i, j] {
            if v >= vertices {
                return Err(SatError::OutOfRange {
                    value: v,
                    bound: vertices,
                });
            }
        }
        if i == j {
            return Err(SatError::SelfLoop(i));
        }
        sym.insert((i.min(j), i.max(j)));
    }
    let c = |v: usize, col: usize| atom(color_atom(v, col));
    let mut b = Builder::default();
    for v in 0..vertices {
        for col in 0..k {
            b.declare(color_atom(v, col));
        }
    }
    for v in 0..vertices {
        b.any_of((0..k).map(|col| c(v, col)).collect());
        for c1 in 0..k {
            for c2 in c1 + 1..k {
                b.not_both(c(v, c1), c(v, c2));
            }
        }
    }
    for &(u, v) in &sym {
        for col in 0..k {
            b.not_both(c(u, col), c(v, col));
        }
    }
    Ok(b.finish(ProblemKind::Coloring {
        vertices,
        colors: k,
    }))
}

/// One-to-one choice functions; atom `F_i_x` says set `i` picks `x`.
pub fn encode_transversal(family: &[BTreeSet<u64>]) -> Result<SatProblem, SatError> {
    if let Some(i) = family.iter().position(|s| s.is_empty()) {
        return Err(SatError::EmptySet(i));
    }
    let f = |i: usize, x: u64| atom(choice_atom(i, x));
    let mut b = Builder::default();
    for (i, set) in family.iter().enumerate() {
        for &x in set {
            b.declare(choice_atom(i, x));
        }
    }
    for (i, set) in family.iter().enumerate() {
        b.any_of(set.iter().map(|x| f(i, *x)).collect());
        let xs: Vec<u64> = set.iter().copied().collect();
        for (a, x) in xs.iter().enumerate() {
            for y in &xs[a + 1..] {
                b.not_both(f(i, *x), f(i, *y));
            }
        }
    }
    for i in 0..family.len() {
        for j in i + 1..family.len() {
            for x in family[i].intersection(&family[j]) {
                b.not_both(f(i, *x), f(j, *x));
            }
        }
    }
    Ok(b.finish(ProblemKind::Transversal {
        family: family.to_vec(),
    }))
}

/// Subfamilies covering every point of `0..points` exactly once; atom `S_i`
/// says set `i` is chosen.
pub fn encode_exact_cover(
    points: usize,
    family: &[BTreeSet<usize>],
) -> Result<SatProblem, SatError> {
    for set in family {
        if let Some(&v) = set.iter().find(|v| **v >= points) {
            return Err(SatError::OutOfRange {
                value: v,
                bound: points,
            });
        }
    }
    let s = |i: usize| atom(member_atom(i));
    let mut b = Builder::default();
    for i in 0..family.len() {
        b.declare(member_atom(i));
    }
    for x in 0..points {
        b.any_of(
            (0..family.len())
                .filter(|i| family[*i].contains(&x))
                .map(s)
                .collect(),
        );
    }
    let mut clashing = HashSet::new();
    for i in 0..family.len() {
        for j in i + 1..family.len() {
            if !family[i].is_disjoint(&family[j]) && clashing.insert((i, j)) {
                b.not_both(s(i), s(j));
            }
        }
    }
    Ok(b.finish(ProblemKind::ExactCover {
        points,
        family: family.to_vec(),
    }))
}

/// Sets `Y` meeting and missing every member of the family; atom `Y_x`
/// says `x` is in `Y`.
pub fn encode_splitting(family: &[BTreeSet<u64>]) -> Result<SatProblem, SatError> {
    if let Some(i) = family.iter().position(|s| s.len() < 2) {
        return Err(SatError::SingletonSet(i));
    }
    let y = |x: u64| atom(split_atom(x));
    let mut b = Builder::default();
    let universe: BTreeSet<u64> = family.iter().flatten().copied().collect();
    for &x in &universe {
        b.declare(split_atom(x));
    }
    for set in family {
        b.any_of(set.iter().map(|x| y(*x)).collect());
        b.any_of(set.iter().map(|x| PropSentence::not(y(*x))).collect());
    }
    Ok(b.finish(ProblemKind::Splitting {
        family: family.to_vec(),
    }))
}
