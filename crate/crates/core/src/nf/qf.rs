use std::collections::BTreeMap;

use super::NfError;
use crate::fol::{alpha_equivalent, Formula, Term};

/// Largest number of distinct ground atoms [`decide_quantifier_free`] will
/// enumerate.
pub const MAX_QF_ATOMS: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QfVerdict {
    Valid,
    NotValid,
}

fn collect_atoms<'a>(f: &'a Formula, out: &mut Vec<&'a Formula>) {
    match f {
        Formula::Eq(..) | Formula::Rel(..) => {
            if !out.contains(&f) {
                out.push(f);
            }
        }
        Formula::Not(g) => collect_atoms(g, out),
        Formula::Or(a, b) | Formula::And(a, b) | Formula::Implies(a, b) | Formula::Iff(a, b) => {
            collect_atoms(a, out);
            collect_atoms(b, out);
        }
        Formula::Exists(..) | Formula::Forall(..) => unreachable!("checked quantifier-free"),
    }
}

fn eval(f: &Formula, index: &BTreeMap<&Formula, usize>, row: u32) -> bool {
    match f {
        Formula::Eq(..) | Formula::Rel(..) => (row >> index[f]) & 1 == 1,
        Formula::Not(g) => !eval(g, index, row),
        Formula::Or(a, b) => eval(a, index, row) || eval(b, index, row),
        Formula::And(a, b) => eval(a, index, row) && eval(b, index, row),
        Formula::Implies(a, b) => !eval(a, index, row) || eval(b, index, row),
        Formula::Iff(a, b) => eval(a, index, row) == eval(b, index, row),
        Formula::Exists(..) | Formula::Forall(..) => unreachable!("checked quantifier-free"),
    }
}

// Ground terms and their congruence classes.
struct Congruence {
    terms: Vec<Term>,
    ids: BTreeMap<Term, usize>,
}

impl Congruence {
    fn new(atoms: &[&Formula]) -> Self {
        let mut c = Congruence {
            terms: Vec::new(),
            ids: BTreeMap::new(),
        };
        for a in atoms {
            match a {
                Formula::Eq(s, t) => {
                    c.add(s);
                    c.add(t);
                }
                Formula::Rel(_, args) => args.iter().for_each(|t| {
                    c.add(t);
                }),
                _ => {}
            }
        }
        c
    }

    fn add(&mut self, t: &Term) -> usize {
        if let Term::Apply(_, args) = t {
            for a in args {
                self.add(a);
            }
        }
        if let Some(id) = self.ids.get(t) {
            return *id;
        }
        let id = self.terms.len();
        self.terms.push(t.clone());
        self.ids.insert(t.clone(), id);
        id
    }

    // Class representative of every term, given the equations assumed true.
    fn closure(&self, equations: &[(&Term, &Term)]) -> Vec<usize> {
        let n = self.terms.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for (s, t) in equations {
            let (a, b) = (
                find(&mut parent, self.ids[*s]),
                find(&mut parent, self.ids[*t]),
            );
            parent[a] = b;
        }
        loop {
            let mut changed = false;
            for i in 0..n {
                for j in i + 1..n {
                    if let (Term::Apply(f, xs), Term::Apply(g, ys)) =
                        (&self.terms[i], &self.terms[j])
                    {
                        if f == g
                            && xs.len() == ys.len()
                            && find(&mut parent, i) != find(&mut parent, j)
                            && xs.iter().zip(ys).all(|(x, y)| {
                                find(&mut parent, self.ids[x]) == find(&mut parent, self.ids[y])
                            })
                        {
                            let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                            parent[a] = b;
                            changed = true;
                        }
                    }
                }
            }
            if !changed {
                break;
            }
        }
        (0..n).map(|i| find(&mut parent, i)).collect()
    }
}

/// Decides validity of a variable-free, quantifier-free sentence by a truth
/// table over its atoms. With `allow_equality`, rows that contradict the
/// congruence closure of their true equations are skipped; otherwise
/// equations are opaque atoms.
pub fn decide_quantifier_free(f: &Formula, allow_equality: bool) -> Result<QfVerdict, NfError> {
    if !f.is_quantifier_free() || !f.free_vars().is_empty() {
        return Err(NfError::NotGround);
    }
    let mut atoms = Vec::new();
    collect_atoms(f, &mut atoms);
    if atoms.len() > MAX_QF_ATOMS {
        return Err(NfError::TooManyAtoms {
            count: atoms.len(),
            limit: MAX_QF_ATOMS,
        });
    }
    let index: BTreeMap<&Formula, usize> = atoms.iter().enumerate().map(|(i, a)| (*a, i)).collect();
    let congruence = Congruence::new(&atoms);
    for row in 0..1u32 << atoms.len() {
        let value = |i: usize| (row >> i) & 1 == 1;
        if allow_equality {
            let equations: Vec<(&Term, &Term)> = atoms
                .iter()
                .enumerate()
                .filter_map(|(i, a)| match a {
                    Formula::Eq(s, t) if value(i) => Some((s, t)),
                    _ => None,
                })
                .collect();
            let class = congruence.closure(&equations);
            let class_of = |t: &Term| class[congruence.ids[t]];
            let admissible = atoms.iter().enumerate().all(|(i, a)| match a {
                Formula::Eq(s, t) => value(i) || class_of(s) != class_of(t),
                Formula::Rel(r, xs) => atoms.iter().enumerate().all(|(j, b)| match b {
                    Formula::Rel(q, ys) if q == r && xs.len() == ys.len() => {
                        value(i) == value(j)
                            || xs.iter().zip(ys).any(|(x, y)| class_of(x) != class_of(y))
                    }
                    _ => true,
                }),
                _ => true,
            });
            if !admissible {
                continue;
            }
        }
        if !eval(f, &index, row) {
            return Ok(QfVerdict::NotValid);
        }
    }
    Ok(QfVerdict::Valid)
}

/// Whether `conclusion` follows from the premises by one application of
/// modus ponens, matching formulas up to renaming of bound variables.
pub fn check_mp_step(premises: &[Formula], conclusion: &Formula) -> bool {
    premises.iter().any(|p| match p {
        Formula::Implies(psi, rho) => {
            alpha_equivalent(rho, conclusion) && premises.iter().any(|q| alpha_equivalent(q, psi))
        }
        _ => false,
    })
}
