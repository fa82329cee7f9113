use std::collections::BTreeMap;

use super::{SatError, SatProblem, Witness};
use crate::prop::{Connective, PropSentence};

/// Largest atom count accepted by [`SolveMode::Exhaustive`].
pub const MAX_EXHAUSTIVE_ATOMS: usize = 32;
/// Decision budget used by [`solve`].
pub const DEFAULT_FUEL: u64 = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolveMode {
    /// Scans every assignment, all-false first.
    Exhaustive,
    /// Backtracking search with propagation; `fuel` bounds the number of
    /// search nodes.
    Backtracking { fuel: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolveOutcome {
    Sat(Witness),
    Unsat,
}

impl SolveOutcome {
    pub fn witness(&self) -> Option<&Witness> {
        match self {
            SolveOutcome::Sat(w) => Some(w),
            SolveOutcome::Unsat => None,
        }
    }

    pub fn is_sat(&self) -> bool {
        matches!(self, SolveOutcome::Sat(_))
    }
}

#[derive(Debug, Clone)]
enum Expr {
    Var(usize),
    Not(Box<Expr>),
    Bin(Connective, Box<Expr>, Box<Expr>),
}

impl Expr {
    fn compile(s: &PropSentence, index: &BTreeMap<&str, usize>) -> Expr {
        match s {
            PropSentence::Atom(a) => Expr::Var(index[a.as_str()]),
            PropSentence::Not(inner) => Expr::Not(Box::new(Expr::compile(inner, index))),
            PropSentence::Binary(c, l, r) => Expr::Bin(
                *c,
                Box::new(Expr::compile(l, index)),
                Box::new(Expr::compile(r, index)),
            ),
        }
    }

    // Kleene three-valued evaluation; `None` is undetermined.
    fn eval(&self, assign: &[Option<bool>]) -> Option<bool> {
        match self {
            Expr::Var(i) => assign[*i],
            Expr::Not(e) => e.eval(assign).map(|v| !v),
            Expr::Bin(c, l, r) => {
                let a = l.eval(assign);
                match (c, a) {
                    (Connective::And, Some(false)) => return Some(false),
                    (Connective::Or, Some(true)) => return Some(true),
                    (Connective::Implies, Some(false)) => return Some(true),
                    _ => {}
                }
                let b = r.eval(assign);
                match (c, a, b) {
                    (_, Some(x), Some(y)) => Some(c.apply(x, y)),
                    (Connective::And, _, Some(false)) => Some(false),
                    (Connective::Or, _, Some(true)) => Some(true),
                    (Connective::Implies, _, Some(true)) => Some(true),
                    _ => None,
                }
            }
        }
    }

    fn vars(&self, out: &mut Vec<usize>) {
        match self {
            Expr::Var(i) => out.push(*i),
            Expr::Not(e) => e.vars(out),
            Expr::Bin(_, l, r) => {
                l.vars(out);
                r.vars(out);
            }
        }
    }
}

struct Search {
    constraints: Vec<(Expr, Vec<usize>)>,
    fuel: u64,
    used: u64,
}

enum Step {
    Conflict,
    Fixpoint,
}

impl Search {
    // Forces the value of the single open atom of any constraint that one of
    // its two values would falsify.
    fn propagate(&self, assign: &mut [Option<bool>], trail: &mut Vec<usize>) -> Step {
        loop {
            let mut changed = false;
            for (expr, vars) in &self.constraints {
                match expr.eval(assign) {
                    Some(false) => return Step::Conflict,
                    Some(true) => continue,
                    None => {}
                }
                let mut open = vars.iter().filter(|v| assign[**v].is_none());
                let (Some(&only), None) = (open.next(), open.next()) else {
                    continue;
                };
                assign[only] = Some(true);
                let with_true = expr.eval(assign);
                assign[only] = Some(false);
                let with_false = expr.eval(assign);
                match (with_true, with_false) {
                    (Some(false), Some(false)) => {
                        assign[only] = None;
                        return Step::Conflict;
                    }
                    (Some(false), _) => {
                        trail.push(only);
                        changed = true;
                    }
                    (_, Some(false)) => {
                        assign[only] = Some(true);
                        trail.push(only);
                        changed = true;
                    }
                    _ => assign[only] = None,
                }
            }
            if !changed {
                return Step::Fixpoint;
            }
        }
    }

    fn run(&mut self, assign: &mut Vec<Option<bool>>) -> Result<bool, SatError> {
        self.used += 1;
        if self.used > self.fuel {
            return Err(SatError::FuelExhausted { fuel: self.fuel });
        }
        let mut trail = Vec::new();
        let undo = |assign: &mut Vec<Option<bool>>, trail: &[usize]| {
            for v in trail {
                assign[*v] = None;
            }
        };
        if let Step::Conflict = self.propagate(assign, &mut trail) {
            undo(assign, &trail);
            return Ok(false);
        }
        if self
            .constraints
            .iter()
            .all(|(e, _)| e.eval(assign) == Some(true))
        {
            return Ok(true);
        }
        let Some(next) = assign.iter().position(|v| v.is_none()) else {
            undo(assign, &trail);
            return Ok(false);
        };
        for value in [true, false] {
            assign[next] = Some(value);
            if self.run(assign)? {
                return Ok(true);
            }
        }
        assign[next] = None;
        undo(assign, &trail);
        Ok(false)
    }
}

/// Solves with [`SolveMode::Backtracking`] and [`DEFAULT_FUEL`].
pub fn solve(p: &SatProblem) -> Result<SolveOutcome, SatError> {
    solve_with(p, SolveMode::Backtracking { fuel: DEFAULT_FUEL })
}

pub fn solve_with(p: &SatProblem, mode: SolveMode) -> Result<SolveOutcome, SatError> {
    let atoms = p.atoms();
    let index: BTreeMap<&str, usize> = atoms
        .iter()
        .enumerate()
        .map(|(i, a)| (a.as_str(), i))
        .collect();
    let constraints: Vec<(Expr, Vec<usize>)> = p
        .constraints()
        .iter()
        .map(|c| {
            let e = Expr::compile(c, &index);
            let mut vars = Vec::new();
            e.vars(&mut vars);
            vars.sort_unstable();
            vars.dedup();
            (e, vars)
        })
        .collect();
    let to_witness = |assign: &[Option<bool>]| -> Witness {
        atoms
            .iter()
            .zip(assign)
            .map(|(a, v)| (a.clone(), v.unwrap_or(true)))
            .collect()
    };
    match mode {
        SolveMode::Exhaustive => {
            let k = atoms.len();
            if k > MAX_EXHAUSTIVE_ATOMS {
                return Err(SatError::TooManyAtoms {
                    count: k,
                    limit: MAX_EXHAUSTIVE_ATOMS,
                });
            }
            let mut assign = vec![None; k];
            for row in 0..1u64 << k {
                for (i, slot) in assign.iter_mut().enumerate() {
                    *slot = Some((row >> (k - 1 - i)) & 1 == 1);
                }
                if constraints
                    .iter()
                    .all(|(e, _)| e.eval(&assign) == Some(true))
                {
                    return Ok(SolveOutcome::Sat(to_witness(&assign)));
                }
            }
            Ok(SolveOutcome::Unsat)
        }
        SolveMode::Backtracking { fuel } => {
            let mut search = Search {
                constraints,
                fuel,
                used: 0,
            };
            let mut assign = vec![None; atoms.len()];
            if search.run(&mut assign)? {
                Ok(SolveOutcome::Sat(to_witness(&assign)))
            } else {
                Ok(SolveOutcome::Unsat)
            }
        }
    }
}
