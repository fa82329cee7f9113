use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use super::{FiniteStructure, FolError, Formula, SymbolKind, Term, NUMERAL_SUCC, NUMERAL_ZERO};

/// Values of variables; entries for variables that are not free are ignored.
pub type Assignment = BTreeMap<String, usize>;

/// Outcome of checking a structure against a list of axioms.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TheoryCheck {
    /// Index of the first axiom that fails, if any.
    pub first_failure: Option<usize>,
}

impl TheoryCheck {
    pub fn holds(&self) -> bool {
        self.first_failure.is_none()
    }
}

struct Env<'a> {
    m: &'a FiniteStructure,
    stack: Vec<(&'a str, usize)>,
}

impl<'a> Env<'a> {
    fn var(&self, v: &str) -> usize {
        self.stack
            .iter()
            .rev()
            .find(|(n, _)| *n == v)
            .map(|(_, x)| *x)
            .expect("free variables checked up front")
    }

    fn term(&self, t: &Term) -> usize {
        match t {
            Term::Var(v) => self.var(v),
            Term::Const(c) => self.m.constant(c),
            Term::Apply(f, args) => {
                let vals: Vec<usize> = args.iter().map(|a| self.term(a)).collect();
                self.m.apply(f, &vals)
            }
            Term::Numeral(n) => numeral_value(self.m, n),
        }
    }

    fn eval(&mut self, f: &'a Formula) -> bool {
        match f {
            Formula::Eq(a, b) => self.term(a) == self.term(b),
            Formula::Rel(r, args) => {
                let vals: Vec<usize> = args.iter().map(|a| self.term(a)).collect();
                self.m.holds(r, &vals)
            }
            Formula::Not(g) => !self.eval(g),
            Formula::Or(a, b) => self.eval(a) || self.eval(b),
            Formula::And(a, b) => self.eval(a) && self.eval(b),
            Formula::Implies(a, b) => !self.eval(a) || self.eval(b),
            Formula::Iff(a, b) => self.eval(a) == self.eval(b),
            Formula::Exists(v, g) | Formula::Forall(v, g) => {
                let universal = matches!(f, Formula::Forall(..));
                let mut result = universal;
                for x in 0..self.m.size() {
                    self.stack.push((v, x));
                    let r = self.eval(g);
                    self.stack.pop();
                    if r != universal {
                        result = r;
                        break;
                    }
                }
                result
            }
        }
    }
}

// S applied n times to zero, using the eventual periodicity of the orbit.
fn numeral_value(m: &FiniteStructure, n: &BigUint) -> usize {
    let mut orbit = vec![m.constant(NUMERAL_ZERO)];
    let mut first_seen = vec![usize::MAX; m.size()];
    first_seen[orbit[0]] = 0;
    loop {
        let next = m.apply(NUMERAL_SUCC, &[*orbit.last().unwrap()]);
        if let Some(k) = n.to_usize() {
            if k < orbit.len() {
                return orbit[k];
            }
        }
        if first_seen[next] != usize::MAX {
            let mu = first_seen[next];
            let lambda = orbit.len() - mu;
            let offset = ((n - BigUint::from(mu)) % BigUint::from(lambda))
                .to_usize()
                .expect("below period");
            return orbit[mu + offset];
        }
        first_seen[next] = orbit.len();
        orbit.push(next);
    }
}

fn check_symbols(m: &FiniteStructure, f: &Formula) -> Result<(), FolError> {
    for (name, kind, arity) in f.symbols().iter() {
        match m.signature().get(name) {
            None => return Err(FolError::UnknownSymbol(name.to_string())),
            Some((k, _)) if k != kind => {
                return Err(FolError::WrongKind {
                    name: name.to_string(),
                    expected: kind,
                    found: k,
                })
            }
            Some((_, a)) if a != arity && kind != SymbolKind::Constant => {
                return Err(FolError::ArityMismatch {
                    name: name.to_string(),
                    expected: a,
                    found: arity,
                })
            }
            _ => {}
        }
    }
    Ok(())
}

fn check_assignment(
    m: &FiniteStructure,
    vars: impl IntoIterator<Item = String>,
    a: &Assignment,
) -> Result<(), FolError> {
    for v in vars {
        match a.get(&v) {
            None => return Err(FolError::UnassignedVariable(v)),
            Some(x) if *x >= m.size() => {
                return Err(FolError::OutOfUniverse {
                    name: v,
                    value: *x,
                    size: m.size(),
                })
            }
            Some(_) => {}
        }
    }
    Ok(())
}

/// Value of a term under an assignment covering its variables.
pub fn eval_term(m: &FiniteStructure, t: &Term, a: &Assignment) -> Result<usize, FolError> {
    check_symbols(m, &Formula::Eq(t.clone(), t.clone()))?;
    check_assignment(m, t.vars(), a)?;
    let env = Env {
        m,
        stack: a.iter().map(|(k, v)| (k.as_str(), *v)).collect(),
    };
    Ok(env.term(t))
}

/// Whether `m` satisfies `f` when its free variables take the values in `a`.
pub fn satisfies(m: &FiniteStructure, f: &Formula, a: &Assignment) -> Result<bool, FolError> {
    check_symbols(m, f)?;
    check_assignment(m, f.free_vars(), a)?;
    let mut env = Env {
        m,
        stack: a.iter().map(|(k, v)| (k.as_str(), *v)).collect(),
    };
    Ok(env.eval(f))
}

/// Checks every axiom in order and reports the first one that fails.
pub fn models_theory(m: &FiniteStructure, axioms: &[Formula]) -> Result<TheoryCheck, FolError> {
    if let Some(index) = axioms.iter().position(|ax| !ax.is_sentence()) {
        return Err(FolError::NotASentence { index });
    }
    for (i, ax) in axioms.iter().enumerate() {
        if !satisfies(m, ax, &Assignment::new())? {
            return Ok(TheoryCheck {
                first_failure: Some(i),
            });
        }
    }
    Ok(TheoryCheck {
        first_failure: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fol::{parse_formula, Signature};

    fn sentence(sig: &Signature, src: &str) -> Formula {
        parse_formula(sig, src).unwrap()
    }

    fn z3() -> FiniteStructure {
        let sig: Signature = "fn plus/2, const e".parse().unwrap();
        let mut m = FiniteStructure::new(3, &sig).unwrap();
        m.define_function("plus", |a| (a[0] + a[1]) % 3).unwrap();
        m
    }

    fn group_axioms(sig: &Signature) -> Vec<Formula> {
        [
            "forall x. forall y. forall z. plus(plus(x,y),z) = plus(x,plus(y,z))",
            "forall x. (plus(x,e) = x & plus(e,x) = x)",
            "forall x. exists y. (plus(x,y) = e & plus(y,x) = e)",
        ]
        .iter()
        .map(|s| sentence(sig, s))
        .collect()
    }

    #[test]
    fn order_on_two_points() {
        let sig: Signature = "le/2".parse().unwrap();
        let mut m = FiniteStructure::new(2, &sig).unwrap();
        m.define_relation("le", |a| a[0] <= a[1]).unwrap();
        let a = Assignment::new();
        assert!(satisfies(&m, &sentence(&sig, "forall x. exists y. le(x,y)"), &a).unwrap());
        let po = [
            "forall x. le(x,x)",
            "forall x. forall y. (le(x,y) & le(y,x) -> x = y)",
            "forall x. forall y. forall z. (le(x,y) & le(y,z) -> le(x,z))",
        ];
        let axioms: Vec<Formula> = po.iter().map(|s| sentence(&sig, s)).collect();
        assert!(models_theory(&m, &axioms).unwrap().holds());
    }

    #[test]
    fn integers_mod_three() {
        let m = z3();
        let sig = m.signature().clone();
        // exhaustive 3x3 oracle for inverses
        let oracle = (0..3).all(|x| (0..3).any(|y| (x + y) % 3 == 0));
        let got = satisfies(
            &m,
            &sentence(&sig, "forall x. exists y. plus(x,y) = e"),
            &Assignment::new(),
        )
        .unwrap();
        assert_eq!(got, oracle);
        assert!(models_theory(&m, &group_axioms(&sig)).unwrap().holds());
    }

    #[test]
    fn non_associative_magma_fails_first_axiom() {
        let sig: Signature = "fn plus/2, const e".parse().unwrap();
        let mut m = FiniteStructure::new(2, &sig).unwrap();
        // x.y = 1 exactly when x = 0 and y = 0
        m.define_function("plus", |a| usize::from(a[0] == 0 && a[1] == 0))
            .unwrap();
        let op = |x: usize, y: usize| usize::from(x == 0 && y == 0);
        let assoc =
            (0..2).all(|x| (0..2).all(|y| (0..2).all(|z| op(op(x, y), z) == op(x, op(y, z)))));
        assert!(!assoc);
        let check = models_theory(&m, &group_axioms(&sig)).unwrap();
        assert_eq!(check.first_failure, Some(0));
    }

    #[test]
    fn empty_relation_has_no_loops() {
        let sig: Signature = "R/2".parse().unwrap();
        let m = FiniteStructure::new(2, &sig).unwrap();
        assert!(!satisfies(&m, &sentence(&sig, "exists x. R(x,x)"), &Assignment::new()).unwrap());
    }

    #[test]
    fn assignment_errors() {
        let m = z3();
        let f = sentence(m.signature(), "plus(x, e) = x");
        assert_eq!(
            satisfies(&m, &f, &Assignment::new()),
            Err(FolError::UnassignedVariable("x".into()))
        );
        let mut a = Assignment::new();
        a.insert("x".into(), 5);
        assert!(matches!(
            satisfies(&m, &f, &a),
            Err(FolError::OutOfUniverse { .. })
        ));
        a.insert("x".into(), 2);
        a.insert("unused".into(), 1);
        assert!(satisfies(&m, &f, &a).unwrap());
        let open = sentence(m.signature(), "x = x");
        assert_eq!(
            models_theory(&m, &[open]),
            Err(FolError::NotASentence { index: 0 })
        );
    }

    #[test]
    fn numerals_follow_the_successor_orbit() {
        let sig: Signature = "fn S/1, const zero".parse().unwrap();
        let mut m = FiniteStructure::new(4, &sig).unwrap();
        // 0 -> 1 -> 2 -> 3 -> 2
        m.define_function("S", |a| if a[0] == 3 { 2 } else { a[0] + 1 })
            .unwrap();
        let naive = |n: usize| (0..n).fold(0, |x, _| m.apply("S", &[x]));
        for n in 0..20usize {
            let t = Term::Numeral(BigUint::from(n));
            assert_eq!(
                eval_term(&m, &t, &Assignment::new()).unwrap(),
                naive(n),
                "n = {n}"
            );
        }
        let huge = Term::Numeral(BigUint::from(10u32).pow(30));
        assert_eq!(eval_term(&m, &huge, &Assignment::new()).unwrap(), 2);
    }
}
