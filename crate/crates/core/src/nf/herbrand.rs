use std::collections::BTreeMap;
use std::fmt;

use super::skolem::skolemize;
use super::{require_sentence, NfError};
use crate::fol::{substitute, Formula, Signature, SymbolKind, Term};
use crate::prop::PropSentence;
use crate::sat::{solve, SatProblem};

/// Constant added to a signature that has none.
pub const INJECTED_CONSTANT: &str = "c0";

// Levels above this many terms are not built.
const LEVEL_CAP: usize = 200_000;

/// Ground terms by exact depth; each level sorted by printed form.
struct Levels {
    functions: Vec<(String, usize)>,
    levels: Vec<Vec<Term>>,
    exhausted: bool,
}

impl Levels {
    fn new(sig: &Signature) -> Self {
        let mut constants: Vec<Term> = sig
            .of_kind(SymbolKind::Constant)
            .map(|(c, _)| Term::constant(c))
            .collect();
        if constants.is_empty() {
            constants.push(Term::constant(INJECTED_CONSTANT));
        }
        constants.sort_by_key(|t| t.to_string());
        let functions: Vec<(String, usize)> = sig
            .of_kind(SymbolKind::Function)
            .filter(|(_, a)| *a > 0)
            .map(|(f, a)| (f.to_string(), a))
            .collect();
        let exhausted = functions.is_empty();
        Levels {
            functions,
            levels: vec![constants],
            exhausted,
        }
    }

    // Builds the next level; false when it would be empty or too large.
    fn grow(&mut self) -> bool {
        if self.exhausted {
            return false;
        }
        let d = self.levels.len();
        let below: Vec<&Term> = self.levels.iter().flatten().collect();
        let older = below.len() - self.levels[d - 1].len();
        let mut count = 0usize;
        for (_, arity) in &self.functions {
            let all = below.len().checked_pow(*arity as u32);
            let old = older.checked_pow(*arity as u32).unwrap_or(0);
            count = match all.and_then(|a| count.checked_add(a - old)) {
                Some(c) if c <= LEVEL_CAP => c,
                _ => {
                    self.exhausted = true;
                    return false;
                }
            };
        }
        let mut level = Vec::with_capacity(count);
        for (f, arity) in &self.functions {
            let mut digits = vec![0usize; *arity];
            loop {
                // index >= older means depth exactly d - 1
                if digits.iter().any(|i| *i >= older) {
                    level.push(Term::apply(
                        f,
                        digits.iter().map(|i| below[*i].clone()).collect(),
                    ));
                }
                let mut k = *arity;
                loop {
                    if k == 0 {
                        break;
                    }
                    k -= 1;
                    digits[k] += 1;
                    if digits[k] < below.len() {
                        break;
                    }
                    digits[k] = 0;
                }
                if digits.iter().all(|i| *i == 0) {
                    break;
                }
            }
        }
        level.sort_by_key(|t| t.to_string());
        self.levels.push(level);
        true
    }

    fn ensure(&mut self, depth: usize) -> bool {
        while self.levels.len() <= depth {
            if !self.grow() {
                return false;
            }
        }
        true
    }
}

/// All ground terms of depth at most `depth`, ordered by depth and then by
/// printed form. A signature without constants gets [`INJECTED_CONSTANT`].
pub fn herbrand_universe(sig: &Signature, depth: usize) -> Vec<Term> {
    let mut levels = Levels::new(sig);
    levels.ensure(depth);
    levels
        .levels
        .into_iter()
        .take(depth + 1)
        .flatten()
        .collect()
}

/// Evidence that a sentence is valid: ground instances of the existential
/// matrix whose disjunction is a propositional tautology.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HerbrandCertificate {
    /// Existentially quantified variables of the matrix.
    pub variables: Vec<String>,
    /// Quantifier-free matrix of the existential form.
    pub matrix: Formula,
    pub instances: Vec<Vec<Term>>,
    /// Disjunction of the instances with ground atoms replaced by letters.
    pub tautology: PropSentence,
    /// Letter for each ground atom.
    pub atoms: Vec<(String, Formula)>,
}

impl fmt::Display for HerbrandCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "matrix: {}", self.matrix)?;
        for (i, inst) in self.instances.iter().enumerate() {
            let parts: Vec<String> = self
                .variables
                .iter()
                .zip(inst)
                .map(|(v, t)| format!("{v}:={t}"))
                .collect();
            writeln!(f, "instance {}: {}", i + 1, parts.join(", "))?;
        }
        for (letter, atom) in &self.atoms {
            writeln!(f, "atom {letter}: {atom}")?;
        }
        write!(f, "tautology: {}", self.tautology)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HerbrandOutcome {
    Valid(HerbrandCertificate),
    /// The budget ran out, or the Herbrand universe was finite and every
    /// instance was tried.
    Unknown {
        instances_tried: usize,
    },
}

impl HerbrandOutcome {
    pub fn is_valid(&self) -> bool {
        matches!(self, HerbrandOutcome::Valid(_))
    }
}

struct Skeleton {
    letters: BTreeMap<Formula, String>,
    order: Vec<(String, Formula)>,
}

impl Skeleton {
    fn of(&mut self, f: &Formula) -> PropSentence {
        match f {
            Formula::Eq(..) | Formula::Rel(..) => {
                let next = self.letters.len();
                let letter = self
                    .letters
                    .entry(f.clone())
                    .or_insert_with(|| format!("G{next}"))
                    .clone();
                if self.order.len() < self.letters.len() {
                    self.order.push((letter.clone(), f.clone()));
                }
                PropSentence::atom(letter)
            }
            Formula::Not(g) => PropSentence::not(self.of(g)),
            Formula::Or(a, b) => PropSentence::or(self.of(a), self.of(b)),
            Formula::And(a, b) => PropSentence::and(self.of(a), self.of(b)),
            Formula::Implies(a, b) => PropSentence::implies(self.of(a), self.of(b)),
            Formula::Iff(a, b) => PropSentence::iff(self.of(a), self.of(b)),
            Formula::Exists(..) | Formula::Forall(..) => unreachable!("matrix is quantifier-free"),
        }
    }
}

// Index tuples of length k with the given total depth, in lexicographic
// order of term indices.
fn tuples_of_total_depth(levels: &Levels, k: usize, total: usize) -> Vec<Vec<usize>> {
    let offsets: Vec<usize> = levels
        .levels
        .iter()
        .scan(0, |acc, l| {
            let start = *acc;
            *acc += l.len();
            Some(start)
        })
        .collect();
    let mut out = Vec::new();
    let mut depths = vec![0usize; k];
    fn compositions(
        i: usize,
        remaining: usize,
        depths: &mut Vec<usize>,
        levels: &Levels,
        offsets: &[usize],
        out: &mut Vec<Vec<usize>>,
    ) {
        let k = depths.len();
        if i == k {
            if remaining != 0 {
                return;
            }
            let mut tuple = vec![0usize; k];
            product(0, depths, levels, offsets, &mut tuple, out);
            return;
        }
        for d in 0..=remaining.min(levels.levels.len() - 1) {
            depths[i] = d;
            compositions(i + 1, remaining - d, depths, levels, offsets, out);
        }
    }
    fn product(
        i: usize,
        depths: &[usize],
        levels: &Levels,
        offsets: &[usize],
        tuple: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if i == depths.len() {
            out.push(tuple.clone());
            return;
        }
        for j in 0..levels.levels[depths[i]].len() {
            tuple[i] = offsets[depths[i]] + j;
            product(i + 1, depths, levels, offsets, tuple, out);
        }
    }
    compositions(0, total, &mut depths, levels, &offsets, &mut out);
    out.sort();
    out
}

/// Searches for a Herbrand certificate of validity. The sentence is
/// negated, Skolemized to `forall xs. psi`, and ground instances of `psi`
/// are added in order of total term depth until their conjunction is
/// unsatisfiable, which makes the disjunction of the `~psi` instances a
/// tautology. `budget` bounds the number of instances.
pub fn herbrand_validity(f: &Formula, budget: usize) -> Result<HerbrandOutcome, NfError> {
    require_sentence(f)?;
    if f.has_equality() {
        return Err(NfError::EqualityPresent);
    }
    let (universal, sig) = skolemize(&Formula::not(f.clone()), &Signature::new())?;
    let variables: Vec<String> = universal.prefix.iter().map(|(_, v)| v.clone()).collect();
    let psi = universal.matrix;
    let k = variables.len();
    let mut levels = Levels::new(&sig);
    let mut skeleton = Skeleton {
        letters: BTreeMap::new(),
        order: Vec::new(),
    };
    let mut instances: Vec<Vec<Term>> = Vec::new();
    let mut constraints: Vec<PropSentence> = Vec::new();
    let mut total = 0usize;
    loop {
        let grew = levels.ensure(total);
        if !grew && (k == 0 || total > k * (levels.levels.len() - 1)) {
            return Ok(HerbrandOutcome::Unknown {
                instances_tried: instances.len(),
            });
        }
        let flat: Vec<Term> = levels.levels.iter().flatten().cloned().collect();
        for tuple in tuples_of_total_depth(&levels, k, total) {
            if instances.len() == budget {
                return Ok(HerbrandOutcome::Unknown {
                    instances_tried: instances.len(),
                });
            }
            let terms: Vec<Term> = tuple.iter().map(|i| flat[*i].clone()).collect();
            let ground = variables
                .iter()
                .zip(&terms)
                .fold(psi.clone(), |acc, (v, t)| substitute(&acc, v, t));
            constraints.push(skeleton.of(&ground));
            instances.push(terms);
            if !solve(&SatProblem::from_constraints(constraints.clone()))?.is_sat() {
                let tautology =
                    PropSentence::disjunction(constraints.iter().cloned().map(PropSentence::not))
                        .expect("at least one instance");
                return Ok(HerbrandOutcome::Valid(HerbrandCertificate {
                    variables,
                    matrix: Formula::not(psi.clone()),
                    instances,
                    tautology,
                    atoms: skeleton.order,
                }));
            }
        }
        if k == 0 {
            return Ok(HerbrandOutcome::Unknown {
                instances_tried: instances.len(),
            });
        }
        total += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fol::parse_formula;
    use crate::prop::{classify, Classification};

    fn sig() -> Signature {
        "P/1, Q/1, R/2".parse().unwrap()
    }

    fn f(src: &str) -> Formula {
        parse_formula(&sig(), src).unwrap()
    }

    #[test]
    fn universes() {
        let s: Signature = "fn f/1, const c".parse().unwrap();
        let names: Vec<String> = herbrand_universe(&s, 2)
            .iter()
            .map(|t| t.to_string())
            .collect();
        assert_eq!(names, ["c", "f(c)", "f(f(c))"]);
        let s: Signature = "fn g/1".parse().unwrap();
        let names: Vec<String> = herbrand_universe(&s, 1)
            .iter()
            .map(|t| t.to_string())
            .collect();
        assert_eq!(names, ["c0", "g(c0)"]);
        let s: Signature = "const c, const d".parse().unwrap();
        assert_eq!(herbrand_universe(&s, 0).len(), 2);
        let s: Signature = "fn h/2, const a".parse().unwrap();
        // depth 2: h(a,a), then the 3 new terms built over {a, h(a,a)}
        assert_eq!(herbrand_universe(&s, 2).len(), 1 + 1 + 3);
    }

    #[test]
    fn drinker() {
        let out = herbrand_validity(&f("exists x. (P(x) -> forall y. P(y))"), 50).unwrap();
        let HerbrandOutcome::Valid(cert) = out else {
            panic!("expected a certificate")
        };
        assert!(cert.instances.len() <= 2);
        assert_eq!(classify(&cert.tautology).unwrap(), Classification::Validity);
    }

    #[test]
    fn excluded_middle_needs_one_instance() {
        let HerbrandOutcome::Valid(cert) =
            herbrand_validity(&f("exists x. (P(x) | ~P(x))"), 50).unwrap()
        else {
            panic!("expected a certificate")
        };
        assert_eq!(cert.instances.len(), 1);
    }

    #[test]
    fn non_validities_stay_unknown() {
        for budget in [1, 10, 50] {
            assert!(!herbrand_validity(&f("forall x. P(x)"), budget)
                .unwrap()
                .is_valid());
        }
        assert!(!herbrand_validity(&f("forall x. exists y. R(x,y)"), 30)
            .unwrap()
            .is_valid());
    }

    #[test]
    fn guards() {
        let s: Signature = "const c".parse().unwrap();
        let eq = parse_formula(&s, "c = c").unwrap();
        assert_eq!(herbrand_validity(&eq, 5), Err(NfError::EqualityPresent));
        assert!(matches!(
            herbrand_validity(&f("P(x)"), 5),
            Err(NfError::NotASentence(_))
        ));
    }
}
