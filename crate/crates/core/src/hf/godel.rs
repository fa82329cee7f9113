use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;

use super::HfError;
use crate::coding::{decode_sequence, encode_sequence};
use crate::fol::{
    fresh_variable, substitute, Formula, Signature, SymbolKind, Term, NUMERAL_SUCC, NUMERAL_ZERO,
};
use crate::prop::{Connective, PropSentence};

const NOT: u64 = 1;
const OR: u64 = 2;
const AND: u64 = 3;
const IMPLIES: u64 = 4;
const IFF: u64 = 5;
const EXISTS: u64 = 6;
const FORALL: u64 = 7;
const EQ: u64 = 8;
const VAR: u64 = 9;
const NUMERAL: u64 = 10;

/// Codes below this are reserved for logical symbols.
pub const FIRST_SYMBOL_CODE: u64 = 16;

const HEADER: &str = "godel-symbols 1";

/// Codes for relation, function and constant symbols.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolTable {
    entries: Vec<(String, SymbolKind, usize, u64)>,
}

impl SymbolTable {
    /// Numbers the symbols of `sig` from [`FIRST_SYMBOL_CODE`] in signature
    /// order.
    pub fn from_signature(sig: &Signature) -> Self {
        SymbolTable {
            entries: sig
                .iter()
                .enumerate()
                .map(|(i, (name, kind, arity))| {
                    (name.to_string(), kind, arity, FIRST_SYMBOL_CODE + i as u64)
                })
                .collect(),
        }
    }

    pub fn signature(&self) -> Signature {
        let mut sig = Signature::new();
        for (name, kind, arity, _) in &self.entries {
            sig.insert(name, *kind, *arity);
        }
        sig
    }

    fn by_name(&self, name: &str) -> Result<&(String, SymbolKind, usize, u64), HfError> {
        self.entries
            .iter()
            .find(|e| e.0 == name)
            .ok_or_else(|| HfError::UnregisteredSymbol(name.into()))
    }

    fn by_code(&self, code: u64) -> Option<&(String, SymbolKind, usize, u64)> {
        self.entries.iter().find(|e| e.3 == code)
    }

    fn has(&self, name: &str, kind: SymbolKind, arity: usize) -> bool {
        self.entries
            .iter()
            .any(|e| e.0 == name && e.1 == kind && e.2 == arity)
    }
}

impl fmt::Display for SymbolTable {
    /// `godel-symbols 1` followed by `rel|fn|const NAME ARITY CODE` lines.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{HEADER}")?;
        for (name, kind, arity, code) in &self.entries {
            let k = match kind {
                SymbolKind::Relation => "rel",
                SymbolKind::Function => "fn",
                SymbolKind::Constant => "const",
            };
            writeln!(f, "{k} {name} {arity} {code}")?;
        }
        Ok(())
    }
}

impl FromStr for SymbolTable {
    type Err = HfError;

    fn from_str(s: &str) -> Result<Self, HfError> {
        let mut lines = s
            .lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty() && !l.trim().starts_with('#'));
        let bad = |line: usize, message: &str| HfError::SymbolTable {
            line: line + 1,
            message: message.into(),
        };
        match lines.next() {
            Some((_, l)) if l.trim() == HEADER => {}
            Some((i, _)) => return Err(bad(i, &format!("expected `{HEADER}`"))),
            None => return Err(bad(0, "empty symbol table")),
        }
        let mut entries: Vec<(String, SymbolKind, usize, u64)> = Vec::new();
        for (i, line) in lines {
            let parts: Vec<&str> = line.split_whitespace().collect();
            let [k, name, arity, code] = parts[..] else {
                return Err(bad(i, "expected `kind name arity code`"));
            };
            let kind = match k {
                "rel" => SymbolKind::Relation,
                "fn" => SymbolKind::Function,
                "const" => SymbolKind::Constant,
                _ => return Err(bad(i, "kind must be rel, fn or const")),
            };
            let arity: usize = arity.parse().map_err(|_| bad(i, "bad arity"))?;
            let code: u64 = code.parse().map_err(|_| bad(i, "bad code"))?;
            if code < FIRST_SYMBOL_CODE {
                return Err(bad(
                    i,
                    &format!("codes below {FIRST_SYMBOL_CODE} are reserved"),
                ));
            }
            if (kind == SymbolKind::Constant) != (arity == 0) && kind != SymbolKind::Relation {
                return Err(bad(
                    i,
                    "constants have arity 0 and functions positive arity",
                ));
            }
            if entries.iter().any(|e| e.0 == name || e.3 == code) {
                return Err(bad(i, "duplicate name or code"));
            }
            entries.push((name.to_string(), kind, arity, code));
        }
        Ok(SymbolTable { entries })
    }
}

fn push_name(out: &mut Vec<u64>, v: &str) {
    out.push(VAR);
    out.push(v.chars().count() as u64 + 1);
    out.extend(v.chars().map(|c| c as u64 + 1));
}

fn term_seq(t: &Term, table: &SymbolTable, out: &mut Vec<u64>) -> Result<(), HfError> {
    match t {
        Term::Var(v) => push_name(out, v),
        Term::Const(c) => out.push(table.by_name(c)?.3),
        Term::Apply(f, args) => {
            out.push(table.by_name(f)?.3);
            for a in args {
                term_seq(a, table, out)?;
            }
        }
        Term::Numeral(n) => {
            let digits = n.to_str_radix(10);
            out.push(NUMERAL);
            out.push(digits.len() as u64 + 1);
            out.extend(digits.bytes().map(|d| u64::from(d - b'0') + 1));
        }
    }
    Ok(())
}

fn formula_seq(f: &Formula, table: &SymbolTable, out: &mut Vec<u64>) -> Result<(), HfError> {
    match f {
        Formula::Eq(a, b) => {
            out.push(EQ);
            term_seq(a, table, out)?;
            term_seq(b, table, out)?;
        }
        Formula::Rel(r, args) => {
            out.push(table.by_name(r)?.3);
            for a in args {
                term_seq(a, table, out)?;
            }
        }
        Formula::Not(g) => {
            out.push(NOT);
            formula_seq(g, table, out)?;
        }
        Formula::Or(a, b) | Formula::And(a, b) | Formula::Implies(a, b) | Formula::Iff(a, b) => {
            out.push(match f {
                Formula::Or(..) => OR,
                Formula::And(..) => AND,
                Formula::Implies(..) => IMPLIES,
                _ => IFF,
            });
            formula_seq(a, table, out)?;
            formula_seq(b, table, out)?;
        }
        Formula::Exists(v, g) | Formula::Forall(v, g) => {
            out.push(if matches!(f, Formula::Exists(..)) {
                EXISTS
            } else {
                FORALL
            });
            push_name(out, v);
            formula_seq(g, table, out)?;
        }
    }
    Ok(())
}

/// The symbol-code sequence of `f` in prefix order. Variables are spelled
/// out as `VAR, length, characters`; numerals as `NUMERAL, length, digits`
/// (all shifted up by one).
pub fn godel_sequence(f: &Formula, table: &SymbolTable) -> Result<Vec<u64>, HfError> {
    let mut out = Vec::new();
    formula_seq(f, table, &mut out)?;
    Ok(out)
}

/// `2^a1 * 3^a2 * ...` for the code sequence of `f`.
pub fn godel_number(f: &Formula, table: &SymbolTable) -> Result<BigUint, HfError> {
    Ok(encode_sequence(&godel_sequence(f, table)?).expect("codes are positive"))
}

struct Reader<'a> {
    seq: &'a [u64],
    pos: usize,
    table: &'a SymbolTable,
}

impl Reader<'_> {
    fn next(&mut self) -> Result<u64, HfError> {
        let v = *self.seq.get(self.pos).ok_or(HfError::NotACode)?;
        self.pos += 1;
        Ok(v)
    }

    fn name(&mut self) -> Result<String, HfError> {
        let len = self.next()? - 1;
        (0..len)
            .map(|_| {
                let c = u32::try_from(self.next()? - 1).map_err(|_| HfError::NotACode)?;
                char::from_u32(c).ok_or(HfError::NotACode)
            })
            .collect()
    }

    fn term(&mut self) -> Result<Term, HfError> {
        match self.next()? {
            VAR => Ok(Term::Var(self.name()?)),
            NUMERAL => {
                let len = self.next()? - 1;
                let mut digits = Vec::new();
                for _ in 0..len {
                    match self.next()? {
                        d @ 1..=10 => digits.push(b'0' + (d - 1) as u8),
                        _ => return Err(HfError::NotACode),
                    }
                }
                BigUint::parse_bytes(&digits, 10)
                    .map(Term::Numeral)
                    .ok_or(HfError::NotACode)
            }
            code => match self.table.by_code(code) {
                Some((name, SymbolKind::Constant, _, _)) => Ok(Term::Const(name.clone())),
                Some((name, SymbolKind::Function, arity, _)) => {
                    let (name, arity) = (name.clone(), *arity);
                    let args = (0..arity).map(|_| self.term()).collect::<Result<_, _>>()?;
                    Ok(Term::Apply(name, args))
                }
                _ => Err(HfError::NotACode),
            },
        }
    }

    fn formula(&mut self) -> Result<Formula, HfError> {
        Ok(match self.next()? {
            NOT => Formula::not(self.formula()?),
            c @ (OR | AND | IMPLIES | IFF) => {
                let a = self.formula()?;
                let b = self.formula()?;
                match c {
                    OR => Formula::or(a, b),
                    AND => Formula::and(a, b),
                    IMPLIES => Formula::implies(a, b),
                    _ => Formula::iff(a, b),
                }
            }
            c @ (EXISTS | FORALL) => {
                if self.next()? != VAR {
                    return Err(HfError::NotACode);
                }
                let v = self.name()?;
                let body = self.formula()?;
                if c == EXISTS {
                    Formula::exists(&v, body)
                } else {
                    Formula::forall(&v, body)
                }
            }
            EQ => Formula::Eq(self.term()?, self.term()?),
            code => match self.table.by_code(code) {
                Some((name, SymbolKind::Relation, arity, _)) => {
                    let (name, arity) = (name.clone(), *arity);
                    let args = (0..arity).map(|_| self.term()).collect::<Result<_, _>>()?;
                    Formula::Rel(name, args)
                }
                _ => return Err(HfError::NotACode),
            },
        })
    }
}

/// Inverse of [`godel_number`].
pub fn godel_decode(n: &BigUint, table: &SymbolTable) -> Result<Formula, HfError> {
    let seq = decode_sequence(n)?;
    let mut r = Reader {
        seq: &seq,
        pos: 0,
        table,
    };
    let f = r.formula()?;
    if r.pos != seq.len() {
        return Err(HfError::NotACode);
    }
    Ok(f)
}

/// A propositional sentence as a first-order formula whose atoms are 0-ary
/// relations of the same names.
pub fn prop_formula(s: &PropSentence) -> Formula {
    match s {
        PropSentence::Atom(a) => Formula::Rel(a.clone(), Vec::new()),
        PropSentence::Not(g) => Formula::not(prop_formula(g)),
        PropSentence::Binary(c, a, b) => {
            let (a, b) = (prop_formula(a), prop_formula(b));
            match c {
                Connective::And => Formula::and(a, b),
                Connective::Or => Formula::or(a, b),
                Connective::Implies => Formula::implies(a, b),
                Connective::Iff => Formula::iff(a, b),
            }
        }
    }
}

fn only_free_variable(f: &Formula) -> Result<String, HfError> {
    let free = f.free_vars();
    match free.len() {
        1 => Ok(free.into_iter().next().expect("one element")),
        k => Err(HfError::FreeVariables(k)),
    }
}

/// `rho(x)` with the numeral of its own Gödel number put in for `x`.
pub fn self_apply(rho: &Formula, table: &SymbolTable) -> Result<Formula, HfError> {
    let x = only_free_variable(rho)?;
    if !table.has(NUMERAL_ZERO, SymbolKind::Constant, 0)
        || !table.has(NUMERAL_SUCC, SymbolKind::Function, 1)
    {
        return Err(HfError::NoNumeralSymbols);
    }
    let code = godel_number(rho, table)?;
    Ok(substitute(rho, &x, &Term::Numeral(code)))
}

/// `theta = sigma(n)` where `sigma(x) = exists y. (chi(x,y) & psi(y))` and
/// `n` is the Gödel number of `sigma`.
pub fn diagonal_sentence(
    psi: &Formula,
    chi_name: &str,
    table: &SymbolTable,
) -> Result<Formula, HfError> {
    if !table.has(chi_name, SymbolKind::Relation, 2) {
        return Err(HfError::NotABinaryRelation(chi_name.into()));
    }
    let v = only_free_variable(psi)?;
    let mut used: BTreeSet<String> = psi.all_vars();
    let x = fresh_variable("x", &used);
    used.insert(x.clone());
    let y = fresh_variable("y", &used);
    let sigma = Formula::exists(
        &y,
        Formula::and(
            Formula::Rel(chi_name.into(), vec![Term::var(&x), Term::var(&y)]),
            substitute(psi, &v, &Term::var(&y)),
        ),
    );
    self_apply(&sigma, table)
}
