use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use super::{vn_universe, HFSet, HfError, MAX_VN};
use crate::fol::{Formula, Term};

/// Name of the membership relation in the first-order expansion.
pub const MEMBERSHIP: &str = "E";

/// Largest number of witness tuples [`eval_sigma1_bounded`] will try.
pub const MAX_SEARCH: u128 = 1 << 24;

/// Values of variables.
pub type Env = BTreeMap<String, HFSet>;

/// A formula whose quantifiers are all bounded: `forall x in y` and
/// `exists x in y`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Delta0 {
    In(String, String),
    Eq(String, String),
    Not(Box<Delta0>),
    Or(Box<Delta0>, Box<Delta0>),
    And(Box<Delta0>, Box<Delta0>),
    Implies(Box<Delta0>, Box<Delta0>),
    Iff(Box<Delta0>, Box<Delta0>),
    ForallIn(String, String, Box<Delta0>),
    ExistsIn(String, String, Box<Delta0>),
}

/// `exists x1 ... exists xn. matrix` with a bounded matrix; `n = 0` is a
/// plain bounded formula.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BoundedFormula {
    pub unbounded: Vec<String>,
    pub matrix: Delta0,
}

impl Delta0 {
    pub fn free_vars(&self) -> BTreeSet<String> {
        match self {
            Delta0::In(a, b) | Delta0::Eq(a, b) => [a.clone(), b.clone()].into(),
            Delta0::Not(f) => f.free_vars(),
            Delta0::Or(a, b) | Delta0::And(a, b) | Delta0::Implies(a, b) | Delta0::Iff(a, b) => {
                let mut out = a.free_vars();
                out.extend(b.free_vars());
                out
            }
            Delta0::ForallIn(x, y, f) | Delta0::ExistsIn(x, y, f) => {
                let mut out = f.free_vars();
                out.remove(x);
                out.insert(y.clone());
                out
            }
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            Delta0::In(..) | Delta0::Eq(..) => 0,
            Delta0::Not(f) | Delta0::ForallIn(_, _, f) | Delta0::ExistsIn(_, _, f) => 1 + f.depth(),
            Delta0::Or(a, b) | Delta0::And(a, b) | Delta0::Implies(a, b) | Delta0::Iff(a, b) => {
                1 + a.depth().max(b.depth())
            }
        }
    }

    /// The first-order formula over `E/2`: `exists x in y. f` becomes
    /// `exists x. (E(x,y) & f)` and `forall x in y. f` becomes
    /// `forall x. (~E(x,y) | f)`.
    pub fn to_formula(&self) -> Formula {
        let mem =
            |a: &str, b: &str| Formula::Rel(MEMBERSHIP.into(), vec![Term::var(a), Term::var(b)]);
        match self {
            Delta0::In(a, b) => mem(a, b),
            Delta0::Eq(a, b) => Formula::eq(Term::var(a), Term::var(b)),
            Delta0::Not(f) => Formula::not(f.to_formula()),
            Delta0::Or(a, b) => Formula::or(a.to_formula(), b.to_formula()),
            Delta0::And(a, b) => Formula::and(a.to_formula(), b.to_formula()),
            Delta0::Implies(a, b) => Formula::implies(a.to_formula(), b.to_formula()),
            Delta0::Iff(a, b) => Formula::iff(a.to_formula(), b.to_formula()),
            Delta0::ForallIn(x, y, f) => {
                Formula::forall(x, Formula::or(Formula::not(mem(x, y)), f.to_formula()))
            }
            Delta0::ExistsIn(x, y, f) => {
                Formula::exists(x, Formula::and(mem(x, y), f.to_formula()))
            }
        }
    }

    fn eval(&self, env: &mut Vec<(String, HFSet)>) -> Result<bool, HfError> {
        fn get(env: &[(String, HFSet)], v: &str) -> Result<HFSet, HfError> {
            env.iter()
                .rev()
                .find(|(n, _)| n == v)
                .map(|(_, x)| x.clone())
                .ok_or_else(|| HfError::UnassignedVariable(v.into()))
        }
        Ok(match self {
            Delta0::In(a, b) => get(env, b)?.contains(&get(env, a)?),
            Delta0::Eq(a, b) => get(env, a)? == get(env, b)?,
            Delta0::Not(f) => !f.eval(env)?,
            Delta0::Or(a, b) => a.eval(env)? || b.eval(env)?,
            Delta0::And(a, b) => a.eval(env)? && b.eval(env)?,
            Delta0::Implies(a, b) => !a.eval(env)? || b.eval(env)?,
            Delta0::Iff(a, b) => a.eval(env)? == b.eval(env)?,
            Delta0::ForallIn(x, y, f) | Delta0::ExistsIn(x, y, f) => {
                let universal = matches!(self, Delta0::ForallIn(..));
                let bound = get(env, y)?;
                let mut result = universal;
                for e in bound.elements() {
                    env.push((x.clone(), e.clone()));
                    let r = f.eval(env);
                    env.pop();
                    if r? != universal {
                        result = !universal;
                        break;
                    }
                }
                result
            }
        })
    }

    fn ends_open(&self) -> bool {
        match self {
            Delta0::ForallIn(..) | Delta0::ExistsIn(..) => true,
            Delta0::Not(f) => f.ends_open(),
            _ => false,
        }
    }
}

impl BoundedFormula {
    pub fn delta0(matrix: Delta0) -> Self {
        BoundedFormula {
            unbounded: Vec::new(),
            matrix,
        }
    }

    pub fn free_vars(&self) -> BTreeSet<String> {
        let mut out = self.matrix.free_vars();
        for v in &self.unbounded {
            out.remove(v);
        }
        out
    }

    pub fn to_formula(&self) -> Formula {
        self.unbounded
            .iter()
            .rev()
            .fold(self.matrix.to_formula(), |f, v| Formula::exists(v, f))
    }
}

impl fmt::Display for Delta0 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let bin = |f: &mut fmt::Formatter<'_>, a: &Delta0, op: &str, b: &Delta0| {
            if a.ends_open() {
                write!(f, "(({a}) {op} {b})")
            } else {
                write!(f, "({a} {op} {b})")
            }
        };
        match self {
            Delta0::In(a, b) => write!(f, "{a} in {b}"),
            Delta0::Eq(a, b) => write!(f, "{a} = {b}"),
            Delta0::Not(g) => match **g {
                Delta0::In(..) | Delta0::Eq(..) => write!(f, "~({g})"),
                _ => write!(f, "~{g}"),
            },
            Delta0::Or(a, b) => bin(f, a, "|", b),
            Delta0::And(a, b) => bin(f, a, "&", b),
            Delta0::Implies(a, b) => bin(f, a, "->", b),
            Delta0::Iff(a, b) => bin(f, a, "<->", b),
            Delta0::ForallIn(x, y, g) => write!(f, "forall {x} in {y}. {g}"),
            Delta0::ExistsIn(x, y, g) => write!(f, "exists {x} in {y}. {g}"),
        }
    }
}

impl fmt::Display for BoundedFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in &self.unbounded {
            write!(f, "exists {v}. ")?;
        }
        write!(f, "{}", self.matrix)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Forall,
    Exists,
    In,
    LParen,
    RParen,
    Dot,
    Not,
    And,
    Or,
    Implies,
    Iff,
    Eq,
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>, HfError> {
    let chars: Vec<(usize, char)> = src.char_indices().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let (pos, c) = chars[i];
        let rest = &src[pos..];
        let (tok, len) = if c.is_whitespace() {
            i += 1;
            continue;
        } else if rest.starts_with("<->") {
            (Tok::Iff, 3)
        } else if rest.starts_with("->") {
            (Tok::Implies, 2)
        } else if c.is_alphabetic() || c == '_' {
            let mut j = i;
            while j < chars.len()
                && (chars[j].1.is_alphanumeric() || chars[j].1 == '_' || chars[j].1 == '\'')
            {
                j += 1;
            }
            let end = chars.get(j).map_or(src.len(), |c| c.0);
            let word = &src[pos..end];
            let tok = match word {
                "forall" => Tok::Forall,
                "exists" => Tok::Exists,
                "in" => Tok::In,
                _ => Tok::Ident(word.to_string()),
            };
            (tok, j - i)
        } else {
            let tok = match c {
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                '.' => Tok::Dot,
                '~' => Tok::Not,
                '&' => Tok::And,
                '|' => Tok::Or,
                '=' => Tok::Eq,
                _ => {
                    return Err(HfError::Syntax {
                        pos,
                        message: format!("unexpected `{c}`"),
                    })
                }
            };
            (tok, 1)
        };
        out.push((pos, tok));
        i += len;
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.1)
    }

    fn err<T>(&self, message: &str) -> Result<T, HfError> {
        Err(HfError::Syntax {
            pos: self.toks.get(self.pos).map_or(self.end, |t| t.0),
            message: message.into(),
        })
    }

    fn expect(&mut self, t: Tok, what: &str) -> Result<(), HfError> {
        if self.peek() == Some(&t) {
            self.pos += 1;
            Ok(())
        } else {
            self.err(&format!("expected {what}"))
        }
    }

    fn ident(&mut self) -> Result<String, HfError> {
        match self.peek() {
            Some(Tok::Ident(v)) => {
                let v = v.clone();
                self.pos += 1;
                Ok(v)
            }
            _ => self.err("expected a variable"),
        }
    }

    fn iff(&mut self) -> Result<Delta0, HfError> {
        let mut acc = self.implies()?;
        while self.peek() == Some(&Tok::Iff) {
            self.pos += 1;
            acc = Delta0::Iff(Box::new(acc), Box::new(self.implies()?));
        }
        Ok(acc)
    }

    fn implies(&mut self) -> Result<Delta0, HfError> {
        let lhs = self.or()?;
        if self.peek() == Some(&Tok::Implies) {
            self.pos += 1;
            return Ok(Delta0::Implies(Box::new(lhs), Box::new(self.implies()?)));
        }
        Ok(lhs)
    }

    fn or(&mut self) -> Result<Delta0, HfError> {
        let mut acc = self.and()?;
        while self.peek() == Some(&Tok::Or) {
            self.pos += 1;
            acc = Delta0::Or(Box::new(acc), Box::new(self.and()?));
        }
        Ok(acc)
    }

    fn and(&mut self) -> Result<Delta0, HfError> {
        let mut acc = self.unary()?;
        while self.peek() == Some(&Tok::And) {
            self.pos += 1;
            acc = Delta0::And(Box::new(acc), Box::new(self.unary()?));
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Delta0, HfError> {
        match self.peek() {
            Some(Tok::Not) => {
                self.pos += 1;
                Ok(Delta0::Not(Box::new(self.unary()?)))
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let inner = self.iff()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(inner)
            }
            Some(Tok::Forall) | Some(Tok::Exists) => {
                let universal = self.peek() == Some(&Tok::Forall);
                self.pos += 1;
                let x = self.ident()?;
                if self.peek() != Some(&Tok::In) {
                    return Err(HfError::UnboundedQuantifier(x));
                }
                self.pos += 1;
                let y = self.ident()?;
                if x == y {
                    return Err(HfError::SelfBound(x));
                }
                self.expect(Tok::Dot, "`.`")?;
                // the body extends as far right as possible
                let body = Box::new(self.iff()?);
                Ok(if universal {
                    Delta0::ForallIn(x, y, body)
                } else {
                    Delta0::ExistsIn(x, y, body)
                })
            }
            Some(Tok::Ident(_)) => {
                let a = self.ident()?;
                match self.peek() {
                    Some(Tok::In) => {
                        self.pos += 1;
                        Ok(Delta0::In(a, self.ident()?))
                    }
                    Some(Tok::Eq) => {
                        self.pos += 1;
                        Ok(Delta0::Eq(a, self.ident()?))
                    }
                    _ => self.err("expected `in` or `=`"),
                }
            }
            _ => self.err("expected a formula"),
        }
    }
}

/// Reads bounded formulas such as `forall x in a. exists y in a. x in y`,
/// optionally preceded by unbounded `exists z.` quantifiers.
pub fn parse_bounded(src: &str) -> Result<BoundedFormula, HfError> {
    let mut p = Parser {
        toks: lex(src)?,
        pos: 0,
        end: src.len(),
    };
    let mut unbounded = Vec::new();
    while p.peek() == Some(&Tok::Exists) && !matches!(p.toks.get(p.pos + 2), Some((_, Tok::In))) {
        p.pos += 1;
        unbounded.push(p.ident()?);
        p.expect(Tok::Dot, "`.`")?;
    }
    let matrix = p.iff()?;
    if p.pos != p.toks.len() {
        return p.err("unexpected trailing input");
    }
    Ok(BoundedFormula { unbounded, matrix })
}

fn check_env(vars: &BTreeSet<String>, env: &Env) -> Result<(), HfError> {
    match vars.iter().find(|v| !env.contains_key(*v)) {
        Some(v) => Err(HfError::UnassignedVariable(v.clone())),
        None => Ok(()),
    }
}

/// Truth of a bounded formula in `(HF, in)`; quantifiers range over the
/// elements of the bounding set.
pub fn eval_delta0(f: &BoundedFormula, env: &Env) -> Result<bool, HfError> {
    if let Some(v) = f.unbounded.first() {
        return Err(HfError::UnboundedQuantifier(v.clone()));
    }
    check_env(&f.free_vars(), env)?;
    let mut stack: Vec<(String, HFSet)> = env.iter().map(|(k, v)| (k.clone(), v.clone())).collect();
    f.matrix.eval(&mut stack)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Sigma1Verdict {
    /// Witnesses for the unbounded variables.
    True(Env),
    /// No witnesses of rank below the search bound; the formula may still
    /// be true.
    Unknown,
}

/// Looks for witnesses to the unbounded quantifiers in `V_search_rank`.
pub fn eval_sigma1_bounded(
    f: &BoundedFormula,
    env: &Env,
    search_rank: usize,
) -> Result<Sigma1Verdict, HfError> {
    check_env(&f.free_vars(), env)?;
    if search_rank > MAX_VN {
        return Err(HfError::TooLarge {
            n: search_rank,
            limit: MAX_VN,
        });
    }
    let universe = vn_universe(search_rank)?;
    let k = f.unbounded.len();
    let tuples = (universe.len() as u128)
        .checked_pow(k as u32)
        .unwrap_or(u128::MAX);
    if tuples > MAX_SEARCH {
        return Err(HfError::SearchTooLarge { tuples });
    }
    let mut stack: Vec<(String, HFSet)> = env.iter().map(|(k, v)| (k.clone(), v.clone())).collect();
    let base = stack.len();
    for t in 0..tuples {
        let mut rest = t;
        stack.truncate(base);
        for v in &f.unbounded {
            let ix = (rest % universe.len() as u128) as usize;
            rest /= universe.len() as u128;
            stack.push((v.clone(), universe[ix].clone()));
        }
        if f.matrix.eval(&mut stack)? {
            let witnesses = stack[base..].iter().cloned().collect();
            return Ok(Sigma1Verdict::True(witnesses));
        }
    }
    Ok(Sigma1Verdict::Unknown)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn env(pairs: &[(&str, &str)]) -> Env {
        pairs
            .iter()
            .map(|(k, v)| (k.to_string(), v.parse().unwrap()))
            .collect()
    }

    fn p(src: &str) -> BoundedFormula {
        parse_bounded(src).unwrap()
    }

    #[test]
    fn delta0_examples() {
        let f = p("forall x in a. exists y in a. x in y");
        assert_eq!(eval_delta0(&f, &env(&[("a", "{{},{{}}}")])), Ok(false));
        assert_eq!(
            eval_delta0(&p("x in y"), &env(&[("x", "{}"), ("y", "{{}}")])),
            Ok(true)
        );
        assert_eq!(
            eval_delta0(&p("forall x in a. x in x"), &env(&[("a", "{}")])),
            Ok(true)
        );
    }

    #[test]
    fn delta0_errors() {
        assert_eq!(
            eval_delta0(&p("exists z. z in z"), &Env::new()),
            Err(HfError::UnboundedQuantifier("z".into()))
        );
        assert_eq!(
            eval_delta0(&p("x in y"), &env(&[("x", "{}")])),
            Err(HfError::UnassignedVariable("y".into()))
        );
        assert_eq!(
            parse_bounded("forall x. x in x"),
            Err(HfError::UnboundedQuantifier("x".into()))
        );
        assert_eq!(
            parse_bounded("x in y & exists z. z = z"),
            Err(HfError::UnboundedQuantifier("z".into()))
        );
        assert_eq!(
            parse_bounded("forall x in x. x = x"),
            Err(HfError::SelfBound("x".into()))
        );
        assert!(matches!(parse_bounded("x in"), Err(HfError::Syntax { .. })));
    }

    #[test]
    fn sigma1_examples() {
        let f = p("exists z. x in z");
        let Sigma1Verdict::True(w) = eval_sigma1_bounded(&f, &env(&[("x", "{}")]), 2).unwrap()
        else {
            panic!("witness expected")
        };
        assert_eq!(w["z"].to_string(), "{{}}");
        assert_eq!(
            eval_sigma1_bounded(&p("exists z. z in z"), &Env::new(), 4),
            Ok(Sigma1Verdict::Unknown)
        );
        let f = p("exists z. forall u in z. u in x");
        assert!(matches!(
            eval_sigma1_bounded(&f, &env(&[("x", "{{}}")]), 2),
            Ok(Sigma1Verdict::True(_))
        ));
        let two = p("exists a. exists b. a = b");
        assert!(matches!(
            eval_sigma1_bounded(&two, &Env::new(), 5),
            Err(HfError::SearchTooLarge { .. })
        ));
    }

    #[test]
    fn printing_round_trips() {
        for src in [
            "forall x in a. exists y in a. x in y",
            "exists z. exists w. ((forall u in z. u in w) & ~(z = w))",
            "((exists x in a. x = x) -> a = a)",
            "~forall x in a. ~(x in b)",
        ] {
            let f = p(src);
            assert_eq!(p(&f.to_string()), f, "{src}");
        }
    }

    #[test]
    fn expansion_shape() {
        let f = p("forall x in a. exists y in a. x in y").to_formula();
        assert_eq!(
            f.to_string(),
            "forall x. (~E(x,a) | exists y. (E(y,a) & E(x,y)))"
        );
    }
}
