use num_bigint::BigUint;

use super::{FolError, Formula, Signature, SymbolKind, Term, NUMERAL_SUCC, NUMERAL_ZERO};

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Number(BigUint),
    LParen,
    RParen,
    Comma,
    Dot,
    Equals,
    Not,
    And,
    Or,
    Implies,
    Iff,
    Forall,
    Exists,
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Ident(s) => s.clone(),
        Tok::Number(n) => n.to_string(),
        Tok::LParen => "(".into(),
        Tok::RParen => ")".into(),
        Tok::Comma => ",".into(),
        Tok::Dot => ".".into(),
        Tok::Equals => "=".into(),
        Tok::Not => "~".into(),
        Tok::And => "&".into(),
        Tok::Or => "|".into(),
        Tok::Implies => "->".into(),
        Tok::Iff => "<->".into(),
        Tok::Forall => "forall".into(),
        Tok::Exists => "exists".into(),
    }
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>, FolError> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let single = match c {
            b'(' => Some(Tok::LParen),
            b')' => Some(Tok::RParen),
            b',' => Some(Tok::Comma),
            b'.' => Some(Tok::Dot),
            b'=' => Some(Tok::Equals),
            b'~' => Some(Tok::Not),
            b'&' => Some(Tok::And),
            b'|' => Some(Tok::Or),
            _ => None,
        };
        if c.is_ascii_whitespace() {
            i += 1;
        } else if let Some(t) = single {
            out.push((start, t));
            i += 1;
        } else if src[i..].starts_with("->") {
            out.push((start, Tok::Implies));
            i += 2;
        } else if src[i..].starts_with("<->") {
            out.push((start, Tok::Iff));
            i += 3;
        } else if c.is_ascii_digit() {
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let n: BigUint = src[start..i].parse().expect("digits");
            out.push((start, Tok::Number(n)));
        } else if c.is_ascii_alphabetic() || c == b'_' {
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            while i < bytes.len() && bytes[i] == b'\'' {
                i += 1;
            }
            let word = &src[start..i];
            out.push((
                start,
                match word {
                    "forall" => Tok::Forall,
                    "exists" => Tok::Exists,
                    _ => Tok::Ident(word.to_string()),
                },
            ));
        } else {
            let ch = src[i..].chars().next().unwrap();
            return Err(FolError::Syntax {
                offset: start,
                message: format!("unexpected character `{ch}`"),
            });
        }
    }
    Ok(out)
}

struct Parser<'a> {
    sig: &'a Signature,
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(o, _)| *o)
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T, FolError> {
        Err(FolError::Syntax {
            offset: self.offset(),
            message: message.into(),
        })
    }

    fn unexpected<T>(&self) -> Result<T, FolError> {
        match self.peek() {
            Some(t) => self.error(format!("unexpected `{}`", describe(t))),
            None => self.error("unexpected end of input"),
        }
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == Some(t) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, t: &Tok) -> Result<(), FolError> {
        if self.eat(t) {
            Ok(())
        } else {
            self.unexpected()
        }
    }

    fn formula(&mut self) -> Result<Formula, FolError> {
        let lhs = self.implication()?;
        if self.eat(&Tok::Iff) {
            return Ok(Formula::iff(lhs, self.formula()?));
        }
        Ok(lhs)
    }

    fn implication(&mut self) -> Result<Formula, FolError> {
        let lhs = self.disjunction()?;
        if self.eat(&Tok::Implies) {
            return Ok(Formula::implies(lhs, self.implication()?));
        }
        Ok(lhs)
    }

    fn disjunction(&mut self) -> Result<Formula, FolError> {
        let mut acc = self.conjunction()?;
        while self.eat(&Tok::Or) {
            acc = Formula::or(acc, self.conjunction()?);
        }
        Ok(acc)
    }

    fn conjunction(&mut self) -> Result<Formula, FolError> {
        let mut acc = self.unary()?;
        while self.eat(&Tok::And) {
            acc = Formula::and(acc, self.unary()?);
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Formula, FolError> {
        match self.peek() {
            Some(Tok::Not) => {
                self.pos += 1;
                Ok(Formula::not(self.unary()?))
            }
            Some(Tok::Forall) | Some(Tok::Exists) => {
                let universal = self.peek() == Some(&Tok::Forall);
                self.pos += 1;
                let var = match self.peek() {
                    Some(Tok::Ident(v)) if !self.sig.contains(v) => v.clone(),
                    Some(Tok::Ident(v)) => {
                        return self.error(format!("`{v}` is a declared symbol, not a variable"))
                    }
                    _ => return self.unexpected(),
                };
                self.pos += 1;
                self.expect(&Tok::Dot)?;
                let body = self.formula()?;
                Ok(if universal {
                    Formula::forall(&var, body)
                } else {
                    Formula::exists(&var, body)
                })
            }
            _ => self.atomic(),
        }
    }

    fn atomic(&mut self) -> Result<Formula, FolError> {
        if self.eat(&Tok::LParen) {
            let f = self.formula()?;
            self.expect(&Tok::RParen)?;
            return Ok(f);
        }
        if let Some(Tok::Ident(name)) = self.peek() {
            if let Some((SymbolKind::Relation, arity)) = self.sig.get(name) {
                let name = name.clone();
                self.pos += 1;
                let args = if self.peek() == Some(&Tok::LParen) {
                    self.arguments()?
                } else {
                    Vec::new()
                };
                check_arity(&name, arity, args.len())?;
                return Ok(Formula::Rel(name, args));
            }
        }
        let lhs = self.term()?;
        if !self.eat(&Tok::Equals) {
            return self.unexpected();
        }
        let rhs = self.term()?;
        Ok(Formula::Eq(lhs, rhs))
    }

    fn arguments(&mut self) -> Result<Vec<Term>, FolError> {
        self.expect(&Tok::LParen)?;
        let mut args = vec![self.term()?];
        while self.eat(&Tok::Comma) {
            args.push(self.term()?);
        }
        self.expect(&Tok::RParen)?;
        Ok(args)
    }

    fn term(&mut self) -> Result<Term, FolError> {
        match self.peek().cloned() {
            Some(Tok::Number(n)) => {
                for (sym, kind) in [
                    (NUMERAL_ZERO, SymbolKind::Constant),
                    (NUMERAL_SUCC, SymbolKind::Function),
                ] {
                    match self.sig.get(sym) {
                        Some((k, _)) if k == kind => {}
                        _ => return Err(FolError::UnknownSymbol(sym.to_string())),
                    }
                }
                self.pos += 1;
                Ok(Term::Numeral(n))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                match self.sig.get(&name) {
                    Some((SymbolKind::Constant, _)) => Ok(Term::Const(name)),
                    Some((SymbolKind::Function, arity)) => {
                        let args = if self.peek() == Some(&Tok::LParen) {
                            self.arguments()?
                        } else {
                            Vec::new()
                        };
                        check_arity(&name, arity, args.len())?;
                        Ok(Term::Apply(name, args))
                    }
                    Some((SymbolKind::Relation, _)) => Err(FolError::WrongKind {
                        name,
                        expected: SymbolKind::Function,
                        found: SymbolKind::Relation,
                    }),
                    None if self.peek() == Some(&Tok::LParen) => Err(FolError::UnknownSymbol(name)),
                    None => Ok(Term::Var(name)),
                }
            }
            _ => self.unexpected(),
        }
    }
}

fn check_arity(name: &str, expected: usize, found: usize) -> Result<(), FolError> {
    if expected == found {
        Ok(())
    } else {
        Err(FolError::ArityMismatch {
            name: name.to_string(),
            expected,
            found,
        })
    }
}

/// Parses a formula over `sig`. Identifiers not declared in the signature
/// are variables; decimal literals are numerals and need `zero` and `S`.
pub fn parse_formula(sig: &Signature, src: &str) -> Result<Formula, FolError> {
    let mut p = Parser {
        sig,
        toks: lex(src)?,
        pos: 0,
        end: src.len(),
    };
    if p.toks.is_empty() {
        return p.error("empty formula");
    }
    let f = p.formula()?;
    if p.pos < p.toks.len() {
        return p.unexpected();
    }
    Ok(f)
}

pub fn parse_term(sig: &Signature, src: &str) -> Result<Term, FolError> {
    let mut p = Parser {
        sig,
        toks: lex(src)?,
        pos: 0,
        end: src.len(),
    };
    let t = p.term()?;
    if p.pos < p.toks.len() {
        return p.unexpected();
    }
    Ok(t)
}
