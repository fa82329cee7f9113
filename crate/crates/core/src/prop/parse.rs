use super::{Connective, PropError, PropSentence};

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Not,
    Bin(Connective),
    LParen,
    RParen,
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>, PropError> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'~' => {
                out.push((start, Tok::Not));
                i += 1;
            }
            b'&' => {
                out.push((start, Tok::Bin(Connective::And)));
                i += 1;
            }
            b'|' => {
                out.push((start, Tok::Bin(Connective::Or)));
                i += 1;
            }
            b'(' => {
                out.push((start, Tok::LParen));
                i += 1;
            }
            b')' => {
                out.push((start, Tok::RParen));
                i += 1;
            }
            b'-' if src[i..].starts_with("->") => {
                out.push((start, Tok::Bin(Connective::Implies)));
                i += 2;
            }
            b'<' if src[i..].starts_with("<->") => {
                out.push((start, Tok::Bin(Connective::Iff)));
                i += 3;
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((start, Tok::Ident(src[start..i].to_string())));
            }
            _ => {
                let op: String = src[i..]
                    .chars()
                    .take_while(|ch| {
                        !ch.is_alphanumeric() && !ch.is_whitespace() && !"()~&|_".contains(*ch)
                    })
                    .collect();
                let op = if op.is_empty() {
                    src[i..]
                        .chars()
                        .next()
                        .map(String::from)
                        .unwrap_or_default()
                } else {
                    op
                };
                return Err(PropError::UnknownOperator { offset: start, op });
            }
        }
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
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map(|(o, _)| *o).unwrap_or(self.end)
    }

    fn error(&self, message: impl Into<String>) -> PropError {
        PropError::Syntax {
            offset: self.offset(),
            message: message.into(),
        }
    }

    // Levels: 0 = <->, 1 = ->, 2 = |, 3 = &.
    fn binary_level(&mut self, level: usize) -> Result<PropSentence, PropError> {
        if level == 4 {
            return self.unary();
        }
        let conn = [
            Connective::Iff,
            Connective::Implies,
            Connective::Or,
            Connective::And,
        ][level];
        let lhs = self.binary_level(level + 1)?;
        if self.peek() == Some(&Tok::Bin(conn)) {
            self.pos += 1;
            match conn {
                Connective::Iff | Connective::Implies => {
                    let rhs = self.binary_level(level)?;
                    Ok(PropSentence::binary(conn, lhs, rhs))
                }
                _ => {
                    let mut acc = lhs;
                    let mut rhs = self.binary_level(level + 1)?;
                    while self.peek() == Some(&Tok::Bin(conn)) {
                        self.pos += 1;
                        acc = PropSentence::binary(conn, acc, rhs);
                        rhs = self.binary_level(level + 1)?;
                    }
                    Ok(PropSentence::binary(conn, acc, rhs))
                }
            }
        } else {
            Ok(lhs)
        }
    }

    fn unary(&mut self) -> Result<PropSentence, PropError> {
        match self.peek().cloned() {
            Some(Tok::Not) => {
                self.pos += 1;
                Ok(PropSentence::not(self.unary()?))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                Ok(PropSentence::Atom(name))
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let inner = self.binary_level(0)?;
                if self.peek() != Some(&Tok::RParen) {
                    return Err(self.error("expected `)`"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(Tok::Bin(c)) => Err(self.error(format!("unexpected `{}`", c.symbol()))),
            Some(Tok::RParen) => Err(self.error("unexpected `)`")),
            None => Err(self.error("unexpected end of input")),
        }
    }
}

/// Parses a propositional sentence.
///
/// ```
/// use logic_workbench::prop::{parse_prop, PropSentence};
/// let s = parse_prop("P -> Q -> R").unwrap();
/// assert_eq!(s.to_string(), "(P -> (Q -> R))");
/// ```
pub fn parse_prop(src: &str) -> Result<PropSentence, PropError> {
    let toks = lex(src)?;
    if toks.is_empty() {
        return Err(PropError::Syntax {
            offset: 0,
            message: "empty input".into(),
        });
    }
    let mut p = Parser {
        toks,
        pos: 0,
        end: src.len(),
    };
    let s = p.binary_level(0)?;
    if p.pos != p.toks.len() {
        return Err(p.error("trailing input"));
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn atom(s: &str) -> PropSentence {
        PropSentence::atom(s)
    }

    #[test]
    fn reads_conjunction_with_negation() {
        assert_eq!(
            parse_prop("P & ~Q").unwrap(),
            PropSentence::and(atom("P"), PropSentence::not(atom("Q")))
        );
    }

    #[test]
    fn implication_is_right_associative() {
        assert_eq!(
            parse_prop("P -> Q -> R").unwrap(),
            PropSentence::implies(atom("P"), PropSentence::implies(atom("Q"), atom("R")))
        );
    }

    #[test]
    fn precedence_ladder() {
        let s = parse_prop("A <-> B -> C | D & ~E").unwrap();
        assert_eq!(s.to_string(), "(A <-> (B -> (C | (D & ~E))))");
    }

    #[test]
    fn malformed_reports_offset() {
        assert_eq!(
            parse_prop("P & | Q"),
            Err(PropError::Syntax {
                offset: 4,
                message: "unexpected `|`".into()
            })
        );
    }

    #[test]
    fn unknown_operator() {
        assert!(matches!(
            parse_prop("P => Q"),
            Err(PropError::UnknownOperator { offset: 2, .. })
        ));
        assert!(matches!(
            parse_prop("P ^ Q"),
            Err(PropError::UnknownOperator { .. })
        ));
    }

    #[test]
    fn unbalanced_and_empty() {
        assert!(parse_prop("(P & Q").is_err());
        assert!(parse_prop("P)").is_err());
        assert!(parse_prop("   ").is_err());
    }

    #[test]
    fn fully_parenthesized_input_accepted() {
        let s = parse_prop("((P & Q) -> ~(R <-> S))").unwrap();
        assert_eq!(parse_prop(&s.to_string()).unwrap(), s);
    }
}
