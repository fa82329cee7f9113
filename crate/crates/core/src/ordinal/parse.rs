use num_bigint::BigUint;

use super::{CnfOrdinal, OrdinalError};

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err<T>(&self, message: &str) -> Result<T, OrdinalError> {
        Err(OrdinalError::Syntax {
            pos: self.pos,
            message: message.to_string(),
        })
    }

    fn skip_ws(&mut self) {
        while self
            .src
            .get(self.pos)
            .is_some_and(|b| b.is_ascii_whitespace())
        {
            self.pos += 1;
        }
    }

    fn eat(&mut self, b: u8) -> bool {
        self.skip_ws();
        if self.src.get(self.pos) == Some(&b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn sum(&mut self) -> Result<CnfOrdinal, OrdinalError> {
        let mut acc = self.product()?;
        while self.eat(b'+') {
            acc = acc.add(&self.product()?);
        }
        Ok(acc)
    }

    fn product(&mut self) -> Result<CnfOrdinal, OrdinalError> {
        let mut acc = self.power()?;
        while self.eat(b'*') {
            acc = acc.mul(&self.power()?);
        }
        Ok(acc)
    }

    // right associative: w^w^2 = w^(w^2)
    fn power(&mut self) -> Result<CnfOrdinal, OrdinalError> {
        let base = self.atom()?;
        if self.eat(b'^') {
            Ok(base.pow(&self.power()?))
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<CnfOrdinal, OrdinalError> {
        self.skip_ws();
        for (open, close) in [(b'(', b')'), (b'{', b'}')] {
            if self.eat(open) {
                let inner = self.sum()?;
                if !self.eat(close) {
                    return self.err(&format!("expected `{}`", close as char));
                }
                return Ok(inner);
            }
        }
        match self.src.get(self.pos) {
            Some(b'w') => {
                self.pos += 1;
                Ok(CnfOrdinal::omega())
            }
            Some(b) if b.is_ascii_digit() => {
                let start = self.pos;
                while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
                    self.pos += 1;
                }
                let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
                Ok(CnfOrdinal::nat(digits.parse::<BigUint>().expect("digits")))
            }
            _ => self.err("expected a natural, `w` or a parenthesised ordinal"),
        }
    }
}

/// Reads sums, products and powers of naturals and `w`, evaluated with
/// ordinal arithmetic, so `w^2*3 + w + 5` and `(w+w)*(w^w)` both parse.
pub fn parse_ordinal(src: &str) -> Result<CnfOrdinal, OrdinalError> {
    let mut p = Parser {
        src: src.as_bytes(),
        pos: 0,
    };
    let value = p.sum()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return p.err("unexpected trailing input");
    }
    Ok(value)
}
