//! Ordinals below epsilon-zero in Cantor normal form, and Goodstein
//! sequences.

mod goodstein;
mod parse;

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use thiserror::Error;

pub use goodstein::{
    goodstein_run, goodstein_step, hereditary_expand, GoodsteinRow, GoodsteinRun, HereditaryRep,
};
pub use parse::parse_ordinal;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrdinalError {
    #[error("syntax error at {pos}: {message}")]
    Syntax { pos: usize, message: String },
    #[error("division by zero")]
    DivisionByZero,
    #[error("zero is not of the form w^b")]
    ZeroInput,
    #[error("base must be at least 2, got {0}")]
    BaseTooSmall(BigUint),
    #[error("the sequence has already reached zero")]
    ZeroValue,
}

/// `w^e1*c1 + ... + w^en*cn` with `e1 > ... > en` and every `ci >= 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CnfOrdinal {
    terms: Vec<(CnfOrdinal, BigUint)>,
}

impl CnfOrdinal {
    pub fn zero() -> Self {
        CnfOrdinal { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::nat(1u32)
    }

    pub fn nat(n: impl Into<BigUint>) -> Self {
        let n = n.into();
        if n.is_zero() {
            Self::zero()
        } else {
            CnfOrdinal {
                terms: vec![(Self::zero(), n)],
            }
        }
    }

    pub fn omega() -> Self {
        Self::omega_pow(Self::one())
    }

    /// `w^e`.
    pub fn omega_pow(e: CnfOrdinal) -> Self {
        Self::term(e, BigUint::one())
    }

    /// `w^e * c`; zero when `c` is.
    pub fn term(e: CnfOrdinal, c: BigUint) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            CnfOrdinal {
                terms: vec![(e, c)],
            }
        }
    }

    /// Ordinal sum of the given terms, in order.
    pub fn from_terms(terms: impl IntoIterator<Item = (CnfOrdinal, BigUint)>) -> Self {
        terms
            .into_iter()
            .fold(Self::zero(), |acc, (e, c)| acc.add(&Self::term(e, c)))
    }

    pub fn terms(&self) -> &[(CnfOrdinal, BigUint)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn as_natural(&self) -> Option<BigUint> {
        match self.terms.as_slice() {
            [] => Some(BigUint::zero()),
            [(e, c)] if e.is_zero() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn is_finite(&self) -> bool {
        self.as_natural().is_some()
    }

    /// Neither zero nor a successor.
    pub fn is_limit(&self) -> bool {
        self.terms.last().is_some_and(|(e, _)| !e.is_zero())
    }

    fn leading_exponent(&self) -> Option<&CnfOrdinal> {
        self.terms.first().map(|(e, _)| e)
    }

    // terms with positive exponent, and the finite tail
    fn split_finite(&self) -> (CnfOrdinal, BigUint) {
        match self.terms.last() {
            Some((e, c)) if e.is_zero() => (
                CnfOrdinal {
                    terms: self.terms[..self.terms.len() - 1].to_vec(),
                },
                c.clone(),
            ),
            _ => (self.clone(), BigUint::zero()),
        }
    }

    pub fn compare(&self, other: &Self) -> Ordering {
        for ((e1, c1), (e2, c2)) in self.terms.iter().zip(&other.terms) {
            match e1.compare(e2).then_with(|| c1.cmp(c2)) {
                Ordering::Equal => {}
                ord => return ord,
            }
        }
        self.terms.len().cmp(&other.terms.len())
    }

    pub fn add(&self, other: &Self) -> Self {
        let Some(lead) = other.leading_exponent() else {
            return self.clone();
        };
        let mut terms: Vec<_> = self
            .terms
            .iter()
            .take_while(|(e, _)| e.compare(lead) != Ordering::Less)
            .cloned()
            .collect();
        let mut rest = other.terms.iter();
        if let Some((e, c)) = terms.last_mut() {
            if e == lead {
                *c += &other.terms[0].1;
                rest.next();
            }
        }
        terms.extend(rest.cloned());
        CnfOrdinal { terms }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let Some(lead) = self.leading_exponent() else {
            return Self::zero();
        };
        let mut terms = Vec::new();
        for (e, c) in &other.terms {
            if e.is_zero() {
                // a*n scales the leading coefficient only
                terms.push((lead.clone(), &self.terms[0].1 * c));
                terms.extend(self.terms[1..].iter().cloned());
            } else {
                terms.push((lead.add(e), c.clone()));
            }
        }
        CnfOrdinal { terms }
    }

    /// `self^exp`, with `0^0 = 1`.
    pub fn pow(&self, exp: &Self) -> Self {
        if exp.is_zero() {
            return Self::one();
        }
        if self.is_zero() {
            return Self::zero();
        }
        let (limit, m) = exp.split_finite();
        if let Some(n) = self.as_natural() {
            if n.is_one() {
                return Self::one();
            }
            let finite = num_traits::Pow::pow(&n, &m);
            if limit.is_zero() {
                return Self::nat(finite);
            }
            // n^(w*L') = w^L' where 1 + L' = L
            let reduced = CnfOrdinal {
                terms: limit
                    .terms
                    .iter()
                    .map(|(e, c)| (e.left_sub(&Self::one()), c.clone()))
                    .collect(),
            };
            return Self::term(reduced, finite);
        }
        let mut result = if limit.is_zero() {
            Self::one()
        } else {
            Self::omega_pow(self.leading_exponent().expect("nonzero").mul(&limit))
        };
        let mut square = self.clone();
        let bits = m.bits();
        for i in 0..bits {
            if m.bit(i) {
                result = result.mul(&square);
            }
            if i + 1 < bits {
                square = square.mul(&square);
            }
        }
        result
    }

    /// The `d` with `other + d = self`; requires `other <= self`.
    pub(crate) fn left_sub(&self, other: &Self) -> Self {
        debug_assert!(other.compare(self) != Ordering::Greater);
        let same = self
            .terms
            .iter()
            .zip(&other.terms)
            .take_while(|(a, b)| a == b)
            .count();
        let Some((e, c)) = self.terms.get(same) else {
            return Self::zero();
        };
        let mut terms = Vec::new();
        match other.terms.get(same) {
            Some((e2, c2)) if e2 == e => terms.push((e.clone(), c - c2)),
            _ => terms.push((e.clone(), c.clone())),
        }
        terms.extend(self.terms[same + 1..].iter().cloned());
        CnfOrdinal { terms }
    }

    /// `(q, r)` with `self = divisor*q + r` and `r < divisor`.
    pub fn divmod(&self, divisor: &Self) -> Result<(Self, Self), OrdinalError> {
        let lead = divisor
            .leading_exponent()
            .ok_or(OrdinalError::DivisionByZero)?
            .clone();
        let mut q = Self::zero();
        let mut r = self.clone();
        while r.compare(divisor) != Ordering::Less {
            let (rho, rc) = r.terms[0].clone();
            if rho.compare(&lead) == Ordering::Greater {
                // divisor * w^g = w^rho
                let g = rho.left_sub(&lead);
                q = q.add(&Self::term(g, rc.clone()));
                r = CnfOrdinal {
                    terms: r.terms[1..].to_vec(),
                };
            } else {
                let mut k = rc.div_floor(&divisor.terms[0].1);
                if divisor.mul(&Self::nat(k.clone())).compare(&r) == Ordering::Greater {
                    k -= 1u32;
                }
                r = r.left_sub(&divisor.mul(&Self::nat(k.clone())));
                q = q.add(&Self::nat(k));
            }
        }
        Ok((q, r))
    }

    /// Whether `self = w^b` for some `b`.
    pub fn is_indecomposable(&self) -> Result<bool, OrdinalError> {
        match self.terms.as_slice() {
            [] => Err(OrdinalError::ZeroInput),
            [(_, c)] => Ok(c.is_one()),
            _ => Ok(false),
        }
    }
}

impl PartialOrd for CnfOrdinal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for CnfOrdinal {
    fn cmp(&self, other: &Self) -> Ordering {
        self.compare(other)
    }
}

impl From<u64> for CnfOrdinal {
    fn from(n: u64) -> Self {
        Self::nat(n)
    }
}

impl fmt::Display for CnfOrdinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if e.is_zero() {
                write!(f, "{c}")?;
                continue;
            }
            match e.as_natural() {
                Some(k) if k.is_one() => write!(f, "w")?,
                Some(k) => write!(f, "w^{k}")?,
                None => write!(f, "w^{{{e}}}")?,
            }
            if !c.is_one() {
                write!(f, "*{c}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn o(src: &str) -> CnfOrdinal {
        parse_ordinal(src).unwrap()
    }

    fn n(k: u64) -> CnfOrdinal {
        CnfOrdinal::from(k)
    }

    #[test]
    fn comparisons() {
        assert_eq!(o("w").compare(&n(1_000_000)), Ordering::Greater);
        assert_eq!(o("w + 1").compare(&o("w")), Ordering::Greater);
        assert_eq!(o("w^w").compare(&o("w^3*5")), Ordering::Greater);
        assert_eq!(o("w*2").compare(&o("w + w")), Ordering::Equal);
    }

    #[test]
    fn addition_absorbs() {
        assert_eq!(n(1).add(&o("w")), o("w"));
        assert_eq!(o("w").add(&n(1)).to_string(), "w + 1");
        // w + (1 + w) + 1 = w + w + 1
        assert_eq!(o("w + 1").add(&o("w + 1")).to_string(), "w*2 + 1");
    }

    #[test]
    fn multiplication() {
        assert_eq!(n(2).mul(&o("w")), o("w"));
        assert_eq!(o("w").mul(&n(2)).to_string(), "w*2");
        // (w+2)w + (w+2)3 = w^2 + (w+2)+(w+2)+(w+2)
        assert_eq!(o("w + 2").mul(&o("w + 3")).to_string(), "w^2 + w*3 + 2");
        assert_eq!(o("w + 5").mul(&n(0)), n(0));
    }

    #[test]
    fn exponentiation() {
        assert_eq!(o("w").pow(&n(2)).to_string(), "w^2");
        assert_eq!(n(2).pow(&o("w")), o("w"));
        assert_eq!(o("w^w").pow(&n(2)).to_string(), "w^{w*2}");
        assert_eq!(n(0).pow(&n(0)), n(1));
        assert_eq!(n(3).pow(&n(4)), n(81));
        // 2^(w+3) = w*8, 2^(w^2) = w^w
        assert_eq!(n(2).pow(&o("w + 3")).to_string(), "w*8");
        assert_eq!(n(2).pow(&o("w^2")).to_string(), "w^{w}");
        // (w+1)^2 = (w+1)w + (w+1) = w^2 + w + 1
        assert_eq!(o("w + 1").pow(&n(2)).to_string(), "w^2 + w + 1");
    }

    #[test]
    fn division() {
        assert_eq!(o("w*3 + 2").divmod(&o("w")).unwrap(), (n(3), n(2)));
        assert_eq!(n(4).divmod(&o("w")).unwrap(), (n(0), n(4)));
        assert_eq!(o("w^2").divmod(&o("w^2")).unwrap(), (n(1), n(0)));
        assert_eq!(n(17).divmod(&n(5)).unwrap(), (n(3), n(2)));
        assert_eq!(o("w").divmod(&n(0)), Err(OrdinalError::DivisionByZero));
        let (q, r) = o("w^3 + w*4 + 7").divmod(&o("w + 2")).unwrap();
        assert_eq!(o("w + 2").mul(&q).add(&r), o("w^3 + w*4 + 7"));
        assert!(r < o("w + 2"));
    }

    #[test]
    fn indecomposables() {
        assert_eq!(o("w^2").is_indecomposable(), Ok(true));
        assert_eq!(o("w*2").is_indecomposable(), Ok(false));
        assert_eq!(n(1).is_indecomposable(), Ok(true));
        assert_eq!(n(0).is_indecomposable(), Err(OrdinalError::ZeroInput));
    }

    #[test]
    fn left_subtraction() {
        assert_eq!(o("w^2 + w*3").left_sub(&o("w*5 + 2")), o("w^2 + w*3"));
        assert_eq!(o("w*5 + 1").left_sub(&o("w*2 + 7")), o("w*3 + 1"));
        assert_eq!(o("w + 3").left_sub(&o("w + 3")), n(0));
    }
}
