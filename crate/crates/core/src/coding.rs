//! Finite sequences of positive integers coded as products of prime powers.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use thiserror::Error;

/// The number is not `2^a1 * 3^a2 * ... * p_n^an` with every `ai >= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("not the code of a sequence")]
pub struct NotACode;

pub(crate) struct Primes {
    found: Vec<u64>,
}

impl Primes {
    pub(crate) fn new() -> Self {
        Primes { found: Vec::new() }
    }

    pub(crate) fn next(&mut self) -> u64 {
        let mut c = self.found.last().map_or(2, |p| p + 1);
        while self
            .found
            .iter()
            .take_while(|p| *p * *p <= c)
            .any(|p| c.is_multiple_of(*p))
        {
            c += 1;
        }
        self.found.push(c);
        c
    }
}

/// `2^a1 * 3^a2 * ... * p_n^an`; `None` when an entry is zero, since such a
/// sequence could not be read back.
pub fn encode_sequence(seq: &[u64]) -> Option<BigUint> {
    let mut primes = Primes::new();
    let mut n = BigUint::one();
    for &a in seq {
        let p = BigUint::from(primes.next());
        if a == 0 {
            return None;
        }
        n *= p.pow(u32::try_from(a).ok()?);
    }
    Some(n)
}

/// Inverse of [`encode_sequence`]: the exponents of 2, 3, 5, ... up to the
/// last prime dividing `n`. Fails when a prime is skipped, or for 0 and 1.
pub fn decode_sequence(n: &BigUint) -> Result<Vec<u64>, NotACode> {
    if n <= &BigUint::one() {
        return Err(NotACode);
    }
    let mut rest = n.clone();
    let mut primes = Primes::new();
    let mut seq = Vec::new();
    while !rest.is_one() {
        let p = BigUint::from(primes.next());
        let mut e = 0;
        loop {
            let (q, r) = rest.div_rem(&p);
            if !r.is_zero() {
                break;
            }
            rest = q;
            e += 1;
        }
        if e == 0 {
            return Err(NotACode);
        }
        seq.push(e);
    }
    Ok(seq)
}
