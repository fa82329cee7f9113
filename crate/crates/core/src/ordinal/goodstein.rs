use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Pow, Zero};

use super::{CnfOrdinal, OrdinalError};

/// A natural written in complete (hereditary) base-`base` notation: a sum of
/// `c * base^e` with `0 < c < base`, every exponent `e` itself expanded.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HereditaryRep {
    pub base: BigUint,
    /// `(exponent, coefficient)` with exponents decreasing.
    pub terms: Vec<(HereditaryRep, BigUint)>,
}

impl HereditaryRep {
    /// Evaluates the expansion with the base replaced by `base`.
    pub fn value_at(&self, base: &BigUint) -> BigUint {
        self.terms
            .iter()
            .map(|(e, c)| c * Pow::pow(base, &e.value_at(base)))
            .sum()
    }

    pub fn value(&self) -> BigUint {
        self.value_at(&self.base)
    }

    /// The ordinal obtained by writing `w` for the base everywhere.
    pub fn to_ordinal(&self) -> CnfOrdinal {
        CnfOrdinal {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.to_ordinal(), c.clone()))
                .collect(),
        }
    }

    fn is_one(&self) -> bool {
        matches!(self.terms.as_slice(), [(e, c)] if e.terms.is_empty() && c.is_one())
    }
}

impl fmt::Display for HereditaryRep {
    /// `2^(2^2 + 1) + 2^2` style.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if e.terms.is_empty() {
                write!(f, "{c}")?;
                continue;
            }
            if !c.is_one() {
                write!(f, "{c}*")?;
            }
            write!(f, "{}", self.base)?;
            if e.is_one() {
                continue;
            }
            let inner = e.to_string();
            if inner.chars().all(|ch| ch.is_ascii_digit()) {
                write!(f, "^{inner}")?;
            } else {
                write!(f, "^({inner})")?;
            }
        }
        Ok(())
    }
}

fn check_base(base: &BigUint) -> Result<(), OrdinalError> {
    if base < &BigUint::from(2u32) {
        Err(OrdinalError::BaseTooSmall(base.clone()))
    } else {
        Ok(())
    }
}

fn expand(n: &BigUint, base: &BigUint) -> HereditaryRep {
    let mut digits = Vec::new();
    let mut rest = n.clone();
    while !rest.is_zero() {
        let (q, r) = rest.div_rem(base);
        digits.push(r);
        rest = q;
    }
    let terms = digits
        .into_iter()
        .enumerate()
        .rev()
        .filter(|(_, d)| !d.is_zero())
        .map(|(k, d)| (expand(&BigUint::from(k), base), d))
        .collect();
    HereditaryRep {
        base: base.clone(),
        terms,
    }
}

pub fn hereditary_expand(n: &BigUint, base: &BigUint) -> Result<HereditaryRep, OrdinalError> {
    check_base(base)?;
    Ok(expand(n, base))
}

/// Expands `value` in complete base `base`, replaces the base by `base + 1`
/// and subtracts one.
pub fn goodstein_step(value: &BigUint, base: &BigUint) -> Result<BigUint, OrdinalError> {
    check_base(base)?;
    if value.is_zero() {
        return Err(OrdinalError::ZeroValue);
    }
    Ok(expand(value, base).value_at(&(base + 1u32)) - 1u32)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoodsteinRow {
    pub step: u64,
    pub base: BigUint,
    pub value: BigUint,
    /// `value` in complete base `base` with `w` for the base.
    pub ordinal: CnfOrdinal,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoodsteinRun {
    /// The starting value is row 0.
    pub rows: Vec<GoodsteinRow>,
    /// Whether the last row has value 0; otherwise the step budget ran out.
    pub finished: bool,
}

impl GoodsteinRun {
    pub fn values(&self) -> Vec<BigUint> {
        self.rows.iter().map(|r| r.value.clone()).collect()
    }

    /// `step,base,ordinal,value` lines with a header.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("step,base,ordinal,value\n");
        for r in &self.rows {
            out.push_str(&format!(
                "{},{},{},{}\n",
                r.step, r.base, r.ordinal, r.value
            ));
        }
        out
    }
}

/// Iterates [`goodstein_step`] from `m` in base `start_base` until the value
/// is 0 or `max_steps` steps have been taken.
pub fn goodstein_run(
    m: &BigUint,
    start_base: &BigUint,
    max_steps: u64,
) -> Result<GoodsteinRun, OrdinalError> {
    check_base(start_base)?;
    let row = |step, base: &BigUint, value: &BigUint| GoodsteinRow {
        step,
        base: base.clone(),
        value: value.clone(),
        ordinal: expand(value, base).to_ordinal(),
    };
    let mut rows = vec![row(0, start_base, m)];
    let (mut base, mut value) = (start_base.clone(), m.clone());
    let mut step = 0;
    while !value.is_zero() && step < max_steps {
        value = goodstein_step(&value, &base)?;
        base += 1u32;
        step += 1;
        rows.push(row(step, &base, &value));
    }
    Ok(GoodsteinRun {
        finished: value.is_zero(),
        rows,
    })
}
