use std::collections::BTreeSet;
use std::fmt;

use super::PropError;

/// Largest arity accepted by [`enumerate_truth_functions`].
pub const MAX_ENUMERATION_ARITY: usize = 4;
/// Largest arity accepted by [`is_adequate`], both for the target arity and
/// for the basis functions.
pub const MAX_ADEQUACY_ARITY: usize = 3;

/// A truth function given by its table; row `r` lists the inputs as the
/// binary digits of `r` (first input most significant, 0 = F).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TruthFunction {
    arity: usize,
    table: Vec<bool>,
}

impl TruthFunction {
    pub fn new(arity: usize, table: Vec<bool>) -> Result<Self, PropError> {
        if arity > MAX_ENUMERATION_ARITY {
            return Err(PropError::ArityTooLarge {
                arity,
                limit: MAX_ENUMERATION_ARITY,
            });
        }
        if table.len() != 1 << arity {
            return Err(PropError::BadTable {
                arity,
                len: table.len(),
            });
        }
        Ok(TruthFunction { arity, table })
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn table(&self) -> &[bool] {
        &self.table
    }

    pub fn apply(&self, inputs: &[bool]) -> bool {
        debug_assert_eq!(inputs.len(), self.arity);
        let row = inputs
            .iter()
            .fold(0usize, |acc, b| (acc << 1) | *b as usize);
        self.table[row]
    }

    pub fn nor() -> Self {
        Self::binary_from(|a, b| !(a || b))
    }

    pub fn nand() -> Self {
        Self::binary_from(|a, b| !(a && b))
    }

    pub fn negation() -> Self {
        TruthFunction {
            arity: 1,
            table: vec![true, false],
        }
    }

    pub fn binary_from(f: impl Fn(bool, bool) -> bool) -> Self {
        let table = (0..4).map(|r| f(r & 2 != 0, r & 1 != 0)).collect();
        TruthFunction { arity: 2, table }
    }
}

impl fmt::Display for TruthFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.arity)?;
        for v in &self.table {
            f.write_str(if *v { "T" } else { "F" })?;
        }
        Ok(())
    }
}

impl std::str::FromStr for TruthFunction {
    type Err = PropError;

    /// Parses a table written as `T`/`F` (or `1`/`0`) characters, rows in order.
    fn from_str(s: &str) -> Result<Self, PropError> {
        let body = s.rsplit(':').next().unwrap_or(s).trim();
        let table: Vec<bool> = body
            .chars()
            .map(|c| match c {
                'T' | 't' | '1' => Ok(true),
                'F' | 'f' | '0' => Ok(false),
                other => Err(PropError::Syntax {
                    offset: 0,
                    message: format!("bad table character `{other}`"),
                }),
            })
            .collect::<Result<_, _>>()?;
        let arity = table.len().trailing_zeros() as usize;
        if !table.len().is_power_of_two() {
            return Err(PropError::BadTable {
                arity,
                len: table.len(),
            });
        }
        TruthFunction::new(arity, table)
    }
}

/// All `2^(2^arity)` truth functions of the given arity, ordered by table
/// read as a binary numeral (row 0 most significant).
pub fn enumerate_truth_functions(arity: usize) -> Result<Vec<TruthFunction>, PropError> {
    if arity > MAX_ENUMERATION_ARITY {
        return Err(PropError::ArityTooLarge {
            arity,
            limit: MAX_ENUMERATION_ARITY,
        });
    }
    let rows = 1usize << arity;
    Ok((0..1u64 << rows)
        .map(|code| TruthFunction {
            arity,
            table: (0..rows)
                .map(|r| (code >> (rows - 1 - r)) & 1 == 1)
                .collect(),
        })
        .collect())
}

// Closure of the projections of the given arity under composition with the
// basis; tables are bitmasks with bit r holding the value on row r.
fn closure(basis: &[TruthFunction], arity: usize) -> BTreeSet<u32> {
    let rows = 1usize << arity;
    let full = 1usize << rows;
    let mut set: BTreeSet<u32> = (0..arity)
        .map(|i| {
            (0..rows)
                .filter(|r| (r >> (arity - 1 - i)) & 1 == 1)
                .fold(0u32, |m, r| m | (1 << r))
        })
        .collect();
    loop {
        let before = set.len();
        let current: Vec<u32> = set.iter().copied().collect();
        for f in basis {
            let m = f.arity as u32;
            let n = current.len() as u64;
            for t in 0..n.pow(m) {
                let mut out = 0u32;
                for r in 0..rows {
                    let mut row = 0usize;
                    let mut rest = t;
                    for _ in 0..m {
                        // digits of t, most significant first, select the arguments
                        let j = (rest / n.pow(m - 1)) as usize;
                        rest = (rest % n.pow(m - 1)) * n;
                        row = (row << 1) | ((current[j] >> r) & 1) as usize;
                    }
                    if f.table[row] {
                        out |= 1 << r;
                    }
                }
                set.insert(out);
                if set.len() == full {
                    return set;
                }
            }
        }
        if set.len() == before {
            return set;
        }
    }
}

/// Whether every truth function of each arity `1..=max_arity` is a
/// composition of basis functions and projections.
pub fn is_adequate(basis: &[TruthFunction], max_arity: usize) -> Result<bool, PropError> {
    if max_arity > MAX_ADEQUACY_ARITY {
        return Err(PropError::ArityTooLarge {
            arity: max_arity,
            limit: MAX_ADEQUACY_ARITY,
        });
    }
    if let Some(f) = basis.iter().find(|f| f.arity > MAX_ADEQUACY_ARITY) {
        return Err(PropError::ArityTooLarge {
            arity: f.arity,
            limit: MAX_ADEQUACY_ARITY,
        });
    }
    Ok((1..=max_arity).all(|k| closure(basis, k).len() == 1 << (1 << k)))
}
