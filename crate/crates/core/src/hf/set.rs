use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use super::HfError;

/// Largest `n` accepted by [`vn_universe`]; `|V_5| = 65536`.
pub const MAX_VN: usize = 5;

/// A hereditarily finite set. Elements are kept sorted and without
/// duplicates, so structural equality is extensional equality.
///
/// Sets are ordered by rank first and then lexicographically by their
/// sorted element lists.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HFSet {
    rank: usize,
    elems: Arc<[HFSet]>,
}

impl HFSet {
    pub fn empty() -> Self {
        HFSet {
            rank: 0,
            elems: Arc::from(Vec::new()),
        }
    }

    pub fn from_elements(elems: impl IntoIterator<Item = HFSet>) -> Self {
        let mut v: Vec<HFSet> = elems.into_iter().collect();
        v.sort();
        v.dedup();
        Self::from_sorted(v)
    }

    fn from_sorted(v: Vec<HFSet>) -> Self {
        let rank = v.last().map_or(0, |x| x.rank + 1);
        HFSet {
            rank,
            elems: Arc::from(v),
        }
    }

    pub fn singleton(x: HFSet) -> Self {
        Self::from_sorted(vec![x])
    }

    /// `{x, y}`.
    pub fn doubleton(x: HFSet, y: HFSet) -> Self {
        Self::from_elements([x, y])
    }

    /// The von Neumann natural `n = {0, ..., n-1}`.
    pub fn natural(n: usize) -> Self {
        let mut v = Vec::with_capacity(n);
        for _ in 0..n {
            let next = Self::from_sorted(v.clone());
            v.push(next);
        }
        Self::from_sorted(v)
    }

    /// 0 for the empty set, otherwise one more than the largest element rank.
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn elements(&self) -> &[HFSet] {
        &self.elems
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn contains(&self, x: &HFSet) -> bool {
        x.rank < self.rank && self.elems.binary_search(x).is_ok()
    }

    pub fn is_subset(&self, other: &HFSet) -> bool {
        self.elems.iter().all(|x| other.contains(x))
    }

    /// The union of the elements.
    pub fn union(&self) -> HFSet {
        Self::from_elements(self.elems.iter().flat_map(|x| x.elems.iter().cloned()))
    }

    /// Whether this set lies in `V_n`.
    pub fn in_vn(&self, n: usize) -> bool {
        self.rank < n
    }
}

/// `{{x}, {x, y}}`.
pub fn hf_pair(x: &HFSet, y: &HFSet) -> HFSet {
    HFSet::doubleton(
        HFSet::singleton(x.clone()),
        HFSet::doubleton(x.clone(), y.clone()),
    )
}

/// The elements of `V_n` in canonical order.
pub fn vn_universe(n: usize) -> Result<Vec<HFSet>, HfError> {
    if n > MAX_VN {
        return Err(HfError::TooLarge { n, limit: MAX_VN });
    }
    let mut level: Vec<HFSet> = Vec::new();
    for _ in 0..n {
        let k = level.len();
        let mut next: Vec<HFSet> = (0u64..1 << k)
            .map(|mask| {
                // level is sorted, so picking in index order stays sorted
                HFSet::from_sorted(
                    (0..k)
                        .filter(|i| mask >> i & 1 == 1)
                        .map(|i| level[i].clone())
                        .collect(),
                )
            })
            .collect();
        next.sort();
        level = next;
    }
    Ok(level)
}

impl fmt::Display for HFSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, x) in self.elems.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for HFSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for HFSet {
    type Err = HfError;

    /// Nested braces, e.g. `{{},{{}}}`; element order and repeats are free.
    fn from_str(s: &str) -> Result<Self, HfError> {
        let bytes: Vec<(usize, u8)> = s
            .bytes()
            .enumerate()
            .filter(|(_, b)| !b.is_ascii_whitespace())
            .collect();
        let mut pos = 0;
        let set = parse_set(&bytes, &mut pos)?;
        if pos != bytes.len() {
            return Err(HfError::Syntax {
                pos: bytes[pos].0,
                message: "trailing input".into(),
            });
        }
        Ok(set)
    }
}

fn parse_set(bytes: &[(usize, u8)], pos: &mut usize) -> Result<HFSet, HfError> {
    let err = |pos: usize, message: &str| HfError::Syntax {
        pos: bytes.get(pos).map_or(usize::MAX, |b| b.0),
        message: message.into(),
    };
    if bytes.get(*pos).map(|b| b.1) != Some(b'{') {
        return Err(err(*pos, "expected `{`"));
    }
    *pos += 1;
    let mut elems = Vec::new();
    if bytes.get(*pos).map(|b| b.1) == Some(b'}') {
        *pos += 1;
        return Ok(HFSet::empty());
    }
    loop {
        elems.push(parse_set(bytes, pos)?);
        match bytes.get(*pos).map(|b| b.1) {
            Some(b',') => *pos += 1,
            Some(b'}') => {
                *pos += 1;
                return Ok(HFSet::from_elements(elems));
            }
            _ => return Err(err(*pos, "expected `,` or `}`")),
        }
    }
}
