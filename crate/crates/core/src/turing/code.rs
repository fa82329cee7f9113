use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;

pub use crate::coding::{decode_sequence, encode_sequence};

use super::{Direction, Machine, TuringError, BLANK};

/// First entry of every machine description.
pub const CODE_VERSION: u64 = 1;

/// A natural number read as the prime-power code of a machine description.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MachineCode(pub BigUint);

impl fmt::Display for MachineCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl FromStr for MachineCode {
    type Err = num_bigint::ParseBigIntError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(MachineCode(s.trim().parse()?))
    }
}

impl From<u64> for MachineCode {
    fn from(n: u64) -> Self {
        MachineCode(BigUint::from(n))
    }
}

// Layout, with every count, index and character code shifted up by one so
// that no entry is zero:
//   version, #states, (len, chars...) per state, #symbols, symbol codes,
//   start, #transitions, (q, s, q', s', dir) per transition with dir 1 = L, 2 = R.
// Transitions are sorted by (state index, symbol index).

fn describe(m: &Machine) -> Vec<u64> {
    let state_ix = |q: &str| m.states.iter().position(|s| s == q).expect("validated") as u64;
    let sym_ix = |c: char| m.alphabet.iter().position(|s| *s == c).expect("validated") as u64;
    let mut seq = vec![CODE_VERSION, m.states.len() as u64 + 1];
    for q in &m.states {
        seq.push(q.chars().count() as u64 + 1);
        seq.extend(q.chars().map(|c| c as u64 + 1));
    }
    seq.push(m.alphabet.len() as u64 + 1);
    seq.extend(m.alphabet.iter().map(|c| *c as u64 + 1));
    seq.push(state_ix(&m.start) + 1);
    let mut rows: Vec<[u64; 5]> = m
        .transitions
        .iter()
        .map(|((q, s), (q2, s2, d))| {
            let d = match d {
                Direction::Left => 1,
                Direction::Right => 2,
            };
            [
                state_ix(q) + 1,
                sym_ix(*s) + 1,
                state_ix(q2) + 1,
                sym_ix(*s2) + 1,
                d,
            ]
        })
        .collect();
    rows.sort();
    seq.push(rows.len() as u64 + 1);
    seq.extend(rows.into_iter().flatten());
    seq
}

pub fn encode_machine(m: &Machine) -> MachineCode {
    MachineCode(encode_sequence(&describe(m)).expect("descriptions have positive entries"))
}

// The integer table a code describes.
struct Table {
    names: Vec<String>,
    symbols: Vec<char>,
    blank: usize,
    start: usize,
    delta: Vec<Vec<Option<(usize, usize, Direction)>>>,
}

struct Reader<'a> {
    seq: &'a [u64],
    pos: usize,
}

impl Reader<'_> {
    fn next(&mut self) -> Result<u64, TuringError> {
        let v = *self.seq.get(self.pos).ok_or(TuringError::NotACode)?;
        self.pos += 1;
        Ok(v)
    }

    // an entry read as a natural (shifted down by one)
    fn nat(&mut self) -> Result<usize, TuringError> {
        usize::try_from(self.next()? - 1).map_err(|_| TuringError::NotACode)
    }

    fn index(&mut self, bound: usize) -> Result<usize, TuringError> {
        let i = self.nat()?;
        if i < bound {
            Ok(i)
        } else {
            Err(TuringError::NotACode)
        }
    }

    fn char(&mut self) -> Result<char, TuringError> {
        let c = u32::try_from(self.nat()?).map_err(|_| TuringError::NotACode)?;
        char::from_u32(c).ok_or(TuringError::NotACode)
    }
}

fn read_table(seq: &[u64]) -> Result<Table, TuringError> {
    let mut r = Reader { seq, pos: 0 };
    if r.next()? != CODE_VERSION {
        return Err(TuringError::NotACode);
    }
    let n_states = r.nat()?;
    let mut names = Vec::new();
    for _ in 0..n_states {
        let len = r.nat()?;
        let name: String = (0..len).map(|_| r.char()).collect::<Result<_, _>>()?;
        if name.is_empty()
            || name.chars().any(|c| c.is_whitespace() || c == ',')
            || names.contains(&name)
        {
            return Err(TuringError::NotACode);
        }
        names.push(name);
    }
    let n_symbols = r.nat()?;
    let mut symbols = Vec::new();
    for _ in 0..n_symbols {
        let c = r.char()?;
        if c.is_whitespace() || symbols.contains(&c) {
            return Err(TuringError::NotACode);
        }
        symbols.push(c);
    }
    let blank = symbols
        .iter()
        .position(|c| *c == BLANK)
        .ok_or(TuringError::NotACode)?;
    let start = r.index(n_states)?;
    let mut delta = vec![vec![None; n_symbols]; n_states];
    let mut last = None;
    for _ in 0..r.nat()? {
        let q = r.index(n_states)?;
        let s = r.index(n_symbols)?;
        let q2 = r.index(n_states)?;
        let s2 = r.index(n_symbols)?;
        let d = match r.next()? {
            1 => Direction::Left,
            2 => Direction::Right,
            _ => return Err(TuringError::NotACode),
        };
        if last.is_some_and(|prev| prev >= (q, s)) {
            return Err(TuringError::NotACode);
        }
        last = Some((q, s));
        delta[q][s] = Some((q2, s2, d));
    }
    if r.pos != seq.len() {
        return Err(TuringError::NotACode);
    }
    Ok(Table {
        names,
        symbols,
        blank,
        start,
        delta,
    })
}

pub fn decode_machine(code: &MachineCode) -> Result<Machine, TuringError> {
    let t = read_table(&decode_sequence(&code.0)?)?;
    let mut transitions = Vec::new();
    for (q, row) in t.delta.iter().enumerate() {
        for (s, entry) in row.iter().enumerate() {
            if let Some((q2, s2, d)) = entry {
                transitions.push((
                    (t.names[q].clone(), t.symbols[s]),
                    (t.names[*q2].clone(), t.symbols[*s2], *d),
                ));
            }
        }
    }
    Machine::new(t.names.clone(), t.symbols, &t.names[t.start], transitions)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum UtmOutcome {
    Halted {
        output: String,
        steps: u64,
    },
    OutOfFuel,
    /// The number codes no machine; a universal machine would search forever.
    Diverges,
}

/// Decodes `code` to its integer transition table and interprets that table
/// directly on `input`.
pub fn utm_run(code: &MachineCode, input: &str, fuel: u64) -> Result<UtmOutcome, TuringError> {
    let Ok(table) = decode_sequence(&code.0)
        .map_err(TuringError::from)
        .and_then(|seq| read_table(&seq))
    else {
        return Ok(UtmOutcome::Diverges);
    };
    let mut tape: std::collections::BTreeMap<i64, usize> = std::collections::BTreeMap::new();
    for (i, c) in input.chars().enumerate() {
        match table.symbols.iter().position(|s| *s == c) {
            Some(ix) if ix != table.blank => {
                tape.insert(i as i64, ix);
            }
            _ => return Err(TuringError::BadInputSymbol(c)),
        }
    }
    let (mut state, mut head, mut steps) = (table.start, 0i64, 0u64);
    loop {
        let read = tape.get(&head).copied().unwrap_or(table.blank);
        let Some((q2, s2, d)) = table.delta[state][read] else {
            let output = tape.values().map(|ix| table.symbols[*ix]).collect();
            return Ok(UtmOutcome::Halted { output, steps });
        };
        if steps == fuel {
            return Ok(UtmOutcome::OutOfFuel);
        }
        if s2 == table.blank {
            tape.remove(&head);
        } else {
            tape.insert(head, s2);
        }
        head += match d {
            Direction::Left => -1,
            Direction::Right => 1,
        };
        state = q2;
        steps += 1;
    }
}

/// `{ n <= fuel : the coded machine halts on n ones within fuel steps }`.
/// Empty for numbers that code no machine.
pub fn enumerate_we(code: &MachineCode, fuel: u64) -> BTreeSet<u64> {
    (0..=fuel)
        .filter(|n| {
            matches!(
                utm_run(code, &"1".repeat(*n as usize), fuel),
                Ok(UtmOutcome::Halted { .. })
            )
        })
        .collect()
}
