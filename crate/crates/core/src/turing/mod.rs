//! Single-tape deterministic Turing machines over a two-way infinite tape,
//! their prime-power codes, and a universal interpreter for those codes.

mod code;
mod file;
pub mod fixtures;

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

pub use code::{
    decode_machine, decode_sequence, encode_machine, encode_sequence, enumerate_we, utm_run,
    MachineCode, UtmOutcome, CODE_VERSION,
};

/// The blank symbol.
pub const BLANK: char = '~';

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TuringError {
    #[error("unknown state `{0}`")]
    UnknownState(String),
    #[error("symbol `{0}` is not in the alphabet")]
    UnknownSymbol(char),
    #[error("input symbol `{0}` is not a non-blank alphabet symbol")]
    BadInputSymbol(char),
    #[error("the alphabet must contain the blank `~`")]
    MissingBlank,
    #[error("state `{0}` declared twice")]
    DuplicateState(String),
    #[error("symbol `{0}` declared twice")]
    DuplicateSymbol(char),
    #[error("two transitions for ({0}, {1})")]
    DuplicateTransition(String, char),
    #[error("machine file line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("not the code of a machine")]
    NotACode,
}

impl From<crate::coding::NotACode> for TuringError {
    fn from(_: crate::coding::NotACode) -> Self {
        TuringError::NotACode
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Direction {
    Left,
    Right,
}

impl Direction {
    fn delta(self) -> i64 {
        match self {
            Direction::Left => -1,
            Direction::Right => 1,
        }
    }
}

pub type Transition = (String, char, Direction);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Machine {
    states: Vec<String>,
    alphabet: Vec<char>,
    start: String,
    transitions: BTreeMap<(String, char), Transition>,
}

impl Machine {
    /// Validates that the start state, every transition state and symbol
    /// are declared, and that the blank is in the alphabet.
    pub fn new(
        states: Vec<String>,
        alphabet: Vec<char>,
        start: &str,
        transitions: impl IntoIterator<Item = ((String, char), Transition)>,
    ) -> Result<Self, TuringError> {
        for (i, s) in states.iter().enumerate() {
            if states[..i].contains(s) {
                return Err(TuringError::DuplicateState(s.clone()));
            }
        }
        for (i, c) in alphabet.iter().enumerate() {
            if alphabet[..i].contains(c) {
                return Err(TuringError::DuplicateSymbol(*c));
            }
        }
        if !alphabet.contains(&BLANK) {
            return Err(TuringError::MissingBlank);
        }
        let known_state = |s: &String| {
            if states.contains(s) {
                Ok(())
            } else {
                Err(TuringError::UnknownState(s.clone()))
            }
        };
        let known_symbol = |c: char| {
            if alphabet.contains(&c) {
                Ok(())
            } else {
                Err(TuringError::UnknownSymbol(c))
            }
        };
        known_state(&start.to_string())?;
        let mut map = BTreeMap::new();
        for ((q, s), (q2, s2, d)) in transitions {
            known_state(&q)?;
            known_state(&q2)?;
            known_symbol(s)?;
            known_symbol(s2)?;
            if map.contains_key(&(q.clone(), s)) {
                return Err(TuringError::DuplicateTransition(q, s));
            }
            map.insert((q, s), (q2, s2, d));
        }
        Ok(Machine {
            states,
            alphabet,
            start: start.to_string(),
            transitions: map,
        })
    }

    pub fn states(&self) -> &[String] {
        &self.states
    }

    pub fn alphabet(&self) -> &[char] {
        &self.alphabet
    }

    pub fn start(&self) -> &str {
        &self.start
    }

    pub fn transitions(&self) -> &BTreeMap<(String, char), Transition> {
        &self.transitions
    }

    pub fn transition(&self, state: &str, symbol: char) -> Option<&Transition> {
        self.transitions.get(&(state.to_string(), symbol))
    }
}

/// Tape contents, head position and state. Only non-blank cells are stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Configuration {
    pub tape: BTreeMap<i64, char>,
    pub head: i64,
    pub state: String,
}

impl Configuration {
    /// `input` written from cell 0, head on cell 0, in the start state.
    pub fn initial(m: &Machine, input: &str) -> Result<Self, TuringError> {
        let mut tape = BTreeMap::new();
        for (i, c) in input.chars().enumerate() {
            if c == BLANK || !m.alphabet.contains(&c) {
                return Err(TuringError::BadInputSymbol(c));
            }
            tape.insert(i as i64, c);
        }
        Ok(Configuration {
            tape,
            head: 0,
            state: m.start.clone(),
        })
    }

    pub fn read(&self) -> char {
        self.tape.get(&self.head).copied().unwrap_or(BLANK)
    }

    /// Non-blank symbols from the leftmost to the rightmost non-blank cell,
    /// with interior blanks dropped.
    pub fn output(&self) -> String {
        self.tape.values().collect()
    }

    /// Cells from the leftmost to the rightmost non-blank cell, blanks
    /// included.
    pub fn raw_tape(&self) -> String {
        match (self.tape.keys().next(), self.tape.keys().next_back()) {
            (Some(lo), Some(hi)) => (*lo..=*hi)
                .map(|i| self.tape.get(&i).copied().unwrap_or(BLANK))
                .collect(),
            _ => String::new(),
        }
    }
}

impl fmt::Display for Configuration {
    /// `state: cells` with the scanned cell in brackets; the window spans the
    /// non-blank region and the head.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lo = self
            .tape
            .keys()
            .next()
            .map_or(self.head, |k| (*k).min(self.head));
        let hi = self
            .tape
            .keys()
            .next_back()
            .map_or(self.head, |k| (*k).max(self.head));
        write!(f, "{}: ", self.state)?;
        for i in lo..=hi {
            let c = self.tape.get(&i).copied().unwrap_or(BLANK);
            if i == self.head {
                write!(f, "[{c}]")?;
            } else {
                write!(f, "{c}")?;
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Step {
    Next(Configuration),
    Halted,
}

/// One transition, or `Halted` when none applies to (state, scanned symbol).
pub fn step(m: &Machine, c: &Configuration) -> Result<Step, TuringError> {
    if !m.states.contains(&c.state) {
        return Err(TuringError::UnknownState(c.state.clone()));
    }
    let Some((q, s, d)) = m.transition(&c.state, c.read()) else {
        return Ok(Step::Halted);
    };
    let mut next = c.clone();
    if *s == BLANK {
        next.tape.remove(&c.head);
    } else {
        next.tape.insert(c.head, *s);
    }
    next.head += d.delta();
    next.state = q.clone();
    Ok(Step::Next(next))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RunOutcome {
    Halted {
        output: String,
        steps: u64,
        config: Configuration,
    },
    OutOfFuel {
        config: Configuration,
    },
}

impl RunOutcome {
    pub fn output(&self) -> Option<&str> {
        match self {
            RunOutcome::Halted { output, .. } => Some(output),
            RunOutcome::OutOfFuel { .. } => None,
        }
    }
}

/// Runs `m` on `input` for at most `fuel` transitions.
pub fn run(m: &Machine, input: &str, fuel: u64) -> Result<RunOutcome, TuringError> {
    let mut c = Configuration::initial(m, input)?;
    let mut steps = 0;
    loop {
        match step(m, &c)? {
            Step::Halted => {
                return Ok(RunOutcome::Halted {
                    output: c.output(),
                    steps,
                    config: c,
                })
            }
            Step::Next(_) if steps == fuel => return Ok(RunOutcome::OutOfFuel { config: c }),
            Step::Next(next) => {
                c = next;
                steps += 1;
            }
        }
    }
}

/// Every configuration of a run, starting with the initial one; stops at a
/// halt or after `fuel` transitions.
pub fn trace(m: &Machine, input: &str, fuel: u64) -> Result<Vec<Configuration>, TuringError> {
    let mut out = vec![Configuration::initial(m, input)?];
    for _ in 0..fuel {
        match step(m, out.last().unwrap())? {
            Step::Halted => break,
            Step::Next(next) => out.push(next),
        }
    }
    Ok(out)
}

/// Runs on `x` written in base one and counts the ones left on the tape;
/// `None` when fuel runs out.
pub fn compute_numeric(m: &Machine, x: usize, fuel: u64) -> Result<Option<usize>, TuringError> {
    compute_on(m, &"1".repeat(x), fuel)
}

/// Like [`compute_numeric`] for an arbitrary input word, e.g. `111,11`.
pub fn compute_on(m: &Machine, input: &str, fuel: u64) -> Result<Option<usize>, TuringError> {
    Ok(match run(m, input, fuel)? {
        RunOutcome::Halted { output, .. } => Some(output.chars().filter(|c| *c == '1').count()),
        RunOutcome::OutOfFuel { .. } => None,
    })
}

#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;

    #[test]
    fn single_step_rewrites_and_moves_left() {
        let m: Machine = "states: a b\nalphabet: 0 3 4 6 ~\nstart: a\na,4 -> b,6,L\n"
            .parse()
            .unwrap();
        let mut c = Configuration::initial(&m, "034").unwrap();
        c.head = 2;
        let Step::Next(next) = step(&m, &c).unwrap() else {
            panic!("should move")
        };
        assert_eq!(next.raw_tape(), "036");
        assert_eq!(next.head, 1);
        assert_eq!(next.state, "b");
        assert_eq!(step(&m, &next).unwrap(), Step::Halted);
    }

    #[test]
    fn empty_machine_halts_at_once() {
        let m = identity();
        let out = run(&m, "111", 10).unwrap();
        assert_eq!(
            out,
            RunOutcome::Halted {
                output: "111".into(),
                steps: 0,
                config: Configuration::initial(&m, "111").unwrap(),
            }
        );
    }

    #[test]
    fn blank_beyond_input() {
        let m = successor();
        let mut c = Configuration::initial(&m, "1").unwrap();
        c.head = 40;
        assert_eq!(c.read(), BLANK);
        assert!(matches!(step(&m, &c).unwrap(), Step::Next(_)));
        c.state = "zz".into();
        assert_eq!(step(&m, &c), Err(TuringError::UnknownState("zz".into())));
    }

    #[test]
    fn fixture_outputs() {
        assert_eq!(
            run(&successor(), "111", 100).unwrap().output(),
            Some("1111")
        );
        assert_eq!(run(&parity(), "11", 100).unwrap().output(), Some("1"));
        assert_eq!(run(&parity(), "10", 100).unwrap().output(), Some(""));
        assert!(matches!(
            run(&looper(), "1", 10).unwrap(),
            RunOutcome::OutOfFuel { .. }
        ));
        assert_eq!(compute_numeric(&successor(), 3, 100).unwrap(), Some(4));
        assert_eq!(compute_numeric(&identity(), 5, 100).unwrap(), Some(5));
        assert_eq!(compute_on(&adder(), "111,11", 100).unwrap(), Some(5));
        assert_eq!(compute_on(&adder(), ",", 100).unwrap(), Some(0));
        assert_eq!(compute_numeric(&constant_two(), 7, 100).unwrap(), Some(2));
        assert!(matches!(
            run(&successor(), "1~1", 10),
            Err(TuringError::BadInputSymbol('~'))
        ));
        assert!(matches!(
            run(&successor(), "12", 10),
            Err(TuringError::BadInputSymbol('2'))
        ));
    }

    #[test]
    fn monus_on_all_small_pairs() {
        for x in 0..6 {
            for y in 0..6 {
                let input = format!("{},{}", "1".repeat(x), "1".repeat(y));
                assert_eq!(
                    compute_on(&monus(), &input, 10_000).unwrap(),
                    Some(x.saturating_sub(y)),
                    "{input}"
                );
            }
        }
    }

    #[test]
    fn even_length_halter() {
        for n in 0..8 {
            let halted = matches!(
                run(&even_halter(), &"1".repeat(n), 1000).unwrap(),
                RunOutcome::Halted { .. }
            );
            assert_eq!(halted, n % 2 == 0);
        }
    }

    #[test]
    fn trace_lines() {
        let lines: Vec<String> = trace(&successor(), "11", 10)
            .unwrap()
            .iter()
            .map(|c| c.to_string())
            .collect();
        assert_eq!(lines, ["a: [1]1", "a: 1[1]", "a: 11[~]", "b: 111[~]"]);
    }

    #[test]
    fn validation() {
        let bad = Machine::new(vec!["a".into()], vec!['1'], "a", []);
        assert_eq!(bad, Err(TuringError::MissingBlank));
        let bad = Machine::new(vec!["a".into()], vec!['~'], "b", []);
        assert_eq!(bad, Err(TuringError::UnknownState("b".into())));
        let bad = Machine::new(
            vec!["a".into()],
            vec!['~'],
            "a",
            [(("a".into(), '1'), ("a".into(), '1', Direction::Right))],
        );
        assert_eq!(bad, Err(TuringError::UnknownSymbol('1')));
    }
}
