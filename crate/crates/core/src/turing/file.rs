use std::fmt;
use std::str::FromStr;

use super::{Direction, Machine, Transition, TuringError};

fn parse_transition(line: &str) -> Option<((String, char), Transition)> {
    let (lhs, rhs) = line.split_once("->")?;
    let (lhs, rhs) = (lhs.trim(), rhs.trim());
    let (q, s) = lhs.split_once(',')?;
    let mut s_chars = s.trim().chars();
    let s = s_chars.next()?;
    if s_chars.next().is_some() {
        return None;
    }
    let (rest, d) = rhs.rsplit_once(',')?;
    let d = match d.trim() {
        "L" | "l" => Direction::Left,
        "R" | "r" => Direction::Right,
        _ => return None,
    };
    // the written symbol may itself be a comma, so take it from the end
    let rest = rest.trim_end();
    let s2 = rest.chars().next_back()?;
    let q2 = rest[..rest.len() - s2.len_utf8()].strip_suffix(',')?.trim();
    let q = q.trim();
    if q.is_empty() || q2.is_empty() {
        return None;
    }
    Some(((q.to_string(), s), (q2.to_string(), s2, d)))
}

impl FromStr for Machine {
    type Err = TuringError;

    /// Reads `states:`, `alphabet:` (single characters separated by spaces,
    /// blank written `~`), `start:` and lines `q,s -> q',s',L|R`.
    fn from_str(src: &str) -> Result<Self, TuringError> {
        let mut states = None;
        let mut alphabet = None;
        let mut start = None;
        let mut transitions = Vec::new();
        for (no, raw) in src.lines().enumerate() {
            let line = raw.trim();
            let no = no + 1;
            let err = |message: &str| TuringError::Parse {
                line: no,
                message: message.to_string(),
            };
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if let Some(rest) = line.strip_prefix("states:") {
                states = Some(
                    rest.split(|c: char| c == ',' || c.is_whitespace())
                        .filter(|s| !s.is_empty())
                        .map(str::to_string)
                        .collect::<Vec<_>>(),
                );
            } else if let Some(rest) = line.strip_prefix("alphabet:") {
                let mut syms = Vec::new();
                for tok in rest.split_whitespace() {
                    let mut cs = tok.chars();
                    match (cs.next(), cs.next()) {
                        (Some(c), None) => syms.push(c),
                        _ => return Err(err("alphabet symbols are single characters")),
                    }
                }
                alphabet = Some(syms);
            } else if let Some(rest) = line.strip_prefix("start:") {
                start = Some(rest.trim().to_string());
            } else {
                transitions.push(
                    parse_transition(line).ok_or_else(|| err("expected `q,s -> q',s',L|R`"))?,
                );
            }
        }
        let missing = |what: &str| TuringError::Parse {
            line: 0,
            message: format!("missing `{what}` header"),
        };
        Machine::new(
            states.ok_or_else(|| missing("states:"))?,
            alphabet.ok_or_else(|| missing("alphabet:"))?,
            &start.ok_or_else(|| missing("start:"))?,
            transitions,
        )
    }
}

impl fmt::Display for Machine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "states: {}", self.states.join(" "))?;
        let syms: Vec<String> = self.alphabet.iter().map(|c| c.to_string()).collect();
        writeln!(f, "alphabet: {}", syms.join(" "))?;
        writeln!(f, "start: {}", self.start)?;
        for ((q, s), (q2, s2, d)) in &self.transitions {
            let d = match d {
                Direction::Left => 'L',
                Direction::Right => 'R',
            };
            writeln!(f, "{q},{s} -> {q2},{s2},{d}")?;
        }
        Ok(())
    }
}
