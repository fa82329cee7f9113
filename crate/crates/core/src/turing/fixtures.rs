//! Small machines used as examples and test fixtures.

use super::Machine;

fn parse(src: &str) -> Machine {
    src.parse().expect("fixture text is well formed")
}

/// Computes the identity: no transitions at all.
pub fn identity() -> Machine {
    parse("states: a\nalphabet: 1 ~\nstart: a\n")
}

/// Appends a 1 to a block of ones.
pub fn successor() -> Machine {
    parse(
        "states: a b
alphabet: 1 ~
start: a
a,1 -> a,1,R
a,~ -> b,1,R
",
    )
}

/// Erases a word over {0,1} and leaves `1` when it has an even number of
/// ones, nothing otherwise.
pub fn parity() -> Machine {
    parse(
        "states: a b c
alphabet: 0 1 ~
start: a
a,0 -> a,~,R
a,1 -> b,~,R
b,0 -> b,~,R
b,1 -> a,~,R
a,~ -> c,1,R
b,~ -> c,~,R
",
    )
}

/// On `1^x,1^y` leaves `x+y` ones: the comma becomes a 1 and the last 1 is
/// erased.
pub fn adder() -> Machine {
    parse(
        "states: a b c d
alphabet: 1 , ~
start: a
a,1 -> a,1,R
a,, -> b,1,R
b,1 -> b,1,R
b,~ -> c,~,L
c,1 -> d,~,L
",
    )
}

/// On `1^x,1^y` leaves `max(0, x-y)` ones. Each round erases the last 1 of
/// `y` and the first 1 of `x`.
pub fn monus() -> Machine {
    parse(
        "states: q0 q1 q2 q3 q4 q5 h
alphabet: 1 , ~
start: q0
q0,1 -> q0,1,R
q0,, -> q0,,,R
q0,~ -> q1,~,L
q1,, -> h,~,L
q1,1 -> q2,~,L
q2,1 -> q2,1,L
q2,, -> q3,,,L
q3,1 -> q3,1,L
q3,~ -> q4,~,R
q4,1 -> q0,~,R
q4,, -> q5,~,R
q5,1 -> q5,~,R
",
    )
}

/// Erases its input and writes `11`.
pub fn constant_two() -> Machine {
    parse(
        "states: a b c
alphabet: 1 ~
start: a
a,1 -> a,~,R
a,~ -> b,1,R
b,~ -> c,1,R
",
    )
}

/// Halts on blocks of ones of even length and runs right forever otherwise.
pub fn even_halter() -> Machine {
    parse(
        "states: a b
alphabet: 1 ~
start: a
a,1 -> b,1,R
b,1 -> a,1,R
b,~ -> b,~,R
",
    )
}

/// Never halts.
pub fn looper() -> Machine {
    parse(
        "states: a
alphabet: 1 ~
start: a
a,1 -> a,1,R
a,~ -> a,~,R
",
    )
}

/// Every fixture with its name.
pub fn all() -> Vec<(&'static str, Machine)> {
    vec![
        ("identity", identity()),
        ("successor", successor()),
        ("parity", parity()),
        ("adder", adder()),
        ("monus", monus()),
        ("constant-two", constant_two()),
        ("even-halter", even_halter()),
        ("looper", looper()),
    ]
}

/// Looks a fixture up by name.
pub fn by_name(name: &str) -> Option<Machine> {
    all().into_iter().find(|(n, _)| *n == name).map(|(_, m)| m)
}
