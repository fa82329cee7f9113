pub mod fol;
pub mod hf;
pub mod nf;
pub mod ord;
pub mod prop;
pub mod sat;
pub mod tm;

pub(crate) fn tf(b: bool) -> &'static str {
    if b {
        "T"
    } else {
        "F"
    }
}

pub(crate) fn parse_tf(s: &str) -> Option<bool> {
    match s {
        "T" | "t" | "1" | "true" => Some(true),
        "F" | "f" | "0" | "false" => Some(false),
        _ => None,
    }
}
