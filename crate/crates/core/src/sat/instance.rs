use std::collections::BTreeSet;

use super::{
    encode_coloring, encode_exact_cover, encode_linear_extension, encode_splitting,
    encode_transversal, SatError, SatProblem,
};

fn err(line: usize, message: impl Into<String>) -> SatError {
    SatError::Instance {
        line,
        message: message.into(),
    }
}

fn naturals(line: usize, text: &str) -> Result<Vec<u64>, SatError> {
    text.split_whitespace()
        .map(|t| {
            t.parse::<u64>()
                .map_err(|_| err(line, format!("`{t}` is not a natural")))
        })
        .collect()
}

fn pair(line: usize, xs: &[u64]) -> Result<(usize, usize), SatError> {
    match xs {
        [a, b] => Ok((*a as usize, *b as usize)),
        _ => Err(err(line, "expected two naturals")),
    }
}

/// Parses a line-oriented instance file.
///
/// The first line names the kind (`order`, `color`, `transversal`,
/// `exactcover` or `split`), the second gives the sizes (`n`; `vertices k`;
/// nothing for families, or `points` for exact cover), and each further line
/// is a pair or a set of space-separated naturals. Blank lines and lines
/// starting with `#` are skipped.
pub fn parse_instance(text: &str) -> Result<SatProblem, SatError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (kind_line, kind) = lines.next().ok_or_else(|| err(1, "empty instance"))?;
    let mut sizes = |want: usize| -> Result<Vec<u64>, SatError> {
        let (n, l) = lines
            .next()
            .ok_or_else(|| err(kind_line + 1, "missing size line"))?;
        let xs = naturals(n, l)?;
        if xs.len() != want {
            return Err(err(n, format!("expected {want} size value(s)")));
        }
        Ok(xs)
    };
    match kind {
        "order" => {
            let n = sizes(1)?[0] as usize;
            let pairs = lines
                .map(|(n, l)| pair(n, &naturals(n, l)?))
                .collect::<Result<BTreeSet<_>, _>>()?;
            encode_linear_extension(n, &pairs)
        }
        "color" => {
            let s = sizes(2)?;
            let edges = lines
                .map(|(n, l)| pair(n, &naturals(n, l)?))
                .collect::<Result<BTreeSet<_>, _>>()?;
            encode_coloring(s[0] as usize, &edges, s[1] as usize)
        }
        "exactcover" => {
            let points = sizes(1)?[0] as usize;
            let family = lines
                .map(|(n, l)| Ok(naturals(n, l)?.into_iter().map(|x| x as usize).collect()))
                .collect::<Result<Vec<BTreeSet<usize>>, SatError>>()?;
            encode_exact_cover(points, &family)
        }
        "transversal" | "split" => {
            let family = lines
                .map(|(n, l)| Ok(naturals(n, l)?.into_iter().collect()))
                .collect::<Result<Vec<BTreeSet<u64>>, SatError>>()?;
            if kind == "split" {
                encode_splitting(&family)
            } else {
                encode_transversal(&family)
            }
        }
        other => Err(err(kind_line, format!("unknown instance kind `{other}`"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sat::{decode_witness, solve, Decoded, ProblemKind};

    #[test]
    fn coloring_file() {
        let p = parse_instance("color\n3 2\n0 1\n1 2\n# comment\n0 2\n").unwrap();
        assert_eq!(
            p.kind(),
            &ProblemKind::Coloring {
                vertices: 3,
                colors: 2
            }
        );
        assert!(!solve(&p).unwrap().is_sat());
    }

    #[test]
    fn family_files() {
        let p = parse_instance("transversal\n1 2\n2 3\n").unwrap();
        let w = solve(&p).unwrap().witness().cloned().unwrap();
        assert!(matches!(
            decode_witness(&p, &w).unwrap(),
            Decoded::Choice(_)
        ));
        let p = parse_instance("exactcover\n2\n0\n1\n0 1\n").unwrap();
        assert!(solve(&p).unwrap().is_sat());
        let p = parse_instance("split\n1 2\n1 3\n2 3\n").unwrap();
        assert!(!solve(&p).unwrap().is_sat());
        let p = parse_instance("split\n1 2\n2 3\n").unwrap();
        assert!(solve(&p).unwrap().is_sat());
        let p = parse_instance("order\n3\n0 1\n").unwrap();
        assert!(solve(&p).unwrap().is_sat());
    }

    #[test]
    fn malformed_files() {
        assert!(matches!(parse_instance(""), Err(SatError::Instance { .. })));
        assert!(matches!(
            parse_instance("graph\n1\n"),
            Err(SatError::Instance { line: 1, .. })
        ));
        assert!(matches!(
            parse_instance("color\n3\n"),
            Err(SatError::Instance { line: 2, .. })
        ));
        assert!(matches!(
            parse_instance("order\n2\n0 x\n"),
            Err(SatError::Instance { line: 3, .. })
        ));
    }
}
