//! Parsing of command-line values and input files.

use std::fs;
use std::path::Path;

use laman_core::algebra::DistanceAssignment;
use laman_core::{Edge, Graph};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::CliError;

pub fn read_file(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io { path: path.display().to_string(), source })
}

/// Reads and parses a graph file, tagging parse errors with the path.
pub fn read_graph(path: &Path) -> Result<Graph, CliError> {
    let text = read_file(path)?;
    Graph::parse(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

/// An integer, a fraction `p/q` or a finite decimal such as `-2.25`.
pub fn parse_rational(s: &str) -> Result<BigRational, CliError> {
    let bad = || CliError::Input(format!("`{s}` is not a rational number"));
    let s = s.trim();
    if let Some((int, frac)) = s.split_once('.') {
        let (negative, int) = match int.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, int.strip_prefix('+').unwrap_or(int)),
        };
        if (int.is_empty() && frac.is_empty()) || !(int.chars().chain(frac.chars()).all(|c| c.is_ascii_digit())) {
            return Err(bad());
        }
        let digits: BigInt = format!("{int}{frac}").parse().map_err(|_| bad())?;
        let scale = num_traits::pow(BigInt::from(10), frac.len());
        let q = BigRational::new(digits, scale);
        return Ok(if negative { -q } else { q });
    }
    let q: BigRational = s.parse().map_err(|_| bad())?;
    Ok(q)
}

/// Exactly eight comma-separated rationals.
pub fn parse_k33_distances(s: &str) -> Result<[BigRational; 8], CliError> {
    let values = s.split(',').map(parse_rational).collect::<Result<Vec<_>, _>>()?;
    let n = values.len();
    values.try_into().map_err(|_| CliError::Input(format!("expected 8 distances, got {n}")))
}

/// Lines `a b value` giving squared edge lengths; `#` starts a comment.
pub fn parse_distances(text: &str) -> Result<DistanceAssignment, CliError> {
    let mut out = DistanceAssignment::default();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |m: String| CliError::Input(format!("line {}: {m}", i + 1));
        let toks: Vec<&str> = line.split_whitespace().collect();
        let [a, b, v] = toks[..] else {
            return Err(err(format!("expected `a b value`, got `{line}`")));
        };
        let label = |t: &str| t.parse::<u32>().map_err(|_| err(format!("invalid vertex label `{t}`")));
        let e = Edge::try_new(label(a)?, label(b)?).ok_or_else(|| err("loop edge".into()))?;
        let value = parse_rational(v).map_err(|e| err(e.to_string()))?;
        if out.get(e).is_some() {
            return Err(err(format!("duplicate distance for edge {e}")));
        }
        out.insert(e, value)?;
    }
    Ok(out)
}

pub fn parse_edge(s: &str) -> Result<Edge, CliError> {
    let bad = || CliError::Input(format!("`{s}` is not an edge `a,b`"));
    let (a, b) = s.split_once(',').ok_or_else(bad)?;
    let a = a.trim().parse().map_err(|_| bad())?;
    let b = b.trim().parse().map_err(|_| bad())?;
    Edge::try_new(a, b).ok_or_else(bad)
}

pub fn rational_string(q: &BigRational) -> String {
    if q.denom().is_one() || q.numer().is_zero() {
        q.numer().to_string()
    } else {
        q.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn rationals() {
        assert_eq!(parse_rational("9/16").unwrap(), q(9, 16));
        assert_eq!(parse_rational("4").unwrap(), q(4, 1));
        assert_eq!(parse_rational("-2.25").unwrap(), q(-9, 4));
        assert_eq!(parse_rational(".5").unwrap(), q(1, 2));
        assert_eq!(parse_rational("3.").unwrap(), q(3, 1));
        for bad in ["", ".", "1/0x", "a", "1.2.3", "1.-2", "--1"] {
            assert!(parse_rational(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn k33_distances_need_eight_values() {
        assert!(parse_k33_distances("1,1,1,1,1/4,4,9/16,9/4").is_ok());
        assert!(matches!(parse_k33_distances("1,1"), Err(CliError::Input(m)) if m.contains("got 2")));
    }

    #[test]
    fn distance_files() {
        let d = parse_distances("# c\n0 1 2\n\n1 2 1/4 # trailing\n").unwrap();
        assert_eq!(d.len(), 2);
        assert_eq!(d.get(Edge::new(2, 1)), Some(&q(1, 4)));
        assert!(matches!(parse_distances("0 1\n"), Err(CliError::Input(m)) if m.starts_with("line 1")));
        assert!(parse_distances("0 0 1\n").is_err());
        assert!(parse_distances("0 1 1\n1 0 2\n").is_err());
        assert!(matches!(parse_distances("0 1 -1\n"), Err(CliError::Core(_))));
    }

    #[test]
    fn edges() {
        assert_eq!(parse_edge("2, 1").unwrap(), Edge::new(1, 2));
        assert!(parse_edge("1,1").is_err());
        assert!(parse_edge("1").is_err());
    }
}
