//! Line-oriented graph text format.
//!
//! ```text
//! # comment
//! n 4
//! v 0        (optional; when present there must be exactly n of them)
//! e 0 1
//! ```
//!
//! `;` is accepted as a line separator so a whole graph fits on one line.
//! Without `v` lines the vertex set is the set of edge endpoints, padded
//! with the smallest unused labels until it has `n` members.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use super::{Graph, Vertex};
use crate::error::{Error, Result};

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

fn parse_label(tok: Option<&str>, line: usize) -> Result<Vertex> {
    let tok = tok.ok_or_else(|| parse_err(line, "missing vertex label"))?;
    tok.parse().map_err(|_| parse_err(line, format!("invalid vertex label `{tok}`")))
}

impl Graph {
    pub fn parse(text: &str) -> Result<Graph> {
        let mut declared: Option<(usize, usize)> = None;
        let mut listed: Vec<(Vertex, usize)> = Vec::new();
        let mut edges = Vec::new();

        let lines = text.lines().enumerate().flat_map(|(i, l)| l.split(';').map(move |s| (i + 1, s)));
        for (lineno, raw) in lines {
            let content = raw.split('#').next().unwrap_or("");
            let mut toks = content.split_whitespace();
            let Some(tag) = toks.next() else { continue };
            match tag {
                "n" => {
                    if declared.is_some() {
                        return Err(parse_err(lineno, "duplicate `n` line"));
                    }
                    let tok = toks.next().ok_or_else(|| parse_err(lineno, "missing vertex count"))?;
                    let n = tok.parse().map_err(|_| parse_err(lineno, format!("invalid vertex count `{tok}`")))?;
                    declared = Some((n, lineno));
                }
                "v" => listed.push((parse_label(toks.next(), lineno)?, lineno)),
                "e" => {
                    let a = parse_label(toks.next(), lineno)?;
                    let b = parse_label(toks.next(), lineno)?;
                    if a == b {
                        return Err(parse_err(lineno, format!("self-loop at vertex {a}")));
                    }
                    edges.push((a, b, lineno));
                }
                other => return Err(parse_err(lineno, format!("unknown record `{other}`"))),
            }
            if let Some(extra) = toks.next() {
                return Err(parse_err(lineno, format!("unexpected token `{extra}`")));
            }
        }

        let (n, n_line) = declared.ok_or_else(|| parse_err(1, "missing `n <N>` line"))?;
        let mut g = Graph::new();
        if listed.is_empty() {
            let endpoints: BTreeSet<Vertex> = edges.iter().flat_map(|&(a, b, _)| [a, b]).collect();
            if endpoints.len() > n {
                return Err(parse_err(n_line, format!("edges use {} distinct vertices but n = {n}", endpoints.len())));
            }
            for &v in &endpoints {
                g.add_vertex(v);
            }
            let mut next = 0;
            while g.vertex_count() < n {
                g.add_vertex(next);
                next += 1;
            }
        } else {
            for &(v, line) in &listed {
                if !g.add_vertex(v) {
                    return Err(parse_err(line, format!("duplicate vertex {v}")));
                }
            }
            if g.vertex_count() != n {
                return Err(parse_err(n_line, format!("n = {n} but {} vertices listed", g.vertex_count())));
            }
        }
        for (a, b, line) in edges {
            for v in [a, b] {
                if !g.contains_vertex(v) {
                    return Err(parse_err(line, format!("edge endpoint {v} is not a listed vertex")));
                }
            }
            if !g.add_edge(a, b)? {
                return Err(parse_err(line, format!("duplicate edge ({a},{b})")));
            }
        }
        Ok(g)
    }

    /// Serialized form: vertices ascending, edges lexicographic.
    pub fn to_text(&self) -> String {
        self.to_string()
    }

    /// The serialized form with `; ` in place of newlines.
    pub fn to_line(&self) -> String {
        self.to_string().trim_end().replace('\n', "; ")
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n {}", self.vertex_count())?;
        for v in self.vertices() {
            writeln!(f, "v {v}")?;
        }
        for e in self.edges() {
            writeln!(f, "e {} {}", e.lo(), e.hi())?;
        }
        Ok(())
    }
}

impl FromStr for Graph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Graph::parse(s)
    }
}

/// Graphs serialize as their text form, so JSON reports embed them as strings.
impl serde::Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_text())
    }
}

impl<'de> serde::Deserialize<'de> for Graph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        Graph::parse(&s).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families;
    use proptest::prelude::*;

    #[test]
    fn parses_edges_and_comments() {
        let g = Graph::parse("# K3\nn 3\ne 0 1 # first\ne 1 2\ne 0 2\n").unwrap();
        assert_eq!(g, families::triangle());
    }

    #[test]
    fn pads_isolated_vertices() {
        let g = Graph::parse("n 4\ne 5 6").unwrap();
        assert_eq!(g.vertex_set().into_iter().collect::<Vec<_>>(), vec![0, 1, 5, 6]);
    }

    #[test]
    fn single_line_form() {
        let k = families::k33();
        assert_eq!(Graph::parse(&k.to_line()).unwrap(), k);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let err = Graph::parse("n 3\ne 0 1\ne 1 x\n").unwrap_err();
        assert_eq!(err, Error::Parse { line: 3, message: "invalid vertex label `x`".into() });
        let err = Graph::parse("n 2\ne 0 1\ne 1 0\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }));
        assert!(matches!(Graph::parse("e 0 1"), Err(Error::Parse { .. })));
        assert!(matches!(Graph::parse("n 1\ne 0 1"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(Graph::parse("n 2\nv 0\nv 1\ne 0 3"), Err(Error::Parse { line: 4, .. })));
        assert!(matches!(Graph::parse("n 2\nq 1"), Err(Error::Parse { line: 2, .. })));
    }

    proptest! {
        #[test]
        fn serialization_round_trips(edges in proptest::collection::vec((0u32..12, 0u32..12), 0..30), extra in 0u32..3) {
            let mut g = Graph::with_vertices(100..100 + extra);
            for (a, b) in edges {
                if a != b {
                    g.add_edge(a, b).unwrap();
                }
            }
            prop_assert_eq!(Graph::parse(&g.to_text()).unwrap(), g);
        }
    }
}
