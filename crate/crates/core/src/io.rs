//! Text formats.
//!
//! `.sg` (signed graph):
//!
//! ```text
//! # comment
//! n 4
//! e 1 2 +
//! e 2 3 -
//! ```
//!
//! `+` marks an even edge and `-` an odd one. `.sk` (signed complete graph)
//! lists only the odd pairs; all other pairs are even:
//!
//! ```text
//! n 4
//! odd 1 2
//! ```

use std::fmt::Write as _;

use thiserror::Error;

use crate::completion::SignedComplete;
use crate::graph::{Edge, GraphError, Parity, SignedGraph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

fn err(line: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        message: message.into(),
    }
}

fn graph_err(line: usize, e: GraphError) -> ParseError {
    err(line, e.to_string())
}

/// Significant lines with 1-based line numbers; `#` starts a comment.
fn lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let body = raw.split('#').next().unwrap_or("");
        let fields: Vec<&str> = body.split_whitespace().collect();
        (!fields.is_empty()).then_some((i + 1, fields))
    })
}

fn parse_usize(line: usize, s: &str, what: &str) -> Result<usize, ParseError> {
    s.parse()
        .map_err(|_| err(line, format!("expected {what}, found `{s}`")))
}

/// Reads the header and hands every later line to `body`.
fn parse_with<T>(
    text: &str,
    mut body: impl FnMut(&mut T, usize, &[&str]) -> Result<(), ParseError>,
    make: impl FnOnce(usize, usize) -> Result<T, ParseError>,
) -> Result<T, ParseError> {
    let mut it = lines(text);
    let (line, header) = it.next().ok_or_else(|| err(1, "missing `n <count>` header"))?;
    let n = match header.as_slice() {
        ["n", count] => parse_usize(line, count, "vertex count")?,
        _ => return Err(err(line, "expected `n <count>` header")),
    };
    let mut value = make(line, n)?;
    for (line, fields) in it {
        body(&mut value, line, &fields)?;
    }
    Ok(value)
}

pub fn parse_sg(text: &str) -> Result<SignedGraph, ParseError> {
    parse_with(
        text,
        |g: &mut SignedGraph, line, fields| match fields {
            ["e", u, v, sign] => {
                let u = parse_usize(line, u, "vertex")?;
                let v = parse_usize(line, v, "vertex")?;
                let p = match *sign {
                    "+" => Parity::Even,
                    "-" => Parity::Odd,
                    other => return Err(err(line, format!("expected `+` or `-`, found `{other}`"))),
                };
                g.add_edge(u, v, p).map_err(|e| graph_err(line, e))
            }
            _ => Err(err(line, "expected `e <u> <v> <+|->`")),
        },
        |line, n| SignedGraph::new(n).map_err(|e| graph_err(line, e)),
    )
}

pub fn parse_sk(text: &str) -> Result<SignedComplete, ParseError> {
    parse_with(
        text,
        |t: &mut SignedComplete, line, fields| match fields {
            ["odd", u, v] => {
                let u = parse_usize(line, u, "vertex")?;
                let v = parse_usize(line, v, "vertex")?;
                t.add_odd(u, v).map_err(|e| graph_err(line, e))
            }
            _ => Err(err(line, "expected `odd <u> <v>`")),
        },
        |line, n| SignedComplete::new(n).map_err(|e| graph_err(line, e)),
    )
}

pub fn write_sg(g: &SignedGraph) -> String {
    let mut out = format!("n {}\n", g.order());
    for (e, p) in g.edges() {
        let (u, v) = e.ends();
        let mark = if p.is_odd() { '-' } else { '+' };
        let _ = writeln!(out, "e {u} {v} {mark}");
    }
    out
}

pub fn write_sk(t: &SignedComplete) -> String {
    let mut out = format!("n {}\n", t.order());
    for e in t.odd_edges() {
        let (u, v) = e.ends();
        let _ = writeln!(out, "odd {u} {v}");
    }
    out
}

/// Convenience for building `.sk` content from edge tuples in tests and docs.
pub fn edges_of(pairs: &[(usize, usize)]) -> Vec<Edge> {
    pairs.iter().map(|&(u, v)| Edge::new(u, v)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parses_sg_with_comments() {
        let g = parse_sg("# a path\nn 3\ne 1 2 +  # even\n\ne 2 3 -\n").unwrap();
        assert_eq!(g.order(), 3);
        assert_eq!(g.sign(1, 2), Some(Parity::Even));
        assert_eq!(g.sign(3, 2), Some(Parity::Odd));
    }

    #[test]
    fn duplicate_edge_is_rejected_with_line_number() {
        let e = parse_sg("n 3\ne 1 2 +\ne 2 1 -\n").unwrap_err();
        assert_eq!(e.line, 3);
        assert!(e.message.contains("already present"));
    }

    #[test]
    fn loop_and_range_errors() {
        assert_eq!(parse_sg("n 2\ne 1 1 +\n").unwrap_err().line, 2);
        assert_eq!(parse_sg("n 2\ne 1 3 +\n").unwrap_err().line, 2);
        assert_eq!(parse_sg("n 2\ne 1 2 *\n").unwrap_err().line, 2);
        assert_eq!(parse_sg("e 1 2 +\n").unwrap_err().line, 1);
        assert_eq!(parse_sg("").unwrap_err().line, 1);
        assert_eq!(parse_sg("n 0\n").unwrap_err().line, 1);
    }

    #[test]
    fn parses_sk() {
        let t = parse_sk("n 4\nodd 1 2\n").unwrap();
        assert_eq!(t.order(), 4);
        assert_eq!(t.odd_edges(), edges_of(&[(1, 2)]));
        assert_eq!(parse_sk("n 4\nodd 1 2\nodd 2 1\n").unwrap_err().line, 3);
        assert_eq!(parse_sk("n 4\nodd 1 1\n").unwrap_err().line, 2);
    }

    proptest! {
        #[test]
        fn sg_round_trip(n in 1usize..7, bits in any::<u64>()) {
            let mut g = SignedGraph::new(n).unwrap();
            let mut k = 0;
            for u in 1..=n {
                for v in u + 1..=n {
                    let present = bits >> (2 * k) & 1 == 1;
                    let odd = bits >> (2 * k + 1) & 1 == 1;
                    if present {
                        g.add_edge(u, v, if odd { Parity::Odd } else { Parity::Even }).unwrap();
                    }
                    k += 1;
                }
            }
            prop_assert_eq!(parse_sg(&write_sg(&g)).unwrap(), g);
        }
    }
}
