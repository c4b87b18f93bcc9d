//! Edge-list text format.
//!
//! ```text
//! # comment
//! 3 2
//! 0 1
//! 1 2
//! ```
//! The first non-comment line is `n m`, followed by exactly `m` lines `u v`.
//! Blank lines and lines starting with `#` are ignored.

use std::fmt::Write;

use super::Graph;
use crate::error::{Error, Result};

fn parse_pair(line: usize, text: &str) -> Result<(usize, usize)> {
    let err = |message: String| Error::Parse { line, message };
    let mut fields = text.split_whitespace();
    let mut next = |name: &str| -> Result<usize> {
        let raw = fields.next().ok_or_else(|| err(format!("missing {name}")))?;
        raw.parse()
            .map_err(|_| err(format!("{name} `{raw}` is not a non-negative integer")))
    };
    let a = next("first field")?;
    let b = next("second field")?;
    if let Some(extra) = fields.next() {
        return Err(err(format!("unexpected trailing field `{extra}`")));
    }
    Ok((a, b))
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_line, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        message: "missing `n m` header".into(),
    })?;
    let (n, m) = parse_pair(header_line, header)?;

    let mut edges = Vec::with_capacity(m);
    let mut seen = std::collections::HashSet::new();
    let mut last_line = header_line;
    for (line, text) in lines {
        last_line = line;
        if edges.len() == m {
            return Err(Error::Parse {
                line,
                message: format!("more than the declared {m} edges"),
            });
        }
        let (u, v) = parse_pair(line, text)?;
        let located = |message: String| Error::Parse { line, message };
        if u >= n || v >= n {
            return Err(located(format!("vertex out of range 0..{n}")));
        }
        if u == v {
            return Err(located(format!("self-loop at {u}")));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(located(format!("duplicate edge {{{u}, {v}}}")));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(Error::Parse {
            line: last_line,
            message: format!("expected {m} edges, found {}", edges.len()),
        });
    }
    Graph::new(n, edges)
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_with_comments() {
        let g = parse_edge_list("# path\n3 2\n\n0 1\n# middle\n2 1\n").unwrap();
        assert_eq!(g.n(), 3);
        assert!(g.has_edge(1, 2));
        assert_eq!(to_edge_list(&g), "3 2\n0 1\n1 2\n");
    }

    #[test]
    fn reports_line_numbers() {
        let cases = [
            ("3 2\n0 1\n1 0\n", 3, "duplicate"),
            ("3 1\n0 3\n", 2, "out of range"),
            ("3 1\n1 1\n", 2, "self-loop"),
            ("3 2\n0 1\n", 2, "expected 2"),
            ("3 1\n0 1\n1 2\n", 3, "more than"),
            ("3 x\n", 1, "not a non-negative"),
            ("# only comments\n", 1, "header"),
            ("2 1\n0 1 1\n", 2, "trailing"),
        ];
        for (text, line, needle) in cases {
            match parse_edge_list(text) {
                Err(Error::Parse { line: l, message }) => {
                    assert_eq!(l, line, "{text:?}");
                    assert!(message.contains(needle), "{message}");
                }
                other => panic!("{text:?} gave {other:?}"),
            }
        }
    }
}
