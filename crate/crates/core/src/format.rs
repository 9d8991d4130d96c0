//! The `.eog` text format.
//!
//! ```text
//! # optional comments
//! n m
//! u v        (m lines, listed by increasing rank)
//! ```
//!
//! Edge lines may instead carry a third column with a real label; the edges
//! are then sorted by label. Either every edge line has a label or none does.

use crate::error::{EogError, Result};
use crate::graph::EdgeOrderedGraph;

fn parse_usize(tok: &str) -> Option<usize> {
    tok.parse().ok()
}

/// Parses `.eog` text.
pub fn parse_eog(text: &str) -> Result<EdgeOrderedGraph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (hline, header) = lines.next().ok_or(EogError::MalformedHeader { line: 1 })?;
    let head: Vec<&str> = header.split_whitespace().collect();
    let (n, m) = match head.as_slice() {
        [a, b] => match (parse_usize(a), parse_usize(b)) {
            (Some(n), Some(m)) => (n, m),
            _ => return Err(EogError::MalformedHeader { line: hline }),
        },
        _ => return Err(EogError::MalformedHeader { line: hline }),
    };

    let mut plain = Vec::new();
    let mut labelled = Vec::new();
    for (line, body) in lines {
        let toks: Vec<&str> = body.split_whitespace().collect();
        let bad = || EogError::MalformedEdge { line, text: body.to_string() };
        let (u, v) = match toks.as_slice() {
            [a, b] | [a, b, _] => (parse_usize(a).ok_or_else(bad)?, parse_usize(b).ok_or_else(bad)?),
            _ => return Err(bad()),
        };
        if toks.len() == 3 {
            let label: f64 = toks[2].parse().map_err(|_| bad())?;
            if !label.is_finite() {
                return Err(bad());
            }
            labelled.push(((u, v), label));
        } else {
            plain.push((u, v));
        }
    }
    if !plain.is_empty() && !labelled.is_empty() {
        return Err(EogError::MixedLabels);
    }
    let found = plain.len() + labelled.len();
    if found != m {
        return Err(EogError::EdgeCountMismatch { expected: m, found });
    }
    if labelled.is_empty() {
        EdgeOrderedGraph::new(n, plain)
    } else {
        EdgeOrderedGraph::from_labels(n, &labelled)
    }
}

/// Writes `.eog` text, one edge per line in rank order.
pub fn serialize_eog(g: &EdgeOrderedGraph) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_a_path() {
        let g = parse_eog("3 2\n0 1\n1 2\n").unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edges(), &[(0, 1), (1, 2)]);
    }

    #[test]
    fn comments_and_reversed_pairs() {
        let g = parse_eog("# a comment\n3 2\n# another\n2 1\n1 0\n").unwrap();
        assert_eq!(g.edges(), &[(1, 2), (0, 1)]);
    }

    #[test]
    fn distinct_errors() {
        assert_eq!(parse_eog("2 1\n0 0\n"), Err(EogError::SelfLoop { vertex: 0 }));
        assert_eq!(parse_eog("x 1\n0 1\n"), Err(EogError::MalformedHeader { line: 1 }));
        assert_eq!(parse_eog(""), Err(EogError::MalformedHeader { line: 1 }));
        assert_eq!(
            parse_eog("2 1\n0 5\n"),
            Err(EogError::EndpointOutOfRange { vertex: 5, n: 2 })
        );
        assert_eq!(parse_eog("3 2\n0 1\n1 0\n"), Err(EogError::DuplicateEdge { u: 0, v: 1 }));
        assert_eq!(
            parse_eog("3 2\n0 1\n"),
            Err(EogError::EdgeCountMismatch { expected: 2, found: 1 })
        );
        assert!(matches!(parse_eog("3 1\n0 1 2 3\n"), Err(EogError::MalformedEdge { line: 2, .. })));
    }

    #[test]
    fn labels_sort_edges() {
        let g = parse_eog("3 2\n0 1 7.5\n1 2 -3\n").unwrap();
        assert_eq!(g.edges(), &[(1, 2), (0, 1)]);
        assert_eq!(parse_eog("3 2\n0 1 1\n1 2\n"), Err(EogError::MixedLabels));
        assert!(matches!(parse_eog("3 2\n0 1 1\n1 2 1\n"), Err(EogError::TiedLabels { .. })));
    }

    #[test]
    fn round_trip() {
        let g = parse_eog("5 3\n3 4\n0 2\n1 4\n").unwrap();
        let text = serialize_eog(&g);
        assert_eq!(text, "5 3\n3 4\n0 2\n1 4\n");
        assert_eq!(parse_eog(&text).unwrap(), g);
    }
}
