//! Human-editable edge-list format: a header line `n m`, then `m` lines
//! `u v` with 0-based endpoints. `#` starts a comment; blank lines are
//! skipped.

use crate::graph::{Graph, GraphError};
use std::collections::HashSet;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EdgeListError {
    #[error("missing `n m` header line")]
    MissingHeader,
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
    #[error("line {line}: vertex {vertex} is out of range for {n} vertices")]
    VertexOutOfRange {
        line: usize,
        vertex: usize,
        n: usize,
    },
    #[error("line {line}: self-loop at vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },
    #[error("line {line}: duplicate edge ({u}, {v})")]
    DuplicateEdge { line: usize, u: usize, v: usize },
    #[error("header promised {expected} edges, found {found}")]
    EdgeCount { expected: usize, found: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn malformed(line: usize, message: impl Into<String>) -> EdgeListError {
    EdgeListError::Malformed {
        line,
        message: message.into(),
    }
}

fn parse_pair(line_no: usize, content: &str) -> Result<(usize, usize), EdgeListError> {
    let mut tokens = content.split_whitespace();
    let (Some(a), Some(b), None) = (tokens.next(), tokens.next(), tokens.next()) else {
        return Err(malformed(
            line_no,
            format!("expected two integers, got `{content}`"),
        ));
    };
    let a = a
        .parse::<usize>()
        .map_err(|e| malformed(line_no, format!("bad integer `{a}`: {e}")))?;
    let b = b
        .parse::<usize>()
        .map_err(|e| malformed(line_no, format!("bad integer `{b}`: {e}")))?;
    Ok((a, b))
}

/// Parses an edge-list document into a graph.
pub fn parse_edge_list(text: &str) -> Result<Graph, EdgeListError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut seen: HashSet<(usize, usize)> = HashSet::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let Some((n, m)) = header else {
            header = Some(parse_pair(line_no, content)?);
            continue;
        };
        let (u, v) = parse_pair(line_no, content)?;
        if u == v {
            return Err(EdgeListError::SelfLoop {
                line: line_no,
                vertex: u,
            });
        }
        for w in [u, v] {
            if w >= n {
                return Err(EdgeListError::VertexOutOfRange {
                    line: line_no,
                    vertex: w,
                    n,
                });
            }
        }
        let key = (u.min(v), u.max(v));
        if !seen.insert(key) {
            return Err(EdgeListError::DuplicateEdge {
                line: line_no,
                u,
                v,
            });
        }
        if edges.len() == m {
            return Err(EdgeListError::EdgeCount {
                expected: m,
                found: edges.len() + 1,
            });
        }
        edges.push(key);
    }

    let Some((n, m)) = header else {
        return Err(EdgeListError::MissingHeader);
    };
    if edges.len() != m {
        return Err(EdgeListError::EdgeCount {
            expected: m,
            found: edges.len(),
        });
    }
    Ok(Graph::from_edges(n, &edges)?)
}

/// Renders a graph in the edge-list format; inverse of [`parse_edge_list`].
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_simple_documents() {
        let p3 = parse_edge_list("3 2\n0 1\n1 2").unwrap();
        assert_eq!(p3.edges(), vec![(0, 1), (1, 2)]);

        let p4 = parse_edge_list("4 3\n0 1\n1 2\n2 3\n").unwrap();
        assert_eq!(p4.edges(), vec![(0, 1), (1, 2), (2, 3)]);

        let commented = parse_edge_list("# a path\n\n3 2 # header\n0 1\n# middle\n1 2\n").unwrap();
        assert_eq!(commented.edges(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn rejects_bad_documents() {
        assert_eq!(
            parse_edge_list("# nothing\n"),
            Err(EdgeListError::MissingHeader)
        );
        assert_eq!(
            parse_edge_list("2 1\n0 0"),
            Err(EdgeListError::SelfLoop { line: 2, vertex: 0 })
        );
        assert_eq!(
            parse_edge_list("2 1\n0 2"),
            Err(EdgeListError::VertexOutOfRange {
                line: 2,
                vertex: 2,
                n: 2
            })
        );
        assert_eq!(
            parse_edge_list("3 2\n0 1\n1 0"),
            Err(EdgeListError::DuplicateEdge {
                line: 3,
                u: 1,
                v: 0
            })
        );
        assert_eq!(
            parse_edge_list("3 2\n0 1"),
            Err(EdgeListError::EdgeCount {
                expected: 2,
                found: 1
            })
        );
        assert_eq!(
            parse_edge_list("3 1\n0 1\n1 2"),
            Err(EdgeListError::EdgeCount {
                expected: 1,
                found: 2
            })
        );
        assert!(matches!(
            parse_edge_list("3 oops\n0 1"),
            Err(EdgeListError::Malformed { line: 1, .. })
        ));
    }

    #[test]
    fn round_trips() {
        let g = crate::families::cycle(6).unwrap();
        let text = write_edge_list(&g);
        assert_eq!(parse_edge_list(&text).unwrap().edges(), g.edges());
    }
}
