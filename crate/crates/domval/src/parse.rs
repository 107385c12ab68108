//! Edge-list text format: `#` comment lines, one `p <n>` header, then
//! `e <u> <v>` lines with 1-based endpoints. LF or CRLF.

use thiserror::Error;

use crate::bitset::MAX_VERTICES;
use crate::graph::Graph;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    #[error("malformed line {0:?} (expected `p <n>` or `e <u> <v>`)")]
    Malformed(String),
    #[error("edge line before `p` header")]
    EdgeBeforeHeader,
    #[error("duplicate `p` header")]
    DuplicateHeader,
    #[error("missing `p` header")]
    MissingHeader,
    #[error("invalid vertex count {0:?}")]
    BadVertexCount(String),
    #[error("vertex count {n} exceeds the supported maximum of {max}")]
    TooManyVertices { n: usize, max: usize },
    #[error("invalid vertex id {0:?}")]
    BadVertexId(String),
    #[error("vertex id {v} out of range 1..={n}")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("self-loop at vertex {v}")]
    SelfLoop { v: usize },
    #[error("duplicate edge {{{u}, {v}}}")]
    DuplicateEdge { u: usize, v: usize },
}

fn err(line: usize, kind: ParseErrorKind) -> ParseError {
    ParseError { line, kind }
}

/// Parses the edge-list format into a graph. 1-based ids in the file map to
/// 0-based ids internally. All rejections carry the offending line number.
pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let mut n: Option<usize> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut seen = std::collections::HashSet::new();

    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        match tokens[0] {
            "p" => {
                if n.is_some() {
                    return Err(err(lineno, ParseErrorKind::DuplicateHeader));
                }
                if tokens.len() != 2 {
                    return Err(err(lineno, ParseErrorKind::Malformed(line.to_string())));
                }
                let count: usize = tokens[1]
                    .parse()
                    .map_err(|_| err(lineno, ParseErrorKind::BadVertexCount(tokens[1].into())))?;
                if count > MAX_VERTICES {
                    return Err(err(
                        lineno,
                        ParseErrorKind::TooManyVertices {
                            n: count,
                            max: MAX_VERTICES,
                        },
                    ));
                }
                n = Some(count);
            }
            "e" => {
                let n = n.ok_or_else(|| err(lineno, ParseErrorKind::EdgeBeforeHeader))?;
                if tokens.len() != 3 {
                    return Err(err(lineno, ParseErrorKind::Malformed(line.to_string())));
                }
                let parse_id = |tok: &str| -> Result<usize, ParseError> {
                    let v: usize = tok
                        .parse()
                        .map_err(|_| err(lineno, ParseErrorKind::BadVertexId(tok.into())))?;
                    if v < 1 || v > n {
                        return Err(err(lineno, ParseErrorKind::VertexOutOfRange { v, n }));
                    }
                    Ok(v)
                };
                let u = parse_id(tokens[1])?;
                let v = parse_id(tokens[2])?;
                if u == v {
                    return Err(err(lineno, ParseErrorKind::SelfLoop { v }));
                }
                let key = (u.min(v), u.max(v));
                if !seen.insert(key) {
                    return Err(err(lineno, ParseErrorKind::DuplicateEdge { u, v }));
                }
                edges.push((u - 1, v - 1));
            }
            _ => return Err(err(lineno, ParseErrorKind::Malformed(line.to_string()))),
        }
    }

    let n = n.ok_or_else(|| err(text.lines().count() + 1, ParseErrorKind::MissingHeader))?;
    Graph::from_edges(n, &edges).map_err(|e| match e {
        // from_edges cannot fail here beyond what was already validated, but
        // keep the mapping total.
        crate::graph::GraphError::TooManyVertices { n } => err(
            0,
            ParseErrorKind::TooManyVertices {
                n,
                max: MAX_VERTICES,
            },
        ),
        crate::graph::GraphError::VertexOutOfRange { v, n } => {
            err(0, ParseErrorKind::VertexOutOfRange { v: v + 1, n })
        }
        crate::graph::GraphError::SelfLoop { v } => err(0, ParseErrorKind::SelfLoop { v: v + 1 }),
        crate::graph::GraphError::DuplicateEdge { u, v } => {
            err(0, ParseErrorKind::DuplicateEdge { u: u + 1, v: v + 1 })
        }
    })
}
