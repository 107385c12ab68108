//! Named graph families and their generators.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::bitset::MAX_VERTICES;
use crate::graph::Graph;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error("path requires n >= 2, got {0}")]
    PathTooShort(usize),
    #[error("cycle requires n >= 3, got {0}")]
    CycleTooShort(usize),
    #[error("complete multipartite requires at least 2 parts, got {0}")]
    TooFewParts(usize),
    #[error("complete multipartite part sizes must be >= 1")]
    EmptyPart,
    #[error("complete graph requires n >= 1, got {0}")]
    CompleteTooSmall(usize),
    #[error("matching requires m >= 1, got {0}")]
    MatchingTooSmall(usize),
    #[error("family instance has {n} vertices, exceeding the supported maximum of {MAX_VERTICES}")]
    TooManyVertices { n: usize },
    #[error("unknown family {0:?} (expected path, cycle, multipartite, complete, petersen, or matching)")]
    UnknownFamily(String),
    #[error("invalid parameter {0:?} for family {1}")]
    BadParameter(String, &'static str),
    #[error("family {0} takes no parameters")]
    UnexpectedParameter(&'static str),
    #[error("family {0} requires parameters, e.g. {1:?}")]
    MissingParameter(&'static str, &'static str),
}

/// Descriptor of a named family instance. Part order is significant for
/// multipartite graphs: part 1 is vertices 1..a1, part 2 the next a2, etc.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    CompleteMultipartite(Vec<usize>),
    Complete(usize),
    Petersen,
    Matching(usize),
}

impl FamilySpec {
    pub fn validate(&self) -> Result<(), FamilyError> {
        let n = match self {
            FamilySpec::Path(n) if *n < 2 => return Err(FamilyError::PathTooShort(*n)),
            FamilySpec::Path(n) => *n,
            FamilySpec::Cycle(n) if *n < 3 => return Err(FamilyError::CycleTooShort(*n)),
            FamilySpec::Cycle(n) => *n,
            FamilySpec::CompleteMultipartite(parts) => {
                if parts.len() < 2 {
                    return Err(FamilyError::TooFewParts(parts.len()));
                }
                if parts.contains(&0) {
                    return Err(FamilyError::EmptyPart);
                }
                parts.iter().sum()
            }
            FamilySpec::Complete(n) if *n < 1 => return Err(FamilyError::CompleteTooSmall(*n)),
            FamilySpec::Complete(n) => *n,
            FamilySpec::Petersen => 10,
            FamilySpec::Matching(m) if *m < 1 => return Err(FamilyError::MatchingTooSmall(*m)),
            FamilySpec::Matching(m) => 2 * m,
        };
        if n > MAX_VERTICES {
            return Err(FamilyError::TooManyVertices { n });
        }
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        match self {
            FamilySpec::Path(n) | FamilySpec::Cycle(n) | FamilySpec::Complete(n) => *n,
            FamilySpec::CompleteMultipartite(parts) => parts.iter().sum(),
            FamilySpec::Petersen => 10,
            FamilySpec::Matching(m) => 2 * m,
        }
    }
}

/// Builds the graph described by `spec` with the fixed 1-based labeling:
/// paths and cycles run 1..n consecutively, multipartite parts are
/// consecutive blocks in the given order, the Petersen graph has outer cycle
/// 1-2-3-4-5, spokes i <-> i+5, and inner 5-cycle 6-8-10-7-9, and matchings
/// pair {2k-1, 2k}.
pub fn generate(spec: &FamilySpec) -> Result<Graph, FamilyError> {
    spec.validate()?;
    let (n, edges) = match spec {
        FamilySpec::Path(n) => (*n, path_edges(*n)),
        FamilySpec::Cycle(n) => {
            let mut edges = path_edges(*n);
            edges.push((*n - 1, 0));
            (*n, edges)
        }
        FamilySpec::CompleteMultipartite(parts) => {
            let n: usize = parts.iter().sum();
            let mut part_of = vec![0usize; n];
            let mut next = 0;
            for (p, &size) in parts.iter().enumerate() {
                for _ in 0..size {
                    part_of[next] = p;
                    next += 1;
                }
            }
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if part_of[u] != part_of[v] {
                        edges.push((u, v));
                    }
                }
            }
            (n, edges)
        }
        FamilySpec::Complete(n) => {
            let mut edges = Vec::new();
            for u in 0..*n {
                for v in u + 1..*n {
                    edges.push((u, v));
                }
            }
            (*n, edges)
        }
        FamilySpec::Petersen => {
            let mut edges: Vec<(usize, usize)> = Vec::with_capacity(15);
            for i in 0..5 {
                edges.push((i, (i + 1) % 5)); // outer cycle
                edges.push((i, i + 5)); // spokes
            }
            // inner edges, 1-based: {6,8},{8,10},{10,7},{7,9},{9,6}
            edges.extend([(5, 7), (7, 9), (9, 6), (6, 8), (8, 5)]);
            (10, edges)
        }
        FamilySpec::Matching(m) => (2 * m, (0..*m).map(|k| (2 * k, 2 * k + 1)).collect()),
    };
    Ok(Graph::from_edges(n, &edges).expect("family generators emit valid edge lists"))
}

fn path_edges(n: usize) -> Vec<(usize, usize)> {
    (0..n - 1).map(|i| (i, i + 1)).collect()
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Path(n) => write!(f, "path:{n}"),
            FamilySpec::Cycle(n) => write!(f, "cycle:{n}"),
            FamilySpec::CompleteMultipartite(parts) => {
                let sizes: Vec<String> = parts.iter().map(|a| a.to_string()).collect();
                write!(f, "multipartite:{}", sizes.join(","))
            }
            FamilySpec::Complete(n) => write!(f, "complete:{n}"),
            FamilySpec::Petersen => write!(f, "petersen"),
            FamilySpec::Matching(m) => write!(f, "matching:{m}"),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = FamilyError;

    /// Grammar: `name[:comma-separated-ints]`, e.g. `path:7`,
    /// `multipartite:2,3,4`, `petersen`.
    fn from_str(s: &str) -> Result<Self, FamilyError> {
        let (name, params) = match s.split_once(':') {
            Some((name, params)) => (name, Some(params)),
            None => (s, None),
        };
        let single = |family: &'static str, example: &'static str| -> Result<usize, FamilyError> {
            let p = params.ok_or(FamilyError::MissingParameter(family, example))?;
            p.trim()
                .parse()
                .map_err(|_| FamilyError::BadParameter(p.to_string(), family))
        };
        let spec = match name {
            "path" => FamilySpec::Path(single("path", "path:7")?),
            "cycle" => FamilySpec::Cycle(single("cycle", "cycle:10")?),
            "complete" => FamilySpec::Complete(single("complete", "complete:5")?),
            "matching" => FamilySpec::Matching(single("matching", "matching:3")?),
            "multipartite" => {
                let p = params.ok_or(FamilyError::MissingParameter(
                    "multipartite",
                    "multipartite:2,3,4",
                ))?;
                let parts = p
                    .split(',')
                    .map(|tok| {
                        tok.trim()
                            .parse()
                            .map_err(|_| FamilyError::BadParameter(tok.to_string(), "multipartite"))
                    })
                    .collect::<Result<Vec<usize>, _>>()?;
                FamilySpec::CompleteMultipartite(parts)
            }
            "petersen" => {
                if params.is_some() {
                    return Err(FamilyError::UnexpectedParameter("petersen"));
                }
                FamilySpec::Petersen
            }
            other => return Err(FamilyError::UnknownFamily(other.to_string())),
        };
        spec.validate()?;
        Ok(spec)
    }
}
