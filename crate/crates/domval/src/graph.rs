//! Simple undirected graphs with bitset adjacency rows.
//!
//! Vertices are ids `0..n` internally; every I/O surface (edge-list files,
//! CLI tables, check details) renders them 1-based.

use std::fmt::Write as _;

use thiserror::Error;

use crate::bitset::{VertexSet, MAX_VERTICES};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex count {n} exceeds the supported maximum of {MAX_VERTICES}")]
    TooManyVertices { n: usize },
    #[error("vertex id {v} out of range for graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("self-loop at vertex {v}")]
    SelfLoop { v: usize },
    #[error("duplicate edge {{{u}, {v}}}")]
    DuplicateEdge { u: usize, v: usize },
}

/// An immutable simple undirected graph. No self-loops, no parallel edges;
/// isolated vertices are permitted. `n == 0` is representable (the empty
/// graph) but rejected by the solver and oracle.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// Builds a graph from 0-based endpoint pairs, rejecting self-loops,
    /// out-of-range ids, and duplicate edges (in either orientation).
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices { n });
        }
        let mut adj = vec![VertexSet::EMPTY; n];
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::VertexOutOfRange { v: u, n });
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange { v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop { v });
            }
            if adj[u].contains(v) {
                return Err(GraphError::DuplicateEdge { u, v });
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Graph { n, adj })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::count).sum::<usize>() / 2
    }

    /// Edges as 0-based pairs with `u < v`, ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.adj[u].iter() {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// All vertex ids as a set.
    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::all_below(self.n)
    }

    /// Open neighborhood N(v).
    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    /// Closed neighborhood N[v] = N(v) ∪ {v}.
    #[inline]
    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        let mut s = self.adj[v];
        s.insert(v);
        s
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count()
    }

    /// Maximum degree Δ(G); 0 for the empty graph.
    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u].contains(v)
    }

    /// True iff the closed neighborhoods of `s` cover every vertex.
    pub fn is_dominating(&self, s: &VertexSet) -> bool {
        let mut covered = VertexSet::EMPTY;
        for v in s.iter() {
            covered = covered.union(&self.closed_neighborhood(v));
        }
        covered == self.vertex_set()
    }

    /// Same vertices, complemented edge set.
    pub fn complement(&self) -> Graph {
        let full = self.vertex_set();
        let adj = (0..self.n)
            .map(|v| {
                let mut row = full.difference(&self.adj[v]);
                row.remove(v);
                row
            })
            .collect();
        Graph { n: self.n, adj }
    }

    /// Disjoint union; vertices of `other` are shifted up by `self.n`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices { n });
        }
        let mut edges = self.edges();
        edges.extend(other.edges().iter().map(|&(u, v)| (u + self.n, v + self.n)));
        Graph::from_edges(n, &edges)
    }

    /// Connected components as vertex sets, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = VertexSet::EMPTY;
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen.contains(start) {
                continue;
            }
            let mut comp = VertexSet::singleton(start);
            let mut frontier = VertexSet::singleton(start);
            while !frontier.is_empty() {
                let mut next = VertexSet::EMPTY;
                for v in frontier.iter() {
                    next = next.union(&self.adj[v]);
                }
                frontier = next.difference(&comp);
                comp = comp.union(&frontier);
            }
            seen = seen.union(&comp);
            out.push(comp);
        }
        out
    }

    /// Subgraph induced by `verts`, with ids remapped to `0..verts.count()`
    /// in ascending order. Returns the subgraph and the old ids in new-id
    /// order.
    pub fn induced(&self, verts: &VertexSet) -> (Graph, Vec<usize>) {
        let old_ids = verts.members();
        let mut new_of_old = vec![usize::MAX; self.n];
        for (new, &old) in old_ids.iter().enumerate() {
            new_of_old[old] = new;
        }
        let mut edges = Vec::new();
        for (new_u, &old_u) in old_ids.iter().enumerate() {
            for old_v in self.adj[old_u].intersection(verts).iter() {
                if old_v > old_u {
                    edges.push((new_u, new_of_old[old_v]));
                }
            }
        }
        let g = Graph::from_edges(old_ids.len(), &edges)
            .expect("induced subgraph of a valid graph is valid");
        (g, old_ids)
    }

    /// Serializes to the edge-list text format (1-based ids), the inverse of
    /// [`crate::parse::parse_graph`].
    pub fn render(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "p {}", self.n);
        for (u, v) in self.edges() {
            let _ = writeln!(out, "e {} {}", u + 1, v + 1);
        }
        out
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}
