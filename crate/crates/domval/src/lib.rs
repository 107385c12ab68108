//! Exact domination analysis for small simple graphs.
//!
//! The crate computes the domination number gamma(G), enumerates every
//! minimum dominating set (their count is tau(G)), and derives the per-vertex
//! domination value DV(v) — the number of gamma-sets containing v. Alongside
//! the branch-and-bound solver it ships:
//!
//! - an independent exhaustive [`oracle`] for cross-validation,
//! - [`closed_forms`] for paths, cycles, complete multipartite graphs,
//!   complete graphs, matchings, and the Petersen graph,
//! - executable property [`checks`] for the sum identity, neighborhood-sum
//!   bounds, disjoint-union rules, spanning-subgraph monotonicity, classical
//!   bounds, and max-degree structure theorems,
//! - a [`verify`] sweep running everything over a seeded [`corpus`].
//!
//! Vertices are 0-based in the API and 1-based in every I/O surface.
//!
//! With the default `parallel` feature the verification sweep fans out over
//! a rayon thread pool; disable default features for a fully sequential
//! build. Outputs are byte-identical either way.

pub mod bitset;
pub mod checks;
pub mod closed_forms;
pub mod corpus;
pub mod family;
pub mod graph;
pub mod oracle;
pub mod parse;
pub mod solver;
pub mod verify;

pub use bitset::{VertexSet, MAX_VERTICES};
pub use checks::{CheckOutcome, CheckStatus};
pub use closed_forms::FamilyReport;
pub use family::FamilySpec;
pub use graph::Graph;
pub use parse::parse_graph;
pub use solver::DominationReport;
