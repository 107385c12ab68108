//! Exhaustive reference oracle: scans all vertex subsets by increasing size
//! and tests each with [`Graph::is_dominating`]. Shares no search machinery
//! with the branch-and-bound solver in [`crate::solver`]; the two paths are
//! compared field-for-field in tests.

use thiserror::Error;

use crate::bitset::VertexSet;
use crate::graph::Graph;
use crate::solver::DominationReport;

/// Largest vertex count the exhaustive scan accepts.
pub const ORACLE_MAX_VERTICES: usize = 20;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("oracle requires a graph with at least one vertex")]
    EmptyGraph,
    #[error("oracle refuses graphs with {n} > {ORACLE_MAX_VERTICES} vertices")]
    TooLarge { n: usize },
}

/// Computes the same report as `solver::domination_report`, by brute force.
pub fn oracle_report(g: &Graph, limit: usize) -> Result<DominationReport, OracleError> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(OracleError::EmptyGraph);
    }
    if n > ORACLE_MAX_VERTICES {
        return Err(OracleError::TooLarge { n });
    }

    let mut gamma = 0;
    let mut sets: Vec<VertexSet> = Vec::new();
    for k in 1..=n {
        sets = dominating_sets_of_size(g, k);
        if !sets.is_empty() {
            gamma = k;
            break;
        }
    }
    debug_assert!(gamma > 0, "V(G) itself dominates, so some k succeeds");

    let mut dv = vec![0u64; n];
    for s in &sets {
        for v in s.iter() {
            dv[v] += 1;
        }
    }
    let tau = sets.len() as u64;
    sets.sort();
    let truncated = sets.len() > limit;
    sets.truncate(limit);

    Ok(DominationReport {
        gamma,
        tau,
        dv,
        gamma_sets: sets,
        truncated,
    })
}

/// All dominating sets of exactly `k` vertices, via a full C(n,k) scan over
/// bitmask combinations (Gosper's hack).
fn dominating_sets_of_size(g: &Graph, k: usize) -> Vec<VertexSet> {
    let n = g.vertex_count();
    if k > n {
        return Vec::new();
    }
    let mut found = Vec::new();
    let mut mask = (1u32 << k) - 1;
    let limit = 1u32 << n;
    while mask < limit {
        let s = VertexSet::from_members(BitIter(mask));
        if g.is_dominating(&s) {
            found.push(s);
        }
        mask = next_combination(mask);
    }
    found
}

/// Next k-combination in increasing numeric order (Gosper's hack); wraps past
/// the top combination to a value with a higher bit set, which the caller's
/// `< 1 << n` bound rejects.
fn next_combination(mask: u32) -> u32 {
    let c = mask & mask.wrapping_neg();
    let r = mask.wrapping_add(c);
    if r == 0 {
        return u32::MAX;
    }
    (((r ^ mask) >> 2) / c) | r
}

struct BitIter(u32);

impl Iterator for BitIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{generate, FamilySpec};

    #[test]
    fn p4_report() {
        let g = generate(&FamilySpec::Path(4)).unwrap();
        let r = oracle_report(&g, 1000).unwrap();
        assert_eq!(r.gamma, 2);
        assert_eq!(r.tau, 4);
        assert_eq!(r.dv, vec![2, 2, 2, 2]);
    }

    #[test]
    fn c6_report() {
        let g = generate(&FamilySpec::Cycle(6)).unwrap();
        let r = oracle_report(&g, 1000).unwrap();
        assert_eq!(r.gamma, 2);
        assert_eq!(r.tau, 3);
        assert_eq!(r.dv, vec![1; 6]);
        let members: Vec<Vec<usize>> = r.gamma_sets.iter().map(|s| s.members()).collect();
        assert_eq!(members, vec![vec![0, 3], vec![1, 4], vec![2, 5]]);
    }

    #[test]
    fn matching_2_report() {
        let g = generate(&FamilySpec::Matching(2)).unwrap();
        let r = oracle_report(&g, 1000).unwrap();
        assert_eq!(r.gamma, 2);
        assert_eq!(r.tau, 4);
        assert_eq!(r.dv, vec![2, 2, 2, 2]);
    }

    #[test]
    fn petersen_gamma_sets_containing_vertex_1() {
        let g = generate(&FamilySpec::Petersen).unwrap();
        let r = oracle_report(&g, 1000).unwrap();
        assert_eq!(r.gamma, 3);
        assert_eq!(r.tau, 10);
        assert_eq!(r.dv, vec![3; 10]);
        let with_v1: Vec<Vec<usize>> = r
            .gamma_sets
            .iter()
            .filter(|s| s.contains(0))
            .map(|s| s.members().iter().map(|v| v + 1).collect())
            .collect();
        assert_eq!(with_v1, vec![vec![1, 3, 7], vec![1, 4, 10], vec![1, 8, 9]]);
    }

    #[test]
    fn truncation_keeps_tau_exact() {
        let g = generate(&FamilySpec::Cycle(4)).unwrap();
        let r = oracle_report(&g, 2).unwrap();
        assert_eq!(r.tau, 6);
        assert_eq!(r.gamma_sets.len(), 2);
        assert!(r.truncated);
        let r0 = oracle_report(&g, 0).unwrap();
        assert_eq!(r0.tau, 6);
        assert!(r0.gamma_sets.is_empty());
        assert!(r0.truncated);
    }

    #[test]
    fn refusals() {
        let empty = Graph::from_edges(0, &[]).unwrap();
        assert_eq!(oracle_report(&empty, 10), Err(OracleError::EmptyGraph));
        let big = generate(&FamilySpec::Path(21)).unwrap();
        assert_eq!(
            oracle_report(&big, 10),
            Err(OracleError::TooLarge { n: 21 })
        );
    }

    #[test]
    fn single_vertex() {
        let g = Graph::from_edges(1, &[]).unwrap();
        let r = oracle_report(&g, 10).unwrap();
        assert_eq!((r.gamma, r.tau), (1, 1));
        assert_eq!(r.dv, vec![1]);
        assert_eq!(r.gamma_sets[0].members(), vec![0]);
    }
}
