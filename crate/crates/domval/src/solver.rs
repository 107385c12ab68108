//! Exact domination solver: branch-and-bound for the domination number and a
//! duplicate-free revisit of the same tree to enumerate every gamma-set.
//!
//! Branching rule: take an undominated vertex `v` whose closed neighborhood
//! has the fewest remaining candidates. Every dominating set must contain a
//! member of N[v], so branching over those members is complete; branch `i`
//! commits candidate `u_i` and forbids `u_1..u_{i-1}`, which makes the
//! branches pairwise disjoint and the enumeration duplicate-free. Candidates
//! are never skipped for already being dominated — a gamma-set may well
//! contain such a vertex.
//!
//! Disconnected graphs are solved per component and recombined: gamma adds,
//! tau multiplies, and each vertex's count is scaled by the tau of the other
//! components.

use thiserror::Error;

use crate::bitset::VertexSet;
use crate::graph::Graph;

/// Retention cap on the gamma-set list when none is given explicitly.
pub const DEFAULT_RETENTION_LIMIT: usize = 100_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolveError {
    #[error("domination is undefined on the empty graph")]
    EmptyGraph,
    #[error("gamma-set count exceeds u64 range")]
    CountOverflow,
}

/// Exact domination data for one graph.
///
/// `tau` and `dv` are always exact; `gamma_sets` holds at most the retention
/// limit passed to the solver, sorted in canonical order (ascending id
/// sequences compared lexicographically), with `truncated` set when sets were
/// dropped. The identity `sum(dv) == tau * gamma` holds by construction and
/// is re-asserted before returning.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DominationReport {
    pub gamma: usize,
    pub tau: u64,
    pub dv: Vec<u64>,
    pub gamma_sets: Vec<VertexSet>,
    pub truncated: bool,
}

impl DominationReport {
    fn assert_sum_identity(&self) {
        let total: u128 = self.dv.iter().map(|&d| d as u128).sum();
        assert_eq!(
            total,
            self.tau as u128 * self.gamma as u128,
            "domination value sum identity violated (solver bug)"
        );
    }
}

/// Size of a smallest dominating set.
pub fn domination_number(g: &Graph) -> Result<usize, SolveError> {
    if g.vertex_count() == 0 {
        return Err(SolveError::EmptyGraph);
    }
    let mut gamma = 0;
    for comp in g.components() {
        let (sub, _) = g.induced(&comp);
        gamma += connected_gamma(&sub);
    }
    Ok(gamma)
}

/// Full report with gamma-set retention capped at `limit` (`limit == 0`
/// counts without retaining any sets).
pub fn enumerate_gamma_sets(g: &Graph, limit: usize) -> Result<DominationReport, SolveError> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(SolveError::EmptyGraph);
    }

    let comps = g.components();
    let report = if comps.len() == 1 {
        let (gamma, sets) = connected_gamma_sets(g);
        from_set_list(n, gamma, sets, limit)
    } else {
        let mut parts = Vec::with_capacity(comps.len());
        for comp in &comps {
            let (sub, old_ids) = g.induced(comp);
            let (gamma, sets) = connected_gamma_sets(&sub);
            // Map component-local sets back to ids in the host graph.
            let sets: Vec<VertexSet> = sets
                .into_iter()
                .map(|s| VertexSet::from_members(s.iter().map(|v| old_ids[v])))
                .collect();
            parts.push(ComponentSolution {
                old_ids,
                gamma,
                sets,
            });
        }
        combine_components(n, &parts, limit)?
    };

    report.assert_sum_identity();
    debug_assert!(report.gamma_sets.windows(2).all(|w| w[0] < w[1]));
    Ok(report)
}

/// [`enumerate_gamma_sets`] with the default retention limit.
pub fn domination_report(g: &Graph) -> Result<DominationReport, SolveError> {
    enumerate_gamma_sets(g, DEFAULT_RETENTION_LIMIT)
}

struct ComponentSolution {
    old_ids: Vec<usize>,
    gamma: usize,
    sets: Vec<VertexSet>,
}

fn from_set_list(
    n: usize,
    gamma: usize,
    mut sets: Vec<VertexSet>,
    limit: usize,
) -> DominationReport {
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
    DominationReport {
        gamma,
        tau,
        dv,
        gamma_sets: sets,
        truncated,
    }
}

/// Product/sum recombination across components. When the full cartesian
/// product fits in `limit` the retained list is complete; otherwise the
/// retained sets are a deterministic sample of products of each component's
/// retained sets, still canonically sorted.
fn combine_components(
    n: usize,
    parts: &[ComponentSolution],
    limit: usize,
) -> Result<DominationReport, SolveError> {
    let gamma = parts.iter().map(|p| p.gamma).sum();
    let mut tau = 1u64;
    for p in parts {
        tau = tau
            .checked_mul(p.sets.len() as u64)
            .ok_or(SolveError::CountOverflow)?;
    }

    let mut dv = vec![0u64; n];
    for (i, p) in parts.iter().enumerate() {
        let mut other_tau = 1u64;
        for (j, q) in parts.iter().enumerate() {
            if j != i {
                other_tau = other_tau
                    .checked_mul(q.sets.len() as u64)
                    .ok_or(SolveError::CountOverflow)?;
            }
        }
        let mut local = vec![0u64; p.old_ids.len()];
        for s in &p.sets {
            for v in s.iter() {
                // v is a host-graph id here; count per component vertex.
                let idx = p.old_ids.iter().position(|&o| o == v).unwrap();
                local[idx] += 1;
            }
        }
        for (idx, &old) in p.old_ids.iter().enumerate() {
            dv[old] = local[idx]
                .checked_mul(other_tau)
                .ok_or(SolveError::CountOverflow)?;
        }
    }

    let mut sets = Vec::new();
    if limit > 0 {
        // Mixed-radix walk over per-component set indices, stopping at limit.
        let radices: Vec<usize> = parts.iter().map(|p| p.sets.len()).collect();
        let mut counters = vec![0usize; parts.len()];
        let want = if (tau as u128) <= limit as u128 {
            tau as usize
        } else {
            limit
        };
        for _ in 0..want {
            let mut s = VertexSet::EMPTY;
            for (p, &c) in parts.iter().zip(counters.iter()) {
                s = s.union(&p.sets[c]);
            }
            sets.push(s);
            for (c, &r) in counters.iter_mut().zip(radices.iter()) {
                *c += 1;
                if *c < r {
                    break;
                }
                *c = 0;
            }
        }
        sets.sort();
    }
    let truncated = (sets.len() as u64) < tau;

    Ok(DominationReport {
        gamma,
        tau,
        dv,
        gamma_sets: sets,
        truncated,
    })
}

/// Branch-and-bound gamma for a connected (or single-vertex) graph.
fn connected_gamma(g: &Graph) -> usize {
    let full = g.vertex_set();
    let denom = g.max_degree() + 1;
    let mut best = greedy_upper_bound(g);
    descend_gamma(
        g,
        &full,
        denom,
        0,
        VertexSet::EMPTY,
        VertexSet::EMPTY,
        &mut best,
    );
    best
}

fn descend_gamma(
    g: &Graph,
    full: &VertexSet,
    denom: usize,
    chosen: usize,
    dominated: VertexSet,
    forbidden: VertexSet,
    best: &mut usize,
) {
    if dominated == *full {
        *best = (*best).min(chosen);
        return;
    }
    let undominated = full.difference(&dominated);
    let lower = chosen + undominated.count().div_ceil(denom);
    if lower >= *best {
        return;
    }
    let Some(candidates) = branch_candidates(g, &undominated, &forbidden) else {
        return;
    };
    let mut forbidden = forbidden;
    for u in candidates.iter() {
        descend_gamma(
            g,
            full,
            denom,
            chosen + 1,
            dominated.union(&g.closed_neighborhood(u)),
            forbidden,
            best,
        );
        forbidden.insert(u);
    }
}

/// Revisits the tree with the bound pinned to gamma and collects every
/// gamma-set. The disjoint branching yields each set exactly once.
fn connected_gamma_sets(g: &Graph) -> (usize, Vec<VertexSet>) {
    let gamma = connected_gamma(g);
    let full = g.vertex_set();
    let denom = g.max_degree() + 1;
    let mut sets = Vec::new();
    descend_enumerate(
        g,
        &full,
        denom,
        gamma,
        VertexSet::EMPTY,
        VertexSet::EMPTY,
        VertexSet::EMPTY,
        &mut sets,
    );
    debug_assert!(!sets.is_empty());
    (gamma, sets)
}

#[allow(clippy::too_many_arguments)]
fn descend_enumerate(
    g: &Graph,
    full: &VertexSet,
    denom: usize,
    gamma: usize,
    chosen: VertexSet,
    dominated: VertexSet,
    forbidden: VertexSet,
    out: &mut Vec<VertexSet>,
) {
    let size = chosen.count();
    if size == gamma {
        if dominated == *full {
            out.push(chosen);
        }
        return;
    }
    // A proper subset of a gamma-set cannot already dominate (it would beat
    // gamma), so there is always an undominated vertex to branch on.
    let undominated = full.difference(&dominated);
    debug_assert!(!undominated.is_empty());
    if size + undominated.count().div_ceil(denom) > gamma {
        return;
    }
    let Some(candidates) = branch_candidates(g, &undominated, &forbidden) else {
        return;
    };
    let mut forbidden = forbidden;
    for u in candidates.iter() {
        let mut next = chosen;
        next.insert(u);
        descend_enumerate(
            g,
            full,
            denom,
            gamma,
            next,
            dominated.union(&g.closed_neighborhood(u)),
            forbidden,
            out,
        );
        forbidden.insert(u);
    }
}

/// Candidates of the undominated vertex with the fewest, or `None` when some
/// undominated vertex has no admissible dominator left.
fn branch_candidates(
    g: &Graph,
    undominated: &VertexSet,
    forbidden: &VertexSet,
) -> Option<VertexSet> {
    let mut best: Option<(usize, VertexSet)> = None;
    for v in undominated.iter() {
        let cands = g.closed_neighborhood(v).difference(forbidden);
        let count = cands.count();
        if count == 0 {
            return None;
        }
        if best.as_ref().is_none_or(|(c, _)| count < *c) {
            if count == 1 {
                return Some(cands);
            }
            best = Some((count, cands));
        }
    }
    best.map(|(_, c)| c)
}

/// Classic greedy cover: repeatedly take the vertex dominating the most
/// still-undominated vertices. Yields a valid dominating set size, used as
/// the initial upper bound.
fn greedy_upper_bound(g: &Graph) -> usize {
    let full = g.vertex_set();
    let mut dominated = VertexSet::EMPTY;
    let mut size = 0;
    while dominated != full {
        let undominated = full.difference(&dominated);
        let pick = (0..g.vertex_count())
            .max_by_key(|&v| {
                (
                    g.closed_neighborhood(v).intersection(&undominated).count(),
                    std::cmp::Reverse(v),
                )
            })
            .expect("nonempty graph");
        dominated = dominated.union(&g.closed_neighborhood(pick));
        size += 1;
    }
    size
}
