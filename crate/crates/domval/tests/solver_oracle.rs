//! Solver-versus-oracle agreement, plus derived-value fixtures that were
//! first computed with the exhaustive oracle and then frozen here.

use proptest::prelude::*;

use domval::corpus::{erdos_renyi, family_instances};
use domval::family::{generate, FamilySpec};
use domval::graph::Graph;
use domval::oracle::oracle_report;
use domval::solver::{domination_report, enumerate_gamma_sets};

const LIMIT: usize = 100_000;

#[test]
fn oracle_and_solver_agree_on_family_instances_up_to_16() {
    for (subject, g) in family_instances(16) {
        if g.vertex_count() > 16 {
            continue;
        }
        let solved = enumerate_gamma_sets(&g, LIMIT).unwrap();
        let oracle = oracle_report(&g, LIMIT).unwrap();
        assert_eq!(solved, oracle, "mismatch on {subject}");
    }
}

#[test]
fn oracle_and_solver_agree_on_seeded_random_graphs() {
    for i in 0..60u64 {
        let n = 1 + (i as usize % 11);
        let p = [0.2, 0.5, 0.8][i as usize % 3];
        let g = erdos_renyi(n, p, 1000 + i);
        let solved = enumerate_gamma_sets(&g, LIMIT).unwrap();
        let oracle = oracle_report(&g, LIMIT).unwrap();
        assert_eq!(
            solved,
            oracle,
            "mismatch on er(n={n},p={p},seed={})",
            1000 + i
        );
    }
}

// Frozen oracle outputs for values the solver must reproduce exactly.
#[test]
fn frozen_derived_fixtures() {
    // K_{2,3}: tau = 7, dv = (4,4,2,2,2); sum 14 = 7 * 2.
    let g = generate(&FamilySpec::CompleteMultipartite(vec![2, 3])).unwrap();
    let oracle = oracle_report(&g, LIMIT).unwrap();
    assert_eq!((oracle.gamma, oracle.tau), (2, 7));
    assert_eq!(oracle.dv, vec![4, 4, 2, 2, 2]);
    assert_eq!(domination_report(&g).unwrap(), oracle);

    // C7: tau = 14, dv = 6 everywhere.
    let g = generate(&FamilySpec::Cycle(7)).unwrap();
    let oracle = oracle_report(&g, LIMIT).unwrap();
    assert_eq!((oracle.gamma, oracle.tau), (3, 14));
    assert_eq!(oracle.dv, vec![6; 7]);
    assert_eq!(domination_report(&g).unwrap(), oracle);

    // P7: tau = 8, dv = (3,5,2,4,2,5,3).
    let g = generate(&FamilySpec::Path(7)).unwrap();
    let oracle = oracle_report(&g, LIMIT).unwrap();
    assert_eq!((oracle.gamma, oracle.tau), (3, 8));
    assert_eq!(oracle.dv, vec![3, 5, 2, 4, 2, 5, 3]);
    assert_eq!(domination_report(&g).unwrap(), oracle);
}

#[test]
fn petersen_closed_neighborhood_consistent_with_gamma_sets() {
    // The generator labeling yields N[1] = {1,2,5,6}; every gamma-set
    // through vertex 1 avoids N(1) entirely, which pins the labeling down
    // as the one consistent with the known list {1,3,7},{1,4,10},{1,8,9}.
    let g = generate(&FamilySpec::Petersen).unwrap();
    assert_eq!(g.closed_neighborhood(0).members(), vec![0, 1, 4, 5]);
    let r = domination_report(&g).unwrap();
    for s in r.gamma_sets.iter().filter(|s| s.contains(0)) {
        let inside_n1 = s.intersection(&g.neighbors(0));
        assert!(inside_n1.is_empty(), "{s:?} intersects N(1)");
    }
}

/// Relabels a graph by `perm` (new id of old v is perm[v]).
fn relabel(g: &Graph, perm: &[usize]) -> Graph {
    let edges: Vec<(usize, usize)> = g.edges().iter().map(|&(u, v)| (perm[u], perm[v])).collect();
    Graph::from_edges(g.vertex_count(), &edges).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    /// Isomorphism carries domination values along: dv is permuted exactly.
    #[test]
    fn dv_is_isomorphism_invariant(seed in 0u64..500, n in 4usize..10) {
        let g = erdos_renyi(n, 0.45, seed);
        let r = domination_report(&g).unwrap();
        // A deterministic permutation derived from the seed.
        let mut perm: Vec<usize> = (0..n).collect();
        let mut state = seed.wrapping_mul(0x9E3779B97F4A7C15).wrapping_add(1);
        for i in (1..n).rev() {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            perm.swap(i, (state as usize) % (i + 1));
        }
        let h = relabel(&g, &perm);
        let rh = domination_report(&h).unwrap();
        prop_assert_eq!(rh.gamma, r.gamma);
        prop_assert_eq!(rh.tau, r.tau);
        for (v, &new_id) in perm.iter().enumerate() {
            prop_assert_eq!(rh.dv[new_id], r.dv[v]);
        }
    }

    /// Byte-level determinism: two independent runs give identical reports.
    #[test]
    fn reports_are_deterministic(seed in 0u64..500, n in 1usize..12) {
        let g = erdos_renyi(n, 0.5, seed);
        let a = enumerate_gamma_sets(&g, LIMIT).unwrap();
        let b = enumerate_gamma_sets(&g, LIMIT).unwrap();
        prop_assert_eq!(a, b);
    }

    /// Each retained set dominates, has size gamma, and the list is sorted.
    #[test]
    fn retained_sets_are_valid_and_canonical(seed in 0u64..500, n in 1usize..12) {
        let g = erdos_renyi(n, 0.35, seed);
        let r = enumerate_gamma_sets(&g, LIMIT).unwrap();
        let total: u128 = r.dv.iter().map(|&d| d as u128).sum();
        prop_assert_eq!(total, r.tau as u128 * r.gamma as u128);
        prop_assert!(r.dv.iter().all(|&d| d <= r.tau));
        for w in r.gamma_sets.windows(2) {
            prop_assert!(w[0] < w[1]);
        }
        for s in &r.gamma_sets {
            prop_assert_eq!(s.count(), r.gamma);
            prop_assert!(g.is_dominating(s));
        }
    }
}

#[test]
fn tau_of_path_never_exceeds_tau_of_cycle() {
    for n in 3..=30 {
        let p = enumerate_gamma_sets(&generate(&FamilySpec::Path(n)).unwrap(), 0).unwrap();
        let c = enumerate_gamma_sets(&generate(&FamilySpec::Cycle(n)).unwrap(), 0).unwrap();
        assert_eq!(p.gamma, c.gamma, "gamma(P{n}) == gamma(C{n})");
        assert!(p.tau <= c.tau, "tau(P{n})={} > tau(C{n})={}", p.tau, c.tau);
    }
}

/// Arbitrary graphs, not just the seeded corpus, agree with the oracle.
fn arb_small_graph() -> impl Strategy<Value = Graph> {
    (1usize..=9).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut idx = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[idx] {
                        edges.push((u, v));
                    }
                    idx += 1;
                }
            }
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn solver_equals_oracle_on_arbitrary_graphs(g in arb_small_graph()) {
        let solved = enumerate_gamma_sets(&g, LIMIT).unwrap();
        let oracle = oracle_report(&g, LIMIT).unwrap();
        prop_assert_eq!(solved, oracle);
    }
}

#[test]
fn boundary_of_the_supported_order() {
    // P_128 sits exactly at the size cap: 128 = 3*42 + 2, so tau = 44.
    let g = generate(&FamilySpec::Path(128)).unwrap();
    let r = domination_report(&g).unwrap();
    assert_eq!((r.gamma, r.tau), (43, 44));

    assert!(generate(&FamilySpec::Path(129)).is_err());

    // 63 disjoint edges: tau = 2^63 still fits; 64 would overflow u64 and is
    // refused rather than wrapped.
    let g = generate(&FamilySpec::Matching(63)).unwrap();
    let r = enumerate_gamma_sets(&g, 10).unwrap();
    assert_eq!(r.tau, 1u64 << 63);
    assert_eq!(r.dv, vec![1u64 << 62; 126]);
    assert!(r.truncated);
    assert_eq!(r.gamma_sets.len(), 10);

    let g = generate(&FamilySpec::Matching(64)).unwrap();
    assert_eq!(
        enumerate_gamma_sets(&g, 10),
        Err(domval::solver::SolveError::CountOverflow)
    );
}
