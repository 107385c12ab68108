//! The standard test corpus: family instances, seeded Erdős–Rényi graphs,
//! and the hand-built witness graphs used for sharpness and structure checks.

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::family::{generate, FamilySpec};
use crate::graph::Graph;

/// A seeded G(n, p) sample. Determinism matters more than statistical
/// quality here: the same (n, p, seed) triple yields the same graph on every
/// platform and run.
pub fn erdos_renyi(n: usize, p: f64, seed: u64) -> Graph {
    assert!((0.0..=1.0).contains(&p));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let threshold = (p * u64::MAX as f64) as u64;
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.next_u64() < threshold {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("sampled edges are simple by construction")
}

/// `count` seeded random graphs cycling n through `1..=max_n` and p through
/// `probs`, labeled by their parameters.
pub fn er_corpus(count: usize, max_n: usize, probs: &[f64]) -> Vec<(String, Graph)> {
    assert!(!probs.is_empty());
    (0..count)
        .map(|i| {
            let n = 1 + (i % max_n);
            let p = probs[i % probs.len()];
            let g = erdos_renyi(n, p, i as u64);
            (format!("er:seed={i},n={n},p={p}"), g)
        })
        .collect()
}

/// Every family instance the property sweep covers: paths and cycles up to
/// `max_path_cycle_n`, all 2- and 3-part multipartite graphs with part sizes
/// up to 5, complete graphs, matchings, and the Petersen graph.
pub fn family_instances(max_path_cycle_n: usize) -> Vec<(String, Graph)> {
    let mut specs: Vec<FamilySpec> = Vec::new();
    for n in 2..=max_path_cycle_n {
        specs.push(FamilySpec::Path(n));
    }
    for n in 3..=max_path_cycle_n {
        specs.push(FamilySpec::Cycle(n));
    }
    specs.push(FamilySpec::Petersen);
    for m in 1..=6 {
        specs.push(FamilySpec::Matching(m));
    }
    for n in 1..=8 {
        specs.push(FamilySpec::Complete(n));
    }
    for parts in multipartite_vectors(&[2, 3], 1, 5) {
        specs.push(FamilySpec::CompleteMultipartite(parts));
    }
    specs
        .into_iter()
        .map(|spec| {
            let g = generate(&spec).expect("corpus specs are valid");
            (spec.to_string(), g)
        })
        .collect()
}

/// All ordered part vectors with the given part counts and sizes in
/// `min_size..=max_size`.
pub fn multipartite_vectors(
    part_counts: &[usize],
    min_size: usize,
    max_size: usize,
) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for &k in part_counts {
        let mut current = vec![min_size; k];
        loop {
            out.push(current.clone());
            let mut i = 0;
            while i < k {
                current[i] += 1;
                if current[i] <= max_size {
                    break;
                }
                current[i] = min_size;
                i += 1;
            }
            if i == k {
                break;
            }
        }
    }
    out
}

/// Tree with a degree-3 center whose three neighbors each carry two leaves.
/// Its unique gamma-set is the three supports, so tau = 1, gamma = 3, and
/// the domination-value sum over N[center] attains tau * gamma. The center
/// is not a support vertex; order 10.
pub fn spider_unique_gamma() -> Graph {
    Graph::from_edges(
        10,
        &[
            (0, 1),
            (0, 2),
            (0, 3),
            (1, 4),
            (1, 5),
            (2, 6),
            (2, 7),
            (3, 8),
            (3, 9),
        ],
    )
    .expect("static witness")
}

/// P3 + P3 + K2 + an isolated vertex (order 9): tau = 2, gamma = 4, and the
/// sum over the isolate's closed neighborhood attains tau * (1 + deg) = 2.
pub fn isolated_vertex_witness() -> Graph {
    Graph::from_edges(9, &[(0, 1), (1, 2), (3, 4), (4, 5), (6, 7)]).expect("static witness")
}

/// 0-based id of the isolated vertex in [`isolated_vertex_witness`].
pub const ISOLATED_WITNESS_V0: usize = 8;

/// Order-9 graph with deg(v) = Delta = 6 = n-3 whose unique gamma-set
/// {x0, y0} avoids v entirely, so DV(v) = 0 despite maximum degree.
/// Vertex 0 is v; vertices 7 and 8 are its two non-neighbors.
pub fn max_degree_zero_dv_witness() -> Graph {
    Graph::from_edges(
        9,
        &[
            (0, 1),
            (0, 2),
            (0, 3),
            (0, 4),
            (0, 5),
            (0, 6),
            (1, 7), // x0 = 1 reaches the first non-neighbor
            (2, 8), // y0 = 2 reaches the second
            (1, 3),
            (1, 4),
            (2, 5),
            (2, 6),
        ],
    )
    .expect("static witness")
}

/// The witness graphs above, labeled for sweep output.
pub fn witness_instances() -> Vec<(String, Graph)> {
    vec![
        ("witness:spider".to_string(), spider_unique_gamma()),
        ("witness:isolated".to_string(), isolated_vertex_witness()),
        (
            "witness:max-degree-zero-dv".to_string(),
            max_degree_zero_dv_witness(),
        ),
    ]
}
