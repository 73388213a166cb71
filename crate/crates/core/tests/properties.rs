//! Property tests for the structural and numeric invariants.

use proptest::prelude::*;

use eil_core::enumerate::random_connected_graph;
use eil_core::graph::Graph;
use eil_core::{canonical_code, edge_connectivity, families, graph6, index, vertex_connectivity};

/// Arbitrary labeled graph: order plus a bitmask over the vertex pairs.
fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pair_count = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pair_count).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut index = 0;
            for j in 1..n {
                for i in 0..j {
                    if bits[index] {
                        edges.push((i, j));
                    }
                    index += 1;
                }
            }
            Graph::build(n, &edges).unwrap()
        })
    })
}

fn arb_connected(max_n: usize) -> impl Strategy<Value = Graph> {
    (3..=max_n, any::<u64>()).prop_flat_map(|(n, seed)| {
        let max_m = n * (n - 1) / 2;
        (n - 1..=max_m).prop_map(move |m| random_connected_graph(n, m, seed).unwrap())
    })
}

fn arb_permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<usize>>()).prop_shuffle()
}

proptest! {
    #[test]
    fn graph6_round_trip_is_labeled_identity(g in arb_graph(20)) {
        let text = graph6::encode(&g);
        prop_assert_eq!(graph6::decode(&text).unwrap(), g);
    }

    #[test]
    fn handshake_lemma(g in arb_graph(20)) {
        let degree_sum: usize = g.degrees().iter().sum();
        prop_assert_eq!(degree_sum, 2 * g.size());
    }

    #[test]
    fn canonical_code_is_relabeling_invariant(g in arb_graph(9), perm in arb_permutation(9)) {
        let n = g.order();
        let perm: Vec<usize> = perm.into_iter().filter(|&v| v < n).collect();
        prop_assert_eq!(canonical_code(&g.relabel(&perm)), canonical_code(&g));
    }

    #[test]
    fn aso_is_relabeling_invariant(g in arb_connected(16), perm in arb_permutation(16)) {
        let n = g.order();
        let perm: Vec<usize> = perm.into_iter().filter(|&v| v < n).collect();
        let relabeled = g.relabel(&perm);
        let a: f64 = index::aso(&g).unwrap();
        let b: f64 = index::aso(&relabeled).unwrap();
        prop_assert!((a - b).abs() <= 1e-12 * a.abs().max(1.0));
        prop_assert_eq!(canonical_code(&g), canonical_code(&relabeled));
    }

    #[test]
    fn aso_adds_over_disjoint_union(g in arb_connected(12), h in arb_connected(12)) {
        let union = families::disjoint_union(&g, &h).unwrap();
        let lhs: f64 = index::aso(&union).unwrap();
        let rhs = index::aso::<f64>(&g).unwrap() + index::aso::<f64>(&h).unwrap();
        prop_assert!((lhs - rhs).abs() <= 1e-12 * rhs.abs().max(1.0));
    }

    #[test]
    fn sombor_is_relabeling_invariant(g in arb_graph(20), perm in arb_permutation(20)) {
        let n = g.order();
        let perm: Vec<usize> = perm.into_iter().filter(|&v| v < n).collect();
        let a: f64 = index::so(&g);
        let b: f64 = index::so(&g.relabel(&perm));
        prop_assert!((a - b).abs() <= 1e-12 * a.abs().max(1.0));
    }

    #[test]
    fn delete_then_readd_preserves_code(g in arb_connected(12)) {
        let edges = g.edges();
        let e = edges[edges.len() / 2];
        let code_before = canonical_code(&g);
        let deleted = g.delete_edge(e).unwrap();
        prop_assert_eq!(g.edges(), edges, "delete_edge must not mutate its input");
        let restored = deleted.add_edge(e).unwrap();
        prop_assert_eq!(canonical_code(&restored), code_before);
    }

    #[test]
    fn join_and_union_formulas(g in arb_graph(10), h in arb_graph(10)) {
        let joined = families::join(&g, &h).unwrap();
        prop_assert_eq!(joined.order(), g.order() + h.order());
        prop_assert_eq!(joined.size(), g.size() + h.size() + g.order() * h.order());
        let union = families::disjoint_union(&g, &h).unwrap();
        prop_assert_eq!(union.order(), g.order() + h.order());
        prop_assert_eq!(union.size(), g.size() + h.size());
    }

    #[test]
    fn whitney_chain_on_random_connected(g in arb_connected(16)) {
        let kappa = vertex_connectivity(&g).unwrap();
        let lambda = edge_connectivity(&g).unwrap();
        let min_degree = g.degrees().into_iter().min().unwrap();
        prop_assert!(kappa <= lambda && lambda <= min_degree);
    }

    #[test]
    fn random_connected_graph_is_deterministic(n in 3usize..=20, seed in any::<u64>()) {
        let m = n; // unicyclic-sized, always feasible
        prop_assert_eq!(
            random_connected_graph(n, m, seed).unwrap(),
            random_connected_graph(n, m, seed).unwrap()
        );
    }
}

#[test]
fn regular_graph_closed_form() {
    // r-regular: aso = m·r/√(r−1).
    let cases: Vec<(Graph, usize)> = vec![
        (families::cycle(7).unwrap(), 2),
        (families::complete(5).unwrap(), 4),
        (families::complete(6).unwrap(), 5),
        (
            Graph::build(
                8,
                &[
                    (0, 1),
                    (1, 2),
                    (2, 3),
                    (3, 0),
                    (4, 5),
                    (5, 6),
                    (6, 7),
                    (7, 4),
                    (0, 4),
                    (1, 5),
                    (2, 6),
                    (3, 7),
                ],
            )
            .unwrap(),
            3,
        ),
    ];
    for (g, r) in cases {
        let expected = g.size() as f64 * r as f64 / ((r - 1) as f64).sqrt();
        let got: f64 = index::aso(&g).unwrap();
        assert!((got - expected).abs() <= 1e-12 * expected, "r={r}");
    }
}
