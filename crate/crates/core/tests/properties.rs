//! Randomized invariants.

use egstab::algorithms::{circumference_len, clique_tally, count_cliques, disintegration};
use egstab::families::build_h;
use egstab::formulas::h_s;
use egstab::graph::{canonical_form, graph6_decode, graph6_encode};
use egstab::Graph;
use proptest::prelude::*;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        prop::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let edges: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .zip(bits)
                .filter(|(_, b)| *b)
                .map(|(e, _)| e)
                .collect();
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

fn relabeled(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    graph(max_n).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
}

proptest! {
    #[test]
    fn graph6_round_trips(g in graph(64)) {
        prop_assert_eq!(graph6_decode(&graph6_encode(&g)).unwrap(), g);
    }

    #[test]
    fn canonical_form_ignores_labels((g, perm) in relabeled(10)) {
        prop_assert_eq!(canonical_form(&g), canonical_form(&g.relabel(&perm)));
    }

    #[test]
    fn edges_are_two_cliques(g in graph(20)) {
        prop_assert_eq!(count_cliques(&g, 2), g.edge_count() as u128);
        prop_assert_eq!(clique_tally(&g)[1], g.n() as u128);
    }

    #[test]
    fn adding_an_edge_never_shortens_the_longest_cycle(g in graph(9), u in 0usize..9, v in 0usize..9) {
        prop_assume!(u < g.n() && v < g.n() && u != v);
        prop_assert!(circumference_len(&g.with_edge(u, v)) >= circumference_len(&g));
    }

    #[test]
    fn disintegration_core_has_large_degree(g in graph(16), alpha in 0usize..5) {
        let core = disintegration(&g, alpha);
        for v in core {
            prop_assert!(g.neighbors(v).intersection(core).len() > alpha);
        }
    }

    #[test]
    fn h_counts_match_construction(k in 5usize..=14, extra in 0usize..=16, a_pick in 0usize..8, s in 2usize..=6) {
        let a = 1 + a_pick % (k / 2);
        let n = k + extra;
        let f = h_s(n as i64, k as i64, a as i64, s as i64).unwrap();
        prop_assert_eq!(count_cliques(&build_h(n, k, a).unwrap(), s), f);
    }
}
