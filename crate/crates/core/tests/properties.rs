mod common;

use common::*;
use proptest::prelude::*;
use stabcds::invariants::{self, find_claw, find_induced_cycle, is_induced_cycle};
use stabcds::minors::check_h_sequence;
use stabcds::{from_graph6, h_number, hadwiger_number, to_graph6, Graph, VertexSet};

fn graphs(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n, any::<u64>()).prop_map(|(n, bits)| graph_from_bits(n, bits))
}

/// Denser graphs, so that small stability numbers actually occur.
fn dense_graphs(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n, any::<u64>(), any::<u64>()).prop_map(|(n, a, b)| graph_from_bits(n, a | b))
}

fn subset_of(g: &Graph, bits: u64) -> VertexSet {
    VertexSet::from_bits(bits) & g.vertices()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn graph6_round_trip(g in graphs(11)) {
        let text = to_graph6(&g);
        let back = from_graph6(&text).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(to_graph6(&back), text);
    }

    #[test]
    fn induced_subgraph_keeps_exactly_inner_edges(g in graphs(10), bits in any::<u64>()) {
        let s = subset_of(&g, bits);
        let (sub, map) = g.induced(s).unwrap();
        prop_assert_eq!(map.clone(), s.to_vec());
        for i in 0..sub.order() {
            for j in 0..sub.order() {
                prop_assert_eq!(sub.has_edge(i, j), i != j && g.has_edge(map[i], map[j]));
            }
        }
        // deleting vertices never raises alpha or omega
        prop_assert!(invariants::independence_number(&sub) <= invariants::independence_number(&g));
        prop_assert!(invariants::clique_number(&sub) <= invariants::clique_number(&g));
    }

    #[test]
    fn components_partition_the_graph(g in graphs(10)) {
        let parts = g.components();
        let mut oracle = components(&g);
        oracle.sort();
        let mut got: Vec<_> = parts.parts().iter().map(|p| p.to_vec()).collect();
        got.sort();
        prop_assert_eq!(got, oracle);
        prop_assert_eq!(parts.parts().iter().fold(VertexSet::EMPTY, |a, &p| a | p), g.vertices());
        prop_assert_eq!(g.is_connected(), parts.len() <= 1);
    }

    #[test]
    fn stability_and_clique_numbers(g in graphs(8)) {
        let a = invariants::independence_number(&g);
        prop_assert_eq!(a, alpha(&g));
        prop_assert_eq!(invariants::clique_number(&g), omega(&g));
        prop_assert_eq!(a, invariants::clique_number(&g.complement()));
        let mis = invariants::maximum_independent_set(&g);
        prop_assert_eq!(mis.len(), a);
        prop_assert!(g.is_independent(mis));
    }

    #[test]
    fn claw_search_matches_brute_force(g in graphs(8)) {
        let found = find_claw(&g);
        prop_assert_eq!(found.is_some(), has_claw(&g));
        if let Some(c) = found {
            prop_assert!(c.holds_in(&g));
        }
    }

    #[test]
    fn induced_cycle_search_matches_brute_force(g in graphs(8)) {
        for k in 4..=8 {
            let found = find_induced_cycle(&g, k).unwrap();
            prop_assert_eq!(found.is_some(), has_induced_cycle(&g, k), "k = {}", k);
            if let Some(c) = found {
                prop_assert_eq!(c.len(), k);
                prop_assert!(is_induced_cycle(&g, &c));
            }
        }
    }

    #[test]
    fn cds_checker_matches_naive(g in graphs(9), bits in any::<u64>()) {
        let d = subset_of(&g, bits);
        prop_assert_eq!(invariants::is_cds(&g, d).unwrap(), is_cds(&g, &d.to_vec()));
        let all = g.vertices();
        // the whole vertex set always qualifies, vacuously so when empty
        prop_assert!(invariants::is_cds(&g, all).unwrap());
    }

    #[test]
    fn minimum_cds_is_valid_and_minimum(g in graphs(8)) {
        prop_assume!(g.order() > 0);
        let d = invariants::min_cds(&g);
        prop_assert!(is_cds(&g, &d.to_vec()));
        prop_assert_eq!(d.len(), min_cds_size(&g));
        prop_assert_eq!(invariants::min_cds_size(&g), d.len());
    }

    #[test]
    fn cds_enumeration_is_size_ordered(g in graphs(7)) {
        prop_assume!(g.order() > 0);
        let sets: Vec<_> = invariants::connected_dominating_sets(&g).take(20).collect();
        prop_assert!(!sets.is_empty());
        prop_assert_eq!(sets[0].len(), min_cds_size(&g));
        prop_assert!(sets.windows(2).all(|w| w[0].len() <= w[1].len()));
        prop_assert!(sets.iter().all(|d| is_cds(&g, &d.to_vec())));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn h_and_eta_match_brute_force(g in dense_graphs(6)) {
        let (hv, seq) = h_number(&g).unwrap();
        let (ev, model) = hadwiger_number(&g).unwrap();
        prop_assert_eq!(hv, h(&g));
        prop_assert_eq!(ev, eta(&g));
        if hv > 0 {
            prop_assert_eq!(check_h_sequence(&g, &seq), Ok(()));
            prop_assert_eq!(seq.len(), hv);
        }
        prop_assert!(model.is_valid_in(&g));
        prop_assert_eq!(model.order(), ev);
    }

    #[test]
    fn sandwich_and_vertex_deletion(g in dense_graphs(8)) {
        let hv = h_number(&g).unwrap().0;
        let ev = hadwiger_number(&g).unwrap().0;
        prop_assert!(invariants::clique_number(&g) <= hv && hv <= ev);
        for v in 0..g.order() {
            let (rest, _) = g.remove(VertexSet::singleton(v)).unwrap();
            prop_assert!(h_number(&rest).unwrap().0 <= hv);
            prop_assert!(hadwiger_number(&rest).unwrap().0 <= ev);
        }
    }

    #[test]
    fn hypothesis_report_agrees_with_oracles(g in dense_graphs(8)) {
        let r = invariants::hypothesis_report(&g);
        prop_assert_eq!(r.alpha, alpha(&g));
        prop_assert_eq!(r.connected, g.order() == 0 || components(&g).len() == 1);
        prop_assert_eq!(r.claw_witness.is_some(), has_claw(&g));
        prop_assert_eq!(r.c5_witness.is_some(), has_induced_cycle(&g, 5));
        prop_assert_eq!(r.c7_witness.is_some(), has_induced_cycle(&g, 7));
        for v in 0..g.order() {
            let nb: Vec<_> = (0..g.order()).filter(|&u| g.has_edge(u, v)).collect();
            prop_assert_eq!(r.simplicial.contains(v), is_clique(&g, &nb));
        }
    }
}
