//! Structural properties of graph construction and combination.

mod common;

use proptest::prelude::*;
use vertexsim::{cycle_graph, product_graph, DirectedGraph};

fn edge_strategy() -> impl Strategy<Value = Vec<(usize, usize, u8)>> {
    prop::collection::vec(((0usize..8), (0usize..8), (1u8..=4)), 1..40)
}

proptest! {
    /// Serializing and re-parsing preserves the accumulated edge multiset.
    #[test]
    fn edge_list_round_trips(edges in edge_strategy()) {
        let n = 8;
        let g = DirectedGraph::from_weighted_edges(
            n,
            edges.iter().map(|&(s, d, w)| (s, d, w as f64)),
        );
        let text = g.to_edge_list();
        let reparsed = DirectedGraph::from_edge_list(&text).unwrap();
        // vertex count may shrink to the dense range spanned by the edges
        prop_assert_eq!(
            g.entries().collect::<Vec<_>>(),
            reparsed.entries().collect::<Vec<_>>()
        );
    }

    /// Total weight of a product graph is the product of the total weights.
    #[test]
    fn product_weight_is_multiplicative(
        ea in edge_strategy(),
        eb in edge_strategy(),
    ) {
        let ga = DirectedGraph::from_weighted_edges(8, ea.iter().map(|&(s, d, w)| (s, d, w as f64)));
        let gb = DirectedGraph::from_weighted_edges(8, eb.iter().map(|&(s, d, w)| (s, d, w as f64)));
        let p = product_graph(&ga, &gb).unwrap();
        let expected = ga.total_weight() * gb.total_weight();
        prop_assert!((p.graph().total_weight() - expected).abs() <= 1e-9 * expected.max(1.0));
    }

    /// Symmetrizing twice doubles the symmetrized weights entrywise.
    #[test]
    fn symmetrize_twice_doubles(edges in edge_strategy()) {
        let g = DirectedGraph::from_weighted_edges(8, edges.iter().map(|&(s, d, w)| (s, d, w as f64)));
        let once = g.symmetrize();
        let twice = once.symmetrize();
        for (s, d, w) in once.entries() {
            prop_assert_eq!(twice.weight(s, d), 2.0 * w);
        }
        prop_assert_eq!(twice.entry_count(), once.entry_count());
    }
}

#[test]
fn labeled_round_trip_preserves_names() {
    let g = DirectedGraph::from_edge_list("ant bee 2\nbee cat\ncat ant 0.5\n").unwrap();
    let reparsed = DirectedGraph::from_edge_list(&g.to_edge_list()).unwrap();
    assert_eq!(g, reparsed);
}

#[test]
fn cycles_are_regular_and_normal_up_to_twelve() {
    for n in 1..=12 {
        let c = cycle_graph(n);
        assert!(c.is_regular(), "cycle {n} should be regular");
        assert!(c.is_normal(), "cycle {n} should be normal");
    }
}

#[test]
fn product_of_single_edges() {
    let e = vertexsim::path_graph(2);
    let p = product_graph(&e, &e).unwrap();
    assert_eq!(p.graph().vertex_count(), 4);
    let entries: Vec<_> = p.graph().entries().collect();
    assert_eq!(entries, vec![(p.index_of(0, 0), p.index_of(1, 1), 1.0)]);
}
