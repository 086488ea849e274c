use cospec::family::intro_fixture;
use cospec::matching::has_perfect_matching;
use cospec::spectral::char_poly;
use cospec::{Graph, VertexSet};
use proptest::prelude::*;

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        proptest::collection::vec((0..n.max(1), 0..n.max(1)), 0..3 * n + 1).prop_map(move |pairs| {
            let mut g = Graph::empty(n);
            for (u, v) in pairs {
                if u != v {
                    g.add_edge(u, v).unwrap();
                }
            }
            g
        })
    })
}

proptest! {
    #[test]
    fn handshake(g in arb_graph(40)) {
        let sum: usize = (0..g.order()).map(|v| g.degree(v)).sum();
        prop_assert_eq!(sum, 2 * g.size());
    }

    #[test]
    fn complement_involution(g in arb_graph(40)) {
        prop_assert_eq!(g.complement().complement(), g);
    }

    #[test]
    fn union_associative(a in arb_graph(8), b in arb_graph(8), c in arb_graph(8)) {
        prop_assert_eq!(a.disjoint_union(&b).disjoint_union(&c), a.disjoint_union(&b.disjoint_union(&c)));
    }

    #[test]
    fn components_partition_vertices(g in arb_graph(40)) {
        let mut all: Vec<usize> = g.components().iter().flat_map(|c| c.iter().collect::<Vec<_>>()).collect();
        all.sort_unstable();
        prop_assert_eq!(all, (0..g.order()).collect::<Vec<_>>());
        prop_assert_eq!(g.delete_vertices(&VertexSet::default()).unwrap().0, g);
    }
}

#[test]
fn intro_fixture_pairs() {
    for n in [8, 10, 12, 14, 20] {
        let (with_pm, tree) = intro_fixture(n).unwrap();
        assert_eq!(char_poly(&with_pm), char_poly(&tree), "n={n}");
        assert!(has_perfect_matching(&with_pm));
        assert!(!has_perfect_matching(&tree));
        // two leaves on one support vertex
        let leaves: Vec<usize> = (0..n).filter(|&v| tree.degree(v) == 1).collect();
        assert_eq!(leaves.len(), 4);
    }
}
