//! Property tests for the graph operations: clique/chromatic behavior
//! under join and strong product, size laws, and associativity up to the
//! canonical regrouping bijection.

use proptest::prelude::*;

use smg_core::graph::{equal_via, graph_join, identity_map, strong_product, SimpleGraph};
use smg_core::invariants::{chromatic_number, clique_number};

/// Arbitrary graph with 1..=5 vertices and a distinguishing label prefix.
fn arb_graph(prefix: &'static str) -> impl Strategy<Value = SimpleGraph> {
    (1usize..=5)
        .prop_flat_map(move |n| {
            let edges = proptest::collection::vec(any::<bool>(), n * (n - 1) / 2);
            (Just(n), edges)
        })
        .prop_map(move |(n, edges)| {
            let labels = (0..n).map(|i| format!("{prefix}{i}")).collect();
            let mut g = SimpleGraph::new(labels).unwrap();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if edges[k] {
                        g.add_edge(u, v);
                    }
                    k += 1;
                }
            }
            g
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn join_adds_clique_and_chromatic_numbers(
        g in arb_graph("g"),
        h in arb_graph("h"),
    ) {
        let j = graph_join(&[g.clone(), h.clone()]).unwrap();
        prop_assert_eq!(j.vertex_count(), g.vertex_count() + h.vertex_count());
        prop_assert_eq!(
            clique_number(&j, 64).unwrap(),
            clique_number(&g, 64).unwrap() + clique_number(&h, 64).unwrap()
        );
        prop_assert_eq!(
            chromatic_number(&j, 32).unwrap(),
            chromatic_number(&g, 32).unwrap() + chromatic_number(&h, 32).unwrap()
        );
    }

    #[test]
    fn strong_product_multiplies_clique_and_bounds_chromatic(
        g in arb_graph("g"),
        h in arb_graph("h"),
    ) {
        let p = strong_product(&[g.clone(), h.clone()], 64).unwrap();
        prop_assert_eq!(p.vertex_count(), g.vertex_count() * h.vertex_count());
        prop_assert_eq!(
            clique_number(&p, 64).unwrap(),
            clique_number(&g, 64).unwrap() * clique_number(&h, 64).unwrap()
        );
        prop_assert!(
            chromatic_number(&p, 32).unwrap()
                <= chromatic_number(&g, 32).unwrap() * chromatic_number(&h, 32).unwrap()
        );
    }

    #[test]
    fn join_is_associative_up_to_identity_labels(
        a in arb_graph("a"),
        b in arb_graph("b"),
        c in arb_graph("c"),
    ) {
        let left = graph_join(&[graph_join(&[a.clone(), b.clone()]).unwrap(), c.clone()]).unwrap();
        let right = graph_join(&[a.clone(), graph_join(&[b.clone(), c.clone()]).unwrap()]).unwrap();
        let flat = graph_join(&[a, b, c]).unwrap();
        prop_assert!(equal_via(&left, &flat, &identity_map(&left)).unwrap());
        prop_assert!(equal_via(&right, &flat, &identity_map(&right)).unwrap());
    }

    #[test]
    fn strong_product_is_associative_up_to_regrouping(
        a in arb_graph("a"),
        b in arb_graph("b"),
        c in arb_graph("c"),
    ) {
        let cap = 512;
        let nested = strong_product(
            &[strong_product(&[a.clone(), b.clone()], cap).unwrap(), c.clone()],
            cap,
        )
        .unwrap();
        let flat = strong_product(&[a, b, c], cap).unwrap();
        // ((x,y),z) -> (x,y,z): the component labels contain no
        // parentheses, so dropping the char at index 1 and the first ')'
        // strips exactly the inner pair.
        let map: Vec<(String, String)> = nested
            .labels()
            .iter()
            .map(|l| {
                let first_close = l.find(')').unwrap();
                let flat_label: String = l
                    .char_indices()
                    .filter(|&(i, _)| i != 1 && i != first_close)
                    .map(|(_, ch)| ch)
                    .collect();
                (l.clone(), flat_label)
            })
            .collect();
        prop_assert!(equal_via(&nested, &flat, &map).unwrap());
    }

    #[test]
    fn singleton_operations_are_identities(g in arb_graph("g")) {
        let j = graph_join(std::slice::from_ref(&g)).unwrap();
        prop_assert_eq!(&j, &g);
        let p = strong_product(std::slice::from_ref(&g), 64).unwrap();
        let map: Vec<(String, String)> =
            g.labels().iter().map(|l| (format!("({l})"), l.clone())).collect();
        prop_assert!(equal_via(&p, &g, &map).unwrap());
    }
}
