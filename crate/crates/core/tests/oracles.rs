//! Independent oracles for the exact invariants: subset enumeration for
//! the clique number, exhaustive color assignment for the chromatic
//! number, and simple-cycle enumeration for the girth. These never call
//! into the implementations they check.

use smg_core::commuting_graph;
use smg_core::constructions::{direct_product, DEFAULT_PRODUCT_CAP};
use smg_core::graph::SimpleGraph;
use smg_core::invariants::{
    chromatic_number, clique_number, diameter, eccentricity, girth, ExtNat,
};
use smg_core::rng::SplitMix64;
use smg_core::semigroup::{generate, Family};

/// Largest subset of pairwise-adjacent vertices, found by trying all
/// 2^n subsets.
fn clique_by_subsets(g: &SimpleGraph) -> usize {
    let n = g.vertex_count();
    assert!(n <= 20, "subset oracle is exponential");
    let mut best = 0;
    for mask in 0u32..(1 << n) {
        let members: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        if members.len() <= best {
            continue;
        }
        let complete = members
            .iter()
            .enumerate()
            .all(|(i, &u)| members[i + 1..].iter().all(|&v| g.adjacent(u, v)));
        if complete {
            best = members.len();
        }
    }
    best
}

/// Smallest k admitting a proper coloring, found by exhaustively
/// assigning colors vertex by vertex with only the conflict check.
fn chromatic_by_assignment(g: &SimpleGraph) -> usize {
    fn assign(g: &SimpleGraph, k: usize, colors: &mut [usize], v: usize) -> bool {
        if v == colors.len() {
            return true;
        }
        for c in 0..k {
            if (0..v).all(|u| colors[u] != c || !g.adjacent(u, v)) {
                colors[v] = c;
                if assign(g, k, colors, v + 1) {
                    return true;
                }
            }
        }
        false
    }
    let n = g.vertex_count();
    if n == 0 {
        return 0;
    }
    let mut colors = vec![0usize; n];
    (1..=n)
        .find(|&k| assign(g, k, &mut colors, 0))
        .expect("n colors always suffice")
}

/// Shortest cycle length by enumerating simple cycles: each cycle is
/// explored from its smallest vertex, through vertices above it only.
fn girth_by_cycles(g: &SimpleGraph) -> ExtNat {
    fn dfs(
        g: &SimpleGraph,
        start: usize,
        path: &mut Vec<usize>,
        on_path: &mut [bool],
        best: &mut usize,
    ) {
        let u = *path.last().unwrap();
        for v in g.neighbors(u) {
            if v == start && path.len() >= 3 {
                *best = (*best).min(path.len());
            } else if v > start && !on_path[v] && path.len() < *best {
                path.push(v);
                on_path[v] = true;
                dfs(g, start, path, on_path, best);
                on_path[v] = false;
                path.pop();
            }
        }
    }
    let n = g.vertex_count();
    let mut best = usize::MAX;
    for start in 0..n {
        let mut on_path = vec![false; n];
        on_path[start] = true;
        dfs(g, start, &mut vec![start], &mut on_path, &mut best);
    }
    if best == usize::MAX {
        ExtNat::Infinite
    } else {
        ExtNat::Finite(best)
    }
}

fn random_graph(rng: &mut SplitMix64, n: usize, edge_percent: u64) -> SimpleGraph {
    let labels = (0..n).map(|i| format!("v{i}")).collect();
    let mut g = SimpleGraph::new(labels).unwrap();
    for u in 0..n {
        for v in u + 1..n {
            if rng.next_u64() % 100 < edge_percent {
                g.add_edge(u, v);
            }
        }
    }
    g
}

#[test]
fn invariants_match_oracles_on_200_seeded_graphs() {
    let start = std::time::Instant::now();
    let mut rng = SplitMix64::new(0x5EED);
    for i in 0..200 {
        let n = 1 + (i % 12);
        let density = [20, 50, 80][i % 3];
        let g = random_graph(&mut rng, n, density);

        let omega = clique_number(&g, 64).unwrap();
        assert_eq!(omega, clique_by_subsets(&g), "clique mismatch on graph {i}");

        let chi = chromatic_number(&g, 32).unwrap();
        assert_eq!(
            chi,
            chromatic_by_assignment(&g),
            "coloring mismatch on graph {i}"
        );
        assert!(omega <= chi);

        assert_eq!(
            girth(&g),
            girth_by_cycles(&g),
            "girth mismatch on graph {i}"
        );

        let (diam, connected) = diameter(&g).unwrap();
        assert_eq!(connected, diam.is_finite());
        for v in 0..g.vertex_count() {
            assert!(eccentricity(&g, v) <= diam);
        }
    }
    assert!(
        start.elapsed().as_secs() < 60,
        "oracle sweep exceeded one minute"
    );
}

/// Frozen values for the commuting graph of the product of two copies of
/// the order-4 full transformation semigroup, computed by the oracles.
#[test]
fn transformation_square_graph_values_frozen_by_oracles() {
    let t2 = generate(Family::FullTransformation, 2).unwrap();
    let s = direct_product(&[t2.clone(), t2], DEFAULT_PRODUCT_CAP).unwrap();
    let g = commuting_graph(&s).unwrap();
    assert_eq!(g.vertex_count(), 15);

    assert_eq!(clique_by_subsets(&g), 3);
    assert_eq!(clique_number(&g, 64).unwrap(), 3);

    assert_eq!(chromatic_by_assignment(&g), 3);
    assert_eq!(chromatic_number(&g, 32).unwrap(), 3);

    assert_eq!(girth_by_cycles(&g), ExtNat::Finite(3));
    assert_eq!(girth(&g), ExtNat::Finite(3));

    assert_eq!(diameter(&g).unwrap(), (ExtNat::Finite(3), true));
}

/// Frozen values for the zero-union of two copies of the same semigroup:
/// the 6-vertex graph is complete bipartite.
#[test]
fn zero_union_square_graph_values_frozen_by_oracles() {
    let t2 = generate(Family::FullTransformation, 2).unwrap();
    let s = smg_core::constructions::zero_union(&[t2.clone(), t2]).unwrap();
    let g = commuting_graph(&s).unwrap();
    assert_eq!(g.vertex_count(), 6);
    assert_eq!(g.edge_count(), 9);

    assert_eq!(clique_by_subsets(&g), 2);
    assert_eq!(chromatic_by_assignment(&g), 2);
    assert_eq!(girth_by_cycles(&g), ExtNat::Finite(4));
    assert_eq!(diameter(&g).unwrap(), (ExtNat::Finite(2), true));

    assert_eq!(clique_number(&g, 64).unwrap(), 2);
    assert_eq!(chromatic_number(&g, 32).unwrap(), 2);
    assert_eq!(girth(&g), ExtNat::Finite(4));
}
