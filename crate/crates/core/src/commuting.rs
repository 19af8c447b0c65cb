//! Commuting graphs, extended commuting graphs, and knit degrees.
//!
//! The commuting graph of a non-commutative semigroup has the non-central
//! elements as vertices, adjacent iff they commute; the extended variant
//! keeps all elements and is defined for commutative semigroups too.
//!
//! A left path x1 - ... - xn requires x1 != xn and x1*xi = xn*xi for every
//! vertex xi on the path. The knit degree is the length of a shortest
//! left path; the search fixes an endpoint pair and runs a BFS inside the
//! subgraph induced by the elements compatible with that pair, which is
//! correct because the left-path condition constrains each vertex
//! independently once the endpoints are fixed.

use alloc::collections::VecDeque;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use serde::{Deserialize, Serialize};

use crate::graph::SimpleGraph;
use crate::semigroup::{ElementId, Semigroup};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CommutingError {
    /// The commuting graph of a commutative semigroup has an empty vertex
    /// set and is undefined.
    CommutativeSemigroup,
}

impl fmt::Display for CommutingError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::CommutativeSemigroup => {
                write!(
                    f,
                    "the commuting graph of a commutative semigroup is undefined"
                )
            }
        }
    }
}

impl core::error::Error for CommutingError {}

/// Result of a shortest (*-)left-path search.
///
/// When a path exists, `length` is `witness.len() - 1` and minimal, and
/// the witness vertices satisfy the left-path product equations.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct LeftPathResult {
    pub exists: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub length: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Vec<String>>,
}

impl LeftPathResult {
    pub fn not_found() -> Self {
        Self {
            exists: false,
            length: None,
            witness: None,
        }
    }

    pub fn found(witness: Vec<String>) -> Self {
        debug_assert!(witness.len() >= 2);
        Self {
            exists: true,
            length: Some(witness.len() - 1),
            witness: Some(witness),
        }
    }
}

/// Graph on the non-central elements, adjacent iff they commute. Labels
/// are the semigroup's own. Errors for commutative semigroups.
pub fn commuting_graph(s: &Semigroup) -> Result<SimpleGraph, CommutingError> {
    if s.is_commutative() {
        return Err(CommutingError::CommutativeSemigroup);
    }
    let center = s.center();
    let vertices: Vec<ElementId> = s.elements().filter(|x| !center.contains(x)).collect();
    Ok(commutation_graph_on(s, &vertices))
}

/// Graph on all elements, adjacent iff distinct and commuting.
pub fn extended_commuting_graph(s: &Semigroup) -> SimpleGraph {
    let vertices: Vec<ElementId> = s.elements().collect();
    commutation_graph_on(s, &vertices)
}

fn commutation_graph_on(s: &Semigroup, vertices: &[ElementId]) -> SimpleGraph {
    let labels = vertices.iter().map(|&x| s.label(x).to_string()).collect();
    let mut g = SimpleGraph::new(labels).expect("semigroup labels are distinct");
    for (i, &x) in vertices.iter().enumerate() {
        for (j, &y) in vertices.iter().enumerate().skip(i + 1) {
            if s.commutes(x, y) {
                g.add_edge(i, j);
            }
        }
    }
    g
}

/// Shortest left path in the commuting graph. Errors for commutative
/// semigroups; reports `exists: false` when the graph has no left paths.
pub fn knit_degree(s: &Semigroup) -> Result<LeftPathResult, CommutingError> {
    if s.is_commutative() {
        return Err(CommutingError::CommutativeSemigroup);
    }
    let center = s.center();
    let vertices: Vec<ElementId> = s.elements().filter(|x| !center.contains(x)).collect();
    Ok(shortest_left_path(s, &vertices))
}

/// Shortest *-left path in the extended commuting graph; defined for
/// every semigroup.
pub fn star_knit_degree(s: &Semigroup) -> LeftPathResult {
    let vertices: Vec<ElementId> = s.elements().collect();
    shortest_left_path(s, &vertices)
}

/// Endpoint pairs are scanned in element order; within a pair, a BFS runs
/// over the vertices v with a*v = b*v (a and b always qualify, by the
/// endpoint equations). Neighbor expansion is in index order, so the
/// returned witness is reproducible.
fn shortest_left_path(s: &Semigroup, vertices: &[ElementId]) -> LeftPathResult {
    let n = vertices.len();
    let adjacent = |i: usize, j: usize| i != j && s.commutes(vertices[i], vertices[j]);

    let mut best: Option<Vec<usize>> = None;
    for a in 0..n {
        let ea = vertices[a];
        let aa = s.product(ea, ea);
        for b in 0..n {
            if a == b {
                continue;
            }
            let eb = vertices[b];
            // x1*x1 = xn*x1 and x1*xn = xn*xn.
            if s.product(eb, ea) != aa || s.product(ea, eb) != s.product(eb, eb) {
                continue;
            }
            let allowed: Vec<bool> = vertices
                .iter()
                .map(|&v| s.product(ea, v) == s.product(eb, v))
                .collect();
            debug_assert!(allowed[a] && allowed[b]);

            let cutoff = best.as_ref().map(|p| p.len() - 1);
            let mut parent = vec![usize::MAX; n];
            let mut dist = vec![usize::MAX; n];
            dist[a] = 0;
            let mut queue = VecDeque::from([a]);
            'bfs: while let Some(u) = queue.pop_front() {
                for v in 0..n {
                    if allowed[v] && dist[v] == usize::MAX && adjacent(u, v) {
                        dist[v] = dist[u] + 1;
                        parent[v] = u;
                        if v == b {
                            break 'bfs;
                        }
                        queue.push_back(v);
                    }
                }
            }
            if dist[b] == usize::MAX || cutoff.is_some_and(|c| dist[b] >= c) {
                continue;
            }
            let mut path = vec![b];
            let mut v = b;
            while v != a {
                v = parent[v];
                path.push(v);
            }
            path.reverse();
            best = Some(path);
        }
    }
    match best {
        Some(path) => LeftPathResult::found(
            path.into_iter()
                .map(|v| s.label(vertices[v]).to_string())
                .collect(),
        ),
        None => LeftPathResult::not_found(),
    }
}

/// Why a claimed (*-)left-path witness is invalid.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum WitnessError {
    UnknownLabel(String),
    TooShort,
    RepeatedVertex(String),
    CentralVertex(String),
    NotAdjacent(String, String),
    ProductMismatch {
        endpoint_product: String,
        via: String,
    },
}

impl fmt::Display for WitnessError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::UnknownLabel(l) => write!(f, "unknown element {l:?}"),
            Self::TooShort => write!(f, "a left path needs at least two vertices"),
            Self::RepeatedVertex(l) => write!(f, "vertex {l:?} repeats"),
            Self::CentralVertex(l) => write!(f, "vertex {l:?} is central"),
            Self::NotAdjacent(a, b) => {
                write!(f, "consecutive vertices {a:?}, {b:?} do not commute")
            }
            Self::ProductMismatch {
                endpoint_product,
                via,
            } => {
                write!(f, "x1*{via} != xn*{via} (got {endpoint_product})")
            }
        }
    }
}

impl core::error::Error for WitnessError {}

/// Re-validates a witness against the Cayley table: pairwise-distinct
/// vertices, consecutive commuting, distinct endpoints, the left-path
/// product equations, and (unless `star`) non-centrality of every vertex.
pub fn validate_witness(s: &Semigroup, witness: &[String], star: bool) -> Result<(), WitnessError> {
    if witness.len() < 2 {
        return Err(WitnessError::TooShort);
    }
    let mut elems = Vec::with_capacity(witness.len());
    for label in witness {
        match s.element_by_label(label) {
            Some(e) => elems.push(e),
            None => return Err(WitnessError::UnknownLabel(label.clone())),
        }
    }
    for (i, &x) in elems.iter().enumerate() {
        if elems[i + 1..].contains(&x) {
            return Err(WitnessError::RepeatedVertex(s.label(x).to_string()));
        }
    }
    if !star {
        let center = s.center();
        for &x in &elems {
            if center.contains(&x) {
                return Err(WitnessError::CentralVertex(s.label(x).to_string()));
            }
        }
    }
    for w in elems.windows(2) {
        if !s.commutes(w[0], w[1]) {
            return Err(WitnessError::NotAdjacent(
                s.label(w[0]).to_string(),
                s.label(w[1]).to_string(),
            ));
        }
    }
    let (first, last) = (elems[0], *elems.last().unwrap());
    for &x in &elems {
        let via_first = s.product(first, x);
        if via_first != s.product(last, x) {
            return Err(WitnessError::ProductMismatch {
                endpoint_product: s.label(via_first).to_string(),
                via: s.label(x).to_string(),
            });
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph_on, equal_via, graph_join, identity_map, induced_subgraph};
    use crate::semigroup::{generate, parse_semigroup, Family};

    fn t2() -> Semigroup {
        generate(Family::FullTransformation, 2).unwrap()
    }

    #[test]
    fn commuting_graph_of_t2_is_edgeless() {
        let g = commuting_graph(&t2()).unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn commuting_graph_rejects_commutative() {
        let c3 = generate(Family::CyclicGroup, 3).unwrap();
        assert_eq!(
            commuting_graph(&c3),
            Err(CommutingError::CommutativeSemigroup)
        );
        assert_eq!(knit_degree(&c3), Err(CommutingError::CommutativeSemigroup));
    }

    #[test]
    fn extended_graph_of_commutative_semigroup_is_complete() {
        let c3 = generate(Family::CyclicGroup, 3).unwrap();
        let g = extended_commuting_graph(&c3);
        let k3 = complete_graph_on(g.labels().to_vec()).unwrap();
        assert!(equal_via(&g, &k3, &identity_map(&g)).unwrap());
    }

    #[test]
    fn extended_graph_of_t2_is_a_star() {
        let g = extended_commuting_graph(&t2());
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edge_count(), 3);
        let id = g.index_of("12").unwrap();
        assert_eq!(g.degree(id), 3);
    }

    #[test]
    fn extended_graph_of_left_zero_is_null() {
        let l2 = generate(Family::LeftZero, 2).unwrap();
        let g = extended_commuting_graph(&l2);
        assert_eq!(g.vertex_count(), 2);
        assert!(g.is_null());
    }

    #[test]
    fn commuting_graph_is_induced_subgraph_of_extended() {
        for s in [t2(), generate(Family::LeftZero, 3).unwrap()] {
            let g = commuting_graph(&s).unwrap();
            let induced = induced_subgraph(&extended_commuting_graph(&s), g.labels()).unwrap();
            assert_eq!(g, induced);
        }
    }

    #[test]
    fn extended_graph_decomposes_as_center_join_commuting() {
        let s = t2();
        let center_labels: Vec<String> =
            s.center().iter().map(|&x| s.label(x).to_string()).collect();
        let join = graph_join(&[
            complete_graph_on(center_labels).unwrap(),
            commuting_graph(&s).unwrap(),
        ])
        .unwrap();
        let ext = extended_commuting_graph(&s);
        assert!(equal_via(&ext, &join, &identity_map(&ext)).unwrap());
    }

    #[test]
    fn t2_has_no_left_paths() {
        let r = knit_degree(&t2()).unwrap();
        assert_eq!(r, LeftPathResult::not_found());
        assert_eq!(star_knit_degree(&t2()), LeftPathResult::not_found());
    }

    #[test]
    fn null_semigroup_star_knit_degree_is_one() {
        let n2 = generate(Family::NullWithZero, 2).unwrap();
        let r = star_knit_degree(&n2);
        assert_eq!(r.length, Some(1));
        validate_witness(&n2, r.witness.as_ref().unwrap(), true).unwrap();
    }

    #[test]
    fn cyclic_group_has_no_star_left_paths() {
        let c2 = generate(Family::CyclicGroup, 2).unwrap();
        assert_eq!(star_knit_degree(&c2), LeftPathResult::not_found());
    }

    #[test]
    fn knit_degree_one_when_two_rows_coincide() {
        // x and y have identical rows (x*v = z = y*v for every v), so any
        // path between them is a left path; t is a left identity keeping
        // x and y out of the center. x -- y itself is an edge: kd = 1.
        let s = parse_semigroup("elements: x y z t\nz z z z\nz z z z\nz z z z\nx y z t").unwrap();
        let r = knit_degree(&s).unwrap();
        assert_eq!(r.length, Some(1));
        validate_witness(&s, r.witness.as_ref().unwrap(), false).unwrap();
        let star = star_knit_degree(&s);
        assert_eq!(star.length, Some(1));
        validate_witness(&s, star.witness.as_ref().unwrap(), true).unwrap();
    }

    #[test]
    fn witness_validation_rejects_bad_paths() {
        let s = t2();
        assert!(matches!(
            validate_witness(&s, &["11".to_string()], false),
            Err(WitnessError::TooShort)
        ));
        assert!(matches!(
            validate_witness(&s, &["11".to_string(), "nope".to_string()], false),
            Err(WitnessError::UnknownLabel(_))
        ));
        // 11 and 22 do not commute.
        assert!(matches!(
            validate_witness(&s, &["11".to_string(), "22".to_string()], false),
            Err(WitnessError::NotAdjacent(..))
        ));
        // The identity is central.
        assert!(matches!(
            validate_witness(&s, &["11".to_string(), "12".to_string()], false),
            Err(WitnessError::CentralVertex(_))
        ));
    }

    #[test]
    fn left_path_json_schema() {
        let none = LeftPathResult::not_found();
        assert_eq!(serde_json::to_string(&none).unwrap(), r#"{"exists":false}"#);
        let found = LeftPathResult::found(alloc::vec!["a".to_string(), "b".to_string()]);
        assert_eq!(
            serde_json::to_string(&found).unwrap(),
            r#"{"exists":true,"length":1,"witness":["a","b"]}"#
        );
        let back: LeftPathResult = serde_json::from_str(r#"{"exists":false}"#).unwrap();
        assert_eq!(back, none);
    }
}
