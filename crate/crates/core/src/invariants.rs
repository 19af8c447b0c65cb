//! Exact graph invariants: diameter (with connectivity), girth, clique
//! number and chromatic number, with an explicit infinite value for
//! disconnected diameters and acyclic girths.
//!
//! Only exact algorithms live here; the caps bound runtime and turn
//! oversized inputs into errors instead of approximations. Search
//! tie-breaking is by vertex index throughout.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use serde::de::{self, Deserialize, Deserializer, Visitor};
use serde::ser::{Serialize, Serializer};

use crate::graph::SimpleGraph;

/// A natural number extended with infinity; `Infinite` compares greater
/// than every finite value.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum ExtNat {
    Finite(usize),
    Infinite,
}

impl ExtNat {
    pub fn is_finite(self) -> bool {
        matches!(self, Self::Finite(_))
    }
}

impl fmt::Display for ExtNat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Finite(k) => write!(f, "{k}"),
            Self::Infinite => write!(f, "inf"),
        }
    }
}

/// Serialized as a plain number, or the string `"inf"`.
impl Serialize for ExtNat {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            Self::Finite(k) => serializer.serialize_u64(*k as u64),
            Self::Infinite => serializer.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for ExtNat {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct ExtNatVisitor;

        impl Visitor<'_> for ExtNatVisitor {
            type Value = ExtNat;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a natural number or the string \"inf\"")
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> Result<ExtNat, E> {
                Ok(ExtNat::Finite(v as usize))
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> Result<ExtNat, E> {
                if v < 0 {
                    return Err(E::custom("negative value"));
                }
                Ok(ExtNat::Finite(v as usize))
            }

            fn visit_str<E: de::Error>(self, v: &str) -> Result<ExtNat, E> {
                if v == "inf" {
                    Ok(ExtNat::Infinite)
                } else {
                    Err(E::custom("expected \"inf\""))
                }
            }
        }

        deserializer.deserialize_any(ExtNatVisitor)
    }
}

/// The four tracked invariants of one graph.
#[derive(Clone, PartialEq, Eq, Debug, serde::Serialize, serde::Deserialize)]
pub struct InvariantReport {
    pub connected: bool,
    pub diameter: ExtNat,
    pub girth: ExtNat,
    pub clique_number: usize,
    pub chromatic_number: usize,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum InvariantError {
    EmptyGraph,
    CapExceeded {
        what: &'static str,
        vertices: usize,
        cap: usize,
    },
}

impl fmt::Display for InvariantError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::EmptyGraph => write!(f, "graph has no vertices"),
            Self::CapExceeded {
                what,
                vertices,
                cap,
            } => write!(
                f,
                "{what} limited to {cap} vertices, got {vertices}; raise the cap to proceed"
            ),
        }
    }
}

impl core::error::Error for InvariantError {}

pub const DEFAULT_CLIQUE_CAP: usize = 64;
pub const DEFAULT_CHROMATIC_CAP: usize = 32;

/// Vertex-count caps for the exponential-time invariants.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct InvariantCaps {
    pub clique: usize,
    pub chromatic: usize,
}

impl Default for InvariantCaps {
    fn default() -> Self {
        Self {
            clique: DEFAULT_CLIQUE_CAP,
            chromatic: DEFAULT_CHROMATIC_CAP,
        }
    }
}

/// BFS distances from `start`; `usize::MAX` marks unreachable vertices.
fn bfs_distances(g: &SimpleGraph, start: usize) -> Vec<usize> {
    let mut dist = vec![usize::MAX; g.vertex_count()];
    dist[start] = 0;
    let mut queue = VecDeque::from([start]);
    while let Some(u) = queue.pop_front() {
        for v in g.neighbors(u) {
            if dist[v] == usize::MAX {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    dist
}

/// Maximum distance between vertices, plus the connectivity flag.
/// A single vertex has diameter 0; a disconnected graph has infinite
/// diameter. Errors on the empty graph.
pub fn diameter(g: &SimpleGraph) -> Result<(ExtNat, bool), InvariantError> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(InvariantError::EmptyGraph);
    }
    let mut max = 0usize;
    for start in 0..n {
        let dist = bfs_distances(g, start);
        for &d in &dist {
            if d == usize::MAX {
                return Ok((ExtNat::Infinite, false));
            }
            max = max.max(d);
        }
    }
    Ok((ExtNat::Finite(max), true))
}

/// Eccentricity of one vertex (max distance to any other), infinite when
/// some vertex is unreachable.
pub fn eccentricity(g: &SimpleGraph, v: usize) -> ExtNat {
    let dist = bfs_distances(g, v);
    match dist.iter().max() {
        Some(&usize::MAX) => ExtNat::Infinite,
        Some(&d) => ExtNat::Finite(d),
        None => ExtNat::Finite(0),
    }
}

/// Length of a shortest cycle, or infinity for acyclic graphs.
///
/// For every root, a BFS is run and each non-tree edge (u, v) with
/// `v != parent(u)` yields the cycle-length candidate
/// `dist(u) + dist(v) + 1`; the minimum over all roots is exact.
pub fn girth(g: &SimpleGraph) -> ExtNat {
    let n = g.vertex_count();
    let mut best = usize::MAX;
    for start in 0..n {
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        dist[start] = 0;
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            // No candidate through u can beat the current best.
            if 2 * dist[u] + 1 >= best {
                continue;
            }
            for v in g.neighbors(u) {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    queue.push_back(v);
                } else if parent[u] != v {
                    best = best.min(dist[u] + dist[v] + 1);
                }
            }
        }
        if best == 3 {
            break;
        }
    }
    if best == usize::MAX {
        ExtNat::Infinite
    } else {
        ExtNat::Finite(best)
    }
}

/// Exact maximum clique size via branch and bound with a greedy-coloring
/// upper bound. The null graph on n >= 1 vertices has clique number 1;
/// the empty graph has clique number 0.
pub fn clique_number(g: &SimpleGraph, cap: usize) -> Result<usize, InvariantError> {
    let n = g.vertex_count();
    if n > cap {
        return Err(InvariantError::CapExceeded {
            what: "exact clique",
            vertices: n,
            cap,
        });
    }
    if n == 0 {
        return Ok(0);
    }
    let words = n.div_ceil(64);
    let rows: Vec<Vec<u64>> = (0..n)
        .map(|v| {
            let mut row = vec![0u64; words];
            for u in g.neighbors(v) {
                row[u / 64] |= 1 << (u % 64);
            }
            row
        })
        .collect();
    let mut all = vec![u64::MAX; words];
    if !n.is_multiple_of(64) {
        all[words - 1] = (1u64 << (n % 64)) - 1;
    }
    let mut best = 0;
    clique_expand(&rows, &mut all, 0, &mut best);
    Ok(best)
}

fn bits_of(words: &[u64]) -> Vec<usize> {
    let mut out = Vec::new();
    for (i, &w) in words.iter().enumerate() {
        let mut w = w;
        while w != 0 {
            out.push(i * 64 + w.trailing_zeros() as usize);
            w &= w - 1;
        }
    }
    out
}

fn clique_expand(rows: &[Vec<u64>], candidates: &mut [u64], size: usize, best: &mut usize) {
    let verts = bits_of(candidates);
    if verts.is_empty() {
        *best = (*best).max(size);
        return;
    }
    // Greedy coloring of the candidate set in index order; a vertex with
    // color c can extend the clique by at most c + 1 vertices.
    let mut colors = vec![0usize; verts.len()];
    let mut classes: Vec<Vec<u64>> = Vec::new();
    for (k, &v) in verts.iter().enumerate() {
        let mut c = 0;
        loop {
            if c == classes.len() {
                classes.push(vec![0u64; rows[v].len()]);
            }
            let conflict = classes[c]
                .iter()
                .zip(&rows[v])
                .any(|(&cls, &adj)| cls & adj != 0);
            if !conflict {
                classes[c][v / 64] |= 1 << (v % 64);
                colors[k] = c;
                break;
            }
            c += 1;
        }
    }
    // Highest color first; once the bound fails it fails for the rest.
    let mut order: Vec<usize> = (0..verts.len()).collect();
    order.sort_by_key(|&k| core::cmp::Reverse(colors[k]));
    for k in order {
        let v = verts[k];
        if size + colors[k] < *best {
            return;
        }
        let mut next: Vec<u64> = candidates
            .iter()
            .zip(&rows[v])
            .map(|(&c, &a)| c & a)
            .collect();
        clique_expand(rows, &mut next, size + 1, best);
        candidates[v / 64] &= !(1 << (v % 64));
    }
}

/// First-fit coloring in index order; returns the number of colors used.
fn greedy_coloring(g: &SimpleGraph) -> usize {
    let n = g.vertex_count();
    let mut color = vec![usize::MAX; n];
    let mut used = 0;
    for v in 0..n {
        let mut taken = vec![false; used + 1];
        for u in g.neighbors(v) {
            if color[u] != usize::MAX && color[u] < taken.len() {
                taken[color[u]] = true;
            }
        }
        let c = taken.iter().position(|&t| !t).unwrap_or(used);
        color[v] = c;
        used = used.max(c + 1);
    }
    used
}

fn colorable_with(g: &SimpleGraph, k: usize) -> bool {
    fn rec(g: &SimpleGraph, k: usize, color: &mut [usize], v: usize, max_used: usize) -> bool {
        if v == color.len() {
            return true;
        }
        // Trying more than one fresh color only permutes color names.
        for c in 0..k.min(max_used + 2) {
            if g.neighbors(v).all(|u| u >= v || color[u] != c) {
                color[v] = c;
                if rec(g, k, color, v + 1, max_used.max(c)) {
                    return true;
                }
            }
        }
        false
    }
    if g.vertex_count() == 0 {
        return true;
    }
    let mut color = vec![usize::MAX; g.vertex_count()];
    color[0] = 0;
    rec(g, k, &mut color, 1, 0)
}

/// Exact chromatic number via iterative deepening on k, seeded with the
/// clique lower bound and the greedy upper bound.
pub fn chromatic_number(g: &SimpleGraph, cap: usize) -> Result<usize, InvariantError> {
    let n = g.vertex_count();
    if n > cap {
        return Err(InvariantError::CapExceeded {
            what: "exact coloring",
            vertices: n,
            cap,
        });
    }
    if n == 0 {
        return Ok(0);
    }
    if g.is_null() {
        return Ok(1);
    }
    let lower = clique_number(g, n)?;
    let upper = greedy_coloring(g);
    debug_assert!(lower <= upper);
    for k in lower..upper {
        if colorable_with(g, k) {
            return Ok(k);
        }
    }
    Ok(upper)
}

/// All four invariants of one graph.
pub fn invariant_report(
    g: &SimpleGraph,
    caps: &InvariantCaps,
) -> Result<InvariantReport, InvariantError> {
    let (diam, connected) = diameter(g)?;
    let report = InvariantReport {
        connected,
        diameter: diam,
        girth: girth(g),
        clique_number: clique_number(g, caps.clique)?,
        chromatic_number: chromatic_number(g, caps.chromatic)?,
    };
    debug_assert!(report.clique_number <= report.chromatic_number);
    Ok(report)
}
