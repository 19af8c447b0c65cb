//! Labeled simple graphs with dense bit-matrix adjacency, plus the two
//! operations used to characterize commuting graphs of constructions:
//! the graph join and the strong product.
//!
//! Vertex order is label declaration order and is fixed, so every
//! operation here is deterministic. There is no isomorphism search
//! anywhere: [`equal_via`] only checks a supplied bijection.

use alloc::collections::BTreeSet;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use alloc::{format, vec};
use core::fmt;

use serde::ser::{Serialize, SerializeStruct, Serializer};

/// A simple graph: distinct vertex labels and a symmetric, irreflexive
/// adjacency relation stored as a dense bit matrix.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SimpleGraph {
    labels: Vec<String>,
    words: usize,
    adj: Vec<u64>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum GraphError {
    DuplicateLabel(String),
    EmptyLabel,
    /// Graph join requires pairwise disjoint vertex label sets.
    LabelCollision(String),
    UnknownLabel(String),
    SizeCapExceeded {
        size: u128,
        cap: usize,
    },
    EmptyInput,
    NotABijection(String),
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::DuplicateLabel(l) => write!(f, "duplicate vertex label {l:?}"),
            Self::EmptyLabel => write!(f, "vertex labels must be nonempty"),
            Self::LabelCollision(l) => write!(f, "vertex label {l:?} appears in two operands"),
            Self::UnknownLabel(l) => write!(f, "unknown vertex label {l:?}"),
            Self::SizeCapExceeded { size, cap } => {
                write!(f, "product has {size} vertices, exceeding the cap {cap}")
            }
            Self::EmptyInput => write!(f, "operation requires at least one graph"),
            Self::NotABijection(why) => write!(f, "supplied map is not a bijection: {why}"),
        }
    }
}

impl core::error::Error for GraphError {}

impl SimpleGraph {
    /// Edgeless graph on the given labels (0 vertices allowed).
    pub fn new(labels: Vec<String>) -> Result<Self, GraphError> {
        let mut seen = BTreeSet::new();
        for l in &labels {
            if l.is_empty() {
                return Err(GraphError::EmptyLabel);
            }
            if !seen.insert(l.as_str()) {
                return Err(GraphError::DuplicateLabel(l.clone()));
            }
        }
        let n = labels.len();
        let words = n.div_ceil(64);
        Ok(Self {
            labels,
            words,
            adj: vec![0; n * words],
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v, "self-loops are not allowed");
        assert!(u < self.vertex_count() && v < self.vertex_count());
        self.adj[u * self.words + v / 64] |= 1 << (v % 64);
        self.adj[v * self.words + u / 64] |= 1 << (u % 64);
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    /// Neighbor bitset row of `v` (words of 64 vertices each).
    pub(crate) fn row(&self, v: usize) -> &[u64] {
        &self.adj[v * self.words..(v + 1) * self.words]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        BitIter::new(self.row(v))
    }

    /// Edges as index pairs (u, v) with u < v, ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.vertex_count() {
            for v in self.neighbors(u) {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        let set: usize = (0..self.vertex_count()).map(|v| self.degree(v)).sum();
        set / 2
    }

    pub fn is_null(&self) -> bool {
        self.adj.iter().all(|&w| w == 0)
    }

    /// DOT text. Edges are emitted once, as label pairs in lexicographic
    /// order; isolated vertices follow, also sorted.
    pub fn to_dot(&self, name: &str) -> String {
        let mut edges: Vec<(&str, &str)> = self
            .edges()
            .into_iter()
            .map(|(u, v)| {
                let (a, b) = (self.label(u), self.label(v));
                if a <= b {
                    (a, b)
                } else {
                    (b, a)
                }
            })
            .collect();
        edges.sort_unstable();
        let mut isolated: Vec<&str> = (0..self.vertex_count())
            .filter(|&v| self.degree(v) == 0)
            .map(|v| self.label(v))
            .collect();
        isolated.sort_unstable();

        let mut out = format!("graph {name} {{\n");
        for (a, b) in edges {
            out.push_str(&format!("  {} -- {};\n", dot_quote(a), dot_quote(b)));
        }
        for v in isolated {
            out.push_str(&format!("  {};\n", dot_quote(v)));
        }
        out.push_str("}\n");
        out
    }
}

fn dot_quote(label: &str) -> String {
    let mut out = String::with_capacity(label.len() + 2);
    out.push('"');
    for ch in label.chars() {
        if ch == '"' || ch == '\\' {
            out.push('\\');
        }
        out.push(ch);
    }
    out.push('"');
    out
}

/// JSON form: `{"vertices":[...],"edges":[[u,v],...]}` with u < v ascending.
impl Serialize for SimpleGraph {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("SimpleGraph", 2)?;
        st.serialize_field("vertices", &self.labels)?;
        st.serialize_field("edges", &self.edges())?;
        st.end()
    }
}

/// Iterator over set bit positions of a word slice.
pub(crate) struct BitIter<'a> {
    words: &'a [u64],
    word_ix: usize,
    current: u64,
}

impl<'a> BitIter<'a> {
    pub(crate) fn new(words: &'a [u64]) -> Self {
        let current = words.first().copied().unwrap_or(0);
        Self {
            words,
            word_ix: 0,
            current,
        }
    }
}

impl Iterator for BitIter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.word_ix * 64 + bit);
            }
            self.word_ix += 1;
            if self.word_ix >= self.words.len() {
                return None;
            }
            self.current = self.words[self.word_ix];
        }
    }
}

fn default_labels(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("v{i}")).collect()
}

/// K_n on default labels v1..vn.
pub fn complete_graph(n: usize) -> SimpleGraph {
    complete_graph_on(default_labels(n)).expect("default labels are distinct")
}

/// Complete graph on the given labels.
pub fn complete_graph_on(labels: Vec<String>) -> Result<SimpleGraph, GraphError> {
    let mut g = SimpleGraph::new(labels)?;
    for u in 0..g.vertex_count() {
        for v in u + 1..g.vertex_count() {
            g.add_edge(u, v);
        }
    }
    Ok(g)
}

/// Edgeless graph on default labels v1..vn.
pub fn null_graph(n: usize) -> SimpleGraph {
    SimpleGraph::new(default_labels(n)).expect("default labels are distinct")
}

/// Join: union of the graphs plus every edge between distinct operands.
/// Vertex label sets must be pairwise disjoint.
pub fn graph_join(graphs: &[SimpleGraph]) -> Result<SimpleGraph, GraphError> {
    let mut labels = Vec::new();
    let mut seen = BTreeSet::new();
    for g in graphs {
        for l in g.labels() {
            if !seen.insert(l.as_str()) {
                return Err(GraphError::LabelCollision(l.clone()));
            }
            labels.push(l.clone());
        }
    }
    let mut out = SimpleGraph::new(labels)?;
    let mut offset = 0;
    for g in graphs {
        for (u, v) in g.edges() {
            out.add_edge(offset + u, offset + v);
        }
        offset += g.vertex_count();
    }
    // Cross edges between distinct operands.
    let mut start = 0;
    let sizes: Vec<usize> = graphs.iter().map(SimpleGraph::vertex_count).collect();
    for (i, &ni) in sizes.iter().enumerate() {
        let mut other = start + ni;
        for &nj in &sizes[i + 1..] {
            for u in start..start + ni {
                for v in other..other + nj {
                    out.add_edge(u, v);
                }
            }
            other += nj;
        }
        start += ni;
    }
    Ok(out)
}

/// Strong product: vertices are tuples labeled `(l1,...,ln)`, and two
/// tuples are adjacent iff they differ and are equal-or-adjacent in every
/// coordinate. Tuple order is mixed-radix with the first coordinate
/// slowest, matching the direct-product element order.
pub fn strong_product(graphs: &[SimpleGraph], cap: usize) -> Result<SimpleGraph, GraphError> {
    if graphs.is_empty() {
        return Err(GraphError::EmptyInput);
    }
    let sizes: Vec<usize> = graphs.iter().map(SimpleGraph::vertex_count).collect();
    let size = sizes.iter().try_fold(1usize, |acc, &n| acc.checked_mul(n));
    let size = match size {
        Some(s) if s <= cap => s,
        _ => {
            let exact = sizes
                .iter()
                .fold(1u128, |acc, &n| acc.saturating_mul(n as u128));
            return Err(GraphError::SizeCapExceeded { size: exact, cap });
        }
    };

    let mut labels = Vec::with_capacity(size);
    let mut coords = vec![0usize; graphs.len()];
    for _ in 0..size {
        let parts: Vec<&str> = coords
            .iter()
            .zip(graphs)
            .map(|(&c, g)| g.label(c))
            .collect();
        labels.push(format!("({})", parts.join(",")));
        for k in (0..coords.len()).rev() {
            coords[k] += 1;
            if coords[k] < sizes[k] {
                break;
            }
            coords[k] = 0;
        }
    }
    let mut out = SimpleGraph::new(labels)?;

    let decode = |mut ix: usize| -> Vec<usize> {
        let mut c = vec![0usize; sizes.len()];
        for k in (0..sizes.len()).rev() {
            c[k] = ix % sizes[k];
            ix /= sizes[k];
        }
        c
    };
    for u in 0..size {
        let cu = decode(u);
        'pair: for v in u + 1..size {
            let cv = decode(v);
            for ((&a, &b), g) in cu.iter().zip(&cv).zip(graphs) {
                if a != b && !g.adjacent(a, b) {
                    continue 'pair;
                }
            }
            out.add_edge(u, v);
        }
    }
    Ok(out)
}

/// Subgraph induced by the given labels, keeping the host graph's vertex
/// order.
pub fn induced_subgraph<S: AsRef<str>>(
    g: &SimpleGraph,
    subset: &[S],
) -> Result<SimpleGraph, GraphError> {
    let mut keep = BTreeSet::new();
    for l in subset {
        let l = l.as_ref();
        match g.index_of(l) {
            Some(ix) => {
                keep.insert(ix);
            }
            None => return Err(GraphError::UnknownLabel(l.to_string())),
        }
    }
    let vertices: Vec<usize> = keep.into_iter().collect();
    let labels = vertices.iter().map(|&v| g.label(v).to_string()).collect();
    let mut out = SimpleGraph::new(labels)?;
    for (i, &u) in vertices.iter().enumerate() {
        for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
            if g.adjacent(u, v) {
                out.add_edge(i, j);
            }
        }
    }
    Ok(out)
}

/// Checks whether a supplied label bijection `g -> h` preserves adjacency
/// both ways. Errors if the map is not a bijection from the vertices of
/// `g` onto the vertices of `h`.
pub fn equal_via<A: AsRef<str>, B: AsRef<str>>(
    g: &SimpleGraph,
    h: &SimpleGraph,
    map: &[(A, B)],
) -> Result<bool, GraphError> {
    if map.len() != g.vertex_count() || g.vertex_count() != h.vertex_count() {
        return Err(GraphError::NotABijection(format!(
            "map has {} entries for {} -> {} vertices",
            map.len(),
            g.vertex_count(),
            h.vertex_count()
        )));
    }
    let mut image = vec![usize::MAX; g.vertex_count()];
    let mut covered = vec![false; h.vertex_count()];
    for (from, to) in map {
        let (from, to) = (from.as_ref(), to.as_ref());
        let u = g
            .index_of(from)
            .ok_or_else(|| GraphError::NotABijection(format!("{from:?} is not a vertex")))?;
        let v = h
            .index_of(to)
            .ok_or_else(|| GraphError::NotABijection(format!("{to:?} is not a vertex")))?;
        if image[u] != usize::MAX {
            return Err(GraphError::NotABijection(format!("{from:?} mapped twice")));
        }
        if covered[v] {
            return Err(GraphError::NotABijection(format!("{to:?} hit twice")));
        }
        image[u] = v;
        covered[v] = true;
    }
    for u in 0..g.vertex_count() {
        for v in u + 1..g.vertex_count() {
            if g.adjacent(u, v) != h.adjacent(image[u], image[v]) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The identity bijection on a graph's own labels.
pub fn identity_map(g: &SimpleGraph) -> Vec<(String, String)> {
    g.labels().iter().map(|l| (l.clone(), l.clone())).collect()
}
