//! Closed-form predictions for the invariants of a construction's
//! commuting graph, evaluated purely from per-component profiles.
//!
//! Nothing here ever touches the constructed semigroup: the verification
//! harness compares these predictions against direct computation on the
//! built object, so the two sides must not share work.

use alloc::collections::BTreeSet;

use alloc::vec::Vec;
use core::fmt;

use serde::Serialize;

use crate::commuting::{
    commuting_graph, extended_commuting_graph, knit_degree, star_knit_degree, LeftPathResult,
};
use crate::invariants::{invariant_report, ExtNat, InvariantCaps, InvariantError, InvariantReport};
use crate::semigroup::Semigroup;

/// Everything the prediction formulas need to know about one component.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ComponentProfile {
    pub order: usize,
    pub center_size: usize,
    /// Invariants of the extended commuting graph (defined for every
    /// semigroup).
    pub extended_invariants: InvariantReport,
    pub kd_star: LeftPathResult,
    /// Data of the commuting graph; absent exactly when the component is
    /// commutative.
    pub noncommutative: Option<NonCommutativeProfile>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NonCommutativeProfile {
    pub graph_invariants: InvariantReport,
    /// The commuting graph has no edges.
    pub is_null_graph: bool,
    /// Distinct non-central x, y with x*x = y*x and y*y = x*y exist.
    pub has_xy_pair: bool,
    pub kd: LeftPathResult,
}

impl ComponentProfile {
    pub fn commutative(&self) -> bool {
        self.noncommutative.is_none()
    }

    /// Computes the profile of one semigroup.
    pub fn compute(s: &Semigroup, caps: &InvariantCaps) -> Result<Self, InvariantError> {
        let center = s.center();
        let extended = extended_commuting_graph(s);
        let extended_invariants = invariant_report(&extended, caps)?;
        let kd_star = star_knit_degree(s);
        let noncommutative = match commuting_graph(s) {
            Err(_) => None,
            Ok(g) => {
                let graph_invariants = invariant_report(&g, caps)?;
                let is_null_graph = g.is_null();
                let vertices: Vec<_> = s.elements().filter(|x| !center.contains(x)).collect();
                let has_xy_pair = vertices.iter().any(|&x| {
                    vertices.iter().any(|&y| {
                        x != y
                            && s.product(x, x) == s.product(y, x)
                            && s.product(y, y) == s.product(x, y)
                    })
                });
                let kd = knit_degree(s).expect("non-commutative by construction");
                Some(NonCommutativeProfile {
                    graph_invariants,
                    is_null_graph,
                    has_xy_pair,
                    kd,
                })
            }
        };
        Ok(Self {
            order: s.order(),
            center_size: center.len(),
            extended_invariants,
            kd_star,
            noncommutative,
        })
    }
}

/// What the structure theorems claim the graph of the construction is.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum StructureClaim {
    /// The commuting graph coincides with that of the only
    /// non-commutative component (0-based component index).
    EqualsComponent(usize),
    /// The commuting graph is the join of the non-commutative
    /// components' commuting graphs.
    EqualsJoin,
    /// The extended commuting graph is isomorphic to the strong product
    /// of the components' extended commuting graphs.
    IsomorphicStrongProduct,
}

/// Exact value (zero-union) or upper bound (direct product).
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ChromaticPrediction {
    Exact(usize),
    UpperBound(usize),
}

/// Theorem-side predicted values for one construction.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Prediction {
    #[serde(rename = "structure_claim")]
    pub structure: StructureClaim,
    pub connected: bool,
    pub diameter: ExtNat,
    pub clique_number: usize,
    #[serde(rename = "chromatic_number")]
    pub chromatic: ChromaticPrediction,
    pub girth: ExtNat,
    #[serde(rename = "kd")]
    pub knit_degree: Option<usize>,
    #[serde(rename = "K")]
    pub k_set: BTreeSet<usize>,
    #[serde(rename = "K_star")]
    pub k_star_set: BTreeSet<usize>,
    pub conditions_held: BTreeSet<u8>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum PredictError {
    /// Every component is commutative, so the construction is commutative
    /// and its commuting graph is undefined.
    AllCommutative,
    /// Cycles come from the component graphs alone, but more than one
    /// component graph contains cycles; the case analysis promises a
    /// unique one.
    CycleComponentNotUnique { indices: Vec<usize> },
}

impl fmt::Display for PredictError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::AllCommutative => {
                write!(
                    f,
                    "all components are commutative; the commuting graph is undefined"
                )
            }
            Self::CycleComponentNotUnique { indices } => {
                write!(
                    f,
                    "expected a unique cycle-bearing component, found {indices:?}"
                )
            }
        }
    }
}

impl core::error::Error for PredictError {}

fn nc_graph(p: &ComponentProfile) -> &NonCommutativeProfile {
    p.noncommutative
        .as_ref()
        .expect("component is non-commutative")
}

fn noncommutative_indices(profiles: &[ComponentProfile]) -> Vec<usize> {
    profiles
        .iter()
        .enumerate()
        .filter(|(_, p)| !p.commutative())
        .map(|(i, _)| i)
        .collect()
}

/// Predicted invariants of the commuting graph of a zero-union.
pub fn predict_zero_union(profiles: &[ComponentProfile]) -> Result<Prediction, PredictError> {
    let nc = noncommutative_indices(profiles);
    if nc.is_empty() {
        return Err(PredictError::AllCommutative);
    }

    if let [j] = nc[..] {
        // Single non-commutative component: the graph is that component's
        // graph, every invariant passes through verbatim.
        let p = profiles[j].noncommutative.as_ref().expect("index in nc");
        return Ok(Prediction {
            structure: StructureClaim::EqualsComponent(j),
            connected: p.graph_invariants.connected,
            diameter: p.graph_invariants.diameter,
            clique_number: p.graph_invariants.clique_number,
            chromatic: ChromaticPrediction::Exact(p.graph_invariants.chromatic_number),
            girth: p.graph_invariants.girth,
            knit_degree: p.kd.length,
            k_set: BTreeSet::new(),
            k_star_set: BTreeSet::new(),
            conditions_held: BTreeSet::new(),
        });
    }

    let parts: Vec<&NonCommutativeProfile> = nc
        .iter()
        .map(|&i| profiles[i].noncommutative.as_ref().expect("in nc"))
        .collect();

    let clique_number = parts.iter().map(|p| p.graph_invariants.clique_number).sum();
    let chromatic = parts
        .iter()
        .map(|p| p.graph_invariants.chromatic_number)
        .sum();
    let girth = if nc.len() >= 3 || parts.iter().any(|p| !p.is_null_graph) {
        ExtNat::Finite(3)
    } else {
        ExtNat::Finite(4)
    };
    let knit_degree = if !parts.iter().any(|p| p.has_xy_pair) {
        None
    } else if parts.iter().any(|p| p.kd.length == Some(1)) {
        Some(1)
    } else {
        Some(2)
    };

    Ok(Prediction {
        structure: StructureClaim::EqualsJoin,
        connected: true,
        diameter: ExtNat::Finite(2),
        clique_number,
        chromatic: ChromaticPrediction::Exact(chromatic),
        girth,
        knit_degree,
        k_set: BTreeSet::new(),
        k_star_set: BTreeSet::new(),
        conditions_held: BTreeSet::new(),
    })
}

/// Evaluates which of the eight cycle-existence conditions hold for a
/// direct product.
pub fn dp_cycle_conditions(profiles: &[ComponentProfile]) -> BTreeSet<u8> {
    let nc = noncommutative_indices(profiles);
    let commutative: Vec<&ComponentProfile> = profiles.iter().filter(|p| p.commutative()).collect();
    let noncomm: Vec<&ComponentProfile> = nc.iter().map(|&i| &profiles[i]).collect();

    let mut held = BTreeSet::new();
    // 1: a commutative component of order >= 3.
    if commutative.iter().any(|p| p.order >= 3) {
        held.insert(1);
    }
    // 2: two commutative components of order >= 2.
    if commutative.iter().filter(|p| p.order >= 2).count() >= 2 {
        held.insert(2);
    }
    // 3: a commutative component of order >= 2 and a non-commutative one
    // whose commuting graph has an edge.
    if commutative.iter().any(|p| p.order >= 2)
        && noncomm.iter().any(|p| !nc_graph(p).is_null_graph)
    {
        held.insert(3);
    }
    // 4: at least two non-commutative components, a commutative component
    // of order >= 2 and a non-commutative one with nonempty center.
    if nc.len() >= 2
        && commutative.iter().any(|p| p.order >= 2)
        && noncomm.iter().any(|p| p.center_size > 0)
    {
        held.insert(4);
    }
    // 5: two non-commutative components, each with nonempty center or a
    // non-null commuting graph.
    let lively = |p: &ComponentProfile| p.center_size > 0 || !nc_graph(p).is_null_graph;
    if noncomm.iter().filter(|p| lively(p)).count() >= 2 {
        held.insert(5);
    }
    // 6: at least two non-commutative components, one with center of
    // size >= 2.
    if nc.len() >= 2 && noncomm.iter().any(|p| p.center_size >= 2) {
        held.insert(6);
    }
    // 7: at least two non-commutative components, one with nonempty
    // center and a non-null commuting graph.
    if nc.len() >= 2
        && noncomm
            .iter()
            .any(|p| p.center_size > 0 && !nc_graph(p).is_null_graph)
    {
        held.insert(7);
    }
    // 8: a non-commutative component whose commuting graph has cycles.
    if noncomm
        .iter()
        .any(|p| nc_graph(p).graph_invariants.girth.is_finite())
    {
        held.insert(8);
    }
    held
}

/// Predicted invariants of the commuting graph of a direct product.
pub fn predict_direct_product(profiles: &[ComponentProfile]) -> Result<Prediction, PredictError> {
    let nc = noncommutative_indices(profiles);
    if nc.is_empty() {
        return Err(PredictError::AllCommutative);
    }
    let nc_graph = |i: usize| nc_graph(&profiles[i]);

    // Clique number and chromatic bound share their shape: the product of
    // commutative orders times the product over non-commutative
    // components of (center size + invariant), minus the product of all
    // center sizes.
    let commutative_orders: usize = profiles
        .iter()
        .filter(|p| p.commutative())
        .map(|p| p.order)
        .product();
    let center_product: usize = profiles.iter().map(|p| p.center_size).product();
    let clique_number = commutative_orders
        * nc.iter()
            .map(|&i| profiles[i].center_size + nc_graph(i).graph_invariants.clique_number)
            .product::<usize>()
        - center_product;
    let chromatic_bound = commutative_orders
        * nc.iter()
            .map(|&i| profiles[i].center_size + nc_graph(i).graph_invariants.chromatic_number)
            .product::<usize>()
        - center_product;

    // Diameter case analysis.
    let (connected, diameter) = if let [i] = nc[..] {
        let inv = &nc_graph(i).graph_invariants;
        (inv.connected, inv.diameter)
    } else {
        let criterion = nc
            .iter()
            .all(|&i| profiles[i].center_size > 0 || nc_graph(i).graph_invariants.connected);
        if !criterion {
            (false, ExtNat::Infinite)
        } else if nc.iter().all(|&i| profiles[i].center_size > 0) {
            let two = nc
                .iter()
                .any(|&i| nc_graph(i).graph_invariants.diameter == ExtNat::Finite(2));
            (true, ExtNat::Finite(if two { 2 } else { 3 }))
        } else {
            let max = nc
                .iter()
                .filter(|&&i| profiles[i].center_size == 0)
                .map(|&i| nc_graph(i).graph_invariants.diameter)
                .max()
                .expect("some center is empty in this branch");
            (true, max)
        }
    };

    // Girth via the eight cycle conditions.
    let conditions_held = dp_cycle_conditions(profiles);
    let girth = if conditions_held.is_empty() {
        ExtNat::Infinite
    } else if conditions_held.iter().any(|&c| c <= 7) {
        ExtNat::Finite(3)
    } else {
        let cyclic: Vec<usize> = nc
            .iter()
            .copied()
            .filter(|&i| nc_graph(i).graph_invariants.girth.is_finite())
            .collect();
        match cyclic[..] {
            [only] => nc_graph(only).graph_invariants.girth,
            _ => return Err(PredictError::CycleComponentNotUnique { indices: cyclic }),
        }
    };

    // Knit degree: min over component knit degrees and eligible
    // *-knit degrees.
    let k_set: BTreeSet<usize> = nc.iter().filter_map(|&i| nc_graph(i).kd.length).collect();
    let k_star_set: BTreeSet<usize> = profiles
        .iter()
        .enumerate()
        .filter(|(i, _)| nc.iter().any(|j| j != i))
        .filter_map(|(_, p)| p.kd_star.length)
        .collect();
    let knit_degree = k_set.iter().chain(&k_star_set).min().copied();

    Ok(Prediction {
        structure: StructureClaim::IsomorphicStrongProduct,
        connected,
        diameter,
        clique_number,
        chromatic: ChromaticPrediction::UpperBound(chromatic_bound),
        girth,
        knit_degree,
        k_set,
        k_star_set,
        conditions_held,
    })
}
