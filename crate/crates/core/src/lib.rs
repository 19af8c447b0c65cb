//! Finite semigroups given by Cayley tables, their commuting graphs, and the
//! exact graph invariants (diameter, girth, clique number, chromatic number)
//! and knit degrees used to study how those graphs behave under the
//! zero-union and direct-product constructions.
//!
//! The crate is `no_std` (with `alloc`); everything in it is pure and
//! deterministic. IO, file handling and the command-line front end live in
//! the companion `smg` crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod commuting;
pub mod constructions;
pub mod enumerate;
pub mod graph;
pub mod invariants;
pub mod predict;
pub mod rng;
pub mod semigroup;

pub use commuting::{
    commuting_graph, extended_commuting_graph, knit_degree, star_knit_degree, CommutingError,
    LeftPathResult,
};
pub use constructions::{
    direct_product, zero_union, ConstructError, ConstructionKind, ConstructionSpec,
    DEFAULT_PRODUCT_CAP,
};
pub use graph::{graph_join, strong_product, GraphError, SimpleGraph};
pub use invariants::{
    chromatic_number, clique_number, diameter, girth, invariant_report, ExtNat, InvariantCaps,
    InvariantError, InvariantReport,
};
pub use predict::{
    dp_cycle_conditions, predict_direct_product, predict_zero_union, ChromaticPrediction,
    ComponentProfile, PredictError, Prediction, StructureClaim,
};
pub use semigroup::{
    generate, parse_semigroup, serialize_semigroup, ElementId, Family, ParseError, Semigroup,
    SemigroupError,
};
