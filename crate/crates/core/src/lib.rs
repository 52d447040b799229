//! Monotone numberings of locally finite posets, the groups generated by
//! adjacent-swap involutions acting on them, the graded graphs of finite
//! ideals, and central measures with their frequency functions.

pub mod error;
pub mod graph;
pub mod group;
pub mod ideal;
pub mod idset;
pub mod measure;
pub mod numbering;
pub mod poset;
pub mod rng;
pub mod young;

pub use error::{Error, Result};
pub use graph::{build_graph, GradedGraph, VertexId};
pub use group::{
    apply_sigma, classify_local, generate_group, verify_relations, Closure, GroupConfig, GroupHandle,
    Involution, LocalGroupReport, RelationFamily, RelationReport,
};
pub use ideal::IdealSpec;
pub use idset::IdSet;
pub use numbering::{enumerate_numberings, PathNumbering};
pub use poset::{
    antichain, build_box_poset, build_young_poset, chain, parse_poset, serialize_poset, Element,
    Family, Poset, PosetWindow, ROOT,
};
