//! Enumeration of connectors and components in transitive set systems.
//!
//! A transitive system is described by two oracles over a ground set of
//! elements (see [`TransitiveSystem`]). Given item sets on the elements,
//! [`enumerate_solutions`] lists every maximal component with a given
//! common item set exactly once, with bounded delay between outputs.
//! [`systems`] supplies the graph-connectivity systems and [`flow`] the
//! cut machinery they rest on; [`brute`] holds exhaustive references.

pub mod brute;
pub mod enumerate;
pub mod error;
pub mod fixtures;
pub mod flow;
pub mod graph;
pub mod random;
pub mod system;
pub mod systems;

pub use enumerate::{
    bases, children, component_instance, enumerate_components, enumerate_solutions, enumerate_solutions_k, parent,
    Components, SolutionRecord, Solutions, TraversalStats,
};
pub use error::{Error, Result};
pub use flow::{CutCertificate, EdgeCoefficients, GroundElement, MetaWeightSystem};
pub use graph::{Edge, MixedGraph};
pub use system::{
    itemset_lex_less, AllOf, AlwaysPositive, ElementSet, Instance, ItemSet, SizeThreshold, TransitiveSystem,
    VolumeFunction,
};
pub use systems::{build_system, spanning_volume, CoreGuard, SystemMode};
