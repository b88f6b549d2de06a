//! Longest path and longest cycle transversals of small graphs.
//!
//! The crate is `no_std` (it needs `alloc`) and carries only the algorithms:
//! exact enumeration of longest paths and cycles, minimum hitting sets over
//! them, the two-path weaving construction with its matching refinement
//! pipeline, separator-driven transversals and the circular-arc cascade that
//! produces transversals of size at most three. Parsing, file formats and the
//! command line live in the `lptrans` crate.
#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod arc;
pub mod bounds;
pub mod census;
mod error;
pub mod graph;
pub mod hitting;
pub mod longest;
pub mod separator;
pub mod transversal;
mod vset;
pub mod weave;

pub use error::{Budget, Error, DEFAULT_BUDGET};
pub use graph::{connectivity, ConnectivityReport, Graph, GraphError};
pub use longest::{
    longest_cycles, longest_paths, pairwise_intersection_check, Cycle, CycleCollection,
    Intersection, LongestFamily, Path, PathCollection,
};
pub use transversal::{Mode, Transversal};
pub use vset::VertexSet;
