//! Exact solvers and constructions for small graphs with bounded circumference.
//!
//! Graphs have at most 64 vertices and store one adjacency word per vertex.
//! The [`verify`] module runs exhaustive checks of circumference and
//! clique-count bounds over enumerated graph classes.

pub mod algorithms;
pub mod error;
pub mod families;
pub mod formulas;
pub mod graph;
pub mod par;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{CycleWitness, Graph, Path, VertexSet};
