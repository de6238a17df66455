//! Exact analysis of minimal vertex and edge separators in undirected simple
//! graphs.
//!
//! The crate checks, on concrete graphs, that every minimal vertex separator is
//! a stable set exactly when the graph has no induced cycle with a single
//! chord, and that every minimal edge separator is a matching exactly when the
//! graph is a tree. It also builds the gadget reduction from maximum induced
//! cycle to maximum 1-chord subgraph and verifies it with exact solvers.

pub mod budget;
pub mod cli;
pub mod error;
pub mod graph;
pub mod harness;
pub mod one_chord;
pub mod reduction;
pub mod separators;

pub use budget::Budget;
pub use error::{Error, Result};
pub use graph::{edge, Edge, EdgeSet, Graph, Vertex, VertexSet};
