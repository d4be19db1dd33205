//! Simple colourings of (m,n)-mixed graphs.
//!
//! An (m,n)-mixed graph has arcs in `m` colours and edges in `n` colours, at
//! most one adjacency per pair. A simple colouring is a homomorphism onto at
//! least two vertices of a target that carries every loop type, so adjacent
//! vertices may share a colour. This crate decides and computes the simple
//! chromatic number `χₛ` where that is tractable (two colours, complete
//! graphs, 2-trees) and falls back to exhaustive search elsewhere.

pub mod convexity;
pub mod decision;
pub mod experiment;
pub mod families;
pub mod format;
pub mod graph;
pub mod par;
pub mod search;
pub mod twotree;

pub use graph::{Adjacency, AdjacencyKind, Colour, GraphError, Link, MixedGraph, Vertex, VertexMap};
pub use par::Execution;
pub use search::Partition;
