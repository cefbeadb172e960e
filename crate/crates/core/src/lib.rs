//! Coloring algorithms, structural decompositions and exact oracles for
//! (bull, diamond)-free graphs.

pub mod bounds;
pub mod cli;
pub mod coloring;
pub mod decomposition;
pub mod gen;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod recognition;
pub mod suite;

pub use graph::{Graph, GraphError, NamedGraph, VertexSet};
pub use oracle::Coloring;
