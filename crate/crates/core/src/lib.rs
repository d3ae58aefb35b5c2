//! Vertex 2-partitions of graphs and digraphs whose crossing subgraph
//! satisfies degree or connectivity constraints.
//!
//! [`graph`] holds the data structures and structural routines, [`oracle`]
//! the exact reference deciders, [`undirected`] and [`directed`] the
//! polynomial constructions, and [`gadgets`] the reductions from
//! satisfiability and hypergraph colouring.

pub mod directed;
pub mod error;
pub mod gadgets;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod random;
pub mod undirected;

pub use error::{Error, Result};
