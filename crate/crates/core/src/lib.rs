//! Exact planar arrangements of curve families, intersection-graph bounds,
//! hypergraph coloring tools and conflict-free coloring of grounded L-shapes.

pub mod arrangement;
pub mod error;
pub mod format;
pub mod generators;
pub mod geometry;
pub mod graphs;
pub mod hypergraph;
pub mod lshape_cf;
pub mod rng;
pub mod sequences;
pub mod svg;

pub use error::{Error, Result};
