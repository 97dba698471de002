//! Weighted vertex connectivity on directed graphs, solved either directly
//! with vertex-split max flow or through a reduction to undirected graphs on
//! twice as many vertices.
//!
//! Modules:
//! - [`graph`]: weighted digraphs and undirected graphs, connectivity predicates.
//! - [`cut`]: vertex cuts, cut values, validation.
//! - [`reduction`]: the two-clique construction and cut translation.
//! - [`flow`]: Dinic max flow and s-t vertex cuts.
//! - [`connectivity`]: global, pair, source, sink, Steiner and all-pairs solvers.
//! - [`oracle`]: exhaustive enumeration for small graphs.
//! - [`random`]: seeded instance generation.

pub mod connectivity;
pub mod cut;
pub mod error;
pub mod flow;
pub mod graph;
pub mod oracle;
pub mod random;
pub mod reduction;

pub use connectivity::{Path, PairMatrix, Solution, Variant, VariantQuery};
pub use cut::{validate_cut, weight_of, CutValue, VertexCut};
pub use error::{Error, Result};
pub use graph::{DirectedGraph, Graph, UndirectedGraph, VertexId, Weight};
pub use reduction::{build_reduction, NormalizedCut, ReducedGraph};
