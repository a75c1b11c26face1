//! Vertex adjacency and complementary vertex pairs for polytopes given in
//! standard form `{x : Ax = b, x >= 0}` with a known vertex list.
//!
//! After an `O(n²V + nV²)` precomputation that builds a trie keyed by zero
//! sets (the [`JoinMap`]), [`AdjacencyOracle`] knows the dimension of the
//! polytope and whether it is simple, and decides adjacency of two vertices
//! in `O(n)` time. The [`auxgraph`] module walks the auxiliary graph on
//! vertex pairs of a simple polytope to find further pairs of vertices that
//! share no facet.

pub mod adjacency;
pub mod auxgraph;
pub mod bitset;
mod error;
pub mod format;
pub mod generators;
pub mod joinmap;
pub mod linalg;
pub mod polytope;

pub use adjacency::{
    algebraic_test, all_pairs_adjacency, combinatorial_test, polytope_graph, AdjacencyOracle,
    PolytopeGraph, Verdict,
};
pub use auxgraph::{all_complementary_pairs, node_type, AuxArc, AuxGraph, AuxNode, NodeType};
pub use bitset::{BitSet, FacetSet, ZeroSet};
pub use error::{Error, Result};
pub use joinmap::JoinMap;
pub use linalg::Rational;
pub use polytope::{Facet, Facets, Polytope};
