//! Graph-theoretic side of the story: 1-skeletons, chordality, clique
//! complexes, flagness and quasi-forests.

mod chordal;
mod cliques;
mod graph;
mod leaf;

pub use chordal::{is_chordal, is_chordless_cycle, is_perfect_elimination_ordering, Chordality};
pub use cliques::{clique_complex, maximal_cliques};
pub use graph::Graph;
pub use leaf::{find_leaf, free_vertices, is_quasi_forest, leaf_order, LeafOrder};

use crate::complex::SimplicialComplex;

/// True when every minimal non-face has exactly two vertices, i.e. the
/// complex is the clique complex of its 1-skeleton.
pub fn is_flag(c: &SimplicialComplex) -> bool {
    c.minimal_non_faces().iter().all(|s| s.len() == 2)
}
