//! Van der Waerden complexes `vdW(n, k)` and the Stanley–Reisner invariants
//! of their face rings, computed exactly.
//!
//! The crate builds complexes from arithmetic progressions, enumerates
//! minimal non-faces, computes graded Betti tables through Hochster's
//! formula, and decides Cohen–Macaulayness, levelness, Gorensteinness,
//! linear resolution and quasi-forest structure.

pub mod classify;
pub mod complex;
pub mod error;
pub mod homology;
pub mod io;
pub mod random;
pub mod resolution;
pub mod structure;
pub mod vertex_set;

pub use classify::{
    is_cohen_macaulay, is_gorenstein, is_level, is_vertex_decomposable, predicted_classification,
    verify_range, ClassificationReport, Predicates, PredictedClassification, VerifySummary,
};
pub use complex::{lemma_nonface_predictions, make_vdw, SimplicialComplex, VdwParams};
pub use error::{Error, Result};
pub use homology::{boundary_matrix, reduced_betti_numbers, BoundaryMatrix, FieldSpec};
pub use resolution::{
    has_linear_resolution, hochster_betti, hochster_betti_with, ideal_table, summarize, BettiTable,
    HochsterConfig, ResolutionSummary, Subject,
};
pub use structure::{
    clique_complex, find_leaf, free_vertices, is_chordal, is_flag, is_quasi_forest, leaf_order,
    Chordality, Graph, LeafOrder,
};
pub use vertex_set::VertexSet;

/// Version string stamped into cache keys and printed by `--version`.
pub const ARTIFACT_VERSION: &str = env!("CARGO_PKG_VERSION");
