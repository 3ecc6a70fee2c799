//! The single-complex analysis record emitted by `vdw analyze`.

use serde::Serialize;
use vdw_core::classify::{verify_lemma_nonfaces, PredictedClassification};
use vdw_core::{
    has_linear_resolution, hochster_betti_with, ideal_table, is_chordal, is_cohen_macaulay,
    is_flag, is_vertex_decomposable, leaf_order, predicted_classification, summarize, BettiTable,
    Chordality, FieldSpec, HochsterConfig, LeafOrder, ResolutionSummary, SimplicialComplex,
    VdwParams, VertexSet,
};

#[derive(Debug, Serialize)]
pub struct Analysis {
    pub n: usize,
    pub field: FieldSpec,
    pub dimension: isize,
    pub pure: bool,
    pub facets: Vec<VertexSet>,
    pub minimal_non_faces: Vec<VertexSet>,
    pub flag: bool,
    pub skeleton: Chordality,
    pub quasi_forest: bool,
    pub leaf_order: Option<LeafOrder>,
    pub cohen_macaulay: bool,
    /// `null` for non-pure complexes.
    pub vertex_decomposable: Option<bool>,
    pub level: bool,
    pub gorenstein: bool,
    /// `null` for the zero ideal, which has no generating degree.
    pub linear_resolution: Option<bool>,
    pub summary: ResolutionSummary,
    pub betti: BettiTable,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub predicted: Option<PredictedClassification>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lemma_nonfaces_verified: Option<bool>,
    pub notes: Vec<String>,
}

pub fn analyze(
    c: &SimplicialComplex,
    params: Option<VdwParams>,
    field: FieldSpec,
    config: &HochsterConfig,
) -> vdw_core::Result<Analysis> {
    let table = hochster_betti_with(c, field, config)?;
    let ideal = ideal_table(&table)?;
    let summary = summarize(&table)?;
    let mut notes = Vec::new();

    let linear_resolution = if ideal.is_empty() {
        notes.push("zero ideal: no generators, linear resolution not defined".to_string());
        None
    } else {
        if summary.generator_degrees.contains(&1) {
            notes.push("degree-1 generators: some ground vertices are not faces".to_string());
        }
        Some(has_linear_resolution(&ideal)?)
    };

    let vertex_decomposable = if c.is_pure() {
        Some(is_vertex_decomposable(c)?)
    } else {
        notes.push("not pure: vertex decomposability not decided".to_string());
        None
    };

    let cohen_macaulay = is_cohen_macaulay(c, field);
    let last = summary.projective_dimension;
    let level = cohen_macaulay && table.degrees_in_column(last).len() == 1;
    let gorenstein = level && summary.cm_type == 1;

    let order = leaf_order(c);
    Ok(Analysis {
        n: c.n(),
        field,
        dimension: c.dim(),
        pure: c.is_pure(),
        facets: c.facets().to_vec(),
        minimal_non_faces: c.minimal_non_faces(),
        flag: is_flag(c),
        skeleton: is_chordal(&c.one_skeleton()),
        quasi_forest: order.is_some(),
        leaf_order: order,
        cohen_macaulay,
        vertex_decomposable,
        level,
        gorenstein,
        linear_resolution,
        summary,
        betti: table,
        predicted: params.map(|p| predicted_classification(p.n(), p.k()).expect("validated")),
        lemma_nonfaces_verified: params.and_then(|p| verify_lemma_nonfaces(p, c)),
        notes,
    })
}
