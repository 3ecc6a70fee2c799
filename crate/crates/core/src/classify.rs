//! Cohen–Macaulay, vertex-decomposable, level and Gorenstein tests, the
//! closed-form predictions for `vdW(n, k)`, and the sweep comparing the two.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::complex::{lemma_nonface_predictions, make_vdw, SimplicialComplex, VdwParams};
use crate::error::{Error, Result};
use crate::homology::{reduced_homology, FieldSpec};
use crate::resolution::{
    has_linear_resolution, hochster_betti_with, ideal_table, summarize, BettiTable, HochsterConfig,
};
use crate::structure::{is_chordal, is_flag, is_quasi_forest};
use crate::vertex_set::VertexSet;

/// Reisner's criterion: every link `lk(F)`, including `lk(∅) = Δ`, has
/// vanishing reduced homology below its top dimension.
pub fn is_cohen_macaulay(c: &SimplicialComplex, field: FieldSpec) -> bool {
    let mut checked: HashMap<Vec<VertexSet>, bool> = HashMap::new();
    let mut faces: Vec<VertexSet> = c.faces_by_size().into_iter().flatten().collect();
    faces.sort_unstable_by_key(|f| (f.len(), f.bits()));
    faces.into_iter().all(|f| {
        let lk = c.link_of_face(f);
        if lk.dim() <= 0 || is_cone(&lk) {
            // Points and cones have nothing to check below the top.
            return true;
        }
        *checked
            .entry(lk.facets().to_vec())
            .or_insert_with(|| homology_vanishes_below_top(&lk, field))
    })
}

fn homology_vanishes_below_top(c: &SimplicialComplex, field: FieldSpec) -> bool {
    let h = reduced_homology(c, field);
    // h[idx] is dimension idx - 1; the top dimension is the last entry.
    h[..h.len() - 1].iter().all(|&b| b == 0)
}

fn is_cone(c: &SimplicialComplex) -> bool {
    let common = c
        .facets()
        .iter()
        .fold(VertexSet::full(c.n()), |acc, f| acc.intersection(*f));
    !common.is_empty()
}

/// Recursive search for a shedding vertex, memoized on the exact facet list.
/// Only pure complexes are accepted.
pub fn is_vertex_decomposable(c: &SimplicialComplex) -> Result<bool> {
    if !c.is_pure() {
        return Err(Error::invalid(
            "vertex decomposability is only decided for pure complexes",
        ));
    }
    let mut memo = HashMap::new();
    Ok(vd(c, &mut memo))
}

fn vd(c: &SimplicialComplex, memo: &mut HashMap<Vec<VertexSet>, bool>) -> bool {
    if c.is_simplex() {
        return true;
    }
    if let Some(&known) = memo.get(c.facets()) {
        return known;
    }
    let result = c.vertices().iter().any(|v| {
        let del = c.delete_vertex(v);
        if !del.facets().iter().all(|f| c.is_facet(*f)) {
            return false;
        }
        let lk = c.link_of_face(VertexSet::singleton(v));
        del.is_pure() && lk.is_pure() && vd(&lk, memo) && vd(&del, memo)
    });
    memo.insert(c.facets().to_vec(), result);
    result
}

/// Cohen–Macaulay with the last column of the quotient Betti table in a
/// single internal degree.
pub fn is_level(c: &SimplicialComplex, field: FieldSpec) -> Result<bool> {
    let table = hochster_betti_with(c, field, &HochsterConfig::default())?;
    Ok(level_from_table(is_cohen_macaulay(c, field), &table))
}

/// Level with a last column totalling one.
pub fn is_gorenstein(c: &SimplicialComplex, field: FieldSpec) -> Result<bool> {
    let table = hochster_betti_with(c, field, &HochsterConfig::default())?;
    Ok(gorenstein_from_table(is_cohen_macaulay(c, field), &table))
}

fn level_from_table(cohen_macaulay: bool, q: &BettiTable) -> bool {
    let Some(pdim) = q.projective_dimension() else {
        return false;
    };
    cohen_macaulay && q.degrees_in_column(pdim).len() == 1
}

fn gorenstein_from_table(cohen_macaulay: bool, q: &BettiTable) -> bool {
    level_from_table(cohen_macaulay, q)
        && q.projective_dimension()
            .is_some_and(|p| q.column_total(p) == 1)
}

/// Computed truth values for one complex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Predicates {
    /// The zero ideal counts as having a linear resolution here, so that the
    /// single-facet cells line up with the `2k ≥ n` branch of the closed form.
    pub linear_resolution: bool,
    pub cohen_macaulay: bool,
    pub vertex_decomposable: bool,
    pub level: bool,
    pub gorenstein: bool,
    pub quasi_forest: bool,
    pub flag: bool,
    pub chordal_skeleton: bool,
}

/// Closed-form predictions; `None` where no prediction is made.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PredictedClassification {
    pub linear_resolution: Option<bool>,
    pub cohen_macaulay: Option<bool>,
    pub vertex_decomposable: Option<bool>,
    pub level: Option<bool>,
    pub gorenstein: Option<bool>,
    pub quasi_forest: Option<bool>,
    pub flag: Option<bool>,
    pub chordal_skeleton: Option<bool>,
}

/// Closed forms for `vdW(n, k)`:
///
/// - linear resolution iff `k = 1` or `n/2 ≤ k`;
/// - Cohen–Macaulay iff vertex decomposable iff `n ≤ 6`, `k = 1` or `n/2 ≤ k`;
/// - Cohen–Macaulay cells are level;
/// - Gorenstein iff `(n, k) = (5, 2)`. No prediction is made for the
///   single-facet cells `k = n - 1`, whose ideal is zero.
pub fn predicted_classification(n: usize, k: usize) -> Result<PredictedClassification> {
    VdwParams::new(n, k)?;
    let linear = k == 1 || 2 * k >= n;
    let cm = n <= 6 || linear;
    Ok(PredictedClassification {
        linear_resolution: Some(linear),
        cohen_macaulay: Some(cm),
        vertex_decomposable: Some(cm),
        level: Some(cm),
        gorenstein: (k != n - 1).then_some((n, k) == (5, 2)),
        quasi_forest: None,
        flag: None,
        chordal_skeleton: None,
    })
}

/// Everything computed for one `(n, k)` cell; this is what gets cached.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellComputation {
    pub table: BettiTable,
    pub computed: Predicates,
    /// Whether the two guaranteed non-faces were found, where applicable.
    pub lemma_nonfaces_verified: Option<bool>,
}

/// Computes all predicates of `vdW(n, k)` over `field`.
pub fn classify_cell(
    params: VdwParams,
    field: FieldSpec,
    config: &HochsterConfig,
) -> Result<CellComputation> {
    let c = make_vdw(params);
    let table = hochster_betti_with(&c, field, config)?;
    let ideal = ideal_table(&table)?;
    let linear = ideal.is_empty() || has_linear_resolution(&ideal)?;
    let cm = is_cohen_macaulay(&c, field);
    let vd = is_vertex_decomposable(&c)?;
    let skeleton = c.one_skeleton();
    let computed = Predicates {
        linear_resolution: linear,
        cohen_macaulay: cm,
        vertex_decomposable: vd,
        level: level_from_table(cm, &table),
        gorenstein: gorenstein_from_table(cm, &table),
        quasi_forest: is_quasi_forest(&c),
        flag: is_flag(&c),
        chordal_skeleton: is_chordal(&skeleton).is_chordal(),
    };
    Ok(CellComputation {
        table,
        computed,
        lemma_nonfaces_verified: verify_lemma_nonfaces(params, &c),
    })
}

/// For `1 < k < n/2`, `n ≥ 7`: both predicted non-faces are minimal non-faces
/// and the ideal has generators in degrees 2 and 3.
pub fn verify_lemma_nonfaces(params: VdwParams, c: &SimplicialComplex) -> Option<bool> {
    let predicted = lemma_nonface_predictions(params).ok()?;
    let found = c.minimal_non_faces();
    let members = predicted.iter().all(|s| found.contains(s));
    let has_pair = found.iter().any(|s| s.len() == 2);
    let has_triple = found.iter().any(|s| s.len() == 3);
    Some(members && has_pair && has_triple)
}

/// Computed versus predicted for one cell.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub n: usize,
    pub k: usize,
    pub field: FieldSpec,
    /// `k = n - 1`: a single facet and the zero ideal.
    pub zero_ideal: bool,
    pub computed: Predicates,
    pub predicted: PredictedClassification,
    pub lemma_nonfaces_verified: Option<bool>,
    pub cm_type: u64,
    pub agreement: bool,
    /// Keys on which computation and prediction differ.
    pub mismatches: Vec<String>,
}

impl ClassificationReport {
    pub fn new(params: VdwParams, field: FieldSpec, cell: &CellComputation) -> Self {
        let (n, k) = (params.n(), params.k());
        let predicted = predicted_classification(n, k).expect("params already validated");
        let c = cell.computed;
        let pairs = [
            (
                "linear_resolution",
                c.linear_resolution,
                predicted.linear_resolution,
            ),
            ("cohen_macaulay", c.cohen_macaulay, predicted.cohen_macaulay),
            (
                "vertex_decomposable",
                c.vertex_decomposable,
                predicted.vertex_decomposable,
            ),
            ("level", c.level, predicted.level),
            ("gorenstein", c.gorenstein, predicted.gorenstein),
            ("quasi_forest", c.quasi_forest, predicted.quasi_forest),
            ("flag", c.flag, predicted.flag),
            (
                "chordal_skeleton",
                c.chordal_skeleton,
                predicted.chordal_skeleton,
            ),
        ];
        let mut mismatches: Vec<String> = pairs
            .iter()
            .filter(|(_, got, want)| want.is_some_and(|w| w != *got))
            .map(|(key, _, _)| key.to_string())
            .collect();
        if cell.lemma_nonfaces_verified == Some(false) {
            mismatches.push("lemma_nonfaces".into());
        }
        let cm_type = summarize(&cell.table).map(|s| s.cm_type).unwrap_or(0);
        ClassificationReport {
            n,
            k,
            field,
            zero_ideal: k == n - 1,
            computed: c,
            predicted,
            lemma_nonfaces_verified: cell.lemma_nonfaces_verified,
            cm_type,
            agreement: mismatches.is_empty(),
            mismatches,
        }
    }
}

/// Aggregate over a sweep.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifySummary {
    pub field: FieldSpec,
    pub cells: usize,
    pub agreements: usize,
    /// `(n, k, key)` for every disagreeing key.
    pub failures: Vec<(usize, usize, String)>,
    /// Gorenstein cells with a nonzero ideal.
    pub gorenstein_cells: Vec<(usize, usize)>,
    /// Single-facet cells, Gorenstein for the trivial reason.
    pub trivially_gorenstein_cells: Vec<(usize, usize)>,
}

impl VerifySummary {
    pub fn from_reports(field: FieldSpec, reports: &[ClassificationReport]) -> Self {
        VerifySummary {
            field,
            cells: reports.len(),
            agreements: reports.iter().filter(|r| r.agreement).count(),
            failures: reports
                .iter()
                .flat_map(|r| r.mismatches.iter().map(move |m| (r.n, r.k, m.clone())))
                .collect(),
            gorenstein_cells: reports
                .iter()
                .filter(|r| r.computed.gorenstein && !r.zero_ideal)
                .map(|r| (r.n, r.k))
                .collect(),
            trivially_gorenstein_cells: reports
                .iter()
                .filter(|r| r.computed.gorenstein && r.zero_ideal)
                .map(|r| (r.n, r.k))
                .collect(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// All cells `0 < k < n ≤ n_max`, in parallel, ordered by `(n, k)`.
pub fn verify_range(n_max: usize, field: FieldSpec) -> Result<Vec<ClassificationReport>> {
    verify_range_with(n_max, field, &HochsterConfig::default())
}

pub fn verify_range_with(
    n_max: usize,
    field: FieldSpec,
    config: &HochsterConfig,
) -> Result<Vec<ClassificationReport>> {
    if n_max > config.sweep_limit {
        return Err(Error::ResourceLimit {
            n: n_max,
            limit: config.sweep_limit,
        });
    }
    let cells = sweep_cells(n_max);
    let mut reports = cells
        .par_iter()
        .map(|&p| {
            classify_cell(p, field, config).map(|cell| ClassificationReport::new(p, field, &cell))
        })
        .collect::<Result<Vec<_>>>()?;
    reports.sort_by_key(|r| (r.n, r.k));
    Ok(reports)
}

/// `(n, k)` with `0 < k < n ≤ n_max`, in order.
pub fn sweep_cells(n_max: usize) -> Vec<VdwParams> {
    (2..=n_max)
        .flat_map(|n| (1..n).map(move |k| VdwParams::new(n, k).expect("0 < k < n")))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vdw(n: usize, k: usize) -> SimplicialComplex {
        make_vdw(VdwParams::new(n, k).unwrap())
    }

    fn complex(n: usize, facets: &[&[usize]]) -> SimplicialComplex {
        SimplicialComplex::new(
            n,
            facets
                .iter()
                .map(|f| VertexSet::from_vertices(f.iter().copied())),
        )
        .unwrap()
    }

    const Q: FieldSpec = FieldSpec::Rationals;

    #[test]
    fn cohen_macaulay_examples() {
        assert!(is_cohen_macaulay(&vdw(6, 2), Q));
        assert!(!is_cohen_macaulay(&vdw(7, 2), Q));
        assert!(is_cohen_macaulay(&SimplicialComplex::simplex(5), Q));
        assert!(is_cohen_macaulay(&SimplicialComplex::empty(3), Q));
        // Two disjoint edges: disconnected 1-complex.
        assert!(!is_cohen_macaulay(&complex(4, &[&[1, 2], &[3, 4]]), Q));
        // Points are always CM.
        assert!(is_cohen_macaulay(&complex(3, &[&[1], &[2], &[3]]), Q));
    }

    #[test]
    fn real_projective_plane_depends_on_the_field() {
        // Six-vertex triangulation of RP^2: CM over Q, not over GF(2).
        let rp2 = complex(
            6,
            &[
                &[1, 2, 4],
                &[1, 2, 6],
                &[1, 3, 5],
                &[1, 3, 6],
                &[1, 4, 5],
                &[2, 3, 4],
                &[2, 3, 5],
                &[2, 5, 6],
                &[3, 4, 6],
                &[4, 5, 6],
            ],
        );
        assert!(is_cohen_macaulay(&rp2, Q));
        assert!(!is_cohen_macaulay(&rp2, FieldSpec::GF2));
    }

    #[test]
    fn vertex_decomposable_examples() {
        assert!(is_vertex_decomposable(&SimplicialComplex::simplex(4)).unwrap());
        assert!(is_vertex_decomposable(&vdw(6, 2)).unwrap());
        assert!(!is_vertex_decomposable(&vdw(8, 3)).unwrap());
        assert!(is_vertex_decomposable(&complex(3, &[&[1], &[2], &[3]])).unwrap());
        assert!(is_vertex_decomposable(&SimplicialComplex::empty(2)).unwrap());
        assert!(is_vertex_decomposable(&complex(3, &[&[1, 2], &[3]])).is_err());
    }

    #[test]
    fn level_and_gorenstein_examples() {
        assert!(is_level(&vdw(6, 2), Q).unwrap());
        assert!(is_level(&vdw(5, 2), Q).unwrap());
        assert!(!is_level(&vdw(7, 2), Q).unwrap());
        assert!(is_gorenstein(&vdw(5, 2), Q).unwrap());
        assert!(!is_gorenstein(&vdw(6, 2), Q).unwrap());
        assert!(is_gorenstein(&SimplicialComplex::simplex(4), Q).unwrap());
        let circle = complex(3, &[&[1, 2], &[2, 3], &[1, 3]]);
        assert!(is_gorenstein(&circle, Q).unwrap());
    }

    #[test]
    fn prediction_examples() {
        let p = predicted_classification(7, 3).unwrap();
        assert_eq!(
            (p.linear_resolution, p.cohen_macaulay),
            (Some(false), Some(false))
        );
        let p = predicted_classification(6, 2).unwrap();
        assert_eq!(p.linear_resolution, Some(false));
        assert_eq!(p.cohen_macaulay, Some(true));
        assert_eq!(p.level, Some(true));
        assert_eq!(p.gorenstein, Some(false));
        let p = predicted_classification(8, 4).unwrap();
        assert_eq!(
            (p.linear_resolution, p.cohen_macaulay),
            (Some(true), Some(true))
        );
        assert_eq!(predicted_classification(5, 4).unwrap().gorenstein, None);
        assert_eq!(
            predicted_classification(5, 2).unwrap().gorenstein,
            Some(true)
        );
        assert!(predicted_classification(3, 5).is_err());
    }

    #[test]
    fn vertex_decomposable_implies_cohen_macaulay() {
        for p in sweep_cells(9) {
            let c = make_vdw(p);
            if is_vertex_decomposable(&c).unwrap() {
                assert!(is_cohen_macaulay(&c, Q), "{p:?}");
            }
        }
    }

    #[test]
    fn cohen_macaulay_implies_vanishing_homology_below_top() {
        for p in sweep_cells(9) {
            let c = make_vdw(p);
            if is_cohen_macaulay(&c, Q) {
                let h = reduced_homology(&c, Q);
                assert!(h[..h.len() - 1].iter().all(|&b| b == 0), "{p:?}");
            }
        }
    }

    #[test]
    fn small_sweep_cell_count_and_order() {
        let reports = verify_range(6, Q).unwrap();
        assert_eq!(reports.len(), 15);
        let keys: Vec<_> = reports.iter().map(|r| (r.n, r.k)).collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
        let five_two = reports.iter().find(|r| (r.n, r.k) == (5, 2)).unwrap();
        assert!(five_two.computed.gorenstein);
        assert_eq!(five_two.cm_type, 1);
    }

    #[test]
    fn sweep_cap_is_enforced() {
        let config = HochsterConfig {
            sweep_limit: 5,
            ..Default::default()
        };
        assert!(matches!(
            verify_range_with(6, Q, &config),
            Err(Error::ResourceLimit { .. })
        ));
    }
}
