//! Graded Betti tables of Stanley–Reisner rings via Hochster's formula.

mod table;

use std::collections::{BTreeSet, HashMap};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::homology::{homology_euler_characteristic, reduced_homology_from_faces, FieldSpec};
use crate::vertex_set::{masks_of_size, VertexSet};

pub use table::{BettiTable, Subject};

pub const DEFAULT_SWEEP_LIMIT: usize = 22;

/// Knobs for the `2^n` subset sweep.
#[derive(Clone, Debug)]
pub struct HochsterConfig {
    /// Largest ground set the sweep accepts.
    pub sweep_limit: usize,
    /// Assert the Euler–Poincaré identity on every induced subcomplex.
    /// Also disables the acyclic-cone shortcut so that every subset is
    /// actually computed.
    pub check_euler_poincare: bool,
    /// Cache homology per worker, keyed by the induced facet list. Trades
    /// memory for time when many subsets induce the same complex.
    pub memoize_traces: bool,
}

impl Default for HochsterConfig {
    fn default() -> Self {
        HochsterConfig {
            sweep_limit: DEFAULT_SWEEP_LIMIT,
            check_euler_poincare: false,
            memoize_traces: false,
        }
    }
}

/// Quotient-ring Betti table with the default configuration.
pub fn hochster_betti(c: &SimplicialComplex, field: FieldSpec) -> Result<BettiTable> {
    hochster_betti_with(c, field, &HochsterConfig::default())
}

/// `β_{i,j}(S/I_Δ) = Σ_{|W| = j} dim H̃_{j-i-1}(Δ_W)`.
///
/// Subsets are grouped by size and each size class is processed as a
/// parallel map-reduce. Partial tables merge by integer addition, so the
/// result does not depend on scheduling.
pub fn hochster_betti_with(
    c: &SimplicialComplex,
    field: FieldSpec,
    config: &HochsterConfig,
) -> Result<BettiTable> {
    let n = c.n();
    if n > config.sweep_limit {
        return Err(Error::ResourceLimit {
            n,
            limit: config.sweep_limit,
        });
    }
    let mut table = BettiTable::new(Subject::QuotientRing, n, field);
    for size in 0..=n {
        let subsets: Vec<VertexSet> = masks_of_size(n, size).collect();
        let partial = subsets
            .par_iter()
            .try_fold(Worker::default, |mut w, &subset| {
                w.visit(c, subset, field, config)?;
                Ok::<_, Error>(w)
            })
            .map(|w| w.map(|w| w.counts))
            .try_reduce(HashMap::new, |mut a, b| {
                for (k, v) in b {
                    *a.entry(k).or_insert(0) += v;
                }
                Ok(a)
            })?;
        for (i, v) in partial {
            table.add(i, size, v);
        }
    }
    Ok(table)
}

#[derive(Default)]
struct Worker {
    counts: HashMap<usize, u64>,
    memo: HashMap<Vec<VertexSet>, Vec<usize>>,
}

impl Worker {
    fn visit(
        &mut self,
        c: &SimplicialComplex,
        subset: VertexSet,
        field: FieldSpec,
        config: &HochsterConfig,
    ) -> Result<()> {
        let induced = c.induced_subcomplex(subset);
        if !config.check_euler_poincare && is_cone(&induced) {
            return Ok(());
        }
        let homology = if config.memoize_traces {
            if let Some(h) = self.memo.get(induced.facets()) {
                h.clone()
            } else {
                let h = homology_of(&induced, subset, field, config)?;
                self.memo.insert(induced.facets().to_vec(), h.clone());
                h
            }
        } else {
            homology_of(&induced, subset, field, config)?
        };
        let size = subset.len();
        for (idx, &b) in homology.iter().enumerate() {
            if b > 0 {
                // idx encodes dimension idx - 1, so i = size - idx.
                *self.counts.entry(size - idx).or_insert(0) += b as u64;
            }
        }
        Ok(())
    }
}

fn homology_of(
    induced: &SimplicialComplex,
    subset: VertexSet,
    field: FieldSpec,
    config: &HochsterConfig,
) -> Result<Vec<usize>> {
    let by_size = induced.faces_by_size();
    let homology = reduced_homology_from_faces(&by_size, field);
    if config.check_euler_poincare {
        let from_faces: i64 = by_size
            .iter()
            .enumerate()
            .map(|(s, f)| {
                if s % 2 == 0 {
                    -(f.len() as i64)
                } else {
                    f.len() as i64
                }
            })
            .sum();
        let from_homology = homology_euler_characteristic(&homology);
        if from_faces != from_homology {
            return Err(Error::Invariant(format!(
                "Euler–Poincaré fails on the subcomplex induced by {subset}: \
                 faces give {from_faces}, homology gives {from_homology}"
            )));
        }
    }
    Ok(homology)
}

/// A nonempty complex whose facets share a vertex is contractible.
fn is_cone(c: &SimplicialComplex) -> bool {
    let common = c
        .facets()
        .iter()
        .fold(VertexSet::full(c.n()), |acc, f| acc.intersection(*f));
    !common.is_empty()
}

/// The Betti table of the ideal: `β_{i,j}(I) = β_{i+1,j}(S/I)`.
pub fn ideal_table(q: &BettiTable) -> Result<BettiTable> {
    if q.subject != Subject::QuotientRing {
        return Err(Error::invalid("ideal_table expects a quotient-ring table"));
    }
    Ok(BettiTable::from_entries(
        Subject::Ideal,
        q.n,
        q.field,
        q.entries()
            .filter(|&((i, _), _)| i > 0)
            .map(|((i, j), v)| ((i - 1, j), v)),
    ))
}

/// True when every nonzero `β_{i,j}(I)` sits on the line `j = i + d`.
/// The zero ideal has no generating degree and is rejected.
pub fn has_linear_resolution(t: &BettiTable) -> Result<bool> {
    if t.subject != Subject::Ideal {
        return Err(Error::invalid(
            "linear resolution is decided on the ideal table",
        ));
    }
    if t.is_empty() {
        return Err(Error::invalid("the zero ideal has no generators"));
    }
    let degrees: BTreeSet<usize> = t.entries().map(|((i, j), _)| j - i).collect();
    Ok(degrees.len() == 1)
}

/// Shape invariants read off a quotient-ring table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResolutionSummary {
    pub projective_dimension: usize,
    pub regularity: usize,
    /// Total of the last column.
    pub cm_type: u64,
    /// Degrees of the minimal generators of the ideal.
    pub generator_degrees: BTreeSet<usize>,
}

pub fn summarize(q: &BettiTable) -> Result<ResolutionSummary> {
    if q.subject != Subject::QuotientRing {
        return Err(Error::invalid("summarize expects a quotient-ring table"));
    }
    let pdim = q
        .projective_dimension()
        .ok_or_else(|| Error::invalid("quotient table has no entries"))?;
    let regularity = q
        .entries()
        .map(|((i, j), _)| j.saturating_sub(i))
        .max()
        .unwrap_or(0);
    Ok(ResolutionSummary {
        projective_dimension: pdim,
        regularity,
        cm_type: q.column_total(pdim),
        generator_degrees: q.degrees_in_column(1),
    })
}
