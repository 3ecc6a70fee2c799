//! Simplicial complexes on a labelled ground set and the van der Waerden
//! family built from arithmetic progressions.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::structure::Graph;
use crate::vertex_set::{VertexSet, MAX_VERTICES};

/// A finite simplicial complex on the ground set `{1, ..., n}`, stored by its
/// facets.
///
/// Facets are deduplicated, inclusion-maximal and kept in lexicographic order.
/// The complex `{∅}` (one empty facet) is representable; the void complex
/// with no faces at all is not.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    n: usize,
    facets: Vec<VertexSet>,
}

impl SimplicialComplex {
    /// Builds a complex from an arbitrary generating family. Non-maximal and
    /// duplicate sets are discarded.
    pub fn new<I: IntoIterator<Item = VertexSet>>(n: usize, generators: I) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::invalid(format!(
                "ground set of size {n} exceeds the supported maximum {MAX_VERTICES}"
            )));
        }
        let ground = VertexSet::full(n);
        let generators: Vec<VertexSet> = generators.into_iter().collect();
        if generators.is_empty() {
            return Err(Error::invalid("a complex needs at least one facet"));
        }
        if let Some(bad) = generators.iter().find(|g| !g.is_subset(ground)) {
            return Err(Error::invalid(format!(
                "facet {bad} has a vertex outside 1..={n}"
            )));
        }
        Ok(Self::from_trusted(n, generators))
    }

    /// Maximalizes a nonempty generating family already known to lie inside
    /// the ground set.
    pub(crate) fn from_trusted(n: usize, mut generators: Vec<VertexSet>) -> Self {
        debug_assert!(!generators.is_empty());
        generators.sort_unstable_by(|a, b| b.len().cmp(&a.len()).then(a.cmp(b)));
        generators.dedup();
        let mut facets: Vec<VertexSet> = Vec::with_capacity(generators.len());
        for g in generators {
            if !facets.iter().any(|f| g.is_subset(*f)) {
                facets.push(g);
            }
        }
        facets.sort_unstable();
        SimplicialComplex { n, facets }
    }

    /// The complex `{∅}` on `n` ground vertices.
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_VERTICES);
        SimplicialComplex {
            n,
            facets: vec![VertexSet::EMPTY],
        }
    }

    /// The full simplex on `{1, ..., n}`.
    pub fn simplex(n: usize) -> Self {
        assert!(n <= MAX_VERTICES);
        SimplicialComplex {
            n,
            facets: vec![VertexSet::full(n)],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    pub fn ground_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Dimension, i.e. largest facet size minus one; `{∅}` has dimension -1.
    pub fn dim(&self) -> isize {
        self.facets.iter().map(|f| f.len()).max().unwrap_or(0) as isize - 1
    }

    pub fn is_pure(&self) -> bool {
        let first = self.facets[0].len();
        self.facets.iter().all(|f| f.len() == first)
    }

    /// A complex with a single facet, including `{∅}`.
    pub fn is_simplex(&self) -> bool {
        self.facets.len() == 1
    }

    /// Vertices that lie in some facet.
    pub fn vertices(&self) -> VertexSet {
        self.facets
            .iter()
            .fold(VertexSet::EMPTY, |acc, f| acc.union(*f))
    }

    /// Ground-set vertices that lie in no facet.
    pub fn isolated_vertices(&self) -> VertexSet {
        self.ground_set().difference(self.vertices())
    }

    pub fn is_facet(&self, s: VertexSet) -> bool {
        self.facets.binary_search(&s).is_ok()
    }

    /// Face test without range checking.
    pub fn contains_face(&self, s: VertexSet) -> bool {
        self.facets.iter().any(|f| s.is_subset(*f))
    }

    pub fn is_face(&self, s: VertexSet) -> Result<bool> {
        self.check_in_ground(s)?;
        Ok(self.contains_face(s))
    }

    fn check_in_ground(&self, s: VertexSet) -> Result<()> {
        if s.is_subset(self.ground_set()) {
            Ok(())
        } else {
            Err(Error::invalid(format!(
                "vertex set {s} is not inside the ground set 1..={}",
                self.n
            )))
        }
    }

    /// All faces grouped by cardinality: entry `m` holds the faces with `m`
    /// vertices, sorted by bit mask. Entry 0 is `[∅]`.
    pub fn faces_by_size(&self) -> Vec<Vec<VertexSet>> {
        let top = (self.dim() + 1) as usize;
        let mut seen: Vec<HashSet<VertexSet>> = vec![HashSet::new(); top + 1];
        for f in &self.facets {
            for s in f.subsets() {
                seen[s.len()].insert(s);
            }
        }
        seen.into_iter()
            .map(|set| {
                let mut v: Vec<VertexSet> = set.into_iter().collect();
                v.sort_unstable_by_key(|s| s.bits());
                v
            })
            .collect()
    }

    /// Number of faces of each dimension `-1, 0, ..., dim`.
    pub fn f_vector(&self) -> Vec<usize> {
        self.faces_by_size().iter().map(Vec::len).collect()
    }

    /// `Σ (-1)^dim F` over all faces including `∅`.
    pub fn reduced_euler_characteristic(&self) -> i64 {
        self.f_vector()
            .iter()
            .enumerate()
            .map(|(size, &count)| {
                let sign = if size % 2 == 0 { -1 } else { 1 };
                sign * count as i64
            })
            .sum()
    }

    /// Inclusion-minimal non-faces sorted by (cardinality, lexicographic).
    ///
    /// Every minimal non-face is a face plus one vertex, so candidates of size
    /// `m + 1` are generated from faces of size `m` by appending a vertex
    /// larger than all of the face's vertices.
    pub fn minimal_non_faces(&self) -> Vec<VertexSet> {
        let by_size = self.faces_by_size();
        let lookup: Vec<HashSet<VertexSet>> = by_size
            .iter()
            .map(|v| v.iter().copied().collect())
            .collect();
        let mut found = Vec::new();
        for (m, faces) in by_size.iter().enumerate() {
            for &f in faces {
                for v in f.max_or_zero() + 1..=self.n {
                    let s = f.with(v);
                    if self.contains_face(s) {
                        continue;
                    }
                    let minimal = f.iter().all(|u| lookup[m].contains(&s.without(u)));
                    if minimal {
                        found.push(s);
                    }
                }
            }
        }
        found.sort_unstable_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
        found
    }

    /// `lk(f) = {G \ f : G ∈ Δ, f ⊆ G, G ∩ f = ∅}` on the same ground set.
    pub fn link(&self, f: VertexSet) -> Result<Self> {
        self.check_in_ground(f)?;
        if !self.contains_face(f) {
            return Err(Error::invalid(format!("{f} is not a face")));
        }
        Ok(self.link_of_face(f))
    }

    pub(crate) fn link_of_face(&self, f: VertexSet) -> Self {
        let gens: Vec<VertexSet> = self
            .facets
            .iter()
            .filter(|g| f.is_subset(**g))
            .map(|g| g.difference(f))
            .collect();
        Self::from_trusted(self.n, gens)
    }

    /// Faces not containing `v`.
    pub fn deletion(&self, v: usize) -> Result<Self> {
        if !(1..=self.n).contains(&v) {
            return Err(Error::invalid(format!(
                "vertex {v} is outside 1..={}",
                self.n
            )));
        }
        Ok(self.delete_vertex(v))
    }

    pub(crate) fn delete_vertex(&self, v: usize) -> Self {
        let gens: Vec<VertexSet> = self.facets.iter().map(|f| f.without(v)).collect();
        Self::from_trusted(self.n, gens)
    }

    /// Faces contained in `w`; `{∅}` when no vertex of `w` is a face.
    pub fn induced_subcomplex(&self, w: VertexSet) -> Self {
        let w = w.intersection(self.ground_set());
        let gens: Vec<VertexSet> = self.facets.iter().map(|f| f.intersection(w)).collect();
        Self::from_trusted(self.n, gens)
    }

    /// Graph on `{1, ..., n}` whose edges are the 1-dimensional faces.
    pub fn one_skeleton(&self) -> Graph {
        let mut g = Graph::new(self.n).expect("ground set already validated");
        for f in &self.facets {
            let vs = f.to_vec();
            for (i, &u) in vs.iter().enumerate() {
                for &v in &vs[i + 1..] {
                    g.add_edge_unchecked(u, v);
                }
            }
        }
        g
    }
}

/// Parameters of a van der Waerden complex: progressions of `k` steps inside
/// `{1, ..., n}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct VdwParams {
    n: usize,
    k: usize,
}

impl VdwParams {
    pub fn new(n: usize, k: usize) -> Result<Self> {
        if !(0 < k && k < n) {
            return Err(Error::invalid(format!(
                "require 0 < k < n, got n = {n}, k = {k}"
            )));
        }
        if n > MAX_VERTICES {
            return Err(Error::invalid(format!(
                "n = {n} exceeds the supported maximum {MAX_VERTICES}"
            )));
        }
        Ok(VdwParams { n, k })
    }

    pub fn n(self) -> usize {
        self.n
    }

    pub fn k(self) -> usize {
        self.k
    }

    /// Largest common difference `d` with `1 + k·d ≤ n`.
    pub fn d(self) -> usize {
        (self.n - 1) / self.k
    }

    /// Number of progressions `(a, j)` with `a + k·j ≤ n`.
    pub fn facet_count(self) -> usize {
        (1..=self.d()).map(|j| self.n - self.k * j).sum()
    }
}

/// The van der Waerden complex: facets are all `{a, a+j, ..., a+k·j}` with
/// `a, j ≥ 1` and `a + k·j ≤ n`.
pub fn make_vdw(params: VdwParams) -> SimplicialComplex {
    let (n, k) = (params.n, params.k);
    let mut facets = Vec::with_capacity(params.facet_count());
    for j in 1..=params.d() {
        for a in 1..=n - k * j {
            facets.push(VertexSet::from_vertices((0..=k).map(|i| a + i * j)));
        }
    }
    facets.sort_unstable();
    SimplicialComplex { n, facets }
}

/// The two minimal non-faces through vertex 1 that are guaranteed for
/// `1 < k < n/2`, `n ≥ 7`: the pair `{1, kd}` and one triple depending on how
/// `d` divides `k`.
pub fn lemma_nonface_predictions(params: VdwParams) -> Result<Vec<VertexSet>> {
    let (n, k) = (params.n, params.k);
    if !(k > 1 && 2 * k < n && n >= 7) {
        return Err(Error::invalid(format!(
            "predictions need 1 < k < n/2 and n >= 7, got n = {n}, k = {k}"
        )));
    }
    let d = params.d();
    let pair = VertexSet::from_vertices([1, k * d]);
    let triple = if k % d != 0 {
        [1, 1 + k * (d - 1), 1 + k * d]
    } else if d < k {
        [1, 1 + (k - 1) * (d - 1), 1 + (k - 1) * d]
    } else {
        [1, 1 + (k - 2) * d, 1 + (k - 1) * (d - 1)]
    };
    Ok(vec![pair, VertexSet::from_vertices(triple)])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(vs: &[usize]) -> VertexSet {
        VertexSet::from_vertices(vs.iter().copied())
    }

    fn sets(vss: &[&[usize]]) -> Vec<VertexSet> {
        vss.iter().map(|vs| set(vs)).collect()
    }

    fn vdw(n: usize, k: usize) -> SimplicialComplex {
        make_vdw(VdwParams::new(n, k).unwrap())
    }

    fn sorted(mut v: Vec<VertexSet>) -> Vec<VertexSet> {
        v.sort();
        v
    }

    #[test]
    fn vdw_7_3_facets() {
        let c = vdw(7, 3);
        let expected = sets(&[
            &[1, 2, 3, 4],
            &[2, 3, 4, 5],
            &[3, 4, 5, 6],
            &[4, 5, 6, 7],
            &[1, 3, 5, 7],
        ]);
        assert_eq!(c.facets(), sorted(expected).as_slice());
        assert_eq!(c.dim(), 3);
    }

    #[test]
    fn vdw_5_2_facets() {
        let c = vdw(5, 2);
        let expected = sets(&[&[1, 2, 3], &[2, 3, 4], &[3, 4, 5], &[1, 3, 5]]);
        assert_eq!(c.facets(), sorted(expected).as_slice());
    }

    #[test]
    fn top_k_is_full_simplex() {
        for n in 2..10 {
            assert_eq!(vdw(n, n - 1), SimplicialComplex::simplex(n));
        }
    }

    #[test]
    fn params_reject_bad_domain() {
        assert!(VdwParams::new(3, 5).is_err());
        assert!(VdwParams::new(5, 0).is_err());
        assert!(VdwParams::new(5, 5).is_err());
        assert!(VdwParams::new(65, 3).is_err());
    }

    #[test]
    fn construction_maximalizes_and_dedups() {
        let c = SimplicialComplex::new(4, sets(&[&[1, 2], &[1, 2, 3], &[1, 2], &[4]])).unwrap();
        assert_eq!(c.facets(), sets(&[&[1, 2, 3], &[4]]).as_slice());
        assert!(SimplicialComplex::new(3, Vec::new()).is_err());
        assert!(SimplicialComplex::new(3, sets(&[&[1, 4]])).is_err());
        let e = SimplicialComplex::new(3, [VertexSet::EMPTY]).unwrap();
        assert_eq!(e, SimplicialComplex::empty(3));
        assert_eq!(e.dim(), -1);
        assert_eq!(e.isolated_vertices(), VertexSet::full(3));
    }

    #[test]
    fn face_queries() {
        assert!(!vdw(5, 2).is_face(set(&[1, 4])).unwrap());
        assert!(vdw(7, 3).is_face(set(&[1, 5, 7])).unwrap());
        assert!(vdw(7, 3).is_face(VertexSet::EMPTY).unwrap());
        assert!(vdw(5, 2).is_face(set(&[6])).is_err());
    }

    #[test]
    fn minimal_non_faces_examples() {
        assert_eq!(vdw(5, 2).minimal_non_faces(), sets(&[&[1, 4], &[2, 5]]));
        assert_eq!(
            vdw(6, 2).minimal_non_faces(),
            sets(&[&[1, 4], &[1, 6], &[2, 5], &[3, 6]])
        );
        assert!(SimplicialComplex::simplex(6).minimal_non_faces().is_empty());
        // Isolated ground vertices are size-one non-faces.
        let c = SimplicialComplex::new(3, sets(&[&[1, 2]])).unwrap();
        assert_eq!(c.minimal_non_faces(), sets(&[&[3]]));
        assert_eq!(
            SimplicialComplex::empty(2).minimal_non_faces(),
            sets(&[&[1], &[2]])
        );
    }

    #[test]
    fn lemma_prediction_examples() {
        let p = |n, k| lemma_nonface_predictions(VdwParams::new(n, k).unwrap()).unwrap();
        assert_eq!(p(7, 2), sets(&[&[1, 6], &[1, 5, 7]]));
        // d = 2 divides k = 4: the pair is {1, kd} = {1, 8}.
        assert_eq!(p(9, 4), sets(&[&[1, 8], &[1, 4, 7]]));
        assert_eq!(p(10, 3), sets(&[&[1, 9], &[1, 4, 5]]));
        assert!(vdw(9, 4).is_face(set(&[1, 9])).unwrap());
        assert!(lemma_nonface_predictions(VdwParams::new(6, 2).unwrap()).is_err());
        assert!(lemma_nonface_predictions(VdwParams::new(8, 4).unwrap()).is_err());
        assert!(lemma_nonface_predictions(VdwParams::new(8, 1).unwrap()).is_err());
    }

    #[test]
    fn link_examples() {
        let c = vdw(5, 2);
        let lk = c.link(set(&[3])).unwrap();
        assert_eq!(
            lk.facets(),
            sorted(sets(&[&[1, 2], &[2, 4], &[4, 5], &[1, 5]])).as_slice()
        );
        assert_eq!(c.link(VertexSet::EMPTY).unwrap(), c);
        assert!(c.link(set(&[1, 4])).is_err());
        let s = SimplicialComplex::simplex(4);
        assert_eq!(s.link(set(&[2])).unwrap().facets(), &[set(&[1, 3, 4])]);
        assert_eq!(
            c.link(set(&[1, 2, 3])).unwrap(),
            SimplicialComplex::empty(5)
        );
    }

    #[test]
    fn deletion_examples() {
        let c = vdw(5, 2);
        assert_eq!(
            c.deletion(1).unwrap().facets(),
            sets(&[&[2, 3, 4], &[3, 4, 5]]).as_slice()
        );
        let e = SimplicialComplex::new(2, sets(&[&[1, 2]])).unwrap();
        assert_eq!(e.deletion(2).unwrap().facets(), &[set(&[1])]);
        let iso = SimplicialComplex::new(4, sets(&[&[1, 2], &[2, 3]])).unwrap();
        assert_eq!(iso.deletion(4).unwrap(), iso);
        assert!(c.deletion(0).is_err());
        assert!(c.deletion(6).is_err());
    }

    #[test]
    fn induced_examples() {
        let c = vdw(5, 2);
        assert_eq!(
            c.induced_subcomplex(set(&[1, 4])).facets(),
            sets(&[&[1], &[4]]).as_slice()
        );
        assert_eq!(
            c.induced_subcomplex(VertexSet::EMPTY),
            SimplicialComplex::empty(5)
        );
        assert_eq!(c.induced_subcomplex(VertexSet::full(5)), c);
    }

    #[test]
    fn one_skeleton_examples() {
        let edges = |c: &SimplicialComplex| c.one_skeleton().edges();
        assert_eq!(
            edges(&vdw(5, 2)),
            vec![
                (1, 2),
                (1, 3),
                (1, 5),
                (2, 3),
                (2, 4),
                (3, 4),
                (3, 5),
                (4, 5)
            ]
        );
        let e6 = edges(&vdw(6, 2));
        // {1,6} is a minimal non-face, so the skeleton has 15 - 4 = 11 edges.
        assert_eq!(
            e6,
            vec![
                (1, 2),
                (1, 3),
                (1, 5),
                (2, 3),
                (2, 4),
                (2, 6),
                (3, 4),
                (3, 5),
                (4, 5),
                (4, 6),
                (5, 6)
            ]
        );
        assert_eq!(edges(&SimplicialComplex::simplex(5)).len(), 10);
    }

    #[test]
    fn euler_characteristic_of_simplex_and_circle() {
        assert_eq!(
            SimplicialComplex::simplex(4).reduced_euler_characteristic(),
            0
        );
        let circle = SimplicialComplex::new(3, sets(&[&[1, 2], &[2, 3], &[1, 3]])).unwrap();
        assert_eq!(circle.reduced_euler_characteristic(), -1);
        assert_eq!(
            SimplicialComplex::empty(3).reduced_euler_characteristic(),
            -1
        );
    }
}
