//! Reduced simplicial homology over Q or GF(p) from boundary-matrix ranks.

mod rank;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

pub use rank::{rank_gf2, rank_mod_p, rank_rational};

/// Coefficient field for homology and Betti numbers.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldSpec {
    #[default]
    Rationals,
    PrimeField(u32),
}

impl FieldSpec {
    pub const GF2: FieldSpec = FieldSpec::PrimeField(2);

    pub fn prime(p: u32) -> Result<Self> {
        if rank::is_prime(p) {
            Ok(FieldSpec::PrimeField(p))
        } else {
            Err(Error::invalid(format!("{p} is not prime")))
        }
    }

    pub fn characteristic(self) -> u32 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::PrimeField(p) => p,
        }
    }

    pub fn rank(self, entries: &[i64], rows: usize, cols: usize) -> usize {
        match self {
            FieldSpec::Rationals => rank_rational(entries, rows, cols),
            FieldSpec::PrimeField(p) => rank_mod_p(entries, rows, cols, p),
        }
    }
}

/// `Q` or `GF(p)`.
impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::PrimeField(p) => write!(f, "GF({p})"),
        }
    }
}

/// Accepts `Q`, `GF2`, `GF(p)` and `GFp:<p>`.
impl FromStr for FieldSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("q") {
            return Ok(FieldSpec::Rationals);
        }
        let digits = s
            .strip_prefix("GFp:")
            .or_else(|| s.strip_prefix("GF(").and_then(|r| r.strip_suffix(')')))
            .or_else(|| s.strip_prefix("GF"));
        let p = digits
            .and_then(|d| d.parse::<u32>().ok())
            .ok_or_else(|| Error::invalid(format!("unknown field `{s}`; use Q, GF2 or GFp:<p>")))?;
        FieldSpec::prime(p)
    }
}

impl Serialize for FieldSpec {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for FieldSpec {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Matrix of the augmented boundary map from `i`-faces to `(i-1)`-faces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryMatrix {
    pub row_faces: Vec<VertexSet>,
    pub col_faces: Vec<VertexSet>,
    /// Row-major entries in `{-1, 0, 1}`.
    pub entries: Vec<i64>,
    pub field: FieldSpec,
}

impl BoundaryMatrix {
    pub fn rows(&self) -> usize {
        self.row_faces.len()
    }

    pub fn cols(&self) -> usize {
        self.col_faces.len()
    }

    pub fn entry(&self, r: usize, c: usize) -> i64 {
        self.entries[r * self.cols() + c]
    }

    pub fn rank(&self) -> usize {
        self.field.rank(&self.entries, self.rows(), self.cols())
    }

    /// Integer product `self · rhs`; the shapes must chain.
    pub fn compose(&self, rhs: &BoundaryMatrix) -> Vec<i64> {
        assert_eq!(self.cols(), rhs.rows());
        let (m, k, n) = (self.rows(), self.cols(), rhs.cols());
        let mut out = vec![0i64; m * n];
        for r in 0..m {
            for t in 0..k {
                let a = self.entry(r, t);
                if a == 0 {
                    continue;
                }
                for c in 0..n {
                    out[r * n + c] += a * rhs.entry(t, c);
                }
            }
        }
        out
    }
}

/// Faces of a given dimension; out-of-range dimensions have none.
fn faces_of_dim(by_size: &[Vec<VertexSet>], dim: isize) -> &[VertexSet] {
    let size = dim + 1;
    if size < 0 {
        return &[];
    }
    by_size.get(size as usize).map_or(&[], Vec::as_slice)
}

fn build_boundary(rows: &[VertexSet], cols: &[VertexSet], field: FieldSpec) -> BoundaryMatrix {
    let mut entries = vec![0i64; rows.len() * cols.len()];
    for (c, face) in cols.iter().enumerate() {
        for (pos, v) in face.iter().enumerate() {
            let sub = face.without(v);
            let r = rows
                .binary_search_by_key(&sub.bits(), |s| s.bits())
                .expect("boundary face missing from the complex");
            entries[r * cols.len() + c] = if pos % 2 == 0 { 1 } else { -1 };
        }
    }
    BoundaryMatrix {
        row_faces: rows.to_vec(),
        col_faces: cols.to_vec(),
        entries,
        field,
    }
}

/// The boundary map `∂_i` of the augmented chain complex. Dimension 0 maps
/// every vertex to the empty face.
pub fn boundary_matrix(c: &SimplicialComplex, i: isize, field: FieldSpec) -> BoundaryMatrix {
    let by_size = c.faces_by_size();
    build_boundary(
        faces_of_dim(&by_size, i - 1),
        faces_of_dim(&by_size, i),
        field,
    )
}

/// `dim H̃_i` for `i = -1, 0, ..., dim c`, indexed from `-1`.
///
/// `{∅}` has `H̃_{-1} = 1`; any complex with a vertex has `H̃_{-1} = 0`.
pub fn reduced_betti_numbers(c: &SimplicialComplex, field: FieldSpec) -> Vec<(isize, usize)> {
    reduced_homology(c, field)
        .into_iter()
        .enumerate()
        .map(|(idx, b)| (idx as isize - 1, b))
        .collect()
}

/// Same as [`reduced_betti_numbers`], as a plain vector starting at
/// dimension -1.
pub fn reduced_homology(c: &SimplicialComplex, field: FieldSpec) -> Vec<usize> {
    let by_size = c.faces_by_size();
    reduced_homology_from_faces(&by_size, field)
}

pub(crate) fn reduced_homology_from_faces(
    by_size: &[Vec<VertexSet>],
    field: FieldSpec,
) -> Vec<usize> {
    let top = by_size.len() as isize - 2;
    // ranks[s] = rank ∂ from faces of size s to size s-1, for s = 1..=top+1.
    let mut ranks = vec![0usize; by_size.len() + 1];
    for size in 1..by_size.len() {
        let m = build_boundary(&by_size[size - 1], &by_size[size], field);
        ranks[size] = m.rank();
    }
    (-1..=top)
        .map(|dim| {
            let size = (dim + 1) as usize;
            by_size[size].len() - ranks[size] - ranks[size + 1]
        })
        .collect()
}

/// `Σ (-1)^i dim H̃_i`, to compare against the face-count Euler characteristic.
pub fn homology_euler_characteristic(betti: &[usize]) -> i64 {
    betti
        .iter()
        .enumerate()
        .map(|(idx, &b)| if idx % 2 == 0 { -(b as i64) } else { b as i64 })
        .sum()
}
