use std::collections::HashSet;

use serde::Serialize;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// A facet ordering in which every facet after the first is a leaf of the
/// complex generated by itself and its predecessors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LeafOrder {
    pub order: Vec<VertexSet>,
    /// `branches[i]` witnesses the leaf at position `i`; `None` at position 0.
    pub branches: Vec<Option<VertexSet>>,
}

impl LeafOrder {
    /// Re-checks every leaf condition against `c`.
    pub fn is_valid_for(&self, c: &SimplicialComplex) -> bool {
        let mut listed = self.order.clone();
        listed.sort();
        if listed != c.facets() || self.branches.len() != self.order.len() {
            return false;
        }
        if self.branches.first().is_some_and(Option::is_some) {
            return false;
        }
        (1..self.order.len()).all(|i| {
            let prefix = &self.order[..=i];
            let Some(g) = self.branches[i] else {
                return false;
            };
            prefix[..i].contains(&g) && is_branch(prefix, i, g)
        })
    }
}

/// `g` witnesses `facets[f]` as a leaf: every other facet meets `facets[f]`
/// inside `g`.
fn is_branch(facets: &[VertexSet], f: usize, g: VertexSet) -> bool {
    let leaf = facets[f];
    let trace = facets
        .iter()
        .enumerate()
        .filter(|&(h, _)| h != f)
        .fold(VertexSet::EMPTY, |acc, (_, h)| {
            acc.union(h.intersection(leaf))
        });
    trace.is_subset(g)
}

/// Leaf test over the active facets (indices into `facets`): returns the
/// branch index for candidate `f`, smallest index first.
fn branch_of(facets: &[VertexSet], active: &[usize], f: usize) -> Option<usize> {
    let leaf = facets[f];
    let trace = active
        .iter()
        .filter(|&&h| h != f)
        .fold(VertexSet::EMPTY, |acc, &h| {
            acc.union(facets[h].intersection(leaf))
        });
    active
        .iter()
        .copied()
        .find(|&g| g != f && trace.is_subset(facets[g]))
}

/// A leaf `F` and its branch `G`: every other facet `H` has
/// `H ∩ F ⊆ G ∩ F`. Lexicographically smallest `F`, then smallest `G`.
/// Complexes with a single facet have no leaf in this sense.
pub fn find_leaf(c: &SimplicialComplex) -> Option<(VertexSet, VertexSet)> {
    let facets = c.facets();
    let active: Vec<usize> = (0..facets.len()).collect();
    active
        .iter()
        .find_map(|&f| branch_of(facets, &active, f).map(|g| (facets[f], facets[g])))
}

/// Searches for a leaf order by peeling leaves off the full facet list, with
/// backtracking and a memo of facet subsets already known to fail.
pub fn leaf_order(c: &SimplicialComplex) -> Option<LeafOrder> {
    let facets = c.facets();
    let mut active: Vec<usize> = (0..facets.len()).collect();
    let mut peeled: Vec<(usize, usize)> = Vec::new();
    let mut failed: HashSet<Vec<usize>> = HashSet::new();
    if !peel(facets, &mut active, &mut peeled, &mut failed) {
        return None;
    }
    let mut order = vec![facets[active[0]]];
    let mut branches = vec![None];
    for &(f, g) in peeled.iter().rev() {
        order.push(facets[f]);
        branches.push(Some(facets[g]));
    }
    Some(LeafOrder { order, branches })
}

fn peel(
    facets: &[VertexSet],
    active: &mut Vec<usize>,
    peeled: &mut Vec<(usize, usize)>,
    failed: &mut HashSet<Vec<usize>>,
) -> bool {
    if active.len() <= 1 {
        return true;
    }
    if failed.contains(active.as_slice()) {
        return false;
    }
    for pos in 0..active.len() {
        let f = active[pos];
        let Some(g) = branch_of(facets, active, f) else {
            continue;
        };
        active.remove(pos);
        peeled.push((f, g));
        if peel(facets, active, peeled, failed) {
            return true;
        }
        peeled.pop();
        active.insert(pos, f);
    }
    failed.insert(active.clone());
    false
}

pub fn is_quasi_forest(c: &SimplicialComplex) -> bool {
    leaf_order(c).is_some()
}

/// Vertices of facet `f` that lie in no other facet.
pub fn free_vertices(c: &SimplicialComplex, f: VertexSet) -> Result<VertexSet> {
    if !c.is_facet(f) {
        return Err(Error::invalid(format!("{f} is not a facet")));
    }
    let covered = c
        .facets()
        .iter()
        .filter(|&&h| h != f)
        .fold(VertexSet::EMPTY, |acc, h| acc.union(*h));
    Ok(f.difference(covered))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{make_vdw, VdwParams};

    fn set(vs: &[usize]) -> VertexSet {
        VertexSet::from_vertices(vs.iter().copied())
    }

    fn vdw(n: usize, k: usize) -> SimplicialComplex {
        make_vdw(VdwParams::new(n, k).unwrap())
    }

    fn complex(n: usize, facets: &[&[usize]]) -> SimplicialComplex {
        SimplicialComplex::new(n, facets.iter().map(|f| set(f))).unwrap()
    }

    #[test]
    fn interval_complex_leaf() {
        let (f, g) = find_leaf(&vdw(7, 4)).unwrap();
        assert_eq!(f, set(&[1, 2, 3, 4, 5]));
        assert_eq!(g, set(&[2, 3, 4, 5, 6]));
    }

    #[test]
    fn disjoint_facets_are_leaves_of_each_other() {
        let c = complex(4, &[&[1, 2], &[3, 4]]);
        assert_eq!(find_leaf(&c), Some((set(&[1, 2]), set(&[3, 4]))));
    }

    #[test]
    fn hollow_triangle_has_no_leaf() {
        let c = complex(3, &[&[1, 2], &[2, 3], &[1, 3]]);
        assert_eq!(find_leaf(&c), None);
        assert!(leaf_order(&c).is_none());
    }

    #[test]
    fn interval_complexes_have_leaf_orders() {
        for n in 3usize..=12 {
            for k in n.div_ceil(2)..n {
                let c = vdw(n, k);
                let order = leaf_order(&c).unwrap_or_else(|| panic!("vdW({n},{k})"));
                assert!(order.is_valid_for(&c));
            }
        }
    }

    #[test]
    fn vdw_5_2_and_6_2_are_not_quasi_forests() {
        assert!(!is_quasi_forest(&vdw(5, 2)));
        assert!(!is_quasi_forest(&vdw(6, 2)));
    }

    #[test]
    fn single_facet_and_simplex() {
        let s = SimplicialComplex::simplex(5);
        let order = leaf_order(&s).unwrap();
        assert_eq!(order.order, vec![VertexSet::full(5)]);
        assert_eq!(order.branches, vec![None]);
        assert!(is_quasi_forest(&SimplicialComplex::empty(3)));
    }

    #[test]
    fn leaf_order_needs_nonstrict_containment() {
        // Two triangles sharing an edge: H ∩ F = G ∩ F, which a strict
        // reading of containment would reject.
        let c = complex(4, &[&[1, 2, 3], &[2, 3, 4]]);
        assert!(is_quasi_forest(&c));
    }

    #[test]
    fn free_vertex_examples() {
        // 1 is in {1,3,5,7} and 2, 3, 4 are in {2,3,4,5}.
        assert_eq!(
            free_vertices(&vdw(7, 3), set(&[1, 2, 3, 4])).unwrap(),
            VertexSet::EMPTY
        );
        assert_eq!(
            free_vertices(&vdw(7, 4), set(&[1, 2, 3, 4, 5])).unwrap(),
            set(&[1])
        );
        let s = SimplicialComplex::simplex(3);
        assert_eq!(
            free_vertices(&s, VertexSet::full(3)).unwrap(),
            VertexSet::full(3)
        );
        let c = complex(3, &[&[1, 2], &[2, 3], &[1, 3]]);
        assert_eq!(free_vertices(&c, set(&[1, 2])).unwrap(), VertexSet::EMPTY);
        assert!(free_vertices(&c, set(&[1])).is_err());
    }

    #[test]
    fn leaf_minus_branch_is_free() {
        for n in 3..=10 {
            for k in 1..n {
                let c = vdw(n, k);
                if let Some((f, g)) = find_leaf(&c) {
                    let free = free_vertices(&c, f).unwrap();
                    assert!(f.difference(g).is_subset(free), "vdW({n},{k})");
                }
            }
        }
    }

    #[test]
    fn validator_rejects_bad_orders() {
        let c = complex(3, &[&[1, 2], &[2, 3], &[1, 3]]);
        let bogus = LeafOrder {
            order: c.facets().to_vec(),
            branches: vec![None, Some(set(&[1, 2])), Some(set(&[1, 2]))],
        };
        assert!(!bogus.is_valid_for(&c));
    }
}
