use super::Graph;
use crate::complex::SimplicialComplex;
use crate::vertex_set::VertexSet;

/// All maximal cliques, sorted lexicographically.
///
/// Bron–Kerbosch with Tomita pivoting, driven from a degeneracy ordering at
/// the top level. Isolated vertices are their own maximal cliques.
pub fn maximal_cliques(g: &Graph) -> Vec<VertexSet> {
    let mut out = Vec::new();
    let order = degeneracy_order(g);
    let mut earlier = VertexSet::EMPTY;
    let mut later = VertexSet::full(g.n());
    for v in order {
        later = later.without(v);
        let nbrs = g.neighbors(v);
        expand(
            g,
            VertexSet::singleton(v),
            nbrs.intersection(later),
            nbrs.intersection(earlier),
            &mut out,
        );
        earlier = earlier.with(v);
    }
    out.sort_unstable();
    out
}

fn expand(g: &Graph, r: VertexSet, mut p: VertexSet, mut x: VertexSet, out: &mut Vec<VertexSet>) {
    if p.is_empty() {
        if x.is_empty() {
            out.push(r);
        }
        return;
    }
    let pivot = p
        .union(x)
        .iter()
        .max_by_key(|&u| (p.intersection(g.neighbors(u)).len(), std::cmp::Reverse(u)))
        .expect("p is nonempty");
    for v in p.difference(g.neighbors(pivot)) {
        let nbrs = g.neighbors(v);
        expand(
            g,
            r.with(v),
            p.intersection(nbrs),
            x.intersection(nbrs),
            out,
        );
        p = p.without(v);
        x = x.with(v);
    }
}

/// Repeatedly removes a minimum-degree vertex (smallest label on ties).
fn degeneracy_order(g: &Graph) -> Vec<usize> {
    let mut remaining = VertexSet::full(g.n());
    let mut order = Vec::with_capacity(g.n());
    while let Some(v) = remaining
        .iter()
        .min_by_key(|&v| (g.neighbors(v).intersection(remaining).len(), v))
    {
        order.push(v);
        remaining = remaining.without(v);
    }
    order
}

/// The flag complex whose faces are the cliques of `g`.
pub fn clique_complex(g: &Graph) -> SimplicialComplex {
    let cliques = maximal_cliques(g);
    if cliques.is_empty() {
        return SimplicialComplex::empty(g.n());
    }
    SimplicialComplex::from_trusted(g.n(), cliques)
}
