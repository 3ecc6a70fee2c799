use std::collections::VecDeque;

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use super::Graph;
use crate::vertex_set::VertexSet;

/// Outcome of a chordality test together with a checkable certificate.
///
/// Serialises as `{"chordal": true, "peo": [..]}` or
/// `{"chordal": false, "cycle": [..]}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Chordality {
    /// A perfect elimination ordering (simplicial vertices first).
    Chordal { peo: Vec<usize> },
    /// An induced cycle of length at least four, listed in cyclic order.
    NotChordal { cycle: Vec<usize> },
}

impl Serialize for Chordality {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(2))?;
        match self {
            Chordality::Chordal { peo } => {
                map.serialize_entry("chordal", &true)?;
                map.serialize_entry("peo", peo)?;
            }
            Chordality::NotChordal { cycle } => {
                map.serialize_entry("chordal", &false)?;
                map.serialize_entry("cycle", cycle)?;
            }
        }
        map.end()
    }
}

impl Chordality {
    pub fn is_chordal(&self) -> bool {
        matches!(self, Chordality::Chordal { .. })
    }
}

/// Decides chordality with lexicographic breadth-first search.
///
/// The reverse of a LexBFS visiting order is a perfect elimination ordering
/// exactly when the graph is chordal. On failure a chordless cycle is
/// extracted as the certificate.
pub fn is_chordal(g: &Graph) -> Chordality {
    let mut peo = lex_bfs(g);
    peo.reverse();
    if is_perfect_elimination_ordering(g, &peo) {
        Chordality::Chordal { peo }
    } else {
        let cycle = find_chordless_cycle(g)
            .expect("a graph without a perfect elimination ordering has a chordless cycle");
        Chordality::NotChordal { cycle }
    }
}

/// LexBFS visiting order. Ties go to the smallest vertex label.
fn lex_bfs(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut labels: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
    let mut visited = VertexSet::EMPTY;
    let mut order = Vec::with_capacity(n);
    for step in 0..n {
        let v = (1..=n)
            .filter(|&v| !visited.contains(v))
            .reduce(|best, v| if labels[v] > labels[best] { v } else { best })
            .expect("unvisited vertex remains");
        visited = visited.with(v);
        order.push(v);
        for u in g.neighbors(v).difference(visited) {
            labels[u].push(n - step);
        }
    }
    order
}

/// Checks that every vertex's neighbours later in `order` form a clique.
/// `order` must be a permutation of `1..=n`.
pub fn is_perfect_elimination_ordering(g: &Graph, order: &[usize]) -> bool {
    if order.len() != g.n() {
        return false;
    }
    let mut later = VertexSet::full(g.n());
    for &v in order {
        if !later.contains(v) {
            return false;
        }
        later = later.without(v);
        if !g.is_clique(g.neighbors(v).intersection(later)) {
            return false;
        }
    }
    true
}

/// True when `cycle` lists at least four distinct vertices forming an induced
/// cycle of `g` in cyclic order.
pub fn is_chordless_cycle(g: &Graph, cycle: &[usize]) -> bool {
    let len = cycle.len();
    if len < 4 {
        return false;
    }
    let Some(members) = VertexSet::try_from_vertices(cycle.iter().copied()) else {
        return false;
    };
    if members.len() != len || !members.is_subset(VertexSet::full(g.n())) {
        return false;
    }
    (0..len).all(|i| {
        let v = cycle[i];
        let expected = VertexSet::from_vertices([cycle[(i + 1) % len], cycle[(i + len - 1) % len]]);
        g.neighbors(v).intersection(members) == expected
    })
}

/// Exhaustive search for a chordless cycle of length ≥ 4.
///
/// For a vertex `v` with non-adjacent neighbours `x`, `y`, a shortest
/// `x`–`y` path avoiding the rest of `v`'s closed neighbourhood closes a
/// chordless cycle through `v`. Every chordless cycle arises this way.
fn find_chordless_cycle(g: &Graph) -> Option<Vec<usize>> {
    for v in 1..=g.n() {
        let nbrs = g.neighbors(v).to_vec();
        for (i, &x) in nbrs.iter().enumerate() {
            for &y in &nbrs[i + 1..] {
                if g.has_edge(x, y) {
                    continue;
                }
                let blocked = g.neighbors(v).with(v).without(x).without(y);
                let allowed = VertexSet::full(g.n()).difference(blocked);
                if let Some(path) = shortest_path(g, x, y, allowed) {
                    let mut cycle = vec![v];
                    cycle.extend(path);
                    return Some(cycle);
                }
            }
        }
    }
    None
}

fn shortest_path(g: &Graph, from: usize, to: usize, allowed: VertexSet) -> Option<Vec<usize>> {
    let mut parent = vec![0usize; g.n() + 1];
    let mut seen = VertexSet::singleton(from);
    let mut queue = VecDeque::from([from]);
    while let Some(u) = queue.pop_front() {
        if u == to {
            let mut path = vec![to];
            let mut cur = to;
            while cur != from {
                cur = parent[cur];
                path.push(cur);
            }
            path.reverse();
            return Some(path);
        }
        for w in g.neighbors(u).intersection(allowed).difference(seen) {
            seen = seen.with(w);
            parent[w] = u;
            queue.push_back(w);
        }
    }
    None
}
