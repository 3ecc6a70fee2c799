use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::vertex_set::{VertexSet, MAX_VERTICES};

/// Simple undirected graph on `{1, ..., n}` with bit-mask adjacency rows.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    pub fn new(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::invalid(format!(
                "graph on {n} vertices exceeds the supported maximum {MAX_VERTICES}"
            )));
        }
        Ok(Graph {
            n,
            adj: vec![VertexSet::EMPTY; n],
        })
    }

    pub fn from_edges<I: IntoIterator<Item = (usize, usize)>>(n: usize, edges: I) -> Result<Self> {
        let mut g = Graph::new(n)?;
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::new(n).expect("size checked by caller");
        for u in 1..=n {
            g.adj[u - 1] = VertexSet::full(n).without(u);
        }
        g
    }

    /// The cycle `1 - 2 - ... - n - 1` for `n ≥ 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3);
        let mut g = Graph::new(n).expect("size checked by caller");
        for u in 1..=n {
            g.add_edge_unchecked(u, u % n + 1);
        }
        g
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let range = 1..=self.n;
        if !range.contains(&u) || !range.contains(&v) {
            return Err(Error::invalid(format!(
                "edge {u}-{v} leaves the vertex range 1..={}",
                self.n
            )));
        }
        if u == v {
            return Err(Error::invalid(format!("self-loop at vertex {u}")));
        }
        self.add_edge_unchecked(u, v);
        Ok(())
    }

    pub(crate) fn add_edge_unchecked(&mut self, u: usize, v: usize) {
        debug_assert!(u != v);
        self.adj[u - 1] = self.adj[u - 1].with(v);
        self.adj[v - 1] = self.adj[v - 1].with(u);
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        (1..=self.n).contains(&u) && self.adj[u - 1].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v - 1]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v - 1].len()
    }

    pub fn is_clique(&self, s: VertexSet) -> bool {
        s.iter().all(|v| s.without(v).is_subset(self.adj[v - 1]))
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (1..=self.n)
            .flat_map(|u| {
                self.adj[u - 1]
                    .iter()
                    .filter(move |&v| v > u)
                    .map(move |v| (u, v))
            })
            .collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    /// Line-oriented text: `n <N>` followed by one `u v` line per edge.
    pub fn to_text(&self) -> String {
        let mut out = format!("n {}\n", self.n);
        for (u, v) in self.edges() {
            writeln!(out, "{u} {v}").unwrap();
        }
        out
    }

    /// Parses [`Graph::to_text`] output. Blank lines and `#` comment lines are
    /// skipped; duplicate edges are merged.
    pub fn parse_text(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let n = crate::io::parse_header(lines.next())?;
        let mut g = Graph::new(n).map_err(|e| Error::parse(1, e.to_string()))?;
        for (line, l) in lines {
            let nums = crate::io::parse_numbers(line, l)?;
            let [u, v] = nums[..] else {
                return Err(Error::parse(line, "expected exactly two vertices `u v`"));
            };
            g.add_edge(u, v)
                .map_err(|e| Error::parse(line, e.to_string()))?;
        }
        Ok(g)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edges_and_degrees() {
        let g = Graph::cycle(4);
        assert_eq!(g.edges(), vec![(1, 2), (1, 4), (2, 3), (3, 4)]);
        assert_eq!(g.degree(1), 2);
        assert!(g.has_edge(4, 1));
        assert!(!g.has_edge(1, 3));
        assert_eq!(Graph::complete(5).edge_count(), 10);
    }

    #[test]
    fn rejects_loops_and_range() {
        let mut g = Graph::new(3).unwrap();
        assert!(g.add_edge(1, 1).is_err());
        assert!(g.add_edge(0, 2).is_err());
        assert!(g.add_edge(2, 4).is_err());
    }

    #[test]
    fn text_format() {
        let g = Graph::cycle(5);
        let text = g.to_text();
        assert!(text.starts_with("n 5\n1 2\n"));
        assert_eq!(Graph::parse_text(&text).unwrap(), g);
        let with_comments = "# a path\nn 3\n\n1 2\n# middle\n2 3\n";
        assert_eq!(Graph::parse_text(with_comments).unwrap().edge_count(), 2);
        let err = Graph::parse_text("n 3\n1 2 3\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
        assert!(Graph::parse_text("n 3\n1 1\n").is_err());
    }
}
