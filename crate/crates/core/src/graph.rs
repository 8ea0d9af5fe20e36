//! Simple undirected graphs with canonical edge indexing.
//!
//! Edges are stored as `(a, b)` with `a < b`, sorted lexicographically; the
//! index of an edge is its position in that list. Every edge `e` owns two
//! darts: `2e` anchored at the smaller endpoint and `2e + 1` at the larger.

use std::collections::BTreeSet;

use crate::error::{invalid, Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    /// `(neighbour, edge index)` sorted by neighbour.
    adj: Vec<Vec<(usize, usize)>>,
}

impl Graph {
    /// Builds a graph from an arbitrary edge list. Endpoint order and list
    /// order do not matter; loops, parallel edges and out-of-range endpoints
    /// are rejected.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut list: Vec<(usize, usize)> = Vec::new();
        for (a, b) in edges {
            if a >= n || b >= n {
                return invalid(format!("edge ({a}, {b}) has an endpoint >= {n}"));
            }
            if a == b {
                return invalid(format!("loop at vertex {a}"));
            }
            list.push((a.min(b), a.max(b)));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return invalid(format!("parallel edge ({}, {})", w[0].0, w[0].1));
        }
        let mut adj = vec![Vec::new(); n];
        for (e, &(a, b)) in list.iter().enumerate() {
            adj[a].push((b, e));
            adj[b].push((a, e));
        }
        for row in &mut adj {
            row.sort_unstable();
        }
        Ok(Graph { n, edges: list, adj })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    /// `(neighbour, edge)` pairs around `v`, sorted by neighbour.
    pub fn incident(&self, v: usize) -> &[(usize, usize)] {
        &self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().map(|&(w, _)| w)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn is_regular(&self, d: usize) -> bool {
        self.adj.iter().all(|row| row.len() == d)
    }

    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).ok()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_index(u, v).is_some()
    }

    /// True when the edges share an endpoint.
    pub fn adjacent_edges(&self, e: usize, f: usize) -> bool {
        let (a, b) = self.edges[e];
        let (c, d) = self.edges[f];
        a == c || a == d || b == c || b == d
    }

    /// Vertex at which dart `d` is anchored.
    pub fn dart_vertex(&self, d: usize) -> usize {
        let (a, b) = self.edges[d / 2];
        if d % 2 == 0 {
            a
        } else {
            b
        }
    }

    /// Dart of edge `e` anchored at `v`.
    pub fn dart_at(&self, e: usize, v: usize) -> usize {
        if self.edges[e].0 == v {
            2 * e
        } else {
            debug_assert_eq!(self.edges[e].1, v);
            2 * e + 1
        }
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        self.component_of(0).len() == self.n
    }

    fn component_of(&self, start: usize) -> Vec<usize> {
        let mut seen = vec![false; self.n];
        let mut stack = vec![start];
        let mut out = Vec::new();
        seen[start] = true;
        while let Some(v) = stack.pop() {
            out.push(v);
            for w in self.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        out
    }

    /// Same vertex set, with the listed edges removed. Edge indices of the
    /// result are renumbered canonically.
    pub fn without_edges(&self, removed: &[usize]) -> Graph {
        let drop: BTreeSet<usize> = removed.iter().copied().collect();
        let kept = self
            .edges
            .iter()
            .enumerate()
            .filter(|(e, _)| !drop.contains(e))
            .map(|(_, &p)| p);
        Graph::new(self.n, kept).expect("subgraph of a simple graph is simple")
    }

    /// Image of the graph under a vertex permutation (`perm[old] = new`).
    pub fn relabeled(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return invalid("permutation length differs from vertex count");
        }
        Graph::new(self.n, self.edges.iter().map(|&(a, b)| (perm[a], perm[b])))
    }

    /// Drops isolated vertices and repeatedly replaces each degree-2 vertex
    /// by a single edge joining its neighbours. Fails when a replacement
    /// would create a loop or a parallel edge.
    pub fn suppress_degree_two(&self) -> Result<Suppressed> {
        let mut adj: Vec<BTreeSet<usize>> = (0..self.n).map(|v| self.neighbors(v).collect()).collect();
        let mut alive = vec![true; self.n];
        let mut queue: Vec<usize> = (0..self.n).collect();
        while let Some(v) = queue.pop() {
            if !alive[v] {
                continue;
            }
            match adj[v].len() {
                0 => alive[v] = false,
                2 => {
                    let mut it = adj[v].iter().copied();
                    let (a, b) = (it.next().unwrap(), it.next().unwrap());
                    if adj[a].contains(&b) {
                        return invalid(format!(
                            "suppressing vertex {v} would create a parallel edge ({a}, {b})"
                        ));
                    }
                    adj[a].remove(&v);
                    adj[b].remove(&v);
                    adj[a].insert(b);
                    adj[b].insert(a);
                    adj[v].clear();
                    alive[v] = false;
                }
                _ => {}
            }
        }
        let original: Vec<usize> = (0..self.n).filter(|&v| alive[v]).collect();
        let mut new_index = vec![usize::MAX; self.n];
        for (i, &v) in original.iter().enumerate() {
            new_index[v] = i;
        }
        let mut edges = Vec::new();
        for &v in &original {
            for &w in &adj[v] {
                if v < w {
                    edges.push((new_index[v], new_index[w]));
                }
            }
        }
        let graph = Graph::new(original.len(), edges)?;
        Ok(Suppressed { graph, original })
    }

    /// Degree of every vertex, in vertex order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn complete(n: usize) -> Graph {
        let edges = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b)));
        Graph::new(n, edges).unwrap()
    }

    pub fn complete_bipartite(p: usize, q: usize) -> Graph {
        let edges = (0..p).flat_map(|a| (0..q).map(move |b| (a, p + b)));
        Graph::new(p + q, edges).unwrap()
    }

    pub fn cycle(n: usize) -> Result<Graph> {
        if n < 3 {
            return Err(Error::InvalidInput(format!("cycle needs n >= 3, got {n}")));
        }
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
    }
}

/// Result of [`Graph::suppress_degree_two`].
#[derive(Clone, Debug)]
pub struct Suppressed {
    pub graph: Graph,
    /// `original[i]` is the vertex of the input graph that became vertex `i`.
    pub original: Vec<usize>,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_edge_order() {
        let g = Graph::new(4, [(3, 1), (0, 2), (1, 0)]).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (0, 2), (1, 3)]);
        assert_eq!(g.edge_index(3, 1), Some(2));
        assert_eq!(g.dart_vertex(5), 3);
        assert_eq!(g.dart_at(2, 1), 4);
    }

    #[test]
    fn rejects_loops_and_parallels() {
        assert!(Graph::new(3, [(1, 1)]).is_err());
        assert!(Graph::new(3, [(0, 1), (1, 0)]).is_err());
        assert!(Graph::new(3, [(0, 3)]).is_err());
    }

    #[test]
    fn suppression_of_a_subdivided_k4() {
        // K4 with two subdivided edges.
        let g = Graph::new(6, [(0, 4), (4, 1), (0, 2), (0, 3), (1, 5), (5, 2), (1, 3), (2, 3)]).unwrap();
        let s = g.suppress_degree_two().unwrap();
        assert_eq!(s.graph.vertex_count(), 4);
        assert_eq!(s.graph.edge_count(), 6);
        assert!(s.graph.is_regular(3));
        assert_eq!(s.original, vec![0, 1, 2, 3]);
    }

    #[test]
    fn suppressing_a_triangle_fails() {
        let g = Graph::cycle(3).unwrap();
        assert!(g.suppress_degree_two().is_err());
    }

    #[test]
    fn connectivity() {
        assert!(Graph::complete(4).is_connected());
        assert!(!Graph::new(4, [(0, 1), (2, 3)]).unwrap().is_connected());
    }
}
