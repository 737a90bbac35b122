//! Immutable simple undirected graphs on at most 64 vertices.
//!
//! Every neighborhood is a single `u64` bitset, so set algebra on vertex sets
//! (unions of neighborhoods, cut enumeration, reachability) is word-level.

mod canon;
mod edge_list;
pub mod families;
mod generate;
mod graph6;
mod vertex_set;

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

pub use canon::{canonical_form, canonical_labeling, CanonicalForm, MAX_CANON_VERTICES};
pub use edge_list::{parse_edge_list, EdgeListError};
pub use generate::{enumerate_graphs, graph_count, GenerateError, MAX_GENERATED_VERTICES};
pub use graph6::{parse_graph6, write_graph6, Graph6Error};
pub use vertex_set::{Iter as VertexIter, VertexSet};

/// Largest supported vertex count.
pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex count {0} exceeds the supported maximum of {MAX_VERTICES}")]
    TooManyVertices(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("adjacency is not symmetric at ({0}, {1})")]
    Asymmetric(usize, usize),
}

/// A simple undirected graph with vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        Ok(Graph {
            n,
            adj: vec![VertexSet::EMPTY; n],
        })
    }

    /// Builds a graph from an edge list. Duplicate edges collapse.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        let mut adj = vec![VertexSet::EMPTY; n];
        for (a, b) in edges {
            for x in [a, b] {
                if x >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: x, n });
                }
            }
            if a == b {
                return Err(GraphError::SelfLoop(a));
            }
            adj[a].insert(b);
            adj[b].insert(a);
        }
        Ok(Graph { n, adj })
    }

    /// Builds a graph from per-vertex neighbor bitsets, validating symmetry
    /// and irreflexivity.
    pub fn from_adjacency(adj: Vec<VertexSet>) -> Result<Self, GraphError> {
        let n = adj.len();
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        let range = VertexSet::full(n);
        for (v, nb) in adj.iter().enumerate() {
            if !nb.is_subset(range) {
                let bad = (*nb - range).first().unwrap_or(n);
                return Err(GraphError::VertexOutOfRange { vertex: bad, n });
            }
            if nb.contains(v) {
                return Err(GraphError::SelfLoop(v));
            }
            for w in nb.iter() {
                if !adj[w].contains(v) {
                    return Err(GraphError::Asymmetric(v, w));
                }
            }
        }
        Ok(Graph { n, adj })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// All vertices as a set.
    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    /// `N(S)`: every vertex adjacent to some member of `s`.
    pub fn neighbors_of_set(&self, s: VertexSet) -> VertexSet {
        s.iter().fold(VertexSet::EMPTY, |acc, v| acc | self.adj[v])
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj[a].contains(b)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    /// Edges `(a, b)` with `a < b`, ordered by `a` then `b`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |a| {
            self.adj[a]
                .iter()
                .filter(move |&b| b > a)
                .map(move |b| (a, b))
        })
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn is_complete(&self) -> bool {
        (0..self.n).all(|v| self.degree(v) + 1 == self.n)
    }

    /// True if no two members of `s` are adjacent.
    pub fn is_independent(&self, s: VertexSet) -> bool {
        s.iter().all(|v| self.adj[v].is_disjoint(s))
    }

    /// Vertices reachable from `start` inside the induced subgraph on `within`.
    pub fn reachable_within(&self, start: usize, within: VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let next = (self.neighbors_of_set(frontier) & within) - seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    /// Number of connected components of the induced subgraph on `within`.
    pub fn components_within(&self, within: VertexSet) -> usize {
        let mut left = within;
        let mut count = 0;
        while let Some(v) = left.first() {
            left = left - self.reachable_within(v, left);
            count += 1;
        }
        count
    }

    /// Component count of `G - S`; zero when `S` covers every vertex.
    pub fn components_after_removal(&self, s: VertexSet) -> usize {
        self.components_within(self.vertices() - s)
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.components_within(self.vertices()) == 1
    }

    /// Hop distance between `x` and `y`, or `None` when they lie in different
    /// components.
    pub fn distance(&self, x: usize, y: usize) -> Option<usize> {
        if x == y {
            return Some(0);
        }
        let mut seen = VertexSet::singleton(x);
        let mut frontier = seen;
        let mut d = 0;
        while !frontier.is_empty() {
            d += 1;
            let next = self.neighbors_of_set(frontier) - seen;
            if next.contains(y) {
                return Some(d);
            }
            seen |= next;
            frontier = next;
        }
        None
    }

    /// Vertices at distance exactly two from `x`.
    pub fn second_neighborhood(&self, x: usize) -> VertexSet {
        let n1 = self.adj[x];
        self.neighbors_of_set(n1) - n1 - VertexSet::singleton(x)
    }

    /// BFS distance matrix; `None` for unreachable pairs.
    pub fn distance_matrix(&self) -> Vec<Vec<Option<usize>>> {
        (0..self.n)
            .map(|s| {
                let mut dist = vec![None; self.n];
                dist[s] = Some(0);
                let mut queue = VecDeque::from([s]);
                while let Some(a) = queue.pop_front() {
                    let da = dist[a].unwrap_or(0);
                    for b in self.adj[a].iter() {
                        if dist[b].is_none() {
                            dist[b] = Some(da + 1);
                            queue.push_back(b);
                        }
                    }
                }
                dist
            })
            .collect()
    }

    /// The graph with vertex `v` of `self` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        debug_assert_eq!(perm.len(), self.n);
        let mut adj = vec![VertexSet::EMPTY; self.n];
        for (a, b) in self.edges() {
            adj[perm[a]].insert(perm[b]);
            adj[perm[b]].insert(perm[a]);
        }
        Graph { n: self.n, adj }
    }

    /// Adds one vertex adjacent to exactly `nbrs`.
    pub fn with_new_vertex(&self, nbrs: VertexSet) -> Result<Graph, GraphError> {
        let n = self.n + 1;
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        if !nbrs.is_subset(self.vertices()) {
            let bad = (nbrs - self.vertices()).first().unwrap_or(n);
            return Err(GraphError::VertexOutOfRange {
                vertex: bad,
                n: self.n,
            });
        }
        let mut adj = self.adj.clone();
        for v in nbrs.iter() {
            adj[v].insert(self.n);
        }
        adj.push(nbrs);
        Ok(Graph { n, adj })
    }

    pub fn adjacency(&self) -> &[VertexSet] {
        &self.adj
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({}, {})", self.n, write_graph6(self))
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&write_graph6(self))
    }
}

#[cfg(test)]
mod tests {
    use super::families::*;
    use super::*;

    #[test]
    fn distance_examples() {
        let c6 = cycle(6);
        assert_eq!(c6.distance(0, 3), Some(3));
        let k4 = complete(4);
        for a in 0..4 {
            for b in 0..4 {
                if a != b {
                    assert_eq!(k4.distance(a, b), Some(1));
                }
            }
        }
        let p3 = path(3);
        assert_eq!(p3.distance(0, 2), Some(2));
        assert_eq!(p3.distance(1, 1), Some(0));
        let split = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(split.distance(0, 3), None);
    }

    #[test]
    fn components_after_removal_examples() {
        let k23 = complete_bipartite(2, 3);
        let two_side: VertexSet = [0, 1].iter().collect();
        assert_eq!(k23.components_after_removal(two_side), 3);
        let c6 = cycle(6);
        assert_eq!(c6.components_after_removal(VertexSet::EMPTY), 1);
        let antipodal: VertexSet = [0, 3].iter().collect();
        assert_eq!(c6.components_after_removal(antipodal), 2);
        assert_eq!(c6.components_after_removal(c6.vertices()), 0);
    }

    #[test]
    fn rejects_malformed_adjacency() {
        assert_eq!(Graph::from_edges(3, [(0, 0)]), Err(GraphError::SelfLoop(0)));
        assert_eq!(
            Graph::from_edges(3, [(0, 3)]),
            Err(GraphError::VertexOutOfRange { vertex: 3, n: 3 })
        );
        let asym = vec![VertexSet::singleton(1), VertexSet::EMPTY];
        assert_eq!(
            Graph::from_adjacency(asym),
            Err(GraphError::Asymmetric(0, 1))
        );
        assert!(Graph::empty(65).is_err());
    }

    #[test]
    fn degree_is_popcount() {
        let g = petersen();
        assert_eq!(g.edge_count(), 15);
        assert!((0..10).all(|v| g.degree(v) == 3));
        assert_eq!(g.second_neighborhood(0).len(), 6);
    }
}
