//! Simple undirected graphs on at most 64 vertices, stored as one neighbor
//! bitset per vertex.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest vertex count a [`Graph`] can hold; one `u64` per neighbor set.
pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex count {0} exceeds the supported maximum of {MAX_VERTICES}")]
    TooManyVertices(usize),
    #[error("edge endpoint {vertex} out of range for a graph on {n} vertices")]
    EndpointOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex set {set} references vertices outside 0..{n}")]
    SetOutOfRange { set: VertexSet, n: usize },
}

/// A set of vertex indices packed into a single machine word.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "Vec<usize>", try_from = "Vec<usize>")]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    #[inline]
    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    #[inline]
    pub const fn bits(self) -> u64 {
        self.0
    }

    /// `{0, 1, ..., n-1}`.
    #[inline]
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n == MAX_VERTICES {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    #[inline]
    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 >> v & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    #[inline]
    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | 1u64 << v)
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    #[inline]
    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    #[inline]
    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Smallest member, if any.
    #[inline]
    pub fn first(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Members in ascending order.
    #[inline]
    pub fn iter(self) -> Members {
        Members(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl From<VertexSet> for Vec<usize> {
    fn from(s: VertexSet) -> Self {
        s.to_vec()
    }
}

impl TryFrom<Vec<usize>> for VertexSet {
    type Error = String;

    fn try_from(v: Vec<usize>) -> Result<Self, Self::Error> {
        match v.iter().find(|&&x| x >= MAX_VERTICES) {
            Some(x) => Err(format!("vertex {x} out of range")),
            None => Ok(v.into_iter().collect()),
        }
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Members;

    fn into_iter(self) -> Members {
        self.iter()
    }
}

#[derive(Debug, Clone)]
pub struct Members(u64);

impl Iterator for Members {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for Members {}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// Simple undirected labeled graph. Immutable once built.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
    edge_count: usize,
}

/// Result of [`Graph::delete_vertices`]: the induced subgraph plus the
/// relabeling in both directions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Deletion {
    pub graph: Graph,
    /// `old_to_new[v]` is `None` for deleted vertices.
    pub old_to_new: Vec<Option<usize>>,
    pub new_to_old: Vec<usize>,
}

impl Deletion {
    /// Map a set over the subgraph's labels back to the original labels.
    pub fn lift(&self, s: VertexSet) -> VertexSet {
        s.iter().map(|v| self.new_to_old[v]).collect()
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        Ok(Graph {
            n,
            adj: vec![VertexSet::EMPTY; n],
            edge_count: 0,
        })
    }

    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::EndpointOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            g.adj[u].insert(v);
            g.adj[v].insert(u);
        }
        g.recount();
        Ok(g)
    }

    /// Builds a graph from raw neighbor sets. Caller guarantees symmetry and
    /// no loops; checked in debug builds.
    pub(crate) fn from_adjacency(adj: Vec<VertexSet>) -> Self {
        let mut g = Graph {
            n: adj.len(),
            adj,
            edge_count: 0,
        };
        debug_assert!(g.n <= MAX_VERTICES);
        debug_assert!((0..g.n).all(|v| !g.adj[v].contains(v)
            && g.adj[v].is_subset(VertexSet::full(g.n))
            && g.adj[v].iter().all(|u| g.adj[u].contains(v))));
        g.recount();
        g
    }

    fn recount(&mut self) {
        self.edge_count = self.adj.iter().map(|s| s.len()).sum::<usize>() / 2;
    }

    pub fn complete(n: usize) -> Result<Self, GraphError> {
        Ok(Graph::empty(n)?.complement())
    }

    pub fn cycle(n: usize) -> Result<Self, GraphError> {
        let edges: Vec<_> = if n >= 3 {
            (0..n).map(|i| (i, (i + 1) % n)).collect()
        } else {
            (1..n).map(|i| (i - 1, i)).collect()
        };
        Graph::from_edge_list(n, &edges)
    }

    pub fn path(n: usize) -> Result<Self, GraphError> {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edge_list(n, &edges)
    }

    /// The Petersen graph: outer 5-cycle 0..5, inner pentagram 5..10.
    pub fn petersen() -> Self {
        let mut edges = Vec::with_capacity(15);
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::from_edge_list(10, &edges).expect("static edge list")
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.adj[u]
                .iter()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    pub fn complement(&self) -> Graph {
        let all = self.vertices();
        let adj = (0..self.n)
            .map(|v| all.difference(self.adj[v]).difference(VertexSet::singleton(v)))
            .collect();
        Graph::from_adjacency(adj)
    }

    /// True when no two members of `s` are adjacent.
    pub fn is_independent(&self, s: VertexSet) -> bool {
        s.iter().all(|v| self.adj[v].is_disjoint(s))
    }

    /// True when every two members of `s` are adjacent.
    pub fn is_clique(&self, s: VertexSet) -> bool {
        s.iter().all(|v| s.difference(VertexSet::singleton(v)).is_subset(self.adj[v]))
    }

    pub fn check_set(&self, s: VertexSet) -> Result<(), GraphError> {
        if s.is_subset(self.vertices()) {
            Ok(())
        } else {
            Err(GraphError::SetOutOfRange { set: s, n: self.n })
        }
    }

    /// Induced subgraph on `V \ s`, relabeled contiguously in increasing
    /// order of the surviving vertices.
    pub fn delete_vertices(&self, s: VertexSet) -> Result<Deletion, GraphError> {
        self.check_set(s)?;
        let keep = self.vertices().difference(s);
        let new_to_old: Vec<usize> = keep.to_vec();
        let mut old_to_new = vec![None; self.n];
        for (new, &old) in new_to_old.iter().enumerate() {
            old_to_new[old] = Some(new);
        }
        let adj = new_to_old
            .iter()
            .map(|&old| {
                self.adj[old]
                    .intersection(keep)
                    .iter()
                    .filter_map(|u| old_to_new[u])
                    .collect()
            })
            .collect();
        Ok(Deletion {
            graph: Graph::from_adjacency(adj),
            old_to_new,
            new_to_old,
        })
    }

    /// Induced subgraph `G[s]`.
    pub fn induced(&self, s: VertexSet) -> Result<Deletion, GraphError> {
        self.check_set(s)?;
        self.delete_vertices(self.vertices().difference(s))
    }

    /// Apply a relabeling: vertex `v` of `self` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length mismatch");
        let mut adj = vec![VertexSet::EMPTY; self.n];
        for (u, v) in self.edges() {
            adj[perm[u]].insert(perm[v]);
            adj[perm[v]].insert(perm[u]);
        }
        Graph::from_adjacency(adj)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c5() -> Graph {
        Graph::from_edge_list(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]).unwrap()
    }

    #[test]
    fn edge_list_construction() {
        let e3 = Graph::from_edge_list(3, &[]).unwrap();
        assert_eq!(e3.edge_count(), 0);

        let g = c5();
        assert!((0..5).all(|v| g.degree(v) == 2));
        assert_eq!(g.edge_count(), 5);

        let all: Vec<_> = (0..4).flat_map(|u| (u + 1..4).map(move |v| (u, v))).collect();
        let k4 = Graph::from_edge_list(4, &all).unwrap();
        assert_eq!(k4.edge_count(), 6);
        assert_eq!(k4, Graph::complete(4).unwrap());
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = Graph::from_edge_list(3, &[(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn construction_errors() {
        assert_eq!(
            Graph::from_edge_list(3, &[(0, 3)]),
            Err(GraphError::EndpointOutOfRange { vertex: 3, n: 3 })
        );
        assert_eq!(Graph::from_edge_list(3, &[(1, 1)]), Err(GraphError::SelfLoop(1)));
        assert_eq!(Graph::empty(65), Err(GraphError::TooManyVertices(65)));
        assert!(Graph::empty(64).is_ok());
    }

    #[test]
    fn complement_examples() {
        assert_eq!(Graph::complete(4).unwrap().complement(), Graph::empty(4).unwrap());
        assert_eq!(Graph::empty(3).unwrap().complement(), Graph::complete(3).unwrap());
        // C5 -> pentagram, which is C5 under i -> 2i mod 5
        let comp = c5().complement();
        let relabeled = comp.relabel(&[0, 3, 1, 4, 2]);
        assert_eq!(relabeled, c5());
    }

    #[test]
    fn delete_vertex_examples() {
        let d = c5().delete_vertices(VertexSet::singleton(0)).unwrap();
        assert_eq!(d.graph, Graph::path(4).unwrap());
        assert_eq!(d.graph.edge_count(), 3);
        assert_eq!(d.new_to_old, vec![1, 2, 3, 4]);
        assert_eq!(d.old_to_new[0], None);

        let k4 = Graph::complete(4).unwrap();
        let d = k4.delete_vertices([0, 1].into_iter().collect()).unwrap();
        assert_eq!(d.graph, Graph::complete(2).unwrap());

        let d = c5().delete_vertices(VertexSet::EMPTY).unwrap();
        assert_eq!(d.graph, c5());

        assert!(c5().delete_vertices(VertexSet::singleton(7)).is_err());
    }

    #[test]
    fn full_sets_at_boundaries() {
        assert_eq!(VertexSet::full(0), VertexSet::EMPTY);
        assert_eq!(VertexSet::full(64).len(), 64);
        let g = Graph::complete(64).unwrap();
        assert_eq!(g.edge_count(), 64 * 63 / 2);
        assert_eq!(g.complement().edge_count(), 0);
    }

    #[test]
    fn petersen_is_cubic() {
        let p = Graph::petersen();
        assert_eq!(p.edge_count(), 15);
        assert!((0..10).all(|v| p.degree(v) == 3));
    }
}
