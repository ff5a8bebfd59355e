//! Exact graph invariants: chromatic number, clique and independence
//! numbers, maximum degree, doubly critical edges, and the per-graph record
//! that bundles them for bound evaluation.

pub mod chromatic;
pub mod clique;
pub mod oracle;
mod record;

use thiserror::Error;

use crate::graph::{Graph, VertexSet};

pub use oracle::{oracle_chromatic_number, ORACLE_MAX_N};
pub use record::{InvariantRecord, RecordOptions};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvariantError {
    #[error("exhaustive computation limited to {limit} vertices, graph has {n}")]
    GuardExceeded { n: usize, limit: usize },
}

pub fn chromatic_number(g: &Graph) -> usize {
    chromatic::chromatic_number(g)
}

pub fn clique_number(g: &Graph) -> usize {
    clique::clique_number(g)
}

pub fn max_clique(g: &Graph) -> VertexSet {
    clique::max_clique(g)
}

/// Always equal to the clique number of the complement.
pub fn independence_number(g: &Graph) -> usize {
    clique::clique_number(&g.complement())
}

pub fn max_independent_set(g: &Graph) -> VertexSet {
    clique::max_clique(&g.complement())
}

/// Largest degree; 0 for the null graph.
pub fn max_degree(g: &Graph) -> usize {
    (0..g.order()).map(|v| g.degree(v)).max().unwrap_or(0)
}

/// Edges `uv` (with `u < v`, in edge order) such that deleting both
/// endpoints lowers the chromatic number by exactly two.
pub fn doubly_critical_edges(g: &Graph) -> Vec<(usize, usize)> {
    let chi = chromatic_number(g);
    if g.order() < 2 || chi < 2 {
        return Vec::new();
    }
    g.edges()
        .filter(|&(u, v)| {
            let rest = g
                .delete_vertices(VertexSet::singleton(u).with(v))
                .expect("edge endpoints in range");
            chromatic_number(&rest.graph) == chi - 2
        })
        .collect()
}

/// First doubly critical edge in edge order, if any.
pub fn first_doubly_critical_edge(g: &Graph) -> Option<(usize, usize)> {
    let chi = chromatic_number(g);
    if chi < 2 {
        return None;
    }
    g.edges().find(|&(u, v)| {
        let rest = g
            .delete_vertices(VertexSet::singleton(u).with(v))
            .expect("edge endpoints in range");
        chromatic::is_colorable(&rest.graph, chi - 2)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn independence_examples() {
        assert_eq!(independence_number(&Graph::complete(4).unwrap()), 1);
        assert_eq!(independence_number(&Graph::cycle(5).unwrap()), 2);
        assert_eq!(independence_number(&Graph::empty(3).unwrap()), 3);
        assert_eq!(independence_number(&Graph::petersen()), 4);
        let s = max_independent_set(&Graph::petersen());
        assert!(Graph::petersen().is_independent(s));
    }

    #[test]
    fn degree_examples() {
        assert_eq!(max_degree(&Graph::cycle(5).unwrap()), 2);
        assert_eq!(max_degree(&Graph::complete(4).unwrap()), 3);
        let star = Graph::from_edge_list(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(max_degree(&star), 3);
        assert_eq!(max_degree(&Graph::empty(0).unwrap()), 0);
    }

    #[test]
    fn doubly_critical_examples() {
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(doubly_critical_edges(&k4), k4.edges().collect::<Vec<_>>());
        assert_eq!(doubly_critical_edges(&Graph::cycle(5).unwrap()), vec![]);
        assert_eq!(doubly_critical_edges(&Graph::complete(2).unwrap()), vec![(0, 1)]);
        assert_eq!(doubly_critical_edges(&Graph::empty(1).unwrap()), vec![]);
        assert_eq!(first_doubly_critical_edge(&k4), Some((0, 1)));
        assert_eq!(first_doubly_critical_edge(&Graph::cycle(5).unwrap()), None);
    }

    #[test]
    fn c5_edge_deletions_leave_p3() {
        let c5 = Graph::cycle(5).unwrap();
        for (u, v) in c5.edges() {
            let rest = c5.delete_vertices(VertexSet::singleton(u).with(v)).unwrap();
            assert_eq!(oracle_chromatic_number(&rest.graph), Ok(2));
        }
    }
}
