//! Partial colorings whose classes are all large (`r`-greedy) and which
//! extend to an optimal coloring class for class (respectful), and the
//! search for one leaving the fewest vertices uncolored.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Deletion, Graph, VertexSet};
use crate::invariants::chromatic::is_colorable;
use crate::invariants::{chromatic_number, ORACLE_MAX_N};

/// Minimum class order used throughout unless configured otherwise.
pub const DEFAULT_R: usize = 3;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RespectfulError {
    #[error("partial coloring is for {partial} vertices but the graph has {graph}")]
    OrderMismatch { partial: usize, graph: usize },
    #[error("class {0} is empty")]
    EmptyClass(usize),
    #[error("class {class} contains vertices outside the graph")]
    OutOfRange { class: VertexSet },
    #[error("classes overlap at vertex {0}")]
    Overlap(usize),
    #[error("adjacent vertices {0} and {1} share a class")]
    NotIndependent(usize, usize),
    #[error("minimum class order must be at least 1")]
    ZeroR,
    #[error("exact search limited to {limit} vertices, graph has {n}")]
    GuardExceeded { n: usize, limit: usize },
}

/// Disjoint independent classes, not necessarily covering the graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PartialColoring {
    n: usize,
    classes: Vec<VertexSet>,
}

impl PartialColoring {
    pub fn new(n: usize, classes: Vec<VertexSet>) -> Self {
        PartialColoring { n, classes }
    }

    pub fn empty(n: usize) -> Self {
        PartialColoring { n, classes: vec![] }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn classes(&self) -> &[VertexSet] {
        &self.classes
    }

    /// Union of all classes.
    pub fn covered(&self) -> VertexSet {
        self.classes.iter().fold(VertexSet::EMPTY, |a, &c| a.union(c))
    }

    pub fn validate(&self, g: &Graph) -> Result<(), RespectfulError> {
        if self.n != g.order() {
            return Err(RespectfulError::OrderMismatch {
                partial: self.n,
                graph: g.order(),
            });
        }
        let mut seen = VertexSet::EMPTY;
        for (i, &class) in self.classes.iter().enumerate() {
            if class.is_empty() {
                return Err(RespectfulError::EmptyClass(i));
            }
            if !class.is_subset(g.vertices()) {
                return Err(RespectfulError::OutOfRange { class });
            }
            if let Some(v) = class.intersection(seen).first() {
                return Err(RespectfulError::Overlap(v));
            }
            seen = seen.union(class);
            for v in class {
                if let Some(u) = g.neighbors(v).intersection(class).first() {
                    return Err(RespectfulError::NotIndependent(v.min(u), v.max(u)));
                }
            }
        }
        Ok(())
    }
}

pub fn is_r_greedy(g: &Graph, p: &PartialColoring, r: usize) -> Result<bool, RespectfulError> {
    p.validate(g)?;
    Ok(p.classes.iter().all(|c| c.len() >= r))
}

/// `chi(G - covered) == chi(G) - |classes|`.
pub fn is_respectful(g: &Graph, p: &PartialColoring) -> Result<bool, RespectfulError> {
    p.validate(g)?;
    let rest = g.delete_vertices(p.covered()).expect("validated");
    Ok(chromatic_number(&rest.graph) + p.classes.len() == chromatic_number(g))
}

/// Minimal-remainder witness and the quantities derived from it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RemainderReport {
    pub r: usize,
    pub partial: PartialColoring,
    pub class_count: usize,
    pub remainder_order: usize,
    pub remainder_chi: usize,
}

impl RemainderReport {
    /// The uncolored induced subgraph, with its relabeling.
    pub fn remainder(&self, g: &Graph) -> Deletion {
        g.delete_vertices(self.partial.covered())
            .expect("report belongs to this graph")
    }
}

/// Every independent set of `g` with at least `r` vertices, ordered
/// lexicographically by sorted member list.
pub fn independent_sets_at_least(g: &Graph, r: usize) -> Vec<VertexSet> {
    fn rec(g: &Graph, r: usize, current: VertexSet, cand: VertexSet, out: &mut Vec<VertexSet>) {
        if current.len() >= r {
            out.push(current);
        }
        let mut cand = cand;
        while let Some(v) = cand.first() {
            cand.remove(v);
            let next = current.with(v);
            let next_cand = cand.difference(g.neighbors(v));
            if next.len() + next_cand.len() >= r {
                rec(g, r, next, next_cand, out);
            }
        }
    }
    let mut out = Vec::new();
    rec(g, r, VertexSet::EMPTY, g.vertices(), &mut out);
    out
}

struct Search<'g> {
    g: &'g Graph,
    chi: usize,
    sets: Vec<VertexSet>,
    /// `suffix[i]` is the union of `sets[i..]`.
    suffix: Vec<VertexSet>,
    family: Vec<VertexSet>,
    best_remainder: usize,
    best_family: Vec<VertexSet>,
}

impl Search<'_> {
    fn rec(&mut self, start: usize, covered: VertexSet) {
        let n = self.g.order();
        if self.family.len() == self.chi {
            return;
        }
        for i in start..self.sets.len() {
            let s = self.sets[i];
            if !s.is_disjoint(covered) {
                continue;
            }
            let cov = covered.union(s);
            let reach = cov.union(self.suffix[i + 1]);
            if n - reach.len() >= self.best_remainder {
                // neither this node nor any extension can improve
                continue;
            }
            // subfamilies of respectful families are respectful, so a
            // failed check prunes the whole subtree
            let rest = self.g.delete_vertices(cov).expect("within graph");
            if !is_colorable(&rest.graph, self.chi - self.family.len() - 1) {
                continue;
            }
            self.family.push(s);
            if n - cov.len() < self.best_remainder {
                self.best_remainder = n - cov.len();
                self.best_family = self.family.clone();
            }
            self.rec(i + 1, cov);
            self.family.pop();
        }
    }
}

/// A respectful `r`-greedy partial coloring of `g` leaving the fewest
/// vertices uncolored. Among equal remainders the family whose index
/// sequence into [`independent_sets_at_least`] is lexicographically least
/// wins.
pub fn minimal_remainder_respectful(g: &Graph, r: usize) -> Result<RemainderReport, RespectfulError> {
    if r == 0 {
        return Err(RespectfulError::ZeroR);
    }
    let n = g.order();
    if n > ORACLE_MAX_N {
        return Err(RespectfulError::GuardExceeded { n, limit: ORACLE_MAX_N });
    }
    let chi = chromatic_number(g);
    let sets = independent_sets_at_least(g, r);
    let mut suffix = vec![VertexSet::EMPTY; sets.len() + 1];
    for i in (0..sets.len()).rev() {
        suffix[i] = suffix[i + 1].union(sets[i]);
    }
    let mut search = Search {
        g,
        chi,
        sets,
        suffix,
        family: Vec::new(),
        best_remainder: n,
        best_family: Vec::new(),
    };
    search.rec(0, VertexSet::EMPTY);

    let partial = PartialColoring::new(n, search.best_family);
    let class_count = partial.classes.len();
    Ok(RemainderReport {
        r,
        class_count,
        remainder_order: search.best_remainder,
        remainder_chi: chi - class_count,
        partial,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().copied().collect()
    }

    /// Exhaustive minimum over every disjoint family of large independent
    /// sets, respectfulness checked directly on each.
    fn oracle_min_remainder(g: &Graph, r: usize) -> usize {
        fn rec(g: &Graph, sets: &[VertexSet], start: usize, fam: &mut Vec<VertexSet>, best: &mut usize) {
            let p = PartialColoring::new(g.order(), fam.clone());
            if is_respectful(g, &p).unwrap() {
                *best = (*best).min(g.order() - p.covered().len());
            }
            for i in start..sets.len() {
                if fam.iter().all(|c| c.is_disjoint(sets[i])) {
                    fam.push(sets[i]);
                    rec(g, sets, i + 1, fam, best);
                    fam.pop();
                }
            }
        }
        let sets: Vec<VertexSet> = (0u64..1 << g.order())
            .map(VertexSet::from_bits)
            .filter(|s| s.len() >= r && g.is_independent(*s))
            .collect();
        let mut best = g.order();
        rec(g, &sets, 0, &mut vec![], &mut best);
        best
    }

    #[test]
    fn greedy_examples() {
        let c6 = Graph::cycle(6).unwrap();
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(is_r_greedy(&c5, &PartialColoring::empty(5), 3), Ok(true));
        assert_eq!(is_r_greedy(&c6, &PartialColoring::new(6, vec![set(&[0, 2, 4])]), 3), Ok(true));
        assert_eq!(is_r_greedy(&c5, &PartialColoring::new(5, vec![set(&[0, 2])]), 3), Ok(false));
        assert_eq!(
            is_r_greedy(&c5, &PartialColoring::new(5, vec![set(&[0, 1])]), 1),
            Err(RespectfulError::NotIndependent(0, 1))
        );
    }

    #[test]
    fn respectful_examples() {
        let c6 = Graph::cycle(6).unwrap();
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(is_respectful(&c5, &PartialColoring::empty(5)), Ok(true));
        assert_eq!(is_respectful(&c6, &PartialColoring::new(6, vec![set(&[0, 2, 4])])), Ok(true));
        // remainder on {1, 3, 4} is K2 plus an isolated vertex: chi 2 = 3 - 1
        assert_eq!(is_respectful(&c5, &PartialColoring::new(5, vec![set(&[0, 2])])), Ok(true));
        let rest = c5.delete_vertices(set(&[0, 2])).unwrap();
        assert_eq!(chromatic_number(&rest.graph), 2);
    }

    #[test]
    fn minimal_remainder_examples() {
        let k4 = minimal_remainder_respectful(&Graph::complete(4).unwrap(), 3).unwrap();
        assert_eq!(k4.class_count, 0);
        assert_eq!(k4.remainder_order, 4);

        let c6 = minimal_remainder_respectful(&Graph::cycle(6).unwrap(), 3).unwrap();
        assert_eq!(c6.partial.classes(), &[set(&[0, 2, 4]), set(&[1, 3, 5])]);
        assert_eq!(c6.remainder_order, 0);
        assert_eq!(c6.remainder_chi, 0);

        let c5 = minimal_remainder_respectful(&Graph::cycle(5).unwrap(), 3).unwrap();
        assert!(c5.partial.classes().is_empty());
        assert_eq!(c5.remainder_order, 5);
    }

    #[test]
    fn minimal_remainder_errors() {
        let g = Graph::cycle(5).unwrap();
        assert_eq!(minimal_remainder_respectful(&g, 0), Err(RespectfulError::ZeroR));
        assert!(matches!(
            minimal_remainder_respectful(&Graph::empty(11).unwrap(), 3),
            Err(RespectfulError::GuardExceeded { .. })
        ));
    }

    #[test]
    fn search_matches_oracle_on_fixtures() {
        let fixtures = [
            Graph::empty(7).unwrap(),
            Graph::cycle(7).unwrap(),
            Graph::path(7).unwrap(),
            Graph::cycle(6).unwrap().complement(),
            Graph::from_edge_list(7, &[(0, 1), (0, 2), (0, 3), (4, 5), (5, 6), (4, 6)]).unwrap(),
        ];
        for g in fixtures {
            for r in 1..=4 {
                let rep = minimal_remainder_respectful(&g, r).unwrap();
                assert_eq!(rep.remainder_order, oracle_min_remainder(&g, r), "{g:?} r={r}");
                assert_eq!(is_r_greedy(&g, &rep.partial, r), Ok(true));
                assert_eq!(is_respectful(&g, &rep.partial), Ok(true));
            }
        }
    }

    #[test]
    fn independent_sets_in_canonical_order() {
        let sets = independent_sets_at_least(&Graph::cycle(6).unwrap(), 2);
        let as_vecs: Vec<Vec<usize>> = sets.iter().map(|s| s.to_vec()).collect();
        let mut sorted = as_vecs.clone();
        sorted.sort();
        assert_eq!(as_vecs, sorted);
        // 9 non-edges, plus the two triangles of the complement
        assert_eq!(sets.len(), 11);
    }
}
