//! Optimal colorings: canonical form, stinginess (the largest number of
//! singleton classes over all optimal colorings), and class-size questions
//! quantified over every optimal coloring.

use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, VertexSet};
use crate::invariants::chromatic::{color_with_at_most, optimal_coloring};
use crate::invariants::clique::maximal_independent_sets;
use crate::invariants::{chromatic_number, ORACLE_MAX_N};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColoringError {
    #[error("coloring is for {coloring} vertices but the graph has {graph}")]
    OrderMismatch { coloring: usize, graph: usize },
    #[error("color class {0} is empty")]
    EmptyClass(usize),
    #[error("color classes overlap at vertex {0}")]
    Overlap(usize),
    #[error("vertex {0} is not colored")]
    Uncovered(usize),
    #[error("class {class} contains vertex {vertex} outside the graph")]
    OutOfRange { class: VertexSet, vertex: usize },
    #[error("adjacent vertices {0} and {1} share a color class")]
    NotIndependent(usize, usize),
    #[error("enumeration limited to {limit} vertices, graph has {n}")]
    GuardExceeded { n: usize, limit: usize },
}

/// A partition of the vertex set into nonempty independent classes, kept in
/// canonical form: classes ordered by their smallest member.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Coloring {
    n: usize,
    classes: Vec<VertexSet>,
}

impl Coloring {
    /// Canonicalizes the class order; does not validate.
    pub fn new(n: usize, mut classes: Vec<VertexSet>) -> Self {
        classes.sort_by_key(|c| c.first().unwrap_or(usize::MAX));
        Coloring { n, classes }
    }

    /// From one color index per vertex; color numbers need not be contiguous.
    pub fn from_colors(colors: &[usize]) -> Self {
        let k = colors.iter().map(|&c| c + 1).max().unwrap_or(0);
        let mut classes = vec![VertexSet::EMPTY; k];
        for (v, &c) in colors.iter().enumerate() {
            classes[c].insert(v);
        }
        classes.retain(|c| !c.is_empty());
        Coloring::new(colors.len(), classes)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn classes(&self) -> &[VertexSet] {
        &self.classes
    }

    pub fn num_colors(&self) -> usize {
        self.classes.len()
    }

    pub fn singleton_count(&self) -> usize {
        self.classes.iter().filter(|c| c.len() == 1).count()
    }

    pub fn max_class_size(&self) -> usize {
        self.classes.iter().map(|c| c.len()).max().unwrap_or(0)
    }

    /// Color index of each vertex under the canonical class order.
    pub fn colors(&self) -> Vec<usize> {
        let mut out = vec![usize::MAX; self.n];
        for (c, class) in self.classes.iter().enumerate() {
            for v in *class {
                out[v] = c;
            }
        }
        out
    }

    pub fn validate(&self, g: &Graph) -> Result<(), ColoringError> {
        if self.n != g.order() {
            return Err(ColoringError::OrderMismatch {
                coloring: self.n,
                graph: g.order(),
            });
        }
        let mut seen = VertexSet::EMPTY;
        for (i, &class) in self.classes.iter().enumerate() {
            if class.is_empty() {
                return Err(ColoringError::EmptyClass(i));
            }
            if let Some(v) = class.difference(g.vertices()).first() {
                return Err(ColoringError::OutOfRange { class, vertex: v });
            }
            if let Some(v) = class.intersection(seen).first() {
                return Err(ColoringError::Overlap(v));
            }
            seen = seen.union(class);
            for v in class {
                if let Some(u) = g.neighbors(v).intersection(class).first() {
                    return Err(ColoringError::NotIndependent(v.min(u), v.max(u)));
                }
            }
        }
        match g.vertices().difference(seen).first() {
            Some(v) => Err(ColoringError::Uncovered(v)),
            None => Ok(()),
        }
    }

    /// Rewrite class members through `map` (e.g. subgraph labels back to the
    /// parent graph's labels).
    pub fn relabel(&self, n: usize, map: &[usize]) -> Coloring {
        let classes = self
            .classes
            .iter()
            .map(|c| c.iter().map(|v| map[v]).collect())
            .collect();
        Coloring::new(n, classes)
    }
}

/// Some optimal coloring of `g`.
pub fn some_optimal_coloring(g: &Graph) -> Coloring {
    Coloring::from_colors(&optimal_coloring(g))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Stinginess {
    pub iota: usize,
    /// An optimal coloring with exactly `iota` singleton classes.
    pub witness: Coloring,
}

fn cliques_of_size(
    g: &Graph,
    size: usize,
    current: VertexSet,
    cand: VertexSet,
    f: &mut dyn FnMut(VertexSet) -> ControlFlow<()>,
) -> ControlFlow<()> {
    if current.len() == size {
        return f(current);
    }
    let mut cand = cand;
    while let Some(v) = cand.first() {
        cand.remove(v);
        if current.len() + 1 + cand.len() < size {
            break;
        }
        cliques_of_size(g, size, current.with(v), cand.intersection(g.neighbors(v)), f)?;
    }
    ControlFlow::Continue(())
}

/// Stinginess of `g` with a stingy witness.
///
/// The singleton classes of an optimal coloring are pairwise adjacent (two
/// nonadjacent singletons could be merged), so `iota >= t` exactly when some
/// `t`-clique `S` leaves `G - S` colorable with `chi - t` colors. Targets are
/// tried from `min(chi, omega)` downward; cliques in lexicographic order.
pub fn iota(g: &Graph) -> Stinginess {
    let chi = chromatic_number(g);
    let omega = crate::invariants::clique_number(g);
    for t in (1..=chi.min(omega)).rev() {
        let mut found = None;
        let _ = cliques_of_size(g, t, VertexSet::EMPTY, g.vertices(), &mut |s| {
            let rest = g.delete_vertices(s).expect("clique within graph");
            match color_with_at_most(&rest.graph, chi - t) {
                Some(colors) => {
                    let mut classes: Vec<VertexSet> = s.iter().map(VertexSet::singleton).collect();
                    let sub = Coloring::from_colors(&colors).relabel(g.order(), &rest.new_to_old);
                    classes.extend_from_slice(sub.classes());
                    found = Some(Coloring::new(g.order(), classes));
                    ControlFlow::Break(())
                }
                None => ControlFlow::Continue(()),
            }
        });
        if let Some(witness) = found {
            debug_assert_eq!(witness.singleton_count(), t);
            return Stinginess { iota: t, witness };
        }
    }
    Stinginess {
        iota: 0,
        witness: some_optimal_coloring(g),
    }
}

/// Whether `c` is an optimal coloring of `g` with the maximum number of
/// singleton classes.
pub fn is_stingy(g: &Graph, c: &Coloring) -> Result<bool, ColoringError> {
    c.validate(g)?;
    Ok(c.num_colors() == chromatic_number(g) && c.singleton_count() == iota(g).iota)
}

/// An optimal coloring of `g` having a class with more than `k` vertices,
/// if any exists.
///
/// Any such class extends to a maximal independent set that still leaves a
/// `(chi - 1)`-colorable remainder, so only maximal independent sets are
/// tried.
pub fn optimal_coloring_with_large_class(g: &Graph, k: usize) -> Option<Coloring> {
    let chi = chromatic_number(g);
    if chi == 0 {
        return None;
    }
    let mut sets = Vec::new();
    maximal_independent_sets(g, g.vertices(), &mut sets);
    for big in sets.into_iter().filter(|s| s.len() > k) {
        let rest = g.delete_vertices(big).expect("set within graph");
        if let Some(colors) = color_with_at_most(&rest.graph, chi - 1) {
            let sub = Coloring::from_colors(&colors).relabel(g.order(), &rest.new_to_old);
            let mut classes = sub.classes().to_vec();
            classes.push(big);
            return Some(Coloring::new(g.order(), classes));
        }
    }
    None
}

/// True iff every optimal coloring of `g` has all classes of size `<= k`.
pub fn all_optimal_classes_at_most(g: &Graph, k: usize) -> bool {
    optimal_coloring_with_large_class(g, k).is_none()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OptimalColorings {
    pub colorings: Vec<Coloring>,
    /// False when the budget ran out before the enumeration finished.
    pub complete: bool,
}

struct Enumerator<'g, 'f> {
    g: &'g Graph,
    chi: usize,
    classes: Vec<VertexSet>,
    visit: &'f mut dyn FnMut(&Coloring) -> ControlFlow<()>,
}

impl Enumerator<'_, '_> {
    fn rec(&mut self, v: usize) -> ControlFlow<()> {
        let n = self.g.order();
        if v == n {
            if self.classes.len() == self.chi {
                let c = Coloring {
                    n,
                    classes: self.classes.clone(),
                };
                return (self.visit)(&c);
            }
            return ControlFlow::Continue(());
        }
        let nb = self.g.neighbors(v);
        for i in 0..self.classes.len() {
            if self.classes[i].is_disjoint(nb) {
                self.classes[i].insert(v);
                let r = self.rec(v + 1);
                self.classes[i].remove(v);
                r?;
            }
        }
        // opening a class here still leaves enough vertices to open the rest
        if self.classes.len() < self.chi && n - v >= self.chi - self.classes.len() {
            self.classes.push(VertexSet::singleton(v));
            let r = self.rec(v + 1);
            self.classes.pop();
            r?;
        }
        ControlFlow::Continue(())
    }
}

/// Visit every optimal coloring of `g` exactly once, in canonical order
/// (vertex `v` joins an existing class, earliest first, before opening a new
/// one).
pub fn for_each_optimal_coloring(
    g: &Graph,
    visit: &mut dyn FnMut(&Coloring) -> ControlFlow<()>,
) -> Result<ControlFlow<()>, ColoringError> {
    let n = g.order();
    if n > ORACLE_MAX_N {
        return Err(ColoringError::GuardExceeded { n, limit: ORACLE_MAX_N });
    }
    let chi = chromatic_number(g);
    let mut e = Enumerator {
        g,
        chi,
        classes: Vec::with_capacity(chi),
        visit,
    };
    Ok(e.rec(0))
}

/// At most `budget` optimal colorings in canonical order.
pub fn enumerate_optimal_colorings(
    g: &Graph,
    budget: usize,
) -> Result<OptimalColorings, ColoringError> {
    let mut colorings = Vec::new();
    let mut complete = true;
    let _ = for_each_optimal_coloring(g, &mut |c| {
        if colorings.len() == budget {
            complete = false;
            return ControlFlow::Break(());
        }
        colorings.push(c.clone());
        ControlFlow::Continue(())
    })?;
    Ok(OptimalColorings {
        colorings,
        complete,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().copied().collect()
    }

    /// Brute force over all color assignments with exactly `k` colors
    /// appearing; partitions collected as sorted class lists.
    fn brute_optimal_partitions(g: &Graph) -> Vec<Vec<VertexSet>> {
        let n = g.order();
        let k = crate::invariants::oracle::oracle_chromatic_number(g).unwrap();
        let mut seen = std::collections::BTreeSet::new();
        let total = k.pow(n as u32);
        for mut code in 0..total {
            let mut classes = vec![VertexSet::EMPTY; k];
            for v in 0..n {
                classes[code % k].insert(v);
                code /= k;
            }
            if classes.iter().any(|c| c.is_empty() || !g.is_independent(*c)) {
                continue;
            }
            classes.sort_by_key(|c| c.first());
            seen.insert(classes);
        }
        seen.into_iter().collect()
    }

    #[test]
    fn iota_examples() {
        assert_eq!(iota(&Graph::complete(4).unwrap()).iota, 4);
        assert_eq!(iota(&Graph::cycle(5).unwrap()).iota, 1);
        assert_eq!(iota(&Graph::empty(3).unwrap()).iota, 0);
        assert_eq!(iota(&Graph::empty(0).unwrap()).iota, 0);
        assert_eq!(iota(&Graph::empty(1).unwrap()).iota, 1);
    }

    #[test]
    fn c5_colorings_all_have_one_singleton() {
        let c5 = Graph::cycle(5).unwrap();
        let parts = brute_optimal_partitions(&c5);
        assert_eq!(parts.len(), 5);
        for p in &parts {
            let mut sizes: Vec<_> = p.iter().map(|c| c.len()).collect();
            sizes.sort();
            assert_eq!(sizes, vec![1, 2, 2]);
        }
    }

    #[test]
    fn enumeration_examples() {
        let k3 = enumerate_optimal_colorings(&Graph::complete(3).unwrap(), 100).unwrap();
        assert!(k3.complete);
        assert_eq!(k3.colorings.len(), 1);
        assert_eq!(k3.colorings[0].classes(), &[set(&[0]), set(&[1]), set(&[2])]);

        let c4 = enumerate_optimal_colorings(&Graph::cycle(4).unwrap(), 100).unwrap();
        assert_eq!(c4.colorings.len(), 1);
        assert_eq!(c4.colorings[0].classes(), &[set(&[0, 2]), set(&[1, 3])]);

        let c5 = Graph::cycle(5).unwrap();
        let all = enumerate_optimal_colorings(&c5, 100).unwrap();
        assert_eq!(all.colorings.len(), 5);
        let expected: Vec<Vec<VertexSet>> = brute_optimal_partitions(&c5);
        let got: Vec<Vec<VertexSet>> = all.colorings.iter().map(|c| c.classes().to_vec()).collect();
        let mut got_sorted = got.clone();
        got_sorted.sort();
        assert_eq!(got_sorted, expected);
        // canonical emission order is lexicographic in the restricted growth string
        let strings: Vec<Vec<usize>> = all.colorings.iter().map(|c| c.colors()).collect();
        let mut sorted = strings.clone();
        sorted.sort();
        assert_eq!(strings, sorted);
    }

    #[test]
    fn enumeration_budget_and_guard() {
        let c5 = Graph::cycle(5).unwrap();
        let part = enumerate_optimal_colorings(&c5, 3).unwrap();
        assert_eq!(part.colorings.len(), 3);
        assert!(!part.complete);
        let exact = enumerate_optimal_colorings(&c5, 5).unwrap();
        assert!(exact.complete);
        assert_eq!(
            enumerate_optimal_colorings(&Graph::empty(11).unwrap(), 1),
            Err(ColoringError::GuardExceeded { n: 11, limit: 10 })
        );
    }

    #[test]
    fn stingy_checks() {
        let k4 = Graph::complete(4).unwrap();
        let singles = Coloring::new(4, (0..4).map(VertexSet::singleton).collect());
        assert_eq!(is_stingy(&k4, &singles), Ok(true));

        let c5 = Graph::cycle(5).unwrap();
        let bad = Coloring::new(5, vec![set(&[0, 1]), set(&[2, 4]), set(&[3])]);
        assert_eq!(is_stingy(&c5, &bad), Err(ColoringError::NotIndependent(0, 1)));

        let good = Coloring::new(5, vec![set(&[0, 2]), set(&[1, 3]), set(&[4])]);
        assert_eq!(is_stingy(&c5, &good), Ok(true));

        let w = iota(&Graph::petersen()).witness;
        assert_eq!(is_stingy(&Graph::petersen(), &w), Ok(true));
    }

    #[test]
    fn validation_errors() {
        let c5 = Graph::cycle(5).unwrap();
        let missing = Coloring::new(5, vec![set(&[0, 2]), set(&[1, 3])]);
        assert_eq!(missing.validate(&c5), Err(ColoringError::Uncovered(4)));
        let overlap = Coloring::new(5, vec![set(&[0, 2]), set(&[2, 4]), set(&[1, 3])]);
        assert_eq!(overlap.validate(&c5), Err(ColoringError::Overlap(2)));
        let wrong_n = Coloring::new(4, vec![]);
        assert!(matches!(wrong_n.validate(&c5), Err(ColoringError::OrderMismatch { .. })));
    }

    #[test]
    fn small_class_predicate_examples() {
        assert!(all_optimal_classes_at_most(&Graph::cycle(5).unwrap(), 2));
        assert!(!all_optimal_classes_at_most(&Graph::empty(3).unwrap(), 2));
        assert!(all_optimal_classes_at_most(&Graph::complete(4).unwrap(), 1));
        assert!(all_optimal_classes_at_most(&Graph::empty(0).unwrap(), 1));
        let c6 = Graph::cycle(6).unwrap();
        assert!(!all_optimal_classes_at_most(&c6, 2));
        let w = optimal_coloring_with_large_class(&c6, 2).unwrap();
        assert!(w.validate(&c6).is_ok());
        assert_eq!(w.max_class_size(), 3);
    }
}
