//! Exact vertex coloring by DSATUR branch-and-bound.
//!
//! Vertex selection: maximum saturation, then maximum degree in the
//! uncolored subgraph, then lowest index. A greedily grown clique is
//! precolored `0..|clique|` and gives the lower bound; a greedy DSATUR pass
//! gives the initial upper bound.

use crate::graph::{Graph, VertexSet};

use super::clique::greedy_clique;

const UNCOLORED: usize = usize::MAX;

struct Search<'g> {
    g: &'g Graph,
    colors: Vec<usize>,
    classes: Vec<VertexSet>,
    uncolored: VertexSet,
    /// Fewest colors found so far (or the exclusive cap when deciding).
    best: usize,
    best_colors: Option<Vec<usize>>,
    /// Stop as soon as a coloring with at most this many colors is found.
    stop_at: usize,
}

impl<'g> Search<'g> {
    fn new(g: &'g Graph, best: usize, stop_at: usize) -> Self {
        Search {
            g,
            colors: vec![UNCOLORED; g.order()],
            classes: Vec::new(),
            uncolored: g.vertices(),
            best,
            best_colors: None,
            stop_at,
        }
    }

    fn assign(&mut self, v: usize, c: usize) {
        if c == self.classes.len() {
            self.classes.push(VertexSet::EMPTY);
        }
        self.classes[c].insert(v);
        self.colors[v] = c;
        self.uncolored.remove(v);
    }

    fn unassign(&mut self, v: usize) {
        let c = self.colors[v];
        self.classes[c].remove(v);
        if c + 1 == self.classes.len() && self.classes[c].is_empty() {
            self.classes.pop();
        }
        self.colors[v] = UNCOLORED;
        self.uncolored.insert(v);
    }

    fn saturation(&self, v: usize) -> usize {
        let nb = self.g.neighbors(v);
        self.classes.iter().filter(|c| !c.is_disjoint(nb)).count()
    }

    fn select(&self) -> usize {
        let mut best = None;
        let mut best_key = (0usize, 0usize);
        for v in self.uncolored {
            let key = (
                self.saturation(v),
                self.g.neighbors(v).intersection(self.uncolored).len(),
            );
            if best.is_none() || key > best_key {
                best = Some(v);
                best_key = key;
            }
        }
        best.expect("select called with uncolored vertices")
    }

    /// Returns true once the search may stop.
    fn run(&mut self) -> bool {
        if self.uncolored.is_empty() {
            let used = self.classes.len();
            if used < self.best {
                self.best = used;
                self.best_colors = Some(self.colors.clone());
            }
            return self.best <= self.stop_at;
        }
        let v = self.select();
        let nb = self.g.neighbors(v);
        let used = self.classes.len();
        for c in 0..used {
            if self.classes[c].is_disjoint(nb) {
                self.assign(v, c);
                let done = self.run();
                self.unassign(v);
                if done {
                    return true;
                }
            }
        }
        if used + 1 < self.best {
            self.assign(v, used);
            let done = self.run();
            self.unassign(v);
            if done {
                return true;
            }
        }
        false
    }
}

/// Greedy DSATUR coloring; used for the initial upper bound.
pub fn dsatur_greedy(g: &Graph) -> Vec<usize> {
    let mut s = Search::new(g, usize::MAX, usize::MAX);
    while !s.uncolored.is_empty() {
        let v = s.select();
        let nb = g.neighbors(v);
        let c = (0..s.classes.len())
            .find(|&c| s.classes[c].is_disjoint(nb))
            .unwrap_or(s.classes.len());
        s.assign(v, c);
    }
    s.colors
}

fn count_colors(colors: &[usize]) -> usize {
    colors.iter().map(|&c| c + 1).max().unwrap_or(0)
}

/// Optimal coloring as one color index per vertex, colors `0..chi`.
pub fn optimal_coloring(g: &Graph) -> Vec<usize> {
    if g.order() == 0 {
        return Vec::new();
    }
    let clique = greedy_clique(g);
    let upper = dsatur_greedy(g);
    let ub = count_colors(&upper);
    if ub == clique.len() {
        return upper;
    }
    let mut s = Search::new(g, ub, clique.len());
    for (c, v) in clique.iter().enumerate() {
        s.assign(v, c);
    }
    s.run();
    s.best_colors.unwrap_or(upper)
}

/// A proper coloring with at most `k` colors, if one exists.
pub fn color_with_at_most(g: &Graph, k: usize) -> Option<Vec<usize>> {
    if g.order() == 0 {
        return Some(Vec::new());
    }
    let clique = greedy_clique(g);
    if clique.len() > k {
        return None;
    }
    let upper = dsatur_greedy(g);
    if count_colors(&upper) <= k {
        return Some(upper);
    }
    let mut s = Search::new(g, k + 1, k);
    for (c, v) in clique.iter().enumerate() {
        s.assign(v, c);
    }
    s.run();
    s.best_colors
}

pub fn is_colorable(g: &Graph, k: usize) -> bool {
    color_with_at_most(g, k).is_some()
}

pub fn chromatic_number(g: &Graph) -> usize {
    count_colors(&optimal_coloring(g))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn is_proper(g: &Graph, colors: &[usize]) -> bool {
        g.edges().all(|(u, v)| colors[u] != colors[v])
    }

    #[test]
    fn small_chromatic_numbers() {
        assert_eq!(chromatic_number(&Graph::empty(0).unwrap()), 0);
        assert_eq!(chromatic_number(&Graph::empty(3).unwrap()), 1);
        assert_eq!(chromatic_number(&Graph::complete(4).unwrap()), 4);
        assert_eq!(chromatic_number(&Graph::cycle(5).unwrap()), 3);
        assert_eq!(chromatic_number(&Graph::cycle(6).unwrap()), 2);
        assert_eq!(chromatic_number(&Graph::petersen()), 3);
    }

    #[test]
    fn witness_is_proper() {
        for g in [Graph::petersen(), Graph::cycle(7).unwrap(), Graph::complete(5).unwrap()] {
            let c = optimal_coloring(&g);
            assert!(is_proper(&g, &c));
            assert_eq!(count_colors(&c), chromatic_number(&g));
        }
    }

    #[test]
    fn decision_version() {
        let c5 = Graph::cycle(5).unwrap();
        assert!(!is_colorable(&c5, 2));
        let col = color_with_at_most(&c5, 3).unwrap();
        assert!(is_proper(&c5, &col));
        assert!(is_colorable(&Graph::empty(0).unwrap(), 0));
        assert!(!is_colorable(&Graph::empty(1).unwrap(), 0));
    }

    #[test]
    fn mycielski_grotzsch_needs_four() {
        // Grötzsch graph: triangle-free, chromatic number 4.
        let mut edges = vec![];
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i + 5, (i + 1) % 5));
            edges.push((i + 5, (i + 4) % 5));
            edges.push((i + 5, 10));
        }
        let g = Graph::from_edge_list(11, &edges).unwrap();
        assert_eq!(chromatic_number(&g), 4);
        assert_eq!(super::super::clique::max_clique(&g).len(), 2);
    }
}
