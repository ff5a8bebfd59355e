//! Graph sources for sweeps: every graph of a given order up to
//! isomorphism, and seeded uniform random graphs.
//!
//! Isomorphism classes are produced by adding one vertex in every possible
//! way to each class representative of the previous order and keeping one
//! canonical labeling per class. The canonical labeling maximizes the
//! graph6 bit string over all orderings compatible with an equitable
//! degree refinement, found by branch-and-bound on bit-string prefixes.

use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use thiserror::Error;

use crate::graph::{Graph, VertexSet};

/// Largest order accepted by the exhaustive generator (274 668 classes).
pub const MAX_EXHAUSTIVE_N: usize = 9;

/// Number of isomorphism classes of graphs on `n` vertices, `n <= 9`.
pub const CLASS_COUNTS: [usize; 10] = [1, 1, 2, 4, 11, 34, 156, 1044, 12346, 274668];

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CatalogError {
    #[error("exhaustive generation supports n <= {MAX_EXHAUSTIVE_N}, got {0}")]
    TooLarge(usize),
    #[error("edge probability {0} outside [0, 1]")]
    BadProbability(f64),
    #[error("random graphs need 1 <= n <= 64, got {0}")]
    BadOrder(usize),
}

/// Ordered partition of the vertices, refined until every vertex in a cell
/// has the same number of neighbors in every cell.
fn equitable_cells(g: &Graph) -> Vec<VertexSet> {
    let n = g.order();
    let mut cells: Vec<VertexSet> = {
        let mut by_degree: Vec<(usize, usize)> = (0..n).map(|v| (g.degree(v), v)).collect();
        by_degree.sort();
        let mut cells: Vec<VertexSet> = Vec::new();
        let mut last = None;
        for (d, v) in by_degree {
            if last != Some(d) {
                cells.push(VertexSet::EMPTY);
                last = Some(d);
            }
            cells.last_mut().expect("pushed").insert(v);
        }
        cells
    };
    loop {
        let mut next: Vec<VertexSet> = Vec::with_capacity(n);
        for &cell in &cells {
            let mut sig: Vec<(Vec<usize>, usize)> = cell
                .iter()
                .map(|v| {
                    let nb = g.neighbors(v);
                    (cells.iter().map(|c| c.intersection(nb).len()).collect(), v)
                })
                .collect();
            sig.sort();
            let mut last: Option<&Vec<usize>> = None;
            for (s, v) in &sig {
                if last != Some(s) {
                    next.push(VertexSet::EMPTY);
                    last = Some(s);
                }
                next.last_mut().expect("pushed").insert(*v);
            }
        }
        if next.len() == cells.len() {
            return cells;
        }
        cells = next;
    }
}

struct Labeler<'g> {
    g: &'g Graph,
    /// Cell index for every position.
    cell_of_pos: Vec<usize>,
    cells: Vec<VertexSet>,
    order: Vec<usize>,
    total_bits: u32,
    best_key: Option<u64>,
    best_order: Vec<usize>,
}

impl Labeler<'_> {
    fn rec(&mut self, pos: usize, used: VertexSet, prefix: u64, bits: u32) {
        let n = self.g.order();
        if pos == n {
            if self.best_key.is_none_or(|b| prefix > b) {
                self.best_key = Some(prefix);
                self.best_order = self.order.clone();
            }
            return;
        }
        let avail = self.cells[self.cell_of_pos[pos]].difference(used);
        for v in avail {
            let mut p = prefix;
            for &u in &self.order {
                p = p << 1 | self.g.has_edge(u, v) as u64;
            }
            let b = bits + pos as u32;
            if let Some(best) = self.best_key {
                let best_prefix = best >> (self.total_bits - b);
                if p < best_prefix {
                    continue;
                }
            }
            self.order.push(v);
            self.rec(pos + 1, used.with(v), p, b);
            self.order.pop();
        }
    }
}

/// Canonical labeling: returns the relabeled graph and its graph6 bit
/// string as an integer (first bit most significant). Requires `n <= 11`.
pub fn canonical_form(g: &Graph) -> (Graph, u64) {
    let n = g.order();
    assert!(n <= 11, "canonical_form supports n <= 11");
    let cells = equitable_cells(g);
    let mut cell_of_pos = Vec::with_capacity(n);
    for (i, c) in cells.iter().enumerate() {
        cell_of_pos.extend(std::iter::repeat_n(i, c.len()));
    }
    let mut lab = Labeler {
        g,
        cell_of_pos,
        cells,
        order: Vec::with_capacity(n),
        total_bits: (n * n.saturating_sub(1) / 2) as u32,
        best_key: None,
        best_order: Vec::new(),
    };
    lab.rec(0, VertexSet::EMPTY, 0, 0);
    let mut perm = vec![0; n];
    for (pos, &v) in lab.best_order.iter().enumerate() {
        perm[v] = pos;
    }
    (g.relabel(&perm), lab.best_key.unwrap_or(0))
}

fn from_key(n: usize, key: u64) -> Graph {
    let total = n * n.saturating_sub(1) / 2;
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if key >> (total - 1 - k) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edge_list(n, &edges).expect("key within order")
}

fn extend_order(prev: &[Graph], n: usize) -> Vec<Graph> {
    let keys: HashSet<u64> = prev
        .par_iter()
        .flat_map_iter(|g| {
            let base = n - 1;
            (0u64..1 << base).map(move |mask| {
                let mut edges: Vec<(usize, usize)> = g.edges().collect();
                edges.extend(VertexSet::from_bits(mask).iter().map(|u| (u, base)));
                let h = Graph::from_edge_list(n, &edges).expect("in range");
                canonical_form(&h).1
            })
        })
        .collect();
    let mut keys: Vec<u64> = keys.into_iter().collect();
    keys.sort_unstable();
    keys.into_iter().map(|k| from_key(n, k)).collect()
}

/// One canonical representative per isomorphism class, for every order
/// `0..=max_n`; `result[n]` is sorted by graph6.
pub fn graphs_by_order(max_n: usize) -> Result<Vec<Vec<Graph>>, CatalogError> {
    if max_n > MAX_EXHAUSTIVE_N {
        return Err(CatalogError::TooLarge(max_n));
    }
    let mut out = vec![vec![Graph::empty(0).expect("n = 0")]];
    for n in 1..=max_n {
        let next = extend_order(&out[n - 1], n);
        out.push(next);
    }
    Ok(out)
}

/// All graphs of order `n`, up to isomorphism, sorted by graph6.
pub fn graphs_of_order(n: usize) -> Result<Vec<Graph>, CatalogError> {
    Ok(graphs_by_order(n)?.pop().expect("nonempty"))
}

/// All graphs of order `0..=max_n`, up to isomorphism, in order then graph6.
pub fn graphs_up_to(max_n: usize) -> Result<Vec<Graph>, CatalogError> {
    Ok(graphs_by_order(max_n)?.into_iter().flatten().collect())
}

/// `count` labeled graphs on `n` vertices, each pair an edge independently
/// with probability `p`, drawn from a ChaCha8 stream seeded with `seed`.
pub fn random_graphs(n: usize, p: f64, seed: u64, count: usize) -> Result<Vec<Graph>, CatalogError> {
    if !(0.0..=1.0).contains(&p) {
        return Err(CatalogError::BadProbability(p));
    }
    if n == 0 || n > crate::graph::MAX_VERTICES {
        return Err(CatalogError::BadOrder(n));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok((0..count).map(|_| random_graph(&mut rng, n, p)).collect())
}

pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for j in 1..n {
        for i in 0..j {
            if rng.gen_bool(p) {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edge_list(n, &edges).expect("in range")
}
