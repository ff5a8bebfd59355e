//! Maximum clique by bitset branch-and-bound with a greedy-coloring bound.

use crate::graph::{Graph, VertexSet};

/// Grow a clique greedily: repeatedly take the candidate with the most
/// neighbors among the remaining candidates, lowest index on ties.
pub fn greedy_clique(g: &Graph) -> VertexSet {
    let mut clique = VertexSet::EMPTY;
    let mut cand = g.vertices();
    while !cand.is_empty() {
        let v = cand
            .iter()
            .max_by_key(|&v| (g.neighbors(v).intersection(cand).len(), std::cmp::Reverse(v)))
            .expect("nonempty");
        clique.insert(v);
        cand = cand.intersection(g.neighbors(v));
    }
    clique
}

/// Partition `cand` into independent color classes greedily (in index
/// order); returns vertices in class order together with the class number
/// (1-based) of each, which bounds the clique size reachable from that
/// prefix.
fn color_order(g: &Graph, cand: VertexSet, order: &mut Vec<(usize, usize)>) {
    order.clear();
    let mut rest = cand;
    let mut k = 0;
    while !rest.is_empty() {
        k += 1;
        let mut avail = rest;
        while let Some(v) = avail.first() {
            order.push((v, k));
            rest.remove(v);
            avail = avail.difference(g.neighbors(v).with(v));
        }
    }
}

fn expand(g: &Graph, current: VertexSet, mut cand: VertexSet, best: &mut VertexSet) {
    let mut order = Vec::with_capacity(cand.len());
    color_order(g, cand, &mut order);
    for &(v, bound) in order.iter().rev() {
        if current.len() + bound <= best.len() {
            return;
        }
        let next = current.with(v);
        let sub = cand.intersection(g.neighbors(v));
        if sub.is_empty() {
            if next.len() > best.len() {
                *best = next;
            }
        } else {
            expand(g, next, sub, best);
        }
        cand.remove(v);
    }
}

/// A maximum clique (deterministic witness).
pub fn max_clique(g: &Graph) -> VertexSet {
    let mut best = greedy_clique(g);
    expand(g, VertexSet::EMPTY, g.vertices(), &mut best);
    best
}

pub fn clique_number(g: &Graph) -> usize {
    max_clique(g).len()
}

/// Every maximal independent set of `g` inside `within`, in the order the
/// Bron–Kerbosch recursion (lowest index first, no pivoting) reaches them.
pub(crate) fn maximal_independent_sets(g: &Graph, within: VertexSet, out: &mut Vec<VertexSet>) {
    fn rec(g: &Graph, r: VertexSet, p: VertexSet, mut x: VertexSet, out: &mut Vec<VertexSet>) {
        if p.is_empty() {
            if x.is_empty() {
                out.push(r);
            }
            return;
        }
        let mut p2 = p;
        while let Some(v) = p2.first() {
            let non = g.neighbors(v).with(v);
            rec(g, r.with(v), p2.difference(non), x.difference(non), out);
            p2.remove(v);
            x.insert(v);
        }
    }
    rec(g, VertexSet::EMPTY, within, VertexSet::EMPTY, out);
}
