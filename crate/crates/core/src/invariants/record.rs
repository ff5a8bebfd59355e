use serde::{Deserialize, Serialize};

use crate::coloring::{all_optimal_classes_at_most, iota};
use crate::graph::Graph;
use crate::respectful::{minimal_remainder_respectful, RemainderReport, DEFAULT_R};

use super::{
    chromatic_number, clique_number, first_doubly_critical_edge, independence_number, max_degree,
    ORACLE_MAX_N,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecordOptions {
    /// Minimum class order for the minimal-remainder search.
    pub r: usize,
    /// Stinginess, the small-class predicate and the minimal-remainder
    /// search are only computed up to this order (never above
    /// [`ORACLE_MAX_N`]).
    pub max_enum_n: usize,
    /// When false only `n`, chi, omega, alpha and Delta are filled in.
    pub structural: bool,
}

impl Default for RecordOptions {
    fn default() -> Self {
        RecordOptions {
            r: DEFAULT_R,
            max_enum_n: ORACLE_MAX_N,
            structural: true,
        }
    }
}

impl RecordOptions {
    pub fn basic() -> Self {
        RecordOptions {
            structural: false,
            ..Default::default()
        }
    }
}

/// Every invariant the bound catalog reads, for one graph. Optional fields
/// are `None` when skipped by [`RecordOptions`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantRecord {
    pub n: usize,
    pub chi: usize,
    pub omega: usize,
    pub alpha: usize,
    pub delta: usize,
    pub iota: Option<usize>,
    pub has_doubly_critical_edge: Option<bool>,
    pub doubly_critical_witness: Option<(usize, usize)>,
    /// Every optimal coloring has all classes of order at most 2.
    pub optimal_classes_at_most_two: Option<bool>,
    pub remainder: Option<RemainderReport>,
}

impl InvariantRecord {
    pub fn compute(g: &Graph, opts: &RecordOptions) -> Self {
        let n = g.order();
        let mut rec = InvariantRecord {
            n,
            chi: chromatic_number(g),
            omega: clique_number(g),
            alpha: independence_number(g),
            delta: max_degree(g),
            iota: None,
            has_doubly_critical_edge: None,
            doubly_critical_witness: None,
            optimal_classes_at_most_two: None,
            remainder: None,
        };
        if !opts.structural {
            return rec;
        }
        let witness = first_doubly_critical_edge(g);
        rec.has_doubly_critical_edge = Some(witness.is_some());
        rec.doubly_critical_witness = witness;
        if n <= opts.max_enum_n.min(ORACLE_MAX_N) {
            rec.iota = Some(iota(g).iota);
            rec.optimal_classes_at_most_two = Some(all_optimal_classes_at_most(g, 2));
            rec.remainder = minimal_remainder_respectful(g, opts.r.max(1)).ok();
        }
        rec
    }
}
