//! Catalog of chromatic-number upper bounds, evaluated in exact rational
//! arithmetic against an [`InvariantRecord`].
//!
//! Every bound has the shape `chi <= rhs`, optionally guarded by a
//! hypothesis. A failed hypothesis makes the verdict vacuously satisfied; it
//! never counts as a hit. Disjunctive bounds use the larger of their two
//! right-hand sides, which is equivalent to "at least one side holds".

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;
use crate::invariants::InvariantRecord;

pub type Rational = Ratio<i64>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundError {
    #[error("bound {bound} needs `{field}`, which the record does not carry")]
    MissingInvariant { bound: BoundId, field: &'static str },
    #[error("record describes {record} vertices but the graph has {graph}")]
    RecordMismatch { record: usize, graph: usize },
    #[error("MAIN_RESULT pairs a graph with its complement; use evaluate_pair")]
    NeedsComplement,
    #[error("max(Delta, complement Delta) = {max_delta} is below (n - 1)/2 for n = {n}")]
    PigeonholeFailed { n: usize, max_delta: usize },
    #[error("unknown bound id `{0}`")]
    UnknownBound(String),
}

macro_rules! bound_ids {
    ($($variant:ident => $name:literal),* $(,)?) => {
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
        pub enum BoundId {
            $(#[serde(rename = $name)] $variant,)*
        }

        impl BoundId {
            pub const ALL: &'static [BoundId] = &[$(BoundId::$variant),*];

            pub fn as_str(self) -> &'static str {
                match self {
                    $(BoundId::$variant => $name,)*
                }
            }
        }

        impl FromStr for BoundId {
            type Err = BoundError;

            fn from_str(s: &str) -> Result<Self, BoundError> {
                match s.trim().to_ascii_uppercase().as_str() {
                    $($name => Ok(BoundId::$variant),)*
                    _ => Err(BoundError::UnknownBound(s.to_string())),
                }
            }
        }
    };
}

bound_ids! {
    Reed => "REED",
    DcThird => "DC_THIRD",
    ChiBigReed => "CHI_BIG_REED",
    Alpha2Reed => "ALPHA2_REED",
    SmallclassReed => "SMALLCLASS_REED",
    IotaAvg => "IOTA_AVG",
    RespectfulHalf => "RESPECTFUL_HALF",
    Key => "KEY",
    MainDisjunct => "MAIN_DISJUNCT",
    CorHalf => "COR_HALF",
    CorHalfMinus => "COR_HALF_MINUS",
    MainResult => "MAIN_RESULT",
    StingyReed => "STINGY_REED",
    EighthDisjunct => "EIGHTH_DISJUNCT",
}

impl fmt::Display for BoundId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Catalog metadata, serialized into report headers.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundSpec {
    pub id: BoundId,
    pub hypothesis: &'static str,
    pub formula: &'static str,
    pub description: &'static str,
    pub anchor: &'static str,
    /// Open conjecture: violations are reported, never fatal.
    pub conjectural: bool,
}

const CATALOG: &[BoundSpec] = &[
    BoundSpec {
        id: BoundId::Reed,
        hypothesis: "always",
        formula: "chi <= ceil((omega + Delta + 1)/2)",
        description: "Reed's conjecture",
        anchor: "Reed's conjecture",
        conjectural: true,
    },
    BoundSpec {
        id: BoundId::DcThird,
        hypothesis: "G has a doubly critical edge",
        formula: "chi <= omega/3 + 2(Delta + 1)/3",
        description: "graphs with a doubly critical edge",
        anchor: "doubly critical edge lemma",
        conjectural: false,
    },
    BoundSpec {
        id: BoundId::ChiBigReed,
        hypothesis: "chi > ceil(n/2)",
        formula: "chi <= (omega + Delta + 1)/2",
        description: "Reed's bound for large chromatic number",
        anchor: "large chromatic number lemma (matching theory)",
        conjectural: false,
    },
    BoundSpec {
        id: BoundId::Alpha2Reed,
        hypothesis: "alpha <= 2",
        formula: "chi <= ceil((omega + Delta + 1)/2)",
        description: "Reed's bound for independence number at most 2",
        anchor: "independence number two lemma (matching theory)",
        conjectural: false,
    },
    BoundSpec {
        id: BoundId::SmallclassReed,
        hypothesis: "every optimal coloring has all classes of order <= 2",
        formula: "chi <= ceil((omega + Delta + 1)/2)",
        description: "Reed's bound when optimal colorings have only small classes",
        anchor: "small color classes lemma",
        conjectural: false,
    },
    BoundSpec {
        id: BoundId::IotaAvg,
        hypothesis: "always",
        formula: "chi <= (iota + n)/2",
        description: "stinginess averaged with order",
        anchor: "stingy coloring lemma",
        conjectural: false,
    },
    BoundSpec {
        id: BoundId::RespectfulHalf,
        hypothesis: "always (|C| from a minimal-remainder respectful 3-greedy partial coloring)",
        formula: "chi <= (omega + Delta + 1)/2 + (|C| + 1)/2",
        description: "respectful greedy partial coloring with minimal remainder",
        anchor: "respectful 3-greedy lemma",
        conjectural: false,
    },
    BoundSpec {
        id: BoundId::Key,
        hypothesis: "always",
        formula: "chi <= (iota + omega + Delta + n + 2)/4",
        description: "stinginess bound",
        anchor: "key lemma",
        conjectural: false,
    },
    BoundSpec {
        id: BoundId::MainDisjunct,
        hypothesis: "always",
        formula: "chi <= omega/3 + 2(Delta + 1)/3  OR  chi <= (omega + n + Delta + 3)/4",
        description: "doubly-critical or quarter-order disjunction",
        anchor: "main disjunction theorem",
        conjectural: false,
    },
    BoundSpec {
        id: BoundId::CorHalf,
        hypothesis: "Delta >= n/2",
        formula: "chi <= omega/4 + 3(Delta + 1)/4",
        description: "large maximum degree",
        anchor: "corollary, Delta >= n/2",
        conjectural: false,
    },
    BoundSpec {
        id: BoundId::CorHalfMinus,
        hypothesis: "Delta >= (n - 1)/2",
        formula: "chi <= omega/4 + 3 Delta/4 + 1",
        description: "large maximum degree, relaxed",
        anchor: "corollary, Delta >= (n - 1)/2",
        conjectural: false,
    },
    BoundSpec {
        id: BoundId::MainResult,
        hypothesis: "always (graph paired with its complement)",
        formula: "G or complement(G) satisfies chi <= omega/4 + 3 Delta/4 + 1",
        description: "graph-or-complement quarter bound",
        anchor: "main result",
        conjectural: false,
    },
    BoundSpec {
        id: BoundId::StingyReed,
        hypothesis: "iota > omega/2",
        formula: "chi <= (omega + Delta + 1)/2",
        description: "Reed's bound for very stingy graphs",
        anchor: "lonely graph lemma",
        conjectural: false,
    },
    BoundSpec {
        id: BoundId::EighthDisjunct,
        hypothesis: "always",
        formula: "chi <= (omega + Delta + 1)/2  OR  chi <= 3 omega/8 + (n + Delta + 2)/4",
        description: "Reed or three-eighths disjunction",
        anchor: "three-eighths theorem",
        conjectural: false,
    },
];

pub fn catalog() -> &'static [BoundSpec] {
    CATALOG
}

impl BoundId {
    pub fn spec(self) -> &'static BoundSpec {
        CATALOG
            .iter()
            .find(|s| s.id == self)
            .expect("every id has a catalog entry")
    }

    pub fn is_conjectural(self) -> bool {
        self.spec().conjectural
    }
}

/// Which parts of a compound bound held.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum VerdictDetail {
    Disjuncts { first: bool, second: bool },
    Sides { graph: bool, complement: bool },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundVerdict {
    pub bound_id: BoundId,
    pub hypothesis_holds: bool,
    pub lhs: i64,
    #[serde(with = "ratio_string")]
    pub rhs_value: Rational,
    pub satisfied: bool,
    #[serde(with = "ratio_string")]
    pub slack: Rational,
    pub tight: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub detail: Option<VerdictDetail>,
}

impl BoundVerdict {
    fn new(bound_id: BoundId, hypothesis_holds: bool, lhs: usize, rhs: Rational) -> Self {
        let lhs = lhs as i64;
        let slack = rhs - lhs;
        let nonneg = slack >= Rational::from_integer(0);
        BoundVerdict {
            bound_id,
            hypothesis_holds,
            lhs,
            rhs_value: rhs,
            satisfied: !hypothesis_holds || nonneg,
            slack,
            tight: hypothesis_holds && slack == Rational::from_integer(0),
            detail: None,
        }
    }

    /// Hypothesis holds and the inequality fails.
    pub fn is_violation(&self) -> bool {
        !self.satisfied
    }
}

/// Serde adapter writing rationals as `"p/q"` (always with a denominator).
pub mod ratio_string {
    use super::Rational;
    use serde::{de, Deserialize, Deserializer, Serializer};

    pub fn format(r: &Rational) -> String {
        format!("{}/{}", r.numer(), r.denom())
    }

    pub fn parse(s: &str) -> Result<Rational, String> {
        let (p, q) = s.split_once('/').unwrap_or((s, "1"));
        let p: i64 = p.trim().parse().map_err(|e| format!("numerator: {e}"))?;
        let q: i64 = q.trim().parse().map_err(|e| format!("denominator: {e}"))?;
        if q == 0 {
            return Err("zero denominator".into());
        }
        Ok(Rational::new(p, q))
    }

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        parse(&s).map_err(de::Error::custom)
    }
}

fn q(n: usize) -> Rational {
    Rational::from_integer(n as i64)
}

fn frac(num: i64, den: i64) -> Rational {
    Rational::new(num, den)
}

/// `(omega + Delta + 1)/2`.
fn half_reed(rec: &InvariantRecord) -> Rational {
    (q(rec.omega) + q(rec.delta) + 1) / 2
}

/// `ceil((omega + Delta + 1)/2)`, as an integer operation.
fn reed_ceil(rec: &InvariantRecord) -> Rational {
    q((rec.omega + rec.delta + 2) / 2)
}

/// `omega/3 + 2(Delta + 1)/3`.
fn dc_third(rec: &InvariantRecord) -> Rational {
    q(rec.omega) * frac(1, 3) + (q(rec.delta) + 1) * frac(2, 3)
}

/// `(omega + n + Delta + 3)/4`.
fn quarter_order(rec: &InvariantRecord) -> Rational {
    (q(rec.omega) + q(rec.n) + q(rec.delta) + 3) / 4
}

/// `omega/4 + 3 Delta/4 + 1`.
pub fn quarter_bound(rec: &InvariantRecord) -> Rational {
    q(rec.omega) * frac(1, 4) + q(rec.delta) * frac(3, 4) + 1
}

/// `(iota + omega + Delta + n + 2)/4` for a given stinginess value.
pub fn key_bound(rec: &InvariantRecord, iota: usize) -> Rational {
    (q(iota) + q(rec.omega) + q(rec.delta) + q(rec.n) + 2) / 4
}

fn need<T: Copy>(v: Option<T>, bound: BoundId, field: &'static str) -> Result<T, BoundError> {
    v.ok_or(BoundError::MissingInvariant { bound, field })
}

fn disjunction(id: BoundId, chi: usize, a: Rational, b: Rational) -> BoundVerdict {
    let mut v = BoundVerdict::new(id, true, chi, a.max(b));
    v.detail = Some(VerdictDetail::Disjuncts {
        first: q(chi) <= a,
        second: q(chi) <= b,
    });
    v
}

/// Evaluate one bound. `g` is only used to confirm the record belongs to it.
pub fn evaluate_bound(
    g: &Graph,
    rec: &InvariantRecord,
    id: BoundId,
) -> Result<BoundVerdict, BoundError> {
    if rec.n != g.order() {
        return Err(BoundError::RecordMismatch {
            record: rec.n,
            graph: g.order(),
        });
    }
    let chi = rec.chi;
    let n = rec.n;
    let verdict = match id {
        BoundId::Reed => BoundVerdict::new(id, true, chi, reed_ceil(rec)),
        BoundId::DcThird => {
            let hyp = need(rec.has_doubly_critical_edge, id, "has_doubly_critical_edge")?;
            BoundVerdict::new(id, hyp, chi, dc_third(rec))
        }
        BoundId::ChiBigReed => BoundVerdict::new(id, chi > n.div_ceil(2), chi, half_reed(rec)),
        BoundId::Alpha2Reed => BoundVerdict::new(id, rec.alpha <= 2, chi, reed_ceil(rec)),
        BoundId::SmallclassReed => {
            let hyp = need(rec.optimal_classes_at_most_two, id, "optimal_classes_at_most_two")?;
            BoundVerdict::new(id, hyp, chi, reed_ceil(rec))
        }
        BoundId::IotaAvg => {
            let iota = need(rec.iota, id, "iota")?;
            BoundVerdict::new(id, true, chi, (q(iota) + q(n)) / 2)
        }
        BoundId::RespectfulHalf => {
            let rem = rec
                .remainder
                .as_ref()
                .ok_or(BoundError::MissingInvariant { bound: id, field: "remainder" })?;
            let rhs = half_reed(rec) + (q(rem.class_count) + 1) / 2;
            BoundVerdict::new(id, true, chi, rhs)
        }
        BoundId::Key => {
            let iota = need(rec.iota, id, "iota")?;
            BoundVerdict::new(id, true, chi, key_bound(rec, iota))
        }
        BoundId::MainDisjunct => disjunction(id, chi, dc_third(rec), quarter_order(rec)),
        BoundId::CorHalf => {
            let rhs = q(rec.omega) * frac(1, 4) + (q(rec.delta) + 1) * frac(3, 4);
            BoundVerdict::new(id, 2 * rec.delta >= n, chi, rhs)
        }
        BoundId::CorHalfMinus => {
            BoundVerdict::new(id, 2 * rec.delta + 1 >= n, chi, quarter_bound(rec))
        }
        BoundId::MainResult => return Err(BoundError::NeedsComplement),
        BoundId::StingyReed => {
            let iota = need(rec.iota, id, "iota")?;
            BoundVerdict::new(id, 2 * iota > rec.omega, chi, half_reed(rec))
        }
        BoundId::EighthDisjunct => {
            let eighth = q(rec.omega) * frac(3, 8) + (q(n) + q(rec.delta) + 2) / 4;
            disjunction(id, chi, half_reed(rec), eighth)
        }
    };
    Ok(verdict)
}

/// MAIN_RESULT: at least one of `g` and its complement satisfies
/// `chi <= omega/4 + 3 Delta/4 + 1`. The reported lhs/rhs/slack come from the
/// side with the larger slack (the graph itself on ties).
pub fn evaluate_pair(
    g: &Graph,
    rec_g: &InvariantRecord,
    rec_comp: &InvariantRecord,
) -> Result<BoundVerdict, BoundError> {
    if rec_g.n != g.order() {
        return Err(BoundError::RecordMismatch {
            record: rec_g.n,
            graph: g.order(),
        });
    }
    if rec_comp.n != rec_g.n {
        return Err(BoundError::RecordMismatch {
            record: rec_comp.n,
            graph: rec_g.n,
        });
    }
    let n = rec_g.n;
    let max_delta = rec_g.delta.max(rec_comp.delta);
    if 2 * max_delta + 1 < n {
        return Err(BoundError::PigeonholeFailed { n, max_delta });
    }
    let on_g = BoundVerdict::new(BoundId::MainResult, true, rec_g.chi, quarter_bound(rec_g));
    let on_comp = BoundVerdict::new(BoundId::MainResult, true, rec_comp.chi, quarter_bound(rec_comp));
    let sides = VerdictDetail::Sides {
        graph: on_g.satisfied,
        complement: on_comp.satisfied,
    };
    let mut best = if on_comp.slack > on_g.slack { on_comp } else { on_g };
    best.detail = Some(sides);
    Ok(best)
}

/// A failed bound on a specific graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ViolationRecord {
    pub graph6: String,
    pub bound_id: BoundId,
    pub lhs: i64,
    #[serde(with = "ratio_string")]
    pub rhs: Rational,
}

/// Aggregate over every verdict for one bound.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundSummary {
    pub id: BoundId,
    pub evaluated: u64,
    pub hypothesis_hits: u64,
    /// Includes vacuous satisfaction.
    pub satisfied: u64,
    pub violations: Vec<ViolationRecord>,
    /// Minimum over verdicts whose hypothesis held.
    #[serde(serialize_with = "opt_ratio")]
    pub min_slack: Option<Rational>,
    pub tight_count: u64,
    /// Tight witnesses in graph6, sorted, at most the configured cap.
    pub tight: Vec<String>,
    /// Graphs on which the bound could not be evaluated (a guarded
    /// invariant was not computed). Filled in by the sweep driver.
    pub skipped: u64,
}

fn opt_ratio<S: serde::Serializer>(r: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
    match r {
        Some(r) => s.serialize_str(&ratio_string::format(r)),
        None => s.serialize_none(),
    }
}

impl BoundSummary {
    pub fn new(id: BoundId) -> Self {
        BoundSummary {
            id,
            evaluated: 0,
            hypothesis_hits: 0,
            satisfied: 0,
            violations: Vec::new(),
            min_slack: None,
            tight_count: 0,
            tight: Vec::new(),
            skipped: 0,
        }
    }
}

/// Fold `(graph6, verdict)` pairs into per-bound summaries. Violation and
/// tight lists are sorted by graph6 so the result does not depend on input
/// order; `tight_cap` limits the stored tight witnesses, not the count.
pub fn slack_statistics<'a, I>(verdicts: I, tight_cap: usize) -> BTreeMap<BoundId, BoundSummary>
where
    I: IntoIterator<Item = (&'a str, &'a BoundVerdict)>,
{
    let mut out: BTreeMap<BoundId, BoundSummary> = BTreeMap::new();
    for (graph6, v) in verdicts {
        let s = out
            .entry(v.bound_id)
            .or_insert_with(|| BoundSummary::new(v.bound_id));
        s.evaluated += 1;
        if v.satisfied {
            s.satisfied += 1;
        } else {
            s.violations.push(ViolationRecord {
                graph6: graph6.to_string(),
                bound_id: v.bound_id,
                lhs: v.lhs,
                rhs: v.rhs_value,
            });
        }
        if v.hypothesis_holds {
            s.hypothesis_hits += 1;
            s.min_slack = Some(match s.min_slack {
                Some(m) => m.min(v.slack),
                None => v.slack,
            });
        }
        if v.tight {
            s.tight_count += 1;
            s.tight.push(graph6.to_string());
        }
    }
    for s in out.values_mut() {
        s.violations.sort_by(|a, b| a.graph6.cmp(&b.graph6));
        s.tight.sort();
        s.tight.truncate(tight_cap);
    }
    out
}
