//! Batch driver: read or generate graphs, compute each graph's invariants
//! and verdicts on a worker pool, and fold the results into a report whose
//! bytes depend only on the configuration.

mod config;
mod report;

use std::collections::BTreeMap;
use std::fs;
use std::io::{self, Read};
use std::path::PathBuf;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::bounds::{
    evaluate_bound, evaluate_pair, slack_statistics, BoundError, BoundId, BoundSummary,
    BoundVerdict,
};
use crate::catalog::{graphs_up_to, random_graphs, CatalogError};
use crate::coloring::{iota, Coloring};
use crate::graph::Graph;
use crate::graph6::{self, Graph6Error};
use crate::invariants::{doubly_critical_edges, InvariantRecord, RecordOptions};

pub use config::{ConfigEcho, InputSource, SweepConfig};
pub use report::{MalformedLine, SweepReport, Totals};

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },
    #[error("cannot decode graph6: {0}")]
    Decode(#[from] Graph6Error),
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error(transparent)]
    Bound(#[from] BoundError),
    #[error("cannot start worker pool: {0}")]
    Pool(#[from] rayon::ThreadPoolBuildError),
}

/// One graph ready for analysis.
#[derive(Debug, Clone)]
pub struct InputGraph {
    /// 1-based line number for file input, 1-based position otherwise.
    pub line: usize,
    pub graph6: String,
    pub graph: Graph,
}

#[derive(Debug, Clone, Default)]
pub struct LoadedInput {
    pub graphs: Vec<InputGraph>,
    pub malformed: Vec<MalformedLine>,
    pub input_lines: u64,
}

fn parse_lines(text: &str) -> LoadedInput {
    let mut out = LoadedInput::default();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim_end_matches('\r');
        if line.trim().is_empty() {
            continue;
        }
        out.input_lines += 1;
        match graph6::decode_str(line) {
            Ok(graph) => out.graphs.push(InputGraph {
                line: i + 1,
                graph6: graph6::encode(&graph),
                graph,
            }),
            Err(e) => out.malformed.push(MalformedLine {
                line: i + 1,
                error: e.to_string(),
            }),
        }
    }
    out
}

fn from_graphs(graphs: Vec<Graph>) -> LoadedInput {
    LoadedInput {
        input_lines: graphs.len() as u64,
        graphs: graphs
            .into_iter()
            .enumerate()
            .map(|(i, graph)| InputGraph {
                line: i + 1,
                graph6: graph6::encode(&graph),
                graph,
            })
            .collect(),
        malformed: Vec::new(),
    }
}

/// Read or generate the graphs of a source. Malformed lines are collected,
/// not fatal; an unreadable source is.
pub fn load_input(source: &InputSource) -> Result<LoadedInput, HarnessError> {
    match source {
        InputSource::Graph6File(path) => {
            let text = fs::read_to_string(path).map_err(|source| HarnessError::Io {
                path: path.clone(),
                source,
            })?;
            Ok(parse_lines(&text))
        }
        InputSource::Stdin => {
            let mut text = String::new();
            io::stdin()
                .read_to_string(&mut text)
                .map_err(|source| HarnessError::Io {
                    path: PathBuf::from("-"),
                    source,
                })?;
            Ok(parse_lines(&text))
        }
        InputSource::Lines(lines) => Ok(parse_lines(&lines.join("\n"))),
        InputSource::Exhaustive(n) => Ok(from_graphs(graphs_up_to(*n)?)),
        InputSource::Random { n, p, seed, count } => Ok(from_graphs(random_graphs(*n, *p, *seed, *count)?)),
    }
}

/// Everything computed for one graph.
#[derive(Debug, Clone, Serialize)]
pub struct GraphOutcome {
    pub graph6: String,
    pub record: InvariantRecord,
    pub verdicts: Vec<BoundVerdict>,
    /// Bounds not evaluated because a guarded invariant is missing.
    pub skipped: Vec<BoundId>,
}

/// Compute the record for `g` and evaluate the selected bounds on it.
pub fn analyze_graph(
    g: &Graph,
    graph6: String,
    bounds: &[BoundId],
    opts: &RecordOptions,
) -> Result<GraphOutcome, BoundError> {
    let record = InvariantRecord::compute(g, opts);
    let mut verdicts = Vec::with_capacity(bounds.len());
    let mut skipped = Vec::new();
    for &id in bounds {
        let v = if id == BoundId::MainResult {
            let comp = InvariantRecord::compute(&g.complement(), &RecordOptions::basic());
            evaluate_pair(g, &record, &comp)
        } else {
            evaluate_bound(g, &record, id)
        };
        match v {
            Ok(v) => verdicts.push(v),
            Err(BoundError::MissingInvariant { .. }) => skipped.push(id),
            Err(e) => return Err(e),
        }
    }
    Ok(GraphOutcome {
        graph6,
        record,
        verdicts,
        skipped,
    })
}

fn echo_violation(graph6: &str, v: &BoundVerdict) {
    let level = if v.bound_id.is_conjectural() { "CRITICAL" } else { "VIOLATION" };
    eprintln!(
        "{level}: {} fails on {graph6}: chi = {} > {}",
        v.bound_id,
        v.lhs,
        crate::bounds::ratio_string::format(&v.rhs_value)
    );
}

/// Analyze every input graph on a pool of `config.jobs` workers. Output
/// order is the input order regardless of the worker count.
pub fn analyze_all(
    input: &LoadedInput,
    config: &SweepConfig,
) -> Result<Vec<GraphOutcome>, HarnessError> {
    let opts = RecordOptions {
        r: config.r,
        max_enum_n: config.max_enum_n,
        structural: true,
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs)
        .build()?;
    let outcomes: Result<Vec<GraphOutcome>, BoundError> = pool.install(|| {
        input
            .graphs
            .par_iter()
            .map(|ig| {
                let out = analyze_graph(&ig.graph, ig.graph6.clone(), &config.bounds, &opts)?;
                if config.echo_violations {
                    for v in out.verdicts.iter().filter(|v| v.is_violation()) {
                        echo_violation(&out.graph6, v);
                    }
                }
                Ok(out)
            })
            .collect()
    });
    Ok(outcomes?)
}

/// Fold outcomes into a report. Deterministic in the outcome list.
pub fn build_report(
    config: &SweepConfig,
    input: &LoadedInput,
    outcomes: &[GraphOutcome],
) -> SweepReport {
    let mut pairs: Vec<(&str, &BoundVerdict)> = outcomes
        .iter()
        .flat_map(|o| o.verdicts.iter().map(move |v| (o.graph6.as_str(), v)))
        .collect();
    pairs.sort_by(|a, b| a.0.cmp(b.0).then(a.1.bound_id.cmp(&b.1.bound_id)));
    let mut stats = slack_statistics(pairs.iter().copied(), config.tight_cap);

    let mut skipped: BTreeMap<BoundId, u64> = BTreeMap::new();
    for id in outcomes.iter().flat_map(|o| o.skipped.iter()) {
        *skipped.entry(*id).or_default() += 1;
    }
    let mut selected = config.bounds.clone();
    selected.sort();
    selected.dedup();
    let per_bound: Vec<BoundSummary> = selected
        .iter()
        .map(|&id| {
            let mut s = stats.remove(&id).unwrap_or_else(|| BoundSummary::new(id));
            s.skipped = skipped.get(&id).copied().unwrap_or(0);
            s
        })
        .collect();

    let mut totals = Totals {
        input_lines: input.input_lines,
        malformed_lines: input.malformed.len() as u64,
        graphs_processed: outcomes.len() as u64,
        verdicts: pairs.len() as u64,
        ..Default::default()
    };
    for s in &per_bound {
        if s.id.is_conjectural() {
            totals.conjectural_violations += s.violations.len() as u64;
        } else {
            totals.proven_violations += s.violations.len() as u64;
        }
    }

    SweepReport {
        config: config.echo(),
        catalog: selected.iter().map(|id| id.spec().clone()).collect(),
        per_bound,
        malformed: input.malformed.clone(),
        totals,
        wall_time_ms: None,
    }
}

/// Run a full sweep.
pub fn run_sweep(config: &SweepConfig) -> Result<SweepReport, HarnessError> {
    config.validate()?;
    let start = Instant::now();
    let input = load_input(&config.input)?;
    let outcomes = analyze_all(&input, config)?;
    let mut report = build_report(config, &input, &outcomes);
    if config.record_timing {
        report.wall_time_ms = Some(start.elapsed().as_millis() as u64);
    }
    Ok(report)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WitnessMode {
    /// Slack exactly zero with the hypothesis holding.
    Tight,
    /// Hypothesis holds and slack is negative.
    Violation,
}

/// graph6 strings of every input graph that is tight for (or violates)
/// `bound`, sorted and without duplicates.
pub fn find_witnesses(
    bound: BoundId,
    mode: WitnessMode,
    config: &SweepConfig,
) -> Result<Vec<String>, HarnessError> {
    let mut config = config.clone();
    config.bounds = vec![bound];
    config.validate()?;
    let input = load_input(&config.input)?;
    let outcomes = analyze_all(&input, &config)?;
    let mut out: Vec<String> = outcomes
        .into_iter()
        .filter(|o| {
            o.verdicts.iter().any(|v| match mode {
                WitnessMode::Tight => v.tight,
                WitnessMode::Violation => v.is_violation(),
            })
        })
        .map(|o| o.graph6)
        .collect();
    out.sort();
    out.dedup();
    Ok(out)
}

/// Structured answer for a single graph.
#[derive(Debug, Clone, Serialize)]
pub struct InvariantsOutput {
    pub graph6: String,
    #[serde(flatten)]
    pub record: InvariantRecord,
    pub doubly_critical_edges: Vec<(usize, usize)>,
    pub stingy_coloring: Option<Coloring>,
}

/// Invariants of one graph6 line, with witnesses.
pub fn invariants_of(line: &str, opts: &RecordOptions) -> Result<InvariantsOutput, HarnessError> {
    let g = graph6::decode_str(line.trim())?;
    let record = InvariantRecord::compute(&g, opts);
    let stingy_coloring = record.iota.map(|_| iota(&g).witness);
    Ok(InvariantsOutput {
        graph6: graph6::encode(&g),
        doubly_critical_edges: doubly_critical_edges(&g),
        record,
        stingy_coloring,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn malformed_lines_are_counted() {
        let input = parse_lines("Dhc\nbogus line\n\nA_\nD?\n");
        assert_eq!(input.input_lines, 4);
        assert_eq!(input.graphs.len(), 2);
        assert_eq!(input.malformed.len(), 2);
        assert_eq!(input.malformed[0].line, 2);
        assert_eq!(input.malformed[1].line, 5);
        assert_eq!(input.graphs[1].line, 4);
    }

    #[test]
    fn c5_invariants() {
        let out = invariants_of("Dhc", &RecordOptions::default()).unwrap();
        let r = &out.record;
        assert_eq!((r.chi, r.omega, r.alpha, r.delta, r.iota), (3, 2, 2, 2, Some(1)));
        assert!(out.doubly_critical_edges.is_empty());
        assert!(invariants_of("Dh", &RecordOptions::default()).is_err());
    }

    #[test]
    fn analyze_skips_guarded_bounds() {
        let g = Graph::cycle(5).unwrap();
        let opts = RecordOptions { max_enum_n: 3, ..Default::default() };
        let out = analyze_graph(&g, "Dhc".into(), BoundId::ALL, &opts).unwrap();
        assert!(out.skipped.contains(&BoundId::Key));
        assert!(out.skipped.contains(&BoundId::RespectfulHalf));
        assert!(!out.skipped.contains(&BoundId::Reed));
        assert_eq!(out.verdicts.len() + out.skipped.len(), BoundId::ALL.len());
    }
}
