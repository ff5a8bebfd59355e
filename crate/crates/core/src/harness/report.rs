use std::fmt::Write as _;

use serde::Serialize;

use crate::bounds::{ratio_string, BoundSpec, BoundSummary};

use super::config::ConfigEcho;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MalformedLine {
    pub line: usize,
    pub error: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Totals {
    /// Non-blank input lines, or generated graphs.
    pub input_lines: u64,
    pub malformed_lines: u64,
    pub graphs_processed: u64,
    pub verdicts: u64,
    pub proven_violations: u64,
    pub conjectural_violations: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub config: ConfigEcho,
    pub catalog: Vec<BoundSpec>,
    pub per_bound: Vec<BoundSummary>,
    pub malformed: Vec<MalformedLine>,
    pub totals: Totals,
    pub wall_time_ms: Option<u64>,
}

impl SweepReport {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// 0 when no proven bound was violated, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.totals.proven_violations > 0 {
            1
        } else {
            0
        }
    }

    pub fn summary(&self, id: crate::bounds::BoundId) -> Option<&BoundSummary> {
        self.per_bound.iter().find(|s| s.id == id)
    }

    pub fn render_table(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "{:<16} {:>9} {:>9} {:>9} {:>7} {:>10} {:>7}",
            "bound", "evaluated", "hyp hits", "violated", "skipped", "min slack", "tight"
        );
        for s in &self.per_bound {
            let min = s
                .min_slack
                .as_ref()
                .map(ratio_string::format)
                .unwrap_or_else(|| "-".into());
            let _ = writeln!(
                out,
                "{:<16} {:>9} {:>9} {:>9} {:>7} {:>10} {:>7}",
                s.id.as_str(),
                s.evaluated,
                s.hypothesis_hits,
                s.violations.len(),
                s.skipped,
                min,
                s.tight_count
            );
        }
        let t = &self.totals;
        let _ = writeln!(
            out,
            "graphs {} (input {}, malformed {}), proven violations {}, conjectural violations {}",
            t.graphs_processed, t.input_lines, t.malformed_lines, t.proven_violations, t.conjectural_violations
        );
        if let Some(ms) = self.wall_time_ms {
            let _ = writeln!(out, "wall time {ms} ms");
        }
        out
    }
}
