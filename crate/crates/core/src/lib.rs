//! Exact chromatic-number invariants for small graphs and a harness that
//! checks a catalog of upper bounds on the chromatic number over whole
//! families of graphs, reporting violations, slack and tight witnesses.
//!
//! Main entry points:
//!
//! - [`graph::Graph`] and the [`graph6`] codec,
//! - [`invariants`]: chi, omega, alpha, Delta, doubly critical edges,
//! - [`coloring`]: stinginess and enumeration of optimal colorings,
//! - [`respectful`]: minimal-remainder respectful greedy partial colorings,
//! - [`bounds`]: the bound catalog and exact verdicts,
//! - [`catalog`]: every graph of a given order up to isomorphism, and random graphs,
//! - [`harness`]: batch sweeps, witness searches and reports.

pub mod bounds;
pub mod catalog;
pub mod coloring;
pub mod graph;
pub mod graph6;
pub mod harness;
pub mod invariants;
pub mod respectful;

pub use bounds::{evaluate_bound, evaluate_pair, BoundId, BoundVerdict, Rational};
pub use graph::{Graph, GraphError, VertexSet, MAX_VERTICES};
pub use invariants::{InvariantRecord, RecordOptions};
