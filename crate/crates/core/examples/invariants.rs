use chromabound::invariants::{doubly_critical_edges, max_clique, max_independent_set};
use chromabound::{graph6, InvariantRecord, RecordOptions};

// Usage: cargo run --example invariants -- [GRAPH6...]
fn main() {
    let mut lines: Vec<String> = std::env::args().skip(1).collect();
    if lines.is_empty() {
        lines = vec!["Dhc".into(), "C~".into(), "IheA@GUAo".into()];
    }
    for line in lines {
        let g = graph6::decode_str(&line).expect("graph6");
        let rec = InvariantRecord::compute(&g, &RecordOptions::default());
        println!(
            "{line}: n={} chi={} omega={} alpha={} Delta={} iota={:?}",
            rec.n, rec.chi, rec.omega, rec.alpha, rec.delta, rec.iota
        );
        println!("  max clique {}, max independent set {}", max_clique(&g), max_independent_set(&g));
        println!("  doubly critical edges {:?}", doubly_critical_edges(&g));
    }
}
