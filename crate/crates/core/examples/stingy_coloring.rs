use chromabound::coloring::{enumerate_optimal_colorings, iota, is_stingy};
use chromabound::Graph;

fn main() {
    let c5 = Graph::cycle(5).unwrap();
    let all = enumerate_optimal_colorings(&c5, 100).unwrap();
    println!("C5 has {} optimal colorings (complete: {})", all.colorings.len(), all.complete);
    for c in &all.colorings {
        let classes: Vec<String> = c.classes().iter().map(|s| s.to_string()).collect();
        println!("  {}  singletons {}", classes.join(" "), c.singleton_count());
    }

    let s = iota(&c5);
    println!("iota(C5) = {}", s.iota);
    assert!(is_stingy(&c5, &s.witness).unwrap());

    let k4 = Graph::complete(4).unwrap();
    println!("iota(K4) = {}", iota(&k4).iota);
}
