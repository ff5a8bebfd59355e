use chromabound::catalog::{canonical_form, graphs_by_order, random_graphs};
use chromabound::{graph6, Graph};

fn main() {
    let by_order = graphs_by_order(7).unwrap();
    for (n, graphs) in by_order.iter().enumerate() {
        println!("n = {n}: {} graphs", graphs.len());
    }
    let four: Vec<String> = by_order[4].iter().map(graph6::encode).collect();
    println!("order 4: {}", four.join(" "));

    let a = Graph::cycle(6).unwrap();
    let b = a.relabel(&[3, 0, 4, 1, 5, 2]);
    assert_eq!(canonical_form(&a).1, canonical_form(&b).1);
    println!("C6 canonical: {}", graph6::encode(&canonical_form(&a).0));

    for g in random_graphs(8, 0.3, 42, 3).unwrap() {
        println!("random: {}", graph6::encode(&g));
    }
}
