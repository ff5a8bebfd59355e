use chromabound::respectful::{is_r_greedy, is_respectful, minimal_remainder_respectful, PartialColoring};
use chromabound::{Graph, VertexSet};

fn main() {
    // Two triangles, a pendant vertex on the first, two isolated vertices.
    let mut edges = vec![(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)];
    edges.push((6, 0));
    let g = Graph::from_edge_list(9, &edges).unwrap();

    let p = PartialColoring::new(9, vec![VertexSet::from_iter([1, 4, 7])]);
    println!("{{1,4,7}}: 3-greedy {}, respectful {}", is_r_greedy(&g, &p, 3).unwrap(), is_respectful(&g, &p).unwrap());

    let rep = minimal_remainder_respectful(&g, 3).unwrap();
    let classes: Vec<String> = rep.partial.classes().iter().map(|c| c.to_string()).collect();
    println!(
        "minimal remainder: classes [{}], remainder order {}, remainder chi {}",
        classes.join(", "),
        rep.remainder_order,
        rep.remainder_chi
    );
}
