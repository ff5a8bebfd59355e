use chromabound::{graph6, Graph};

fn main() {
    let petersen = Graph::petersen();
    let line = graph6::encode(&petersen);
    println!("petersen: {line}");

    let back = graph6::decode_str(&line).unwrap();
    assert_eq!(back, petersen);

    for bad in ["", "Dh", "D~~~"] {
        println!("{bad:?}: {}", graph6::decode_str(bad).unwrap_err());
    }
}
