use chromabound::bounds::ratio_string;
use chromabound::{evaluate_bound, BoundId, Graph, InvariantRecord, RecordOptions};

fn main() {
    let graphs = [
        ("C5", Graph::cycle(5).unwrap()),
        ("K4", Graph::complete(4).unwrap()),
        ("Petersen", Graph::petersen()),
    ];
    for (name, g) in graphs {
        let rec = InvariantRecord::compute(&g, &RecordOptions::default());
        println!("{name} (chi = {})", rec.chi);
        for &id in BoundId::ALL {
            match evaluate_bound(&g, &rec, id) {
                Ok(v) => println!(
                    "  {:<16} hyp {:<5} rhs {:>6} slack {:>6}{}",
                    id.as_str(),
                    v.hypothesis_holds,
                    ratio_string::format(&v.rhs_value),
                    ratio_string::format(&v.slack),
                    if v.tight { "  tight" } else { "" }
                ),
                Err(e) => println!("  {:<16} {e}", id.as_str()),
            }
        }
    }
}
