use chromabound::bounds::{ratio_string, VerdictDetail};
use chromabound::{evaluate_pair, graph6, InvariantRecord, RecordOptions};

fn main() {
    for line in ["Dhc", "C~", "FCXf?", "G?~vf_"] {
        let g = graph6::decode_str(line).unwrap();
        let rec = InvariantRecord::compute(&g, &RecordOptions::basic());
        let comp = InvariantRecord::compute(&g.complement(), &RecordOptions::basic());
        let v = evaluate_pair(&g, &rec, &comp).unwrap();
        let Some(VerdictDetail::Sides { graph, complement }) = v.detail else {
            unreachable!()
        };
        println!(
            "{line}: chi {} / {}, best slack {}, holds on graph {graph}, on complement {complement}",
            rec.chi,
            comp.chi,
            ratio_string::format(&v.slack)
        );
    }
}
