use chromabound::harness::{find_witnesses, InputSource, SweepConfig, WitnessMode};
use chromabound::BoundId;

fn main() {
    let config = SweepConfig::new(InputSource::Exhaustive(6));
    for id in [BoundId::Key, BoundId::MainResult, BoundId::DcThird, BoundId::RespectfulHalf] {
        let tight = find_witnesses(id, WitnessMode::Tight, &config).unwrap();
        let broken = find_witnesses(id, WitnessMode::Violation, &config).unwrap();
        println!("{id}: {} tight {:?}, {} violations", tight.len(), &tight[..tight.len().min(5)], broken.len());
    }
}
