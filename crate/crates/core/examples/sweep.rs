use chromabound::harness::{run_sweep, InputSource, SweepConfig};

// Usage: cargo run --release --example sweep -- [N]
fn main() {
    let n = std::env::args().nth(1).map_or(7, |s| s.parse().expect("order"));
    let config = SweepConfig::new(InputSource::Exhaustive(n));
    let report = run_sweep(&config).unwrap();
    print!("{}", report.render_table());
    std::process::exit(report.exit_code());
}
