use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use chromabound::bounds::BoundId;
use chromabound::harness::{self, HarnessError, InputSource, SweepConfig, WitnessMode};
use chromabound::invariants::{RecordOptions, ORACLE_MAX_N};
use chromabound::respectful::DEFAULT_R;

#[derive(Parser)]
#[command(name = "chromabound", version, about = "Exact chromatic-number invariants and bound sweeps")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print every invariant of the given graph6 graphs.
    Invariants {
        /// graph6 strings; read from --input when none are given.
        graphs: Vec<String>,
        #[arg(long)]
        input: Option<String>,
        #[arg(long, default_value_t = DEFAULT_R)]
        r: usize,
        #[arg(long = "max-enum-n", default_value_t = ORACLE_MAX_N)]
        max_enum_n: usize,
    },
    /// Evaluate bounds over a graph source and write a report.
    Sweep {
        #[command(flatten)]
        source: SourceArgs,
        /// Comma-separated bound ids, or `all`.
        #[arg(long, default_value = "all")]
        bounds: String,
        /// Write the JSON report here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long = "tight-cap", default_value_t = 20)]
        tight_cap: usize,
        /// Record wall time in the report; reruns are then no longer byte-identical.
        #[arg(long)]
        timing: bool,
    },
    /// List graphs that are tight for, or violate, one bound.
    Witness {
        #[arg(long)]
        bound: String,
        #[arg(long, value_enum, default_value_t = Mode::Tight)]
        mode: Mode,
        #[command(flatten)]
        source: SourceArgs,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Tight,
    Violation,
}

#[derive(Args)]
struct SourceArgs {
    /// graph6 file, or `-` for standard input.
    #[arg(long, conflicts_with_all = ["exhaustive", "random"])]
    input: Option<String>,
    /// Every graph on at most N vertices, up to isomorphism.
    #[arg(long, conflicts_with = "random")]
    exhaustive: Option<usize>,
    /// Random graphs: N,P,SEED,COUNT.
    #[arg(long)]
    random: Option<String>,
    #[arg(long, default_value_t = DEFAULT_R)]
    r: usize,
    /// Worker threads (0 = one per core).
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    #[arg(long = "max-enum-n", default_value_t = ORACLE_MAX_N)]
    max_enum_n: usize,
}

fn input_path(s: &str) -> InputSource {
    if s == "-" {
        InputSource::Stdin
    } else {
        InputSource::Graph6File(PathBuf::from(s))
    }
}

fn parse_random(spec: &str) -> Result<InputSource, HarnessError> {
    let bad = || HarnessError::Config(format!("--random expects N,P,SEED,COUNT, got `{spec}`"));
    let parts: Vec<&str> = spec.split(',').map(str::trim).collect();
    let [n, p, seed, count] = parts[..] else {
        return Err(bad());
    };
    Ok(InputSource::Random {
        n: n.parse().map_err(|_| bad())?,
        p: p.parse().map_err(|_| bad())?,
        seed: seed.parse().map_err(|_| bad())?,
        count: count.parse().map_err(|_| bad())?,
    })
}

fn parse_bounds(list: &str) -> Result<Vec<BoundId>, HarnessError> {
    if list.trim().eq_ignore_ascii_case("all") {
        return Ok(BoundId::ALL.to_vec());
    }
    list.split(',')
        .map(|s| s.parse().map_err(|e: chromabound::bounds::BoundError| HarnessError::Config(e.to_string())))
        .collect()
}

impl SourceArgs {
    fn config(&self) -> Result<SweepConfig, HarnessError> {
        let input = match (&self.input, self.exhaustive, &self.random) {
            (Some(p), _, _) => input_path(p),
            (_, Some(n), _) => InputSource::Exhaustive(n),
            (_, _, Some(spec)) => parse_random(spec)?,
            _ => InputSource::Stdin,
        };
        let mut c = SweepConfig::new(input);
        c.r = self.r;
        c.jobs = self.jobs;
        c.max_enum_n = self.max_enum_n;
        c.echo_violations = true;
        Ok(c)
    }
}

fn exit_code_for(e: &HarnessError) -> u8 {
    match e {
        HarnessError::Config(_) | HarnessError::Catalog(_) | HarnessError::Bound(_) | HarnessError::Pool(_) => 2,
        HarnessError::Io { .. } | HarnessError::Decode(_) => 3,
    }
}

fn run(cli: Cli) -> Result<u8, HarnessError> {
    match cli.command {
        Command::Invariants { graphs, input, r, max_enum_n } => {
            if r == 0 || max_enum_n > ORACLE_MAX_N {
                return Err(HarnessError::Config(format!(
                    "--r must be >= 1 and --max-enum-n <= {ORACLE_MAX_N}"
                )));
            }
            let opts = RecordOptions { r, max_enum_n, structural: true };
            let lines: Vec<String> = if graphs.is_empty() {
                let loaded = harness::load_input(&input_path(input.as_deref().unwrap_or("-")))?;
                if let Some(m) = loaded.malformed.first() {
                    eprintln!("error: line {}: {}", m.line, m.error);
                    return Ok(3);
                }
                loaded.graphs.into_iter().map(|g| g.graph6).collect()
            } else {
                graphs
            };
            for line in lines {
                let out = harness::invariants_of(&line, &opts)?;
                println!("{}", serde_json::to_string_pretty(&out).expect("serializable"));
            }
            Ok(0)
        }
        Command::Sweep { source, bounds, out, tight_cap, timing } => {
            let mut config = source.config()?;
            config.bounds = parse_bounds(&bounds)?;
            config.tight_cap = tight_cap;
            config.record_timing = timing;
            let report = harness::run_sweep(&config)?;
            let json = report.to_json();
            match out {
                Some(path) => {
                    fs::write(&path, json).map_err(|source| HarnessError::Io { path, source })?;
                    print!("{}", report.render_table());
                }
                None => {
                    print!("{json}");
                    eprint!("{}", report.render_table());
                }
            }
            for m in &report.malformed {
                eprintln!("skipped line {}: {}", m.line, m.error);
            }
            Ok(report.exit_code() as u8)
        }
        Command::Witness { bound, mode, source } => {
            let id: BoundId = bound
                .parse()
                .map_err(|e: chromabound::bounds::BoundError| HarnessError::Config(e.to_string()))?;
            let mut config = source.config()?;
            config.echo_violations = false;
            let mode = match mode {
                Mode::Tight => WitnessMode::Tight,
                Mode::Violation => WitnessMode::Violation,
            };
            for g6 in harness::find_witnesses(id, mode, &config)? {
                println!("{g6}");
            }
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}
