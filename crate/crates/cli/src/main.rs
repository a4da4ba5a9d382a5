use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use chordpart::testlab::FAMILIES;
use chordpart_cli::commands::{
    cmd_check, cmd_generate, cmd_pack, cmd_partition, cmd_verify, load_graph, parse_cycles,
    parse_params, read_input, PartitionArgs,
};
use chordpart_cli::experiment::{self, ExperimentConfig};
use chordpart_cli::report::RunReport;

#[derive(Parser)]
#[command(
    name = "chordpart",
    version,
    about = "Partition graphs into cycles with many chords"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Common {
    /// Edge-list file, or - for standard input
    #[arg(long, default_value = "-")]
    input: String,
    #[arg(long, default_value_t = 1)]
    k: usize,
    #[arg(long, default_value_t = 1)]
    c: usize,
    #[arg(long)]
    seed: Option<u64>,
    /// Node budget for the packing search
    #[arg(long, default_value_t = 5_000_000)]
    budget: u64,
    /// Largest order on which exhaustive search is used
    #[arg(long, default_value_t = 18)]
    oracle_threshold: usize,
    /// Emit one JSON line per move on stderr
    #[arg(long)]
    trace: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Report the degree and order conditions
    Check(Common),
    /// Find k disjoint c-chorded cycles
    Pack(Common),
    /// Partition the vertices into k c-chorded cycles
    Partition(Common),
    /// Check a claimed partition or packing
    Verify {
        #[command(flatten)]
        common: Common,
        /// JSON file with the cycles: [[...], ...] or an object with a "cycles" field
        #[arg(long)]
        cycles: String,
        /// Do not require the cycles to cover every vertex
        #[arg(long)]
        packing: bool,
    },
    /// Write a generated instance to stdout as an edge list
    Generate {
        #[arg(long)]
        family: String,
        /// Comma-separated key=value pairs: n, k, c, a, b, seed, p_percent
        #[arg(long, default_value = "")]
        params: String,
        #[arg(long)]
        seed: Option<u64>,
        /// Where to write the JSON metadata; stderr if absent
        #[arg(long)]
        sidecar: Option<String>,
    },
    /// Sweep seeded random instances and write CSV rows to stdout
    Experiment {
        /// JSON configuration file; overrides the flags below
        #[arg(long)]
        config: Option<String>,
        #[arg(long, default_value_t = 1)]
        k: usize,
        #[arg(long, default_value_t = 1)]
        c: usize,
        #[arg(long, default_value_t = 8)]
        n_min: usize,
        #[arg(long, default_value_t = 17)]
        n_max: usize,
        #[arg(long, default_value_t = 10)]
        seeds: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 12)]
        oracle_threshold: usize,
        #[arg(long, default_value = "ore_random")]
        family: String,
        #[arg(long, default_value_t = 5_000_000)]
        budget: u64,
        /// Also write the per-n summary as JSON to this file
        #[arg(long)]
        summary: Option<String>,
    },
}

fn emit(report: &RunReport) -> ExitCode {
    match serde_json::to_string_pretty(report) {
        Ok(text) => println!("{text}"),
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    eprintln!("{}: {:?}", report.command, report.verdict);
    ExitCode::from(report.verdict.exit_code())
}

fn with_graph(
    command: &str,
    common: &Common,
    f: impl FnOnce(&chordpart::Graph) -> RunReport,
) -> ExitCode {
    match load_graph(&common.input) {
        Ok(g) => {
            let mut r = f(&g);
            r.params.seed = common.seed;
            emit(&r)
        }
        Err(e) => emit(&RunReport::refused(command, e)),
    }
}

fn usage(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Check(a) => with_graph("check", &a, |g| cmd_check(g, a.k, a.c)),
        Command::Pack(a) => with_graph("pack", &a, |g| cmd_pack(g, a.k, a.c, a.budget)),
        Command::Partition(a) => with_graph("partition", &a, |g| {
            let args = PartitionArgs {
                k: a.k,
                c: a.c,
                budget: a.budget,
                oracle_threshold: a.oracle_threshold,
                trace: a.trace,
            };
            cmd_partition(g, args, &mut io::stderr())
        }),
        Command::Verify {
            common,
            cycles,
            packing,
        } => {
            let parsed = read_input(&cycles).and_then(|t| parse_cycles(&t));
            match parsed {
                Ok(cyc) => with_graph("verify", &common, |g| {
                    cmd_verify(g, common.k, common.c, &cyc, packing)
                }),
                Err(e) => emit(&RunReport::refused("verify", e)),
            }
        }
        Command::Generate {
            family,
            params,
            seed,
            sidecar,
        } => {
            if !FAMILIES.contains(&family.as_str()) {
                return usage(format!(
                    "unknown family {family:?}; one of {}",
                    FAMILIES.join(", ")
                ));
            }
            let params = match parse_params(&params) {
                Ok(p) => p,
                Err(e) => return usage(e),
            };
            let (g, meta) = match cmd_generate(&family, params, seed) {
                Ok(x) => x,
                Err(e) => return usage(e),
            };
            print!("{}", g.to_edge_list());
            let meta = serde_json::to_string_pretty(&meta).expect("sidecar serializes");
            match sidecar {
                Some(path) => {
                    if let Err(e) = std::fs::write(&path, meta + "\n") {
                        return usage(format!("{path}: {e}"));
                    }
                }
                None => eprintln!("{meta}"),
            }
            ExitCode::SUCCESS
        }
        Command::Experiment {
            config,
            k,
            c,
            n_min,
            n_max,
            seeds,
            seed,
            oracle_threshold,
            family,
            budget,
            summary,
        } => {
            let cfg = match config {
                Some(path) => match read_input(&path)
                    .and_then(|t| serde_json::from_str(&t).map_err(|e| format!("{path}: {e}")))
                {
                    Ok(cfg) => cfg,
                    Err(e) => return usage(e),
                },
                None => ExperimentConfig {
                    k,
                    c,
                    n_min,
                    n_max,
                    seeds,
                    seed_base: seed,
                    oracle_threshold,
                    family,
                    budget,
                },
            };
            if let Err(e) = cfg.validate() {
                return usage(e);
            }
            let rows = experiment::run(&cfg);
            let stdout = io::stdout();
            if let Err(e) = experiment::write_csv(stdout.lock(), &rows, cfg.oracle_threshold > 0) {
                return usage(e);
            }
            let sums = experiment::summarize(&rows);
            let mut err = io::stderr();
            for s in &sums {
                let _ = writeln!(
                    err,
                    "n={} partitioned {}/{} ({:.2})",
                    s.n, s.partitioned, s.instances, s.rate
                );
            }
            if let Some(path) = summary {
                let text = serde_json::to_string_pretty(&sums).expect("summary serializes");
                if let Err(e) = std::fs::write(&path, text + "\n") {
                    return usage(format!("{path}: {e}"));
                }
            }
            ExitCode::SUCCESS
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn cli_definition_is_consistent() {
        Cli::command().debug_assert();
    }
}
