//! Success-rate sweeps over seeded random instances.

use std::collections::BTreeMap;
use std::io::Write;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use chordpart::partitioner::{partition, PartitionOptions, PartitionOutcome};
use chordpart::testlab::{
    gen_dirac_random, gen_gnp, gen_ore_random, oracle_limit, oracle_partition,
};
use chordpart::Graph;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExperimentConfig {
    pub k: usize,
    pub c: usize,
    pub n_min: usize,
    pub n_max: usize,
    pub seeds: u64,
    #[serde(default)]
    pub seed_base: u64,
    #[serde(default = "default_threshold")]
    pub oracle_threshold: usize,
    #[serde(default = "default_family")]
    pub family: String,
    #[serde(default = "default_budget")]
    pub budget: u64,
}

fn default_threshold() -> usize {
    12
}

fn default_family() -> String {
    "ore_random".into()
}

fn default_budget() -> u64 {
    5_000_000
}

impl ExperimentConfig {
    pub fn validate(&self) -> Result<(), String> {
        if self.k == 0 || self.c == 0 {
            return Err("k and c must be positive".into());
        }
        if !matches!(self.family.as_str(), "ore_random" | "dirac_random" | "gnp") {
            return Err(format!(
                "family {:?} is not a seeded random family",
                self.family
            ));
        }
        if self.budget == 0 {
            return Err("budget must be positive".into());
        }
        if self.n_min <= self.n_max && self.n_min < 3 {
            return Err("n_min must be at least 3".into());
        }
        Ok(())
    }

    fn instance(&self, n: usize, seed: u64) -> Graph {
        match self.family.as_str() {
            "dirac_random" => gen_dirac_random(n, seed).expect("n >= 3").graph,
            "gnp" => gen_gnp(n, 0.5, seed),
            _ => gen_ore_random(n, seed).expect("n >= 3").graph,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Row {
    pub n: usize,
    pub k: usize,
    pub c: usize,
    pub seed: u64,
    pub sigma2: Option<usize>,
    pub engine: String,
    pub oracle: Option<String>,
    pub moves: usize,
    pub time_ms: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SummaryRow {
    pub n: usize,
    pub instances: usize,
    pub partitioned: usize,
    pub rate: f64,
}

fn run_one(cfg: &ExperimentConfig, n: usize, seed: u64) -> Row {
    let g = cfg.instance(n, seed);
    let opts = PartitionOptions {
        budget: cfg.budget,
        oracle_threshold: cfg.oracle_threshold,
        exact_fallback: true,
    };
    let t = Instant::now();
    let (engine, moves) = match partition(&g, cfg.k, cfg.c, &opts) {
        Ok(PartitionOutcome::Partitioned(p)) => ("partitioned".to_string(), p.log.len()),
        Ok(PartitionOutcome::Failed(f)) => ("failed".to_string(), f.log.len()),
        Err(e) => (format!("error: {e}"), 0),
    };
    let time_ms = t.elapsed().as_secs_f64() * 1e3;
    let oracle =
        (cfg.oracle_threshold > 0 && n <= cfg.oracle_threshold.min(oracle_limit())).then(|| {
            match oracle_partition(&g, cfg.k, cfg.c) {
                Ok(Some(_)) => "partitionable".to_string(),
                Ok(None) => "none".to_string(),
                Err(e) => format!("error: {e}"),
            }
        });
    Row {
        n,
        k: cfg.k,
        c: cfg.c,
        seed,
        sigma2: g.sigma2().finite(),
        engine,
        oracle,
        moves,
        time_ms,
    }
}

/// Runs every `(n, seed)` pair in parallel; rows come back ordered by
/// `(n, seed)` whatever the scheduling.
pub fn run(cfg: &ExperimentConfig) -> Vec<Row> {
    if cfg.n_min > cfg.n_max {
        return Vec::new();
    }
    let jobs: Vec<(usize, u64)> = (cfg.n_min..=cfg.n_max)
        .flat_map(|n| (0..cfg.seeds).map(move |s| (n, cfg.seed_base + s)))
        .collect();
    let mut rows: Vec<Row> = jobs.par_iter().map(|&(n, s)| run_one(cfg, n, s)).collect();
    rows.sort_by_key(|r| (r.n, r.seed));
    rows
}

pub fn summarize(rows: &[Row]) -> Vec<SummaryRow> {
    let mut by_n: BTreeMap<usize, (usize, usize)> = BTreeMap::new();
    for r in rows {
        let e = by_n.entry(r.n).or_default();
        e.0 += 1;
        if r.engine == "partitioned" {
            e.1 += 1;
        }
    }
    by_n.into_iter()
        .map(|(n, (instances, partitioned))| SummaryRow {
            n,
            instances,
            partitioned,
            rate: partitioned as f64 / instances as f64,
        })
        .collect()
}

/// CSV with a header; the oracle column is left out entirely when the
/// oracle threshold is zero.
pub fn write_csv<W: Write>(out: W, rows: &[Row], with_oracle: bool) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    let mut header = vec!["n", "k", "c", "seed", "sigma2", "engine"];
    if with_oracle {
        header.push("oracle");
    }
    header.extend(["moves", "time_ms"]);
    w.write_record(&header)?;
    for r in rows {
        let mut rec = vec![
            r.n.to_string(),
            r.k.to_string(),
            r.c.to_string(),
            r.seed.to_string(),
            r.sigma2.map_or("inf".to_string(), |s| s.to_string()),
            r.engine.clone(),
        ];
        if with_oracle {
            rec.push(r.oracle.clone().unwrap_or_default());
        }
        rec.push(r.moves.to_string());
        rec.push(format!("{:.3}", r.time_ms));
        w.write_record(&rec)?;
    }
    w.flush()?;
    Ok(())
}
