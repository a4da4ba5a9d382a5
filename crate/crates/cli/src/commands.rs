use std::collections::BTreeMap;
use std::io::{self, Read, Write};
use std::path::Path;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use chordpart::chorded::{dirac_order_min, order_threshold};
use chordpart::packing::{check_packing_preconditions, find_packing};
use chordpart::partitioner::{
    compute_low_set, partition, verify_packing, verify_partition, FailureReason, MoveLog,
    PartitionOptions, PartitionOutcome, Potential, Resolution,
};
use chordpart::testlab::{generate, oracle_limit, oracle_partition, InstanceSpec, Params};
use chordpart::{Error, Graph, Vertex};

use crate::report::{
    Check, FailureSummary, InputSummary, PotentialTrace, RunParams, RunReport, Verdict,
};

/// Reads `path`, or standard input for `-`.
pub fn read_input(path: &str) -> Result<String, String> {
    if path == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| format!("stdin: {e}"))?;
        Ok(s)
    } else {
        std::fs::read_to_string(Path::new(path)).map_err(|e| format!("{path}: {e}"))
    }
}

pub fn load_graph(path: &str) -> Result<Graph, String> {
    let text = read_input(path)?;
    Graph::parse_edge_list(&text).map_err(|e| format!("{path}: {e}"))
}

fn elapsed_ms(t: Instant) -> f64 {
    t.elapsed().as_secs_f64() * 1e3
}

fn check(name: &str, measured: Option<usize>, required: usize) -> Check {
    Check {
        name: name.to_string(),
        measured,
        required,
        pass: measured.is_none_or(|m| m >= required),
    }
}

pub fn threshold_checks(g: &Graph, k: usize, c: usize) -> Vec<Check> {
    let n = g.n();
    let sigma2 = g.sigma2().finite();
    let pre = check_packing_preconditions(g, k, c);
    let delta = g.min_degree().ok();
    vec![
        check("ore_sigma2", sigma2, n),
        check("ore_order", Some(n), order_threshold(k, c)),
        // 2δ ≥ n, reported on the doubled scale
        check("dirac_degree", delta.map(|d| 2 * d), n),
        check("dirac_order", Some(n), dirac_order_min(k, c)),
        check("packing_order", Some(n), pre.order_required),
        check("packing_sigma2", sigma2, pre.sigma2_required),
    ]
}

pub fn cmd_check(g: &Graph, k: usize, c: usize) -> RunReport {
    let t = Instant::now();
    if k == 0 || c == 0 {
        return RunReport::refused(
            "check",
            Error::InvalidParameter("k and c must be positive".into()),
        );
    }
    let mut r = RunReport::new("check", Verdict::Checked);
    r.input = Some(InputSummary::of(g));
    r.params = RunParams {
        k: Some(k),
        c: Some(c),
        ..Default::default()
    };
    r.checks = threshold_checks(g, k, c);
    r.timings.total_ms = elapsed_ms(t);
    r
}

pub fn cmd_pack(g: &Graph, k: usize, c: usize, budget: u64) -> RunReport {
    let t = Instant::now();
    let out = match find_packing(g, k, c, budget) {
        Ok(out) => out,
        Err(e) => return RunReport::refused("pack", e),
    };
    let mut r = RunReport::new("pack", Verdict::Failed);
    r.input = Some(InputSummary::of(g));
    r.params = RunParams {
        k: Some(k),
        c: Some(c),
        budget: Some(budget),
        ..Default::default()
    };
    match out.packing {
        Some(p) => {
            let cycles: Vec<Vec<Vertex>> = p.cycles.iter().map(|c| c.seq().to_vec()).collect();
            let cert = verify_packing(g, k, c, &cycles);
            if cert.passed {
                r.verdict = Verdict::Packed;
                r.cycles = Some(cycles);
            } else {
                r.error = Some("packing failed re-verification".into());
            }
            r.certificate = Some(cert);
        }
        None => {
            r.failure = Some(FailureSummary {
                reason: if out.budget_exhausted {
                    "budget_exhausted"
                } else {
                    "no_packing"
                }
                .into(),
                ore_ok: g.sigma2().at_least(g.n()),
                order_ok: g.n() >= order_threshold(k, c),
                exact_verdict: None,
                oracle_verdict: None,
                fixpoint_clean: None,
            });
        }
    }
    r.timings.total_ms = elapsed_ms(t);
    r
}

fn potential_of(g: &Graph, cycles: &[Vec<Vertex>]) -> Potential {
    let low = compute_low_set(g);
    let covered: Vec<Vertex> = cycles.iter().flatten().copied().collect();
    Potential {
        low_covered: covered
            .iter()
            .filter(|v| low.binary_search(v).is_ok())
            .count(),
        covered: covered.len(),
    }
}

fn trace_summary(g: &Graph, log: &MoveLog, last: &[Vec<Vertex>]) -> Option<PotentialTrace> {
    if log.initial.is_empty() {
        return None;
    }
    let mut kinds = BTreeMap::new();
    for rec in &log.records {
        *kinds.entry(rec.kind.as_str().to_string()).or_insert(0) += 1;
    }
    Some(PotentialTrace {
        initial: potential_of(g, &log.initial),
        last: potential_of(g, last),
        steps: log.records.len(),
        bound: log.bound,
        kinds,
    })
}

#[derive(Clone, Copy, Debug)]
pub struct PartitionArgs {
    pub k: usize,
    pub c: usize,
    pub budget: u64,
    pub oracle_threshold: usize,
    pub trace: bool,
}

pub fn cmd_partition(g: &Graph, a: PartitionArgs, trace_out: &mut dyn Write) -> RunReport {
    let t = Instant::now();
    let opts = PartitionOptions {
        budget: a.budget,
        oracle_threshold: a.oracle_threshold,
        exact_fallback: true,
    };
    let params = RunParams {
        k: Some(a.k),
        c: Some(a.c),
        budget: Some(a.budget),
        ..Default::default()
    };
    let mut r = RunReport::new("partition", Verdict::Failed);
    r.input = Some(InputSummary::of(g));
    r.params = params;
    let out = match partition(g, a.k, a.c, &opts) {
        Ok(out) => out,
        Err(Error::BudgetExhausted(b)) => {
            r.error = Some(Error::BudgetExhausted(b).to_string());
            r.failure = Some(FailureSummary {
                reason: "budget_exhausted".into(),
                ore_ok: g.sigma2().at_least(g.n()),
                order_ok: g.n() >= order_threshold(a.k, a.c),
                exact_verdict: None,
                oracle_verdict: None,
                fixpoint_clean: None,
            });
            r.timings.total_ms = elapsed_ms(t);
            return r;
        }
        Err(e) => {
            let mut refused = RunReport::refused("partition", e);
            refused.input = r.input;
            refused.params = r.params;
            return refused;
        }
    };
    if a.trace {
        for rec in &out.log().records {
            if let Ok(line) = serde_json::to_string(rec) {
                let _ = writeln!(trace_out, "{line}");
            }
        }
    }
    r.move_count = out.log().len();
    match &out {
        PartitionOutcome::Partitioned(p) => {
            let cycles: Vec<Vec<Vertex>> = p.cycles.iter().map(|c| c.seq().to_vec()).collect();
            let cert = verify_partition(g, a.k, a.c, &cycles);
            r.potential = trace_summary(g, &p.log, &cycles);
            r.resolution = Some(
                match p.resolution {
                    Resolution::Engine => "engine",
                    Resolution::ExactFallback => "exact_fallback",
                }
                .into(),
            );
            if cert.passed {
                r.verdict = Verdict::Partitioned;
                r.cycles = Some(cycles);
            } else {
                r.error = Some("partition failed re-verification".into());
            }
            r.certificate = Some(cert);
        }
        PartitionOutcome::Failed(f) => {
            let limit = a.oracle_threshold.min(oracle_limit());
            let oracle_verdict = if g.n() <= limit {
                oracle_partition(g, a.k, a.c).ok().map(|w| w.is_some())
            } else {
                None
            };
            r.potential = trace_summary(g, &f.log, &f.best_cycles);
            r.failure = Some(FailureSummary {
                reason: match f.reason {
                    FailureReason::NoPacking => "no_packing",
                    FailureReason::Stuck => "stuck",
                }
                .into(),
                ore_ok: f.ore_ok,
                order_ok: f.order_ok,
                exact_verdict: f.exact_verdict,
                oracle_verdict,
                fixpoint_clean: f.fixpoint.as_ref().map(|d| d.is_clean()),
            });
        }
    }
    r.timings.total_ms = elapsed_ms(t);
    r
}

/// Cycles for `verify`: a bare JSON array of vertex lists, or any object
/// with a `cycles` field (such as a previous report).
#[derive(Deserialize)]
#[serde(untagged)]
enum CycleFile {
    Bare(Vec<Vec<Vertex>>),
    Wrapped { cycles: Vec<Vec<Vertex>> },
}

pub fn parse_cycles(text: &str) -> Result<Vec<Vec<Vertex>>, String> {
    match serde_json::from_str::<CycleFile>(text) {
        Ok(CycleFile::Bare(c)) | Ok(CycleFile::Wrapped { cycles: c }) => Ok(c),
        Err(e) => Err(format!("cycles: {e}")),
    }
}

pub fn cmd_verify(
    g: &Graph,
    k: usize,
    c: usize,
    cycles: &[Vec<Vertex>],
    packing: bool,
) -> RunReport {
    let t = Instant::now();
    if k == 0 || c == 0 {
        return RunReport::refused(
            "verify",
            Error::InvalidParameter("k and c must be positive".into()),
        );
    }
    let cert = if packing {
        verify_packing(g, k, c, cycles)
    } else {
        verify_partition(g, k, c, cycles)
    };
    let mut r = RunReport::new(
        "verify",
        if cert.passed {
            Verdict::Valid
        } else {
            Verdict::Invalid
        },
    );
    r.input = Some(InputSummary::of(g));
    r.params = RunParams {
        k: Some(k),
        c: Some(c),
        ..Default::default()
    };
    r.certificate = Some(cert);
    r.timings.total_ms = elapsed_ms(t);
    r
}

/// Metadata written next to a generated edge list.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Sidecar {
    pub family: String,
    pub params: Params,
    pub input: InputSummary,
    pub sigma2: Option<usize>,
    pub min_degree: Option<usize>,
    pub ore: bool,
    pub dirac: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub repairs: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub planted: Option<Vec<Vec<Vertex>>>,
}

/// Parses `key=value` pairs separated by commas, e.g. `n=17,seed=3`.
pub fn parse_params(text: &str) -> Result<Params, String> {
    let mut p = Params::default();
    for part in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (key, value) = part
            .split_once('=')
            .ok_or_else(|| format!("parameter {part:?} is not key=value"))?;
        let bad = |_| format!("parameter {key} has non-integer value {value:?}");
        match key.trim() {
            "n" => p.n = Some(value.trim().parse().map_err(bad)?),
            "k" => p.k = Some(value.trim().parse().map_err(bad)?),
            "c" => p.c = Some(value.trim().parse().map_err(bad)?),
            "a" => p.a = Some(value.trim().parse().map_err(bad)?),
            "b" => p.b = Some(value.trim().parse().map_err(bad)?),
            "seed" => p.seed = Some(value.trim().parse().map_err(bad)?),
            "p_percent" | "p" => p.p_percent = Some(value.trim().parse().map_err(bad)?),
            other => return Err(format!("unknown parameter {other:?}")),
        }
    }
    Ok(p)
}

pub fn cmd_generate(
    family: &str,
    mut params: Params,
    seed: Option<u64>,
) -> Result<(Graph, Sidecar), Error> {
    if seed.is_some() {
        params.seed = seed;
    }
    let spec = InstanceSpec {
        family: family.to_string(),
        params: params.clone(),
        expected: None,
    };
    let out = generate(&spec)?;
    let g = out.graph;
    let n = g.n();
    let min_degree = g.min_degree().ok();
    let sidecar = Sidecar {
        family: family.to_string(),
        params,
        input: InputSummary::of(&g),
        sigma2: g.sigma2().finite(),
        min_degree,
        ore: g.sigma2().at_least(n),
        dirac: min_degree.is_some_and(|d| 2 * d >= n),
        p: out.p,
        repairs: out.repairs,
        planted: out.planted,
    };
    Ok((g, sidecar))
}

#[cfg(test)]
mod tests {
    use super::*;
    use chordpart::testlab::{gen_complete, gen_cycle, gen_extremal_degree};

    #[test]
    fn check_examples() {
        let r = cmd_check(&gen_complete(17), 1, 1);
        assert!(r.checks.iter().all(|c| c.pass), "{:?}", r.checks);

        let r = cmd_check(&gen_extremal_degree(17).unwrap(), 1, 1);
        let ore = r.checks.iter().find(|c| c.name == "ore_sigma2").unwrap();
        assert_eq!(
            (ore.measured, ore.required, ore.pass),
            (Some(16), 17, false)
        );

        let r = cmd_check(&gen_cycle(5), 1, 1);
        let by = |n: &str| r.checks.iter().find(|c| c.name == n).unwrap().pass;
        assert!(!by("ore_sigma2") && !by("ore_order"));
    }

    #[test]
    fn params_parse() {
        let p = parse_params("n=17, seed=3").unwrap();
        assert_eq!((p.n, p.seed), (Some(17), Some(3)));
        assert!(parse_params("n").is_err());
        assert!(parse_params("q=1").is_err());
        assert!(parse_params("n=x").is_err());
        assert_eq!(parse_params("").unwrap(), Params::default());
    }

    #[test]
    fn cycles_parse_both_shapes() {
        assert_eq!(parse_cycles("[[0,1,2]]").unwrap(), vec![vec![0, 1, 2]]);
        assert_eq!(
            parse_cycles(r#"{"command":"x","cycles":[[3,4,5]]}"#).unwrap(),
            vec![vec![3, 4, 5]]
        );
        assert!(parse_cycles("{}").is_err());
    }

    #[test]
    fn partition_and_failure() {
        let args = PartitionArgs {
            k: 1,
            c: 1,
            budget: 1_000_000,
            oracle_threshold: 18,
            trace: true,
        };
        let mut sink = Vec::new();
        let r = cmd_partition(&gen_complete(6), args, &mut sink);
        assert_eq!(r.verdict, Verdict::Partitioned);
        assert!(r.is_consistent());
        let k22 = chordpart::testlab::gen_complete_bipartite(2, 2);
        let r = cmd_partition(&k22, args, &mut sink);
        assert_eq!(r.verdict, Verdict::Failed);
        assert_eq!(r.failure.unwrap().oracle_verdict, Some(false));
    }
}
