use std::io::Write;
use std::process::{Command, Output, Stdio};

use chordpart::testlab::{
    gen_complete, gen_complete_bipartite, gen_extremal_degree, gen_ore_random,
};
use chordpart::Graph;
use chordpart_cli::report::{RunReport, Verdict};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_chordpart"))
}

fn run_with_stdin(args: &[&str], stdin: &str) -> Output {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn report(out: &Output) -> RunReport {
    serde_json::from_slice(&out.stdout)
        .unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

fn tmp(name: &str, contents: &str) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("chordpart-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, contents).unwrap();
    p
}

fn edge_list(g: &Graph) -> String {
    g.to_edge_list()
}

#[test]
fn partition_ore_instance() {
    let g = gen_ore_random(17, 1).unwrap().graph;
    let out = run_with_stdin(&["partition", "--k", "1", "--c", "1"], &edge_list(&g));
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(r.verdict, Verdict::Partitioned);
    assert!(r.is_consistent());
    assert_eq!(r.input.as_ref().unwrap().digest, g.digest());
    assert!(r.certificate.unwrap().passed);
}

#[test]
fn partition_extremal_fails_with_oracle() {
    let g = gen_complete_bipartite(2, 2);
    let out = run_with_stdin(&["partition", "--k", "1", "--c", "1"], &edge_list(&g));
    assert_eq!(out.status.code(), Some(1));
    let r = report(&out);
    assert_eq!(r.verdict, Verdict::Failed);
    assert!(r.cycles.is_none());
    assert_eq!(r.failure.unwrap().oracle_verdict, Some(false));
}

#[test]
fn trace_writes_json_lines() {
    let g = gen_ore_random(20, 4).unwrap().graph;
    let out = run_with_stdin(&["partition", "--trace"], &edge_list(&g));
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    let err = String::from_utf8(out.stderr).unwrap();
    let lines: Vec<serde_json::Value> = err
        .lines()
        .filter_map(|l| serde_json::from_str(l).ok())
        .collect();
    assert_eq!(lines.len(), r.move_count);
}

#[test]
fn verify_k4() {
    let g = gen_complete(4);
    let input = tmp("k4.txt", &edge_list(&g));
    let cycles = tmp("k4.json", "[[0,1,2,3]]");
    let out = bin()
        .args([
            "verify",
            "--c",
            "2",
            "--input",
            input.to_str().unwrap(),
            "--cycles",
            cycles.to_str().unwrap(),
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(report(&out).verdict, Verdict::Valid);

    let bad = tmp("k4-bad.json", "[[0,1,2]]");
    let out = bin()
        .args([
            "verify",
            "--c",
            "2",
            "--input",
            input.to_str().unwrap(),
            "--cycles",
            bad.to_str().unwrap(),
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(report(&out).verdict, Verdict::Invalid);
}

#[test]
fn verify_accepts_a_previous_report() {
    let g = gen_complete(8);
    let input = tmp("k8.txt", &edge_list(&g));
    let out = bin()
        .args(["pack", "--k", "2", "--input", input.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let packed = tmp("k8-report.json", &String::from_utf8(out.stdout).unwrap());
    let out = bin()
        .args([
            "verify",
            "--k",
            "2",
            "--packing",
            "--input",
            input.to_str().unwrap(),
            "--cycles",
            packed.to_str().unwrap(),
        ])
        .output()
        .unwrap();
    assert_eq!(report(&out).verdict, Verdict::Valid);
}

#[test]
fn check_reports_thresholds() {
    let out = run_with_stdin(&["check"], &edge_list(&gen_extremal_degree(17).unwrap()));
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    let ore = r.checks.iter().find(|c| c.name == "ore_sigma2").unwrap();
    assert_eq!((ore.measured, ore.pass), (Some(16), false));
}

#[test]
fn parse_errors_are_refused() {
    let out = run_with_stdin(&["partition"], "3 2\n0 1\n1 1\n");
    assert_eq!(out.status.code(), Some(2));
    let r = report(&out);
    assert_eq!(r.verdict, Verdict::Refused);
    assert!(r.error.unwrap().contains("line 3"));
}

#[test]
fn bad_flags_are_usage_errors() {
    let out = bin().args(["partition", "--k", "x"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = bin()
        .args(["generate", "--family", "nope"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = run_with_stdin(&["partition", "--k", "0"], &edge_list(&gen_complete(5)));
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn generate_writes_edge_list_and_sidecar() {
    let dir = std::env::temp_dir().join(format!("chordpart-gen-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let side = dir.join("meta.json");
    let out = bin()
        .args([
            "generate",
            "--family",
            "ore_random",
            "--params",
            "n=17",
            "--seed",
            "1",
            "--sidecar",
        ])
        .arg(&side)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let g = Graph::parse_edge_list(&String::from_utf8(out.stdout).unwrap()).unwrap();
    assert_eq!(g.digest(), gen_ore_random(17, 1).unwrap().graph.digest());
    let meta: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&side).unwrap()).unwrap();
    assert_eq!(meta["ore"], true);
    assert_eq!(meta["input"]["n"], 17);
}

#[test]
fn experiment_csv() {
    let out = bin()
        .args([
            "experiment",
            "--n-min",
            "8",
            "--n-max",
            "9",
            "--seeds",
            "2",
            "--oracle-threshold",
            "0",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("n,k,c,seed,sigma2,engine,moves,time_ms"));
    assert_eq!(lines.count(), 4);

    let out = bin()
        .args(["experiment", "--n-min", "9", "--n-max", "8"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap().lines().count(), 1);

    let out = bin()
        .args([
            "experiment",
            "--n-min",
            "8",
            "--n-max",
            "8",
            "--seeds",
            "1",
            "--oracle-threshold",
            "12",
        ])
        .output()
        .unwrap();
    assert!(String::from_utf8(out.stdout)
        .unwrap()
        .starts_with("n,k,c,seed,sigma2,engine,oracle,"));
}

#[test]
fn experiment_rate_at_the_order_bound() {
    let out = bin()
        .args([
            "experiment",
            "--n-min",
            "17",
            "--n-max",
            "17",
            "--seeds",
            "50",
            "--oracle-threshold",
            "0",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(
        text.lines()
            .skip(1)
            .filter(|l| l.contains(",partitioned,"))
            .count(),
        50
    );
}
