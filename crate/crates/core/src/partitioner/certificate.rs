use serde::{Deserialize, Serialize};

use crate::chorded::{chord_count, validate_seq};
use crate::graph::{Graph, Vertex};

use super::state::PartitionState;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleWitness {
    pub seq: Vec<Vertex>,
    pub valid: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub chord_count: usize,
    pub chorded: bool,
}

/// Result of checking a claimed collection of cycles. Failures are data.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub k: usize,
    pub c: usize,
    pub cycles: Vec<CycleWitness>,
    pub count_matches: bool,
    pub disjoint: bool,
    pub overlaps: Vec<Vertex>,
    pub spanning: bool,
    pub uncovered: Vec<Vertex>,
    pub potential_consistent: bool,
    pub passed: bool,
}

fn inspect(g: &Graph, k: usize, c: usize, cycles: &[Vec<Vertex>]) -> Certificate {
    let mut witnesses = Vec::with_capacity(cycles.len());
    let mut hits = vec![0usize; g.n()];
    let mut out_of_range = false;
    for seq in cycles {
        let check = validate_seq(g, seq);
        let valid = check.is_ok();
        let chords = if valid { chord_count(g, seq) } else { 0 };
        for &v in seq {
            match hits.get_mut(v) {
                Some(h) => *h += 1,
                None => out_of_range = true,
            }
        }
        witnesses.push(CycleWitness {
            seq: seq.clone(),
            valid,
            error: check.err().map(|e| e.to_string()),
            chord_count: chords,
            chorded: valid && chords >= c,
        });
    }
    let overlaps: Vec<Vertex> = (0..g.n()).filter(|&v| hits[v] > 1).collect();
    let uncovered: Vec<Vertex> = (0..g.n()).filter(|&v| hits[v] == 0).collect();
    Certificate {
        k,
        c,
        count_matches: cycles.len() == k,
        disjoint: overlaps.is_empty() && !out_of_range,
        overlaps,
        spanning: uncovered.is_empty(),
        uncovered,
        potential_consistent: true,
        passed: false,
        cycles: witnesses,
    }
}

fn packing_ok(cert: &Certificate) -> bool {
    cert.count_matches && cert.disjoint && cert.cycles.iter().all(|w| w.valid && w.chorded)
}

/// Checks a partition into `k` `c`-chorded cycles.
pub fn verify_partition(g: &Graph, k: usize, c: usize, cycles: &[Vec<Vertex>]) -> Certificate {
    let mut cert = inspect(g, k, c, cycles);
    cert.passed = packing_ok(&cert) && cert.spanning;
    cert
}

/// Checks `k` disjoint `c`-chorded cycles, not necessarily spanning.
pub fn verify_packing(g: &Graph, k: usize, c: usize, cycles: &[Vec<Vertex>]) -> Certificate {
    let mut cert = inspect(g, k, c, cycles);
    cert.passed = packing_ok(&cert);
    cert
}

/// Checks a state from scratch: its cycles form a packing, `H*` is the
/// complement of their union, and the cached potential matches.
pub fn verify_state(g: &Graph, state: &PartitionState) -> Certificate {
    let cycles: Vec<Vec<Vertex>> = state.cycles().iter().map(|c| c.seq().to_vec()).collect();
    let mut cert = inspect(g, state.k(), state.c(), &cycles);
    let leftover_ok = cert.uncovered == state.leftover();
    let mut low_covered = 0;
    let mut covered = 0;
    for v in g.vertices() {
        let in_cycles = !cert.uncovered.contains(&v);
        if in_cycles {
            covered += 1;
            if state.is_low(v) {
                low_covered += 1;
            }
        }
    }
    let p = state.potential();
    cert.potential_consistent = leftover_ok
        && p.low_covered == low_covered
        && p.covered == covered
        && p == state.recompute_potential();
    cert.passed = packing_ok(&cert) && cert.potential_consistent;
    cert
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete(t: usize) -> Graph {
        let mut e = Vec::new();
        for u in 0..t {
            for v in u + 1..t {
                e.push((u, v));
            }
        }
        Graph::from_edges(t, &e).unwrap()
    }

    #[test]
    fn k4_hamilton_cycle_is_two_chorded() {
        let cert = verify_partition(&complete(4), 1, 2, &[vec![0, 1, 2, 3]]);
        assert!(cert.passed);
        assert_eq!(cert.cycles[0].chord_count, 2);
    }

    #[test]
    fn triangles_have_no_chords() {
        let cert = verify_partition(&complete(6), 2, 1, &[vec![0, 1, 2], vec![3, 4, 5]]);
        assert!(!cert.passed);
        assert!(cert.spanning && cert.disjoint);
        assert!(cert.cycles.iter().all(|w| w.chord_count == 0));
    }

    #[test]
    fn overlap_fails() {
        let cert = verify_packing(&complete(7), 2, 1, &[vec![0, 1, 2, 3], vec![3, 4, 5, 6]]);
        assert!(!cert.passed);
        assert_eq!(cert.overlaps, vec![3]);
    }

    #[test]
    fn bad_sequences_are_reported_not_raised() {
        let cert = verify_partition(&complete(4), 1, 1, &[vec![0, 1, 9]]);
        assert!(!cert.passed);
        assert!(!cert.cycles[0].valid);
        assert!(cert.cycles[0].error.is_some());
        let cert = verify_partition(&complete(4), 2, 1, &[vec![0, 1, 2, 3]]);
        assert!(!cert.count_matches && !cert.passed);
    }
}
