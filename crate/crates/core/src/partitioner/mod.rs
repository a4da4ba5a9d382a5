//! Turning a packing of `k` disjoint `c`-chorded cycles into a spanning
//! partition by local exchanges.
//!
//! Every exchange replaces one to three cycles of the current collection
//! and strictly increases the lexicographic potential
//! `(|V(C*) ∩ L|, |V(C*)|)`, where `C*` is the union of the cycles and `L`
//! the set of vertices of degree below `n/2`. The potential is bounded by
//! `(|L|, n)`, so the driver terminates after at most `(|L|+1)(n+1)` moves.

mod certificate;
mod engine;
pub mod exact;
mod moves;
mod state;
mod two_chords;

use serde::{Deserialize, Serialize};

use crate::chorded::OrientedCycle;
use crate::graph::{Graph, Vertex};

pub use certificate::{verify_packing, verify_partition, verify_state, Certificate, CycleWitness};
pub use engine::{
    augment, fixpoint_diagnostics, next_move, partition, AttachmentViolation, FailureReason,
    FailureReport, FixpointDiagnostics, MoveLog, MoveRecord, NeighbourViolation, Partition,
    PartitionOptions, PartitionOutcome, Resolution,
};
pub use moves::{
    check_lemma2, find_chorded_cycle_in, try_move_absorb_case1, try_move_absorb_case2,
    try_move_crossing, try_move_leftover_clique, try_move_split, Case2Blocked, SplitWitness,
};
pub use state::PartitionState;
pub use two_chords::{find_two_chords, find_two_chords_on, TwoChords, TwoChordsError};

/// `L = { v : d(v) < n/2 }`, compared in integers as `2·d(v) < n`.
pub fn compute_low_set(g: &Graph) -> Vec<Vertex> {
    g.vertices().filter(|&v| 2 * g.degree(v) < g.n()).collect()
}

/// Lexicographic potential; field order gives the comparison order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Potential {
    pub low_covered: usize,
    pub covered: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MoveKind {
    CrossingRotation,
    CrossingExternal,
    SplitClaim2,
    AbsorbCase1,
    AbsorbCase2Clique,
    AbsorbCase2R3,
    AbsorbCase2R2,
}

impl MoveKind {
    pub fn as_str(self) -> &'static str {
        match self {
            MoveKind::CrossingRotation => "crossing_rotation",
            MoveKind::CrossingExternal => "crossing_external",
            MoveKind::SplitClaim2 => "split_claim2",
            MoveKind::AbsorbCase1 => "absorb_case1",
            MoveKind::AbsorbCase2Clique => "absorb_case2_clique",
            MoveKind::AbsorbCase2R3 => "absorb_case2_r3",
            MoveKind::AbsorbCase2R2 => "absorb_case2_r2",
        }
    }
}

/// One exchange: `produced[i]` takes the slot of `consumed[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Move {
    pub kind: MoveKind,
    pub consumed: Vec<usize>,
    pub produced: Vec<OrientedCycle>,
    /// Leftover vertices that the produced cycles cover.
    pub absorbed: Vec<Vertex>,
    /// Vertices of consumed cycles that return to the leftover.
    pub released: Vec<Vertex>,
}

impl Move {
    pub(crate) fn new(
        state: &PartitionState,
        kind: MoveKind,
        consumed: Vec<usize>,
        produced: Vec<OrientedCycle>,
    ) -> Move {
        let mut absorbed: Vec<Vertex> = produced
            .iter()
            .flat_map(|c| c.seq().iter().copied())
            .filter(|&v| state.owner(v).is_none())
            .collect();
        absorbed.sort_unstable();
        let mut released: Vec<Vertex> = consumed
            .iter()
            .flat_map(|&p| state.cycle(p).seq().iter().copied())
            .filter(|&v| !produced.iter().any(|c| c.contains(v)))
            .collect();
        released.sort_unstable();
        Move {
            kind,
            consumed,
            produced,
            absorbed,
            released,
        }
    }

    /// One-line human-readable description.
    pub fn describe(&self) -> String {
        format!(
            "{} consumed {:?} produced {:?} absorbed {:?} released {:?}",
            self.kind.as_str(),
            self.consumed,
            self.produced
                .iter()
                .map(|c| c.seq().to_vec())
                .collect::<Vec<_>>(),
            self.absorbed,
            self.released
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn low_set_examples() {
        let mut e = Vec::new();
        for u in 0..5 {
            for v in u + 1..5 {
                e.push((u, v));
            }
        }
        assert!(compute_low_set(&Graph::from_edges(5, &e).unwrap()).is_empty());

        let k23 = Graph::from_edges(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap();
        assert_eq!(compute_low_set(&k23), vec![2, 3, 4]);

        let star = Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        assert_eq!(compute_low_set(&star), vec![1, 2, 3, 4]);
    }

    #[test]
    fn potential_order_is_lexicographic() {
        let a = Potential {
            low_covered: 1,
            covered: 9,
        };
        let b = Potential {
            low_covered: 2,
            covered: 3,
        };
        let c = Potential {
            low_covered: 2,
            covered: 4,
        };
        assert!(a < b && b < c);
    }

    #[test]
    fn move_kind_names_match_serde() {
        for kind in [
            MoveKind::CrossingRotation,
            MoveKind::CrossingExternal,
            MoveKind::SplitClaim2,
            MoveKind::AbsorbCase1,
            MoveKind::AbsorbCase2Clique,
            MoveKind::AbsorbCase2R3,
            MoveKind::AbsorbCase2R2,
        ] {
            let json = serde_json::to_string(&kind).unwrap();
            assert_eq!(json, format!("\"{}\"", kind.as_str()));
        }
    }
}
