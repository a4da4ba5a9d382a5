//! The driver: packing, then exchange moves until the cycles span.

use serde::{Deserialize, Serialize};

use crate::chorded::{order_threshold, OrientedCycle};
use crate::error::{Error, Result};
use crate::graph::{Graph, Sigma2, Vertex};
use crate::packing::find_packing;

use super::certificate::verify_state;
use super::exact::exact_partition;
use super::moves::{
    try_move_absorb_case1, try_move_absorb_case2, try_move_crossing, try_move_leftover_clique,
    try_move_split,
};
use super::state::PartitionState;
use super::{Move, MoveKind, Potential};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionOptions {
    /// Node budget for the initial packing search.
    pub budget: u64,
    /// Graphs up to this order get an exact verdict when the moves stall.
    pub oracle_threshold: usize,
    /// Return the exact solver's partition when the moves stall.
    pub exact_fallback: bool,
}

impl Default for PartitionOptions {
    fn default() -> Self {
        PartitionOptions {
            budget: 5_000_000,
            oracle_threshold: 18,
            exact_fallback: true,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MoveRecord {
    pub step: usize,
    pub kind: MoveKind,
    pub consumed: Vec<usize>,
    pub produced: Vec<Vec<Vertex>>,
    pub absorbed: Vec<Vertex>,
    pub released: Vec<Vertex>,
    pub potential_before: Potential,
    pub potential_after: Potential,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct MoveLog {
    pub records: Vec<MoveRecord>,
    /// `(|L|+1)(n+1)`
    pub bound: usize,
    pub initial: Vec<Vec<Vertex>>,
    pub fixpoints: Vec<FixpointDiagnostics>,
}

impl MoveLog {
    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Resolution {
    Engine,
    ExactFallback,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    pub cycles: Vec<OrientedCycle>,
    pub resolution: Resolution,
    pub log: MoveLog,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FailureReason {
    NoPacking,
    Stuck,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FailureReport {
    pub reason: FailureReason,
    pub sigma2: Sigma2,
    pub ore_ok: bool,
    pub order_threshold: usize,
    pub order_ok: bool,
    /// Exact verdict on whether any partition exists, when `n` is small.
    pub exact_verdict: Option<bool>,
    pub fixpoint: Option<FixpointDiagnostics>,
    pub best_cycles: Vec<Vec<Vertex>>,
    pub best_potential: Option<Potential>,
    pub log: MoveLog,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PartitionOutcome {
    Partitioned(Partition),
    Failed(Box<FailureReport>),
}

impl PartitionOutcome {
    pub fn partition(&self) -> Option<&Partition> {
        match self {
            PartitionOutcome::Partitioned(p) => Some(p),
            PartitionOutcome::Failed(_) => None,
        }
    }

    pub fn is_partitioned(&self) -> bool {
        self.partition().is_some()
    }

    pub fn log(&self) -> &MoveLog {
        match self {
            PartitionOutcome::Partitioned(p) => &p.log,
            PartitionOutcome::Failed(f) => &f.log,
        }
    }
}

/// A cycle vertex `v` attaching to leftover `x` whose neighbour `v_plus`
/// on the cycle (either side) is also adjacent to `x`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NeighbourViolation {
    pub p: usize,
    pub v: Vertex,
    pub v_plus: Vertex,
    pub x: Vertex,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AttachmentViolation {
    pub p: usize,
    pub component: Vec<Vertex>,
    pub attachments: usize,
}

/// Structural facts checked at a state where no move applies.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixpointDiagnostics {
    /// The cycles of the stuck state.
    pub cycles: Vec<Vec<Vertex>>,
    pub neighbour: Vec<NeighbourViolation>,
    /// Only checked when `σ₂ ≥ n`.
    pub attachments_checked: bool,
    pub attachment: Vec<AttachmentViolation>,
}

impl FixpointDiagnostics {
    pub fn is_clean(&self) -> bool {
        self.neighbour.is_empty() && self.attachment.is_empty()
    }
}

/// Exhaustive check of `v⁺x ∉ E` (both orientations) and, when `σ₂ ≥ n`,
/// of `|N_{C_p}(H)| ≤ 2c`, over every cycle and leftover component.
pub fn fixpoint_diagnostics(g: &Graph, state: &PartitionState) -> FixpointDiagnostics {
    let mut out = FixpointDiagnostics {
        cycles: state.cycles().iter().map(|c| c.seq().to_vec()).collect(),
        attachments_checked: g.sigma2().at_least(g.n()),
        ..Default::default()
    };
    for comp in state.leftover_components(g) {
        for p in 0..state.k() {
            let cyc = state.cycle(p);
            let att = state.attachments(g, p, &comp);
            for &v in &att {
                for v_plus in [cyc.succ(v), cyc.pred(v)] {
                    for &x in &comp {
                        if g.has_edge(v_plus, x) {
                            out.neighbour.push(NeighbourViolation { p, v, v_plus, x });
                        }
                    }
                }
            }
            if out.attachments_checked && att.len() > 2 * state.c() {
                out.attachment.push(AttachmentViolation {
                    p,
                    component: comp.clone(),
                    attachments: att.len(),
                });
            }
        }
    }
    out
}

/// First applicable move in the fixed order: crossing (by `p`, `v`,
/// component, `x`), split, then the first or second leftover case.
pub fn next_move(g: &Graph, state: &PartitionState) -> Option<Move> {
    let comps = state.leftover_components(g);
    for p in 0..state.k() {
        let cyc = state.cycle(p);
        let mut vs = cyc.sorted_vertices();
        vs.dedup();
        for v in vs {
            for comp in &comps {
                if !comp.iter().any(|&h| g.has_edge(v, h)) {
                    continue;
                }
                for &x in comp {
                    if let Ok(Some(mv)) = try_move_crossing(g, state, p, v, x) {
                        return Some(mv);
                    }
                }
            }
        }
    }
    for p in 0..state.k() {
        if let Some(mv) = try_move_split(g, state, p) {
            return Some(mv);
        }
    }
    if let Some(mv) = try_move_absorb_case1(g, state) {
        return Some(mv);
    }
    if let Some(mv) = try_move_leftover_clique(g, state) {
        return Some(mv);
    }
    try_move_absorb_case2(g, state).ok()
}

/// Applies moves to `state` until it spans or no move applies. Every
/// application is checked for soundness, monotonicity and the move bound.
pub(crate) fn run_moves(g: &Graph, state: &mut PartitionState, log: &mut MoveLog) -> Result<()> {
    while !state.is_spanning() {
        let Some(mv) = next_move(g, state) else {
            return Ok(());
        };
        let (before, after) = state.apply(g, &mv)?;
        if after <= before {
            return Err(Error::MoveRejected(format!(
                "{} did not raise the potential",
                mv.kind.as_str()
            )));
        }
        let cert = verify_state(g, state);
        if !cert.passed {
            return Err(Error::MoveRejected(format!(
                "{} left an invalid state",
                mv.kind.as_str()
            )));
        }
        log.records.push(MoveRecord {
            step: log.records.len(),
            kind: mv.kind,
            consumed: mv.consumed.clone(),
            produced: mv.produced.iter().map(|c| c.seq().to_vec()).collect(),
            absorbed: mv.absorbed.clone(),
            released: mv.released.clone(),
            potential_before: before,
            potential_after: after,
        });
        if log.records.len() > log.bound {
            return Err(Error::MoveRejected(format!(
                "move count exceeds the bound {}",
                log.bound
            )));
        }
    }
    Ok(())
}

/// Runs the exchange moves from an arbitrary starting state until it spans
/// or reaches a fixpoint, returning the log.
pub fn augment(g: &Graph, state: &mut PartitionState) -> Result<MoveLog> {
    let mut log = MoveLog {
        bound: (state.low_count() + 1) * (g.n() + 1),
        initial: state.cycles().iter().map(|c| c.seq().to_vec()).collect(),
        ..Default::default()
    };
    run_moves(g, state, &mut log)?;
    if !state.is_spanning() {
        log.fixpoints.push(fixpoint_diagnostics(g, state));
    }
    Ok(log)
}

pub fn partition(
    g: &Graph,
    k: usize,
    c: usize,
    opts: &PartitionOptions,
) -> Result<PartitionOutcome> {
    if k == 0 || c == 0 {
        return Err(Error::InvalidParameter("k and c must be positive".into()));
    }
    if g.n() < 3 {
        return Err(Error::Precondition(format!(
            "graph has {} vertices, needs at least 3",
            g.n()
        )));
    }
    let sigma2 = g.sigma2();
    let threshold = order_threshold(k, c);
    let small = g.n() <= opts.oracle_threshold && g.n() <= super::exact::EXACT_LIMIT;
    let mut report = FailureReport {
        reason: FailureReason::NoPacking,
        sigma2,
        ore_ok: sigma2.at_least(g.n()),
        order_threshold: threshold,
        order_ok: g.n() >= threshold,
        exact_verdict: None,
        fixpoint: None,
        best_cycles: Vec::new(),
        best_potential: None,
        log: MoveLog::default(),
    };

    let packed = find_packing(g, k, c, opts.budget)?;
    let Some(packing) = packed.packing else {
        if packed.budget_exhausted {
            return Err(Error::BudgetExhausted(opts.budget));
        }
        // no packing means no partition either
        report.exact_verdict = small.then_some(false);
        return Ok(PartitionOutcome::Failed(Box::new(report)));
    };

    let mut state = PartitionState::new(g, packing.cycles, c)?;
    let log = augment(g, &mut state)?;
    if state.is_spanning() {
        return Ok(PartitionOutcome::Partitioned(Partition {
            cycles: state.cycles().to_vec(),
            resolution: Resolution::Engine,
            log,
        }));
    }

    let diag = log.fixpoints.last().cloned().unwrap_or_default();
    if small {
        let exact = exact_partition(g, k, c)?;
        report.exact_verdict = Some(exact.is_some());
        if let (Some(cycles), true) = (exact, opts.exact_fallback) {
            return Ok(PartitionOutcome::Partitioned(Partition {
                cycles,
                resolution: Resolution::ExactFallback,
                log,
            }));
        }
    }
    report.reason = FailureReason::Stuck;
    report.fixpoint = Some(diag);
    report.best_cycles = state.cycles().iter().map(|c| c.seq().to_vec()).collect();
    report.best_potential = Some(state.potential());
    report.log = log;
    Ok(PartitionOutcome::Failed(Box::new(report)))
}
