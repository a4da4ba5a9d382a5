use crate::chorded::{chord_count, validate_seq, OrientedCycle};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

use super::{compute_low_set, Move, Potential};

/// The current cycles `C_1..C_k`, the leftover `H* = G − C*`, the fixed
/// low-degree set `L` and the cached potential.
#[derive(Clone, Debug)]
pub struct PartitionState {
    cycles: Vec<OrientedCycle>,
    owner: Vec<Option<usize>>,
    low: Vec<bool>,
    low_count: usize,
    c: usize,
    potential: Potential,
}

impl PartitionState {
    /// Builds a state with `L` computed from `g`.
    pub fn new(g: &Graph, cycles: Vec<OrientedCycle>, c: usize) -> Result<Self> {
        let mut low = vec![false; g.n()];
        for v in compute_low_set(g) {
            low[v] = true;
        }
        Self::with_low_set(g, cycles, c, low)
    }

    pub fn with_low_set(
        g: &Graph,
        cycles: Vec<OrientedCycle>,
        c: usize,
        low: Vec<bool>,
    ) -> Result<Self> {
        if cycles.is_empty() {
            return Err(Error::Precondition(
                "a state needs at least one cycle (k >= 1)".into(),
            ));
        }
        if c == 0 {
            return Err(Error::InvalidParameter("c must be positive".into()));
        }
        if low.len() != g.n() {
            return Err(Error::InvalidParameter(
                "low-degree mask has wrong length".into(),
            ));
        }
        let mut owner = vec![None; g.n()];
        for (p, cyc) in cycles.iter().enumerate() {
            validate_seq(g, cyc.seq())?;
            if chord_count(g, cyc.seq()) < c {
                return Err(Error::InvalidCycle(format!(
                    "cycle {p} has fewer than {c} chords"
                )));
            }
            for &v in cyc.seq() {
                if owner[v].is_some() {
                    return Err(Error::InvalidCycle(format!(
                        "vertex {v} lies on two cycles"
                    )));
                }
                owner[v] = Some(p);
            }
        }
        let low_count = low.iter().filter(|&&b| b).count();
        let mut state = PartitionState {
            cycles,
            owner,
            low,
            low_count,
            c,
            potential: Potential {
                low_covered: 0,
                covered: 0,
            },
        };
        state.potential = state.recompute_potential();
        Ok(state)
    }

    pub fn k(&self) -> usize {
        self.cycles.len()
    }

    pub fn c(&self) -> usize {
        self.c
    }

    pub fn n(&self) -> usize {
        self.owner.len()
    }

    pub fn cycles(&self) -> &[OrientedCycle] {
        &self.cycles
    }

    pub fn cycle(&self, p: usize) -> &OrientedCycle {
        &self.cycles[p]
    }

    pub fn owner(&self, v: Vertex) -> Option<usize> {
        self.owner[v]
    }

    pub fn in_leftover(&self, v: Vertex) -> bool {
        self.owner[v].is_none()
    }

    pub fn is_low(&self, v: Vertex) -> bool {
        self.low[v]
    }

    pub fn low_mask(&self) -> &[bool] {
        &self.low
    }

    pub fn low_count(&self) -> usize {
        self.low_count
    }

    /// `V(H*)`, ascending.
    pub fn leftover(&self) -> Vec<Vertex> {
        (0..self.n()).filter(|&v| self.owner[v].is_none()).collect()
    }

    pub fn leftover_mask(&self) -> Vec<bool> {
        self.owner.iter().map(|o| o.is_none()).collect()
    }

    pub fn leftover_size(&self) -> usize {
        self.owner.iter().filter(|o| o.is_none()).count()
    }

    /// Components of `H*`.
    pub fn leftover_components(&self, g: &Graph) -> Vec<Vec<Vertex>> {
        g.components_within(&self.leftover_mask())
    }

    pub fn is_spanning(&self) -> bool {
        self.owner.iter().all(|o| o.is_some())
    }

    pub fn potential(&self) -> Potential {
        self.potential
    }

    pub fn recompute_potential(&self) -> Potential {
        let mut p = Potential {
            low_covered: 0,
            covered: 0,
        };
        for (v, o) in self.owner.iter().enumerate() {
            if o.is_some() {
                p.covered += 1;
                if self.low[v] {
                    p.low_covered += 1;
                }
            }
        }
        p
    }

    /// `N_{C_p}(X)` for a vertex set `xs`, ascending.
    pub fn attachments(&self, g: &Graph, p: usize, xs: &[Vertex]) -> Vec<Vertex> {
        let mut out: Vec<Vertex> = self.cycles[p]
            .seq()
            .iter()
            .copied()
            .filter(|&v| xs.iter().any(|&x| g.has_edge(v, x)))
            .collect();
        out.sort_unstable();
        out
    }

    /// Potential after `mv` without applying it.
    pub fn potential_after(&self, mv: &Move) -> Potential {
        let mut p = self.potential;
        for &v in &mv.absorbed {
            p.covered += 1;
            if self.low[v] {
                p.low_covered += 1;
            }
        }
        for &v in &mv.released {
            p.covered -= 1;
            if self.low[v] {
                p.low_covered -= 1;
            }
        }
        p
    }

    /// Applies `mv` after checking that the result is a valid collection of
    /// `k` disjoint `c`-chorded cycles with strictly larger potential.
    /// Returns the potentials before and after.
    pub fn apply(&mut self, g: &Graph, mv: &Move) -> Result<(Potential, Potential)> {
        if mv.consumed.len() != mv.produced.len() || mv.consumed.is_empty() {
            return Err(Error::MoveRejected(
                "consumed and produced counts differ".into(),
            ));
        }
        let mut slots = mv.consumed.clone();
        slots.sort_unstable();
        slots.dedup();
        if slots.len() != mv.consumed.len() || slots.iter().any(|&p| p >= self.k()) {
            return Err(Error::MoveRejected(format!(
                "bad cycle indices {:?}",
                mv.consumed
            )));
        }
        let mut next = self.cycles.clone();
        for (&p, cyc) in mv.consumed.iter().zip(&mv.produced) {
            validate_seq(g, cyc.seq()).map_err(|e| Error::MoveRejected(e.to_string()))?;
            if chord_count(g, cyc.seq()) < self.c {
                return Err(Error::MoveRejected(format!(
                    "{} produced a cycle with fewer than {} chords",
                    mv.kind.as_str(),
                    self.c
                )));
            }
            next[p] = cyc.clone();
        }
        let mut owner = vec![None; self.n()];
        for (p, cyc) in next.iter().enumerate() {
            for &v in cyc.seq() {
                if owner[v].is_some() {
                    return Err(Error::MoveRejected(format!("vertex {v} covered twice")));
                }
                owner[v] = Some(p);
            }
        }
        let before = self.potential;
        let candidate = PartitionState {
            cycles: next,
            owner,
            low: std::mem::take(&mut self.low),
            low_count: self.low_count,
            c: self.c,
            potential: before,
        };
        let after = candidate.recompute_potential();
        if after <= before {
            self.low = candidate.low;
            return Err(Error::MoveRejected(format!(
                "{} does not increase the potential: {:?} -> {:?}",
                mv.kind.as_str(),
                before,
                after
            )));
        }
        *self = candidate;
        self.potential = after;
        Ok((before, after))
    }
}
