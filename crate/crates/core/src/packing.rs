//! Initial collections of `k` disjoint `c`-chorded cycles.
//!
//! The search is two-phase. A greedy pass repeatedly takes a shortest
//! chorded cycle among the unused vertices, trying high-degree start
//! vertices first. If that does not reach `k` cycles, a backtracking search
//! decides for the lowest remaining vertex whether it starts a cycle or is
//! left out, trying cycles shortest-first and memoising failed residues.
//! Both phases draw from one node budget.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::chorded::{min_chorded_order, OrientedCycle};
use crate::error::{Error, Result};
use crate::graph::{Graph, Sigma2, Vertex};
use crate::search::{cycles_through, shortest_chorded_cycle, Budget, Flow, SearchStatus};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PackingPreconditions {
    pub n: usize,
    pub k: usize,
    pub c: usize,
    /// `k(c+3)`
    pub order_required: usize,
    pub order_ok: bool,
    pub sigma2: Sigma2,
    /// `2k(c+2) − 1`
    pub sigma2_required: usize,
    pub sigma2_ok: bool,
}

pub fn check_packing_preconditions(g: &Graph, k: usize, c: usize) -> PackingPreconditions {
    let order_required = k * (c + 3);
    let sigma2_required = (2 * k * (c + 2)).saturating_sub(1);
    let sigma2 = g.sigma2();
    PackingPreconditions {
        n: g.n(),
        k,
        c,
        order_required,
        order_ok: g.n() >= order_required,
        sigma2,
        sigma2_required,
        sigma2_ok: sigma2.at_least(sigma2_required),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Packing {
    pub cycles: Vec<OrientedCycle>,
    pub k: usize,
    pub c: usize,
}

#[derive(Clone, Debug)]
pub struct PackingOutcome {
    pub packing: Option<Packing>,
    pub nodes_explored: u64,
    /// `true` when `packing` is `None` because the budget ran out rather
    /// than because the search space was exhausted.
    pub budget_exhausted: bool,
}

pub fn find_packing(g: &Graph, k: usize, c: usize, budget: u64) -> Result<PackingOutcome> {
    if k == 0 || c == 0 {
        return Err(Error::InvalidParameter("k and c must be positive".into()));
    }
    if budget == 0 {
        return Err(Error::InvalidParameter("budget must be positive".into()));
    }
    let mut greedy_budget = Budget::new(budget / 2 + 1);
    if let Some(cycles) = greedy(g, k, c, &mut greedy_budget) {
        return Ok(done(k, c, cycles, greedy_budget.used()));
    }
    let mut search = Backtrack {
        g,
        c,
        t0: min_chorded_order(c),
        budget: Budget::new(budget.saturating_sub(greedy_budget.used()).max(1)),
        failed: HashSet::new(),
    };
    let remaining = vec![true; g.n()];
    let found = search.solve(&remaining, k);
    let used = greedy_budget.used() + search.budget.used();
    match found {
        Some(cycles) => Ok(done(k, c, cycles, used)),
        None => Ok(PackingOutcome {
            packing: None,
            nodes_explored: used,
            budget_exhausted: search.budget.exhausted(),
        }),
    }
}

fn done(k: usize, c: usize, cycles: Vec<Vec<Vertex>>, used: u64) -> PackingOutcome {
    let cycles = cycles
        .into_iter()
        .map(OrientedCycle::from_seq_unchecked)
        .collect();
    PackingOutcome {
        packing: Some(Packing { cycles, k, c }),
        nodes_explored: used,
        budget_exhausted: false,
    }
}

fn greedy(g: &Graph, k: usize, c: usize, budget: &mut Budget) -> Option<Vec<Vec<Vertex>>> {
    let mut allowed = vec![true; g.n()];
    let mut starts: Vec<Vertex> = g.vertices().collect();
    starts.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut out = Vec::with_capacity(k);
    for _ in 0..k {
        let (found, _) = shortest_chorded_cycle(g, &allowed, &starts, c, budget);
        let cyc = found?;
        for &v in &cyc {
            allowed[v] = false;
        }
        out.push(cyc);
    }
    Some(out)
}

struct Backtrack<'g> {
    g: &'g Graph,
    c: usize,
    t0: usize,
    budget: Budget,
    failed: HashSet<(Vec<bool>, usize)>,
}

impl Backtrack<'_> {
    fn solve(&mut self, remaining: &[bool], k_left: usize) -> Option<Vec<Vec<Vertex>>> {
        if k_left == 0 {
            return Some(Vec::new());
        }
        let avail = remaining.iter().filter(|&&r| r).count();
        if avail < k_left * self.t0 || self.budget.exhausted() {
            return None;
        }
        let key = (remaining.to_vec(), k_left);
        if self.failed.contains(&key) {
            return None;
        }
        let low = remaining.iter().position(|&r| r)?;

        let max_len = avail - (k_left - 1) * self.t0;
        let mut tried: HashSet<Vec<Vertex>> = HashSet::new();
        for len in self.t0..=max_len {
            let mut candidates: Vec<Vec<Vertex>> = Vec::new();
            let c = self.c;
            let status = cycles_through(
                self.g,
                low,
                len,
                remaining,
                &mut self.budget,
                &mut |seq, induced| {
                    if induced - seq.len() >= c {
                        let mut set = seq.to_vec();
                        set.sort_unstable();
                        if tried.insert(set) {
                            candidates.push(seq.to_vec());
                        }
                    }
                    Flow::Continue
                },
            );
            for cyc in candidates {
                let mut rest = remaining.to_vec();
                for &v in &cyc {
                    rest[v] = false;
                }
                if let Some(mut more) = self.solve(&rest, k_left - 1) {
                    more.insert(0, cyc);
                    return Some(more);
                }
            }
            if status == SearchStatus::Exhausted {
                return None;
            }
        }

        let mut rest = remaining.to_vec();
        rest[low] = false;
        if let Some(found) = self.solve(&rest, k_left) {
            return Some(found);
        }
        if !self.budget.exhausted() {
            self.failed.insert(key);
        }
        None
    }
}
