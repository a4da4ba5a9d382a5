//! Exact partition search for small graphs, used when the exchange engine
//! stalls on inputs below the degree and order conditions.
//!
//! Vertex sets are `u64` masks. The set holding the lowest remaining vertex
//! is enumerated among submasks that keep enough vertices for the other
//! cycles and have enough induced edges; each candidate is then tested for
//! a Hamilton cycle by depth-first search.

use std::collections::HashSet;

use crate::chorded::{min_chorded_order, OrientedCycle};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

pub const EXACT_LIMIT: usize = 64;

pub fn exact_partition(g: &Graph, k: usize, c: usize) -> Result<Option<Vec<OrientedCycle>>> {
    if k == 0 || c == 0 {
        return Err(Error::InvalidParameter("k and c must be positive".into()));
    }
    if g.n() > EXACT_LIMIT {
        return Err(Error::OverLimit {
            n: g.n(),
            limit: EXACT_LIMIT,
        });
    }
    let adj: Vec<u64> = g
        .vertices()
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, &u| m | (1u64 << u)))
        .collect();
    let all = if g.n() == 64 {
        u64::MAX
    } else {
        (1u64 << g.n()) - 1
    };
    let mut s = Exact {
        adj,
        c,
        t0: min_chorded_order(c),
        failed: HashSet::new(),
    };
    Ok(s.solve(all, k).map(|cycles| {
        cycles
            .into_iter()
            .map(OrientedCycle::from_seq_unchecked)
            .collect()
    }))
}

struct Exact {
    adj: Vec<u64>,
    c: usize,
    t0: usize,
    failed: HashSet<(u64, usize)>,
}

impl Exact {
    fn edges_in(&self, set: u64) -> usize {
        let mut total = 0;
        let mut rest = set;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            total += (self.adj[v] & set).count_ones() as usize;
        }
        total / 2
    }

    fn solve(&mut self, rem: u64, k: usize) -> Option<Vec<Vec<Vertex>>> {
        let size = rem.count_ones() as usize;
        if size < k * self.t0 {
            return None;
        }
        if k == 1 {
            return self.cycle_on(rem).map(|c| vec![c]);
        }
        if self.failed.contains(&(rem, k)) {
            return None;
        }
        let low = rem & rem.wrapping_neg();
        let others = rem ^ low;
        let max_size = size - (k - 1) * self.t0;
        // every submask of `others`, including the empty one
        let mut sub = others;
        loop {
            let set = sub | low;
            let sz = set.count_ones() as usize;
            if sz >= self.t0 && sz <= max_size {
                if let Some(cyc) = self.cycle_on(set) {
                    if let Some(mut more) = self.solve(rem ^ set, k - 1) {
                        more.insert(0, cyc);
                        return Some(more);
                    }
                }
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & others;
        }
        self.failed.insert((rem, k));
        None
    }

    /// A Hamilton cycle of `G[set]` with at least `c` chords.
    fn cycle_on(&self, set: u64) -> Option<Vec<Vertex>> {
        let size = set.count_ones() as usize;
        if size < 3 || self.edges_in(set) < size + self.c {
            return None;
        }
        let start = set.trailing_zeros() as usize;
        let mut path = vec![start];
        let mut dead = HashSet::new();
        self.ham(set, 1u64 << start, start, &mut path, &mut dead)
            .then_some(path)
    }

    fn ham(
        &self,
        set: u64,
        visited: u64,
        end: usize,
        path: &mut Vec<Vertex>,
        dead: &mut HashSet<(u64, usize)>,
    ) -> bool {
        let start = path[0];
        if visited == set {
            return self.adj[end] & (1u64 << start) != 0;
        }
        if dead.contains(&(visited, end)) {
            return false;
        }
        let mut next = self.adj[end] & set & !visited;
        while next != 0 {
            let w = next.trailing_zeros() as usize;
            next &= next - 1;
            path.push(w);
            if self.ham(set, visited | (1u64 << w), w, path, dead) {
                return true;
            }
            path.pop();
        }
        dead.insert((visited, end));
        false
    }
}
