//! Brute-force reference answers for small graphs.
//!
//! A Held–Karp table over vertex masks records, for each mask, the
//! endpoints of Hamilton paths of the induced subgraph that start at the
//! mask's lowest vertex. A mask carries a `c`-chorded cycle through all of
//! its vertices iff some endpoint closes back to that lowest vertex and the
//! mask induces at least `|mask| + c` edges.

use std::collections::HashSet;

use crate::chorded::min_chorded_order;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

pub const DEFAULT_ORACLE_LIMIT: usize = 18;
/// The table has `2^n` entries; beyond this the oracle always refuses.
pub const MAX_ORACLE_LIMIT: usize = 24;

/// `CHORDPART_ORACLE_LIMIT` if set and parseable, else 18; never above 24.
pub fn oracle_limit() -> usize {
    std::env::var("CHORDPART_ORACLE_LIMIT")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_ORACLE_LIMIT)
        .min(MAX_ORACLE_LIMIT)
}

struct Table {
    adj: Vec<u32>,
    /// `ends[mask]`: endpoints `v` of Hamilton paths of `G[mask]` from its lowest vertex
    ends: Vec<u32>,
    c: usize,
}

impl Table {
    fn build(g: &Graph, c: usize) -> Table {
        let n = g.n();
        let adj: Vec<u32> = g
            .vertices()
            .map(|v| g.neighbors(v).iter().fold(0u32, |m, &u| m | (1 << u)))
            .collect();
        let mut ends = vec![0u32; 1usize << n];
        for v in 0..n {
            ends[1 << v] = 1 << v;
        }
        for mask in 1usize..(1 << n) {
            let e = ends[mask];
            if e == 0 {
                continue;
            }
            let low = mask.trailing_zeros();
            // only vertices above the start may join
            let above = !((1u32 << (low + 1)) - 1);
            let free = full(n) & !(mask as u32) & above;
            let mut rest = e;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                let mut next = adj[v] & free;
                while next != 0 {
                    let w = next.trailing_zeros();
                    next &= next - 1;
                    ends[mask | (1 << w)] |= 1 << w;
                }
            }
        }
        Table { adj, ends, c }
    }

    fn induced_edges(&self, mask: u32) -> usize {
        let mut total = 0;
        let mut rest = mask;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            total += (self.adj[v] & mask).count_ones() as usize;
        }
        total / 2
    }

    fn good(&self, mask: u32) -> bool {
        let size = mask.count_ones() as usize;
        if size < 3 || self.induced_edges(mask) < size + self.c {
            return false;
        }
        let low = mask.trailing_zeros() as usize;
        self.ends[mask as usize] & self.adj[low] != 0
    }

    /// Walks the table backwards to recover a Hamilton cycle of a good mask.
    fn cycle(&self, mask: u32) -> Vec<Vertex> {
        let low = mask.trailing_zeros() as usize;
        let mut end = (self.ends[mask as usize] & self.adj[low]).trailing_zeros() as usize;
        let mut cur = mask;
        let mut rev = vec![end];
        while cur.count_ones() > 1 {
            let prev = cur & !(1 << end);
            let cands = self.ends[prev as usize] & self.adj[end];
            let u = cands.trailing_zeros() as usize;
            rev.push(u);
            cur = prev;
            end = u;
        }
        rev.reverse();
        rev
    }

    /// Good submasks of `rem` containing its lowest vertex, shortest first.
    fn candidates(&self, rem: u32, max_size: usize) -> Vec<u32> {
        let low = rem & rem.wrapping_neg();
        let others = rem ^ low;
        let mut out = Vec::new();
        let mut sub = others;
        loop {
            let set = sub | low;
            if set.count_ones() as usize <= max_size && self.good(set) {
                out.push(set);
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & others;
        }
        out.sort_by_key(|&m| (m.count_ones(), m));
        out
    }
}

fn guard(g: &Graph, k: usize, c: usize) -> Result<()> {
    if k == 0 || c == 0 {
        return Err(Error::InvalidParameter("k and c must be positive".into()));
    }
    let limit = oracle_limit();
    if g.n() > limit {
        return Err(Error::OverLimit { n: g.n(), limit });
    }
    Ok(())
}

fn full(n: usize) -> u32 {
    if n == 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

/// A partition of `V(G)` into `k` cycles with at least `c` chords each, or
/// `None` when none exists.
pub fn oracle_partition(g: &Graph, k: usize, c: usize) -> Result<Option<Vec<Vec<Vertex>>>> {
    guard(g, k, c)?;
    if g.n() == 0 {
        return Ok(None);
    }
    let t = Table::build(g, c);
    let mut failed = HashSet::new();
    Ok(split(&t, full(g.n()), k, min_chorded_order(c), &mut failed))
}

fn split(
    t: &Table,
    rem: u32,
    k: usize,
    t0: usize,
    failed: &mut HashSet<(u32, usize)>,
) -> Option<Vec<Vec<Vertex>>> {
    let size = rem.count_ones() as usize;
    if size < k * t0 {
        return None;
    }
    if k == 1 {
        return t.good(rem).then(|| vec![t.cycle(rem)]);
    }
    if failed.contains(&(rem, k)) {
        return None;
    }
    for set in t.candidates(rem, size - (k - 1) * t0) {
        if let Some(mut more) = split(t, rem ^ set, k - 1, t0, failed) {
            more.insert(0, t.cycle(set));
            return Some(more);
        }
    }
    failed.insert((rem, k));
    None
}

/// `k` disjoint cycles with at least `c` chords each, not necessarily
/// spanning, or `None`.
pub fn oracle_packing(g: &Graph, k: usize, c: usize) -> Result<Option<Vec<Vec<Vertex>>>> {
    guard(g, k, c)?;
    if g.n() == 0 {
        return Ok(None);
    }
    let t = Table::build(g, c);
    let mut failed = HashSet::new();
    Ok(pack(&t, full(g.n()), k, min_chorded_order(c), &mut failed))
}

fn pack(
    t: &Table,
    rem: u32,
    k: usize,
    t0: usize,
    failed: &mut HashSet<(u32, usize)>,
) -> Option<Vec<Vec<Vertex>>> {
    if k == 0 {
        return Some(Vec::new());
    }
    let size = rem.count_ones() as usize;
    if size < k * t0 || failed.contains(&(rem, k)) {
        return None;
    }
    for set in t.candidates(rem, size - (k - 1) * t0) {
        if let Some(mut more) = pack(t, rem ^ set, k - 1, t0, failed) {
            more.insert(0, t.cycle(set));
            return Some(more);
        }
    }
    let low = rem & rem.wrapping_neg();
    if let Some(found) = pack(t, rem ^ low, k, t0, failed) {
        return Some(found);
    }
    failed.insert((rem, k));
    None
}
