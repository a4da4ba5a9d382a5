//! Budgeted cycle search kernels shared by the packing and partition code.

use crate::chorded::{chord_count, min_chorded_order, OrientedCycle};
use crate::graph::{Graph, Vertex};

/// Counts search nodes against a hard limit.
#[derive(Clone, Debug)]
pub struct Budget {
    limit: u64,
    used: u64,
}

impl Budget {
    pub fn new(limit: u64) -> Self {
        Budget { limit, used: 0 }
    }

    pub fn unlimited() -> Self {
        Budget::new(u64::MAX)
    }

    /// Consumes one node; `false` once the limit is reached.
    #[inline]
    pub fn tick(&mut self) -> bool {
        if self.used >= self.limit {
            return false;
        }
        self.used += 1;
        true
    }

    pub fn used(&self) -> u64 {
        self.used
    }

    pub fn exhausted(&self) -> bool {
        self.used >= self.limit
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Flow {
    Continue,
    Stop,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchStatus {
    Completed,
    Stopped,
    Exhausted,
}

/// Enumerates every cycle of exactly `len` vertices that starts at `start`
/// and otherwise uses vertices flagged in `allowed`. Each undirected cycle
/// is reported once (`seq[1] < seq[len-1]`). The visitor also receives the
/// number of edges induced by the cycle's vertex set.
pub fn cycles_through<F>(
    g: &Graph,
    start: Vertex,
    len: usize,
    allowed: &[bool],
    budget: &mut Budget,
    visit: &mut F,
) -> SearchStatus
where
    F: FnMut(&[Vertex], usize) -> Flow,
{
    if len < 3 {
        return SearchStatus::Completed;
    }
    let mut on_path = vec![false; g.n()];
    let mut path = vec![start];
    on_path[start] = true;
    let status = extend(g, len, allowed, budget, visit, &mut path, &mut on_path, 0);
    match status {
        Some(s) => s,
        None => SearchStatus::Completed,
    }
}

#[allow(clippy::too_many_arguments)]
fn extend<F>(
    g: &Graph,
    len: usize,
    allowed: &[bool],
    budget: &mut Budget,
    visit: &mut F,
    path: &mut Vec<Vertex>,
    on_path: &mut [bool],
    induced: usize,
) -> Option<SearchStatus>
where
    F: FnMut(&[Vertex], usize) -> Flow,
{
    let last = *path.last().unwrap();
    let start = path[0];
    if path.len() == len {
        if g.has_edge(last, start) && path[1] < last {
            if visit(path, induced) == Flow::Stop {
                return Some(SearchStatus::Stopped);
            }
        }
        return None;
    }
    for &w in g.neighbors(last) {
        if !allowed[w] || on_path[w] {
            continue;
        }
        if !budget.tick() {
            return Some(SearchStatus::Exhausted);
        }
        let gain = g.neighbors(w).iter().filter(|&&u| on_path[u]).count();
        on_path[w] = true;
        path.push(w);
        let r = extend(
            g,
            len,
            allowed,
            budget,
            visit,
            path,
            on_path,
            induced + gain,
        );
        path.pop();
        on_path[w] = false;
        if r.is_some() {
            return r;
        }
    }
    None
}

/// Shortest-first search for a cycle with at least `c` chords inside the
/// vertices flagged in `allowed`. `starts` fixes the order in which start
/// vertices are tried.
pub fn shortest_chorded_cycle(
    g: &Graph,
    allowed: &[bool],
    starts: &[Vertex],
    c: usize,
    budget: &mut Budget,
) -> (Option<Vec<Vertex>>, SearchStatus) {
    let avail = allowed.iter().filter(|&&a| a).count();
    let mut found = None;
    let mut exhausted = false;
    for len in min_chorded_order(c)..=avail {
        for &s in starts {
            if !allowed[s] {
                continue;
            }
            let status = cycles_through(g, s, len, allowed, budget, &mut |seq, induced| {
                if induced - seq.len() >= c {
                    found = Some(seq.to_vec());
                    Flow::Stop
                } else {
                    Flow::Continue
                }
            });
            match status {
                SearchStatus::Stopped => return (found, SearchStatus::Stopped),
                SearchStatus::Exhausted => {
                    exhausted = true;
                    break;
                }
                SearchStatus::Completed => {}
            }
        }
        if exhausted {
            break;
        }
    }
    let status = if exhausted {
        SearchStatus::Exhausted
    } else {
        SearchStatus::Completed
    };
    (None, status)
}

/// Repeatedly inserts an outside vertex adjacent to two consecutive cycle
/// vertices. Each insertion turns the bypassed cycle edge into a chord, so
/// the chord count never drops.
pub fn grow_by_insertion(g: &Graph, seq: &mut Vec<Vertex>, allowed: &[bool]) {
    let mut inside = vec![false; g.n()];
    for &v in seq.iter() {
        inside[v] = true;
    }
    loop {
        let mut inserted = false;
        let len = seq.len();
        'scan: for i in 0..len {
            let (a, b) = (seq[i], seq[(i + 1) % len]);
            for &y in g.neighbors(a) {
                if allowed[y] && !inside[y] && g.has_edge(y, b) {
                    seq.insert(i + 1, y);
                    inside[y] = true;
                    inserted = true;
                    break 'scan;
                }
            }
        }
        if !inserted {
            break;
        }
    }
}

/// Greedy long-cycle construction: walk a path choosing the unvisited
/// neighbor with the fewest onward options, then close it at the earliest
/// path vertex adjacent to the endpoint.
pub fn greedy_long_cycle(g: &Graph, allowed: &[bool], start: Vertex) -> Option<Vec<Vertex>> {
    let mut on_path = vec![false; g.n()];
    let mut path = vec![start];
    on_path[start] = true;
    loop {
        let last = *path.last().unwrap();
        let next = g
            .neighbors(last)
            .iter()
            .copied()
            .filter(|&w| allowed[w] && !on_path[w])
            .min_by_key(|&w| {
                let onward = g
                    .neighbors(w)
                    .iter()
                    .filter(|&&u| allowed[u] && !on_path[u])
                    .count();
                (onward, w)
            });
        match next {
            Some(w) => {
                on_path[w] = true;
                path.push(w);
            }
            None => break,
        }
    }
    let last = *path.last().unwrap();
    let close = path
        .iter()
        .position(|&u| u != last && g.has_edge(u, last))?;
    let cyc = path[close..].to_vec();
    (cyc.len() >= 3).then_some(cyc)
}

/// Finds a cycle with at least `c` chords in `g`, preferring large ones.
///
/// Small graphs (up to `exhaustive_limit` vertices) get a complete,
/// shortest-first search; larger graphs try greedy long cycles from every
/// start first and fall back to the budgeted search. Any hit is then grown
/// by insertion.
pub fn find_chorded_cycle(
    g: &Graph,
    c: usize,
    exhaustive_limit: usize,
    budget: &mut Budget,
) -> Option<OrientedCycle> {
    let allowed = vec![true; g.n()];
    let mut starts: Vec<Vertex> = g.vertices().collect();
    starts.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));

    let mut hit: Option<Vec<Vertex>> = None;
    if g.n() > exhaustive_limit {
        for &s in &starts {
            if let Some(mut cyc) = greedy_long_cycle(g, &allowed, s) {
                grow_by_insertion(g, &mut cyc, &allowed);
                if chord_count(g, &cyc) >= c {
                    hit = Some(cyc);
                    break;
                }
            }
        }
    }
    if hit.is_none() {
        // every cycle lies inside one block
        for block in g.blocks() {
            if block.vertices.len() < min_chorded_order(c) {
                continue;
            }
            let mut in_block = vec![false; g.n()];
            for &v in &block.vertices {
                in_block[v] = true;
            }
            let block_starts: Vec<Vertex> =
                starts.iter().copied().filter(|&v| in_block[v]).collect();
            let (found, _) = shortest_chorded_cycle(g, &in_block, &block_starts, c, budget);
            if found.is_some() {
                hit = found;
                break;
            }
        }
    }
    let mut cyc = hit?;
    grow_by_insertion(g, &mut cyc, &allowed);
    Some(OrientedCycle::from_seq_unchecked(cyc))
}
