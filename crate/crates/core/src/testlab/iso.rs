//! All graphs of a given small order up to isomorphism.
//!
//! Canonical form: colour refinement, then individualisation of a vertex in
//! the first smallest non-singleton cell, recursively, keeping the least
//! adjacency code over all discrete leaves. Automorphisms found along the
//! way (two leaves with equal code) prune siblings in the same orbit.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

pub const ENUMERATION_LIMIT: usize = 10;

fn refine(adj: &[u32], colours: &mut [usize]) {
    let n = adj.len();
    let mut classes = colours.iter().copied().max().map_or(0, |m| m + 1);
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = (0..n)
                    .filter(|&u| adj[v] >> u & 1 == 1)
                    .map(|u| colours[u])
                    .collect();
                nb.sort_unstable();
                (colours[v], nb)
            })
            .collect();
        let mut distinct = sigs.clone();
        distinct.sort();
        distinct.dedup();
        for v in 0..n {
            colours[v] = distinct.binary_search(&sigs[v]).unwrap();
        }
        if distinct.len() == classes {
            return;
        }
        classes = distinct.len();
    }
}

fn code_of(adj: &[u32], pos: &[usize]) -> u64 {
    let n = adj.len();
    let mut at = vec![0; n];
    for v in 0..n {
        at[pos[v]] = v;
    }
    let mut code = 0u64;
    for i in 0..n {
        for j in i + 1..n {
            code <<= 1;
            if adj[at[i]] >> at[j] & 1 == 1 {
                code |= 1;
            }
        }
    }
    code
}

struct Search<'a> {
    adj: &'a [u32],
    best: Option<(u64, Vec<usize>)>,
    autos: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn visit(&mut self, mut colours: Vec<usize>, prefix: &mut Vec<Vertex>) {
        let n = self.adj.len();
        refine(self.adj, &mut colours);
        let mut size = vec![0usize; n];
        for &col in &colours {
            size[col] += 1;
        }
        let target = (0..n)
            .filter(|&col| size[col] > 1)
            .min_by_key(|&col| (size[col], col));
        let Some(target) = target else {
            let code = code_of(self.adj, &colours);
            match &self.best {
                Some((b, _)) if code > *b => {}
                Some((b, perm)) if code == *b => {
                    // v -> perm^{-1}(colours[v]) is an automorphism
                    let mut inv = vec![0; n];
                    for v in 0..n {
                        inv[perm[v]] = v;
                    }
                    let gamma: Vec<usize> = (0..n).map(|v| inv[colours[v]]).collect();
                    self.autos.push(gamma);
                }
                _ => self.best = Some((code, colours)),
            }
            return;
        };
        let cell: Vec<Vertex> = (0..n).filter(|&v| colours[v] == target).collect();
        let mut explored: Vec<Vertex> = Vec::new();
        for &v in &cell {
            if !explored.is_empty() {
                let orbit = self.orbit_map(prefix);
                if explored.iter().any(|&w| orbit[w] == orbit[v]) {
                    continue;
                }
            }
            let mut keyed: Vec<(usize, bool)> = (0..n).map(|u| (colours[u], u != v)).collect();
            let mut distinct = keyed.clone();
            distinct.sort();
            distinct.dedup();
            let next: Vec<usize> = keyed
                .drain(..)
                .map(|k| distinct.binary_search(&k).unwrap())
                .collect();
            prefix.push(v);
            self.visit(next, prefix);
            prefix.pop();
            explored.push(v);
        }
    }

    /// Orbit representatives under the known automorphisms fixing `prefix`.
    fn orbit_map(&self, prefix: &[Vertex]) -> Vec<usize> {
        let n = self.adj.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for gamma in &self.autos {
            if prefix.iter().all(|&v| gamma[v] == v) {
                for v in 0..n {
                    let (a, b) = (find(&mut parent, v), find(&mut parent, gamma[v]));
                    if a != b {
                        parent[a.max(b)] = a.min(b);
                    }
                }
            }
        }
        (0..n).map(|v| find(&mut parent, v)).collect()
    }
}

fn canonical_adj(adj: &[u32]) -> u64 {
    let mut s = Search {
        adj,
        best: None,
        autos: Vec::new(),
    };
    s.visit(vec![0; adj.len()], &mut Vec::new());
    s.best.map_or(0, |(code, _)| code)
}

fn adjacency(g: &Graph) -> Vec<u32> {
    g.vertices()
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &u| m | (1 << u)))
        .collect()
}

/// Isomorphism-invariant code of a graph with at most 10 vertices: equal
/// codes (at equal order) iff isomorphic.
pub fn canonical_code(g: &Graph) -> Result<u64> {
    if g.n() > ENUMERATION_LIMIT {
        return Err(Error::OverLimit {
            n: g.n(),
            limit: ENUMERATION_LIMIT,
        });
    }
    Ok(canonical_adj(&adjacency(g)))
}

fn to_graph(adj: &[u32]) -> Graph {
    let n = adj.len();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if adj[u] >> v & 1 == 1 {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// One representative of every isomorphism class of graphs on `n`
/// vertices, ordered by canonical code.
pub fn nonisomorphic_graphs(n: usize) -> Result<Vec<Graph>> {
    if n > ENUMERATION_LIMIT {
        return Err(Error::OverLimit {
            n,
            limit: ENUMERATION_LIMIT,
        });
    }
    let mut level: Vec<Vec<u32>> = vec![Vec::new()];
    for m in 1..=n {
        let mut seen: HashMap<u64, Vec<u32>> = HashMap::new();
        for base in &level {
            for nb in 0u32..(1 << (m - 1)) {
                let mut adj = base.clone();
                for (u, row) in adj.iter_mut().enumerate() {
                    if nb >> u & 1 == 1 {
                        *row |= 1 << (m - 1);
                    }
                }
                adj.push(nb);
                seen.entry(canonical_adj(&adj)).or_insert(adj);
            }
        }
        let mut next: Vec<(u64, Vec<u32>)> = seen.into_iter().collect();
        next.sort_by_key(|(code, _)| *code);
        level = next.into_iter().map(|(_, adj)| adj).collect();
    }
    Ok(level.iter().map(|adj| to_graph(adj)).collect())
}
