//! Simple undirected graphs on dense vertex ids `0..n`.
//!
//! A [`Graph`] is immutable once built. Adjacency is stored twice: sorted
//! neighbor lists for iteration and a bit matrix for constant-time edge
//! queries, which the cycle search kernels hit constantly.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};

pub type Vertex = usize;

#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    edges: Vec<(Vertex, Vertex)>,
    words: usize,
    matrix: Vec<u64>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges)
            .finish()
    }
}

/// Minimum degree sum over non-adjacent pairs; `Infinite` for complete graphs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sigma2 {
    Finite(usize),
    Infinite,
}

impl Sigma2 {
    pub fn at_least(self, bound: usize) -> bool {
        match self {
            Sigma2::Finite(v) => v >= bound,
            Sigma2::Infinite => true,
        }
    }

    pub fn finite(self) -> Option<usize> {
        match self {
            Sigma2::Finite(v) => Some(v),
            Sigma2::Infinite => None,
        }
    }
}

impl fmt::Display for Sigma2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sigma2::Finite(v) => write!(f, "{v}"),
            Sigma2::Infinite => write!(f, "inf"),
        }
    }
}

impl Serialize for Sigma2 {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Sigma2::Finite(v) => s.serialize_u64(*v as u64),
            Sigma2::Infinite => s.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for Sigma2 {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Num(u64),
            Text(String),
        }
        match Raw::deserialize(d)? {
            Raw::Num(v) => Ok(Sigma2::Finite(v as usize)),
            Raw::Text(t) if t == "inf" => Ok(Sigma2::Infinite),
            Raw::Text(t) => Err(serde::de::Error::custom(format!("bad sigma2 value {t:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Block {
    pub vertices: Vec<Vertex>,
    pub is_end_block: bool,
    pub cut_vertices: Vec<Vertex>,
}

/// An induced subgraph together with the id mapping back to its host.
#[derive(Clone, Debug)]
pub struct Induced {
    pub graph: Graph,
    /// `to_host[new] = old`
    pub to_host: Vec<Vertex>,
    to_local: Vec<Option<Vertex>>,
}

impl Induced {
    pub fn local(&self, host: Vertex) -> Option<Vertex> {
        self.to_local.get(host).copied().flatten()
    }

    pub fn host(&self, local: Vertex) -> Vertex {
        self.to_host[local]
    }
}

/// Incremental construction; rejects loops and out-of-range ids, ignores
/// repeated edges.
#[derive(Clone, Debug)]
pub struct GraphBuilder {
    n: usize,
    adj: Vec<BTreeSet<Vertex>>,
}

impl GraphBuilder {
    pub fn new(n: usize) -> Self {
        GraphBuilder {
            n,
            adj: vec![BTreeSet::new(); n],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Returns `true` if the edge was new.
    pub fn add_edge(&mut self, u: Vertex, v: Vertex) -> Result<bool> {
        check_vertex(u, self.n)?;
        check_vertex(v, self.n)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        let fresh = self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(fresh)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj.get(u).is_some_and(|s| s.contains(&v))
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn build(self) -> Graph {
        let adj: Vec<Vec<Vertex>> = self
            .adj
            .into_iter()
            .map(|s| s.into_iter().collect())
            .collect();
        Graph::from_sorted_adjacency(adj)
    }
}

fn check_vertex(v: Vertex, n: usize) -> Result<()> {
    if v >= n {
        Err(Error::UnknownVertex { vertex: v, n })
    } else {
        Ok(())
    }
}

impl Graph {
    pub fn empty(n: usize) -> Graph {
        Graph::from_sorted_adjacency(vec![Vec::new(); n])
    }

    /// Strict constructor: loops, duplicates and unknown ids are errors.
    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Graph> {
        let mut b = GraphBuilder::new(n);
        for &(u, v) in edges {
            if !b.add_edge(u, v)? {
                return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
            }
        }
        Ok(b.build())
    }

    fn from_sorted_adjacency(adj: Vec<Vec<Vertex>>) -> Graph {
        let n = adj.len();
        let words = n.div_ceil(64).max(1);
        let mut matrix = vec![0u64; words * n];
        let mut edges = Vec::new();
        for (u, nbrs) in adj.iter().enumerate() {
            for &v in nbrs {
                matrix[u * words + v / 64] |= 1 << (v % 64);
                if u < v {
                    edges.push((u, v));
                }
            }
        }
        Graph {
            adj,
            edges,
            words,
            matrix,
        }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.n()
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    #[inline]
    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.matrix[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    /// Canonical edge list, `u < v`, sorted.
    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn is_complete(&self) -> bool {
        let n = self.n();
        self.m() == n * n.saturating_sub(1) / 2
    }

    pub fn sigma2(&self) -> Sigma2 {
        let mut best: Option<usize> = None;
        for u in self.vertices() {
            for v in u + 1..self.n() {
                if !self.has_edge(u, v) {
                    let s = self.degree(u) + self.degree(v);
                    best = Some(best.map_or(s, |b| b.min(s)));
                }
            }
        }
        best.map_or(Sigma2::Infinite, Sigma2::Finite)
    }

    pub fn min_degree(&self) -> Result<usize> {
        self.vertices()
            .map(|v| self.degree(v))
            .min()
            .ok_or(Error::EmptyGraph)
    }

    /// Number of neighbors of `v` inside `set` (a membership mask).
    pub fn degree_in(&self, v: Vertex, set: &[bool]) -> usize {
        self.adj[v].iter().filter(|&&u| set[u]).count()
    }

    /// Number of edges with both ends in `vs`.
    pub fn edges_within(&self, vs: &[Vertex]) -> usize {
        let mut count = 0;
        for (i, &u) in vs.iter().enumerate() {
            for &v in &vs[i + 1..] {
                if self.has_edge(u, v) {
                    count += 1;
                }
            }
        }
        count
    }

    /// Connected components, each sorted, ordered by minimum element.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let all = vec![true; self.n()];
        self.components_within(&all)
    }

    /// Components of the subgraph induced by the vertices flagged in `allowed`.
    pub fn components_within(&self, allowed: &[bool]) -> Vec<Vec<Vertex>> {
        let mut seen = vec![false; self.n()];
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        for s in self.vertices() {
            if !allowed[s] || seen[s] {
                continue;
            }
            seen[s] = true;
            queue.push_back(s);
            let mut comp = Vec::new();
            while let Some(u) = queue.pop_front() {
                comp.push(u);
                for &w in &self.adj[u] {
                    if allowed[w] && !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Biconnected blocks via lowpoint DFS. Isolated vertices become
    /// singleton blocks.
    pub fn blocks(&self) -> Vec<Block> {
        let n = self.n();
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0usize; n];
        let mut timer = 0;
        let mut raw: Vec<Vec<Vertex>> = Vec::new();
        let mut edge_stack: Vec<(Vertex, Vertex)> = Vec::new();

        for root in self.vertices() {
            if disc[root] != usize::MAX {
                continue;
            }
            disc[root] = timer;
            low[root] = timer;
            timer += 1;
            if self.adj[root].is_empty() {
                raw.push(vec![root]);
                continue;
            }
            // (vertex, parent, next neighbor index)
            let mut stack: Vec<(Vertex, Vertex, usize)> = vec![(root, usize::MAX, 0)];
            while let Some(&mut (u, parent, ref mut idx)) = stack.last_mut() {
                if *idx < self.adj[u].len() {
                    let w = self.adj[u][*idx];
                    *idx += 1;
                    if w == parent {
                        continue;
                    }
                    if disc[w] == usize::MAX {
                        disc[w] = timer;
                        low[w] = timer;
                        timer += 1;
                        edge_stack.push((u, w));
                        stack.push((w, u, 0));
                    } else if disc[w] < disc[u] {
                        low[u] = low[u].min(disc[w]);
                        edge_stack.push((u, w));
                    }
                } else {
                    stack.pop();
                    if parent != usize::MAX {
                        low[parent] = low[parent].min(low[u]);
                        if low[u] >= disc[parent] {
                            let mut vs = BTreeSet::new();
                            while let Some((a, b)) = edge_stack.pop() {
                                vs.insert(a);
                                vs.insert(b);
                                if (a, b) == (parent, u) {
                                    break;
                                }
                            }
                            raw.push(vs.into_iter().collect());
                        }
                    }
                }
            }
        }

        let mut membership = vec![0usize; n];
        for b in &raw {
            for &v in b {
                membership[v] += 1;
            }
        }
        let mut blocks: Vec<Block> = raw
            .into_iter()
            .map(|vertices| {
                let cut_vertices: Vec<Vertex> = vertices
                    .iter()
                    .copied()
                    .filter(|&v| membership[v] > 1)
                    .collect();
                Block {
                    is_end_block: cut_vertices.len() <= 1,
                    vertices,
                    cut_vertices,
                }
            })
            .collect();
        blocks.sort_by(|a, b| a.vertices.cmp(&b.vertices));
        blocks
    }

    /// `G[X]`; local ids follow the sorted order of `xs`.
    pub fn induced(&self, xs: &[Vertex]) -> Result<Induced> {
        let mut to_host: Vec<Vertex> = xs.to_vec();
        to_host.sort_unstable();
        to_host.dedup();
        let mut to_local = vec![None; self.n()];
        for (i, &v) in to_host.iter().enumerate() {
            check_vertex(v, self.n())?;
            to_local[v] = Some(i);
        }
        let adj = to_host
            .iter()
            .map(|&v| self.adj[v].iter().filter_map(|&w| to_local[w]).collect())
            .collect();
        Ok(Induced {
            graph: Graph::from_sorted_adjacency(adj),
            to_host,
            to_local,
        })
    }

    /// Breadth-first shortest path from `from` to `to` using only vertices
    /// flagged in `allowed` (endpoints must be allowed too).
    pub fn shortest_path_within(
        &self,
        from: Vertex,
        to: Vertex,
        allowed: &[bool],
    ) -> Option<Vec<Vertex>> {
        if !allowed[from] || !allowed[to] {
            return None;
        }
        let mut prev = vec![usize::MAX; self.n()];
        prev[from] = from;
        let mut queue = VecDeque::from([from]);
        while let Some(u) = queue.pop_front() {
            if u == to {
                let mut path = vec![to];
                let mut cur = to;
                while cur != from {
                    cur = prev[cur];
                    path.push(cur);
                }
                path.reverse();
                return Some(path);
            }
            for &w in &self.adj[u] {
                if allowed[w] && prev[w] == usize::MAX {
                    prev[w] = u;
                    queue.push_back(w);
                }
            }
        }
        None
    }

    /// Text edge-list form: `n m` header then one `u v` line per edge.
    pub fn to_edge_list(&self) -> String {
        let mut s = format!("{} {}\n", self.n(), self.m());
        for &(u, v) in &self.edges {
            s.push_str(&format!("{u} {v}\n"));
        }
        s
    }

    /// SHA-256 of the canonical edge list; independent of input edge order.
    pub fn digest(&self) -> String {
        hex::encode(Sha256::digest(self.to_edge_list().as_bytes()))
    }

    pub fn parse_edge_list(text: &str) -> Result<Graph> {
        let mut header: Option<(usize, usize)> = None;
        let mut builder: Option<GraphBuilder> = None;
        let mut seen_edges = 0usize;
        for (idx, raw_line) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw_line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            let parse_err = |message: String| Error::Parse {
                line: line_no,
                message,
            };
            if fields.len() != 2 {
                return Err(parse_err(format!(
                    "expected two integers, found {:?}",
                    line
                )));
            }
            let a: usize = fields[0]
                .parse()
                .map_err(|_| parse_err(format!("not a non-negative integer: {:?}", fields[0])))?;
            let b: usize = fields[1]
                .parse()
                .map_err(|_| parse_err(format!("not a non-negative integer: {:?}", fields[1])))?;
            match header {
                None => {
                    header = Some((a, b));
                    builder = Some(GraphBuilder::new(a));
                }
                Some((n, _)) => {
                    let g = builder.as_mut().expect("builder exists after header");
                    if a >= b {
                        return Err(parse_err(format!("edge must satisfy u < v, got {a} {b}")));
                    }
                    if b >= n {
                        return Err(parse_err(format!("vertex {b} out of range for n = {n}")));
                    }
                    if !g.add_edge(a, b).map_err(|e| parse_err(e.to_string()))? {
                        return Err(parse_err(format!("duplicate edge {a} {b}")));
                    }
                    seen_edges += 1;
                }
            }
        }
        let (_, m) = header.ok_or(Error::Parse {
            line: 0,
            message: "missing \"n m\" header".into(),
        })?;
        if seen_edges != m {
            return Err(Error::Parse {
                line: text.lines().count(),
                message: format!("header declares {m} edges, found {seen_edges}"),
            });
        }
        Ok(builder.expect("header parsed").build())
    }
}
