//! Oriented cycles, chord sets and the closed-form order thresholds.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// A cycle with a fixed orientation: `seq[i+1]` is the successor of `seq[i]`
/// and `seq[0]` follows the last entry.
#[derive(Clone)]
pub struct OrientedCycle {
    seq: Vec<Vertex>,
    pos: HashMap<Vertex, usize>,
}

impl PartialEq for OrientedCycle {
    fn eq(&self, other: &Self) -> bool {
        self.seq == other.seq
    }
}

impl Eq for OrientedCycle {}

impl fmt::Debug for OrientedCycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cycle{:?}", self.seq)
    }
}

impl OrientedCycle {
    /// Validates length, distinctness and that consecutive vertices
    /// (including last to first) are adjacent in `g`.
    pub fn new(g: &Graph, seq: Vec<Vertex>) -> Result<Self> {
        validate_seq(g, &seq)?;
        Ok(Self::from_seq_unchecked(seq))
    }

    pub(crate) fn from_seq_unchecked(seq: Vec<Vertex>) -> Self {
        let pos = seq.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        OrientedCycle { seq, pos }
    }

    pub fn len(&self) -> usize {
        self.seq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.seq.is_empty()
    }

    pub fn seq(&self) -> &[Vertex] {
        &self.seq
    }

    pub fn into_seq(self) -> Vec<Vertex> {
        self.seq
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.pos.contains_key(&v)
    }

    pub fn position(&self, v: Vertex) -> Option<usize> {
        self.pos.get(&v).copied()
    }

    pub fn at(&self, i: usize) -> Vertex {
        self.seq[i % self.seq.len()]
    }

    /// `v⁺`
    pub fn succ(&self, v: Vertex) -> Vertex {
        let i = self.pos[&v];
        self.seq[(i + 1) % self.seq.len()]
    }

    /// `v⁻`
    pub fn pred(&self, v: Vertex) -> Vertex {
        let i = self.pos[&v];
        self.seq[(i + self.seq.len() - 1) % self.seq.len()]
    }

    /// `C[u, v]`: the path from `u` to `v` following the orientation.
    pub fn arc(&self, u: Vertex, v: Vertex) -> Vec<Vertex> {
        let len = self.seq.len();
        let (i, j) = (self.pos[&u], self.pos[&v]);
        let steps = (j + len - i) % len;
        (0..=steps).map(|s| self.seq[(i + s) % len]).collect()
    }

    /// Number of vertices on `C[u, v]`.
    pub fn arc_len(&self, u: Vertex, v: Vertex) -> usize {
        let len = self.seq.len();
        (self.pos[&v] + len - self.pos[&u]) % len + 1
    }

    /// Whether `x` lies on `C[u, v]`.
    pub fn arc_contains(&self, u: Vertex, v: Vertex, x: Vertex) -> bool {
        let len = self.seq.len();
        match self.pos.get(&x) {
            None => false,
            Some(&px) => {
                let i = self.pos[&u];
                (px + len - i) % len < self.arc_len(u, v)
            }
        }
    }

    /// Same cycle traversed the other way, starting from the same vertex.
    pub fn reversed(&self) -> OrientedCycle {
        let mut seq = Vec::with_capacity(self.seq.len());
        if let Some(&first) = self.seq.first() {
            seq.push(first);
            seq.extend(self.seq[1..].iter().rev());
        }
        Self::from_seq_unchecked(seq)
    }

    /// Rotation to the minimum vertex, orientation with the smaller second vertex.
    pub fn canonical(&self) -> OrientedCycle {
        Self::from_seq_unchecked(canonical_seq(&self.seq))
    }

    /// Oriented edges `(v, v⁺)`.
    pub fn oriented_edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        let len = self.seq.len();
        (0..len).map(move |i| (self.seq[i], self.seq[(i + 1) % len]))
    }

    pub fn is_cycle_edge(&self, u: Vertex, v: Vertex) -> bool {
        match (self.pos.get(&u), self.pos.get(&v)) {
            (Some(&i), Some(&j)) => {
                let len = self.seq.len();
                (i + 1) % len == j || (j + 1) % len == i
            }
            _ => false,
        }
    }

    pub fn sorted_vertices(&self) -> Vec<Vertex> {
        let mut v = self.seq.clone();
        v.sort_unstable();
        v
    }
}

pub fn canonical_seq(seq: &[Vertex]) -> Vec<Vertex> {
    let len = seq.len();
    if len == 0 {
        return Vec::new();
    }
    let start = (0..len).min_by_key(|&i| seq[i]).unwrap();
    let fwd = seq[(start + 1) % len];
    let bwd = seq[(start + len - 1) % len];
    if fwd <= bwd {
        (0..len).map(|s| seq[(start + s) % len]).collect()
    } else {
        (0..len).map(|s| seq[(start + len - s) % len]).collect()
    }
}

pub(crate) fn validate_seq(g: &Graph, seq: &[Vertex]) -> Result<()> {
    if seq.len() < 3 {
        return Err(Error::InvalidCycle(format!("length {} < 3", seq.len())));
    }
    let mut seen = vec![false; g.n()];
    for &v in seq {
        if v >= g.n() {
            return Err(Error::InvalidCycle(format!("vertex {v} not in graph")));
        }
        if seen[v] {
            return Err(Error::InvalidCycle(format!("vertex {v} repeated")));
        }
        seen[v] = true;
    }
    for i in 0..seq.len() {
        let (u, v) = (seq[i], seq[(i + 1) % seq.len()]);
        if !g.has_edge(u, v) {
            return Err(Error::InvalidCycle(format!("{u}-{v} is not an edge")));
        }
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChordSet {
    pub chords: Vec<(Vertex, Vertex)>,
    pub count: usize,
}

/// `E(G[V(C)]) \ E(C)`.
pub fn chords(g: &Graph, cycle: &OrientedCycle) -> Result<ChordSet> {
    validate_seq(g, cycle.seq())?;
    let mut vs = cycle.sorted_vertices();
    vs.dedup();
    let mut out = Vec::new();
    for (i, &u) in vs.iter().enumerate() {
        for &v in &vs[i + 1..] {
            if g.has_edge(u, v) && !cycle.is_cycle_edge(u, v) {
                out.push((u, v));
            }
        }
    }
    let count = out.len();
    Ok(ChordSet { chords: out, count })
}

/// Chord count of a valid cycle through `vs`: the count depends only on the
/// vertex set, `|E(G[V(C)])| - |C|`.
pub fn chord_count(g: &Graph, vs: &[Vertex]) -> usize {
    g.edges_within(vs) - vs.len()
}

pub fn is_c_chorded(g: &Graph, cycle: &OrientedCycle, c: usize) -> bool {
    validate_seq(g, cycle.seq()).is_ok() && chord_count(g, cycle.seq()) >= c
}

/// Positive root of `t(t-3)/2 = c`.
pub fn omega(c: usize) -> f64 {
    ((8.0 * c as f64 + 9.0).sqrt() + 3.0) / 2.0
}

/// Positive root of `t(t-2) = c`.
pub fn psi(c: usize) -> f64 {
    (c as f64 + 1.0).sqrt() + 1.0
}

/// `8k²c + 10kc − 4k + 2c + 1`, the order above which the Ore condition
/// guarantees a partition into `k` `c`-chorded cycles.
pub fn order_threshold(k: usize, c: usize) -> usize {
    8 * k * k * c + 10 * k * c + 2 * c + 1 - 4 * k
}

/// `⌈ω(c)⌉`: the smallest `t` with `t(t-3)/2 ≥ c`, found by exact integer
/// search rather than rounding the square root.
pub fn min_chorded_order(c: usize) -> usize {
    let mut t = 3;
    while t * (t - 3) < 2 * c {
        t += 1;
    }
    t
}

/// `⌈ψ(c)⌉`: the smallest `t` with `t(t-2) ≥ c`.
pub fn min_bipartite_side(c: usize) -> usize {
    let mut t = 2;
    while t * (t - 2) < c {
        t += 1;
    }
    t
}

pub fn isqrt(x: u64) -> u64 {
    let mut r = (x as f64).sqrt() as u64;
    while r * r > x {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= x {
        r += 1;
    }
    r
}

/// `12kc − 2k·ω(c) + c + 8`, the order bound under the minimum-degree
/// condition.
pub fn dirac_order_bound(k: usize, c: usize) -> f64 {
    12.0 * (k * c) as f64 - 2.0 * k as f64 * omega(c) + c as f64 + 8.0
}

/// Smallest integer order meeting [`dirac_order_bound`]. Since
/// `2k·ω(c) = 3k + √(k²(8c+9))`, the ceiling is exact in integers.
pub fn dirac_order_min(k: usize, c: usize) -> usize {
    let root = isqrt((k * k * (8 * c + 9)) as u64) as usize;
    12 * k * c + c + 8 - 3 * k - root
}

/// JSON shape used for cycles in command output.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleJson {
    pub seq: Vec<Vertex>,
    pub chords: Vec<(Vertex, Vertex)>,
}

impl CycleJson {
    pub fn from_cycle(g: &Graph, cycle: &OrientedCycle) -> Result<Self> {
        Ok(CycleJson {
            seq: cycle.seq().to_vec(),
            chords: chords(g, cycle)?.chords,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn complete(t: usize) -> Graph {
        let mut e = Vec::new();
        for u in 0..t {
            for v in u + 1..t {
                e.push((u, v));
            }
        }
        Graph::from_edges(t, &e).unwrap()
    }

    fn cyc(g: &Graph, seq: &[Vertex]) -> OrientedCycle {
        OrientedCycle::new(g, seq.to_vec()).unwrap()
    }

    #[test]
    fn chord_examples() {
        let c5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]).unwrap();
        let cs = chords(&c5, &cyc(&c5, &[0, 1, 2, 3, 4])).unwrap();
        assert_eq!(cs.count, 0);

        let k4 = complete(4);
        let cs = chords(&k4, &cyc(&k4, &[0, 1, 2, 3])).unwrap();
        assert_eq!(cs.count, 2);
        assert_eq!(cs.chords, vec![(0, 2), (1, 3)]);

        let mut e = Vec::new();
        for a in 0..3 {
            for b in 3..6 {
                e.push((a, b));
            }
        }
        let k33 = Graph::from_edges(6, &e).unwrap();
        let cs = chords(&k33, &cyc(&k33, &[0, 3, 1, 4, 2, 5])).unwrap();
        assert_eq!(cs.count, 3);
    }

    #[test]
    fn is_c_chorded_examples() {
        let k4 = complete(4);
        let h = cyc(&k4, &[0, 1, 2, 3]);
        assert!(is_c_chorded(&k4, &h, 2));
        assert!(!is_c_chorded(&k4, &h, 3));
        let c6 =
            Graph::from_edges(6, &(0..6).map(|i| (i, (i + 1) % 6)).collect::<Vec<_>>()).unwrap();
        assert!(!is_c_chorded(&c6, &cyc(&c6, &[0, 1, 2, 3, 4, 5]), 1));
    }

    #[test]
    fn invalid_cycles_are_rejected() {
        let k4 = complete(4);
        assert!(OrientedCycle::new(&k4, vec![0, 1]).is_err());
        assert!(OrientedCycle::new(&k4, vec![0, 1, 0]).is_err());
        let p = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(OrientedCycle::new(&p, vec![0, 1, 2]).is_err());
        let stray = OrientedCycle::from_seq_unchecked(vec![0, 1, 2]);
        assert!(chords(&p, &stray).is_err());
    }

    #[test]
    fn formula_examples() {
        assert_eq!(omega(2), 4.0);
        assert_eq!(psi(3), 3.0);
        assert_eq!(order_threshold(1, 1), 17);
        assert_eq!(min_chorded_order(1), 4);
        assert_eq!(min_chorded_order(2), 4);
        assert_eq!(min_chorded_order(5), 5);
        assert_eq!(dirac_order_min(1, 1), 14);
    }

    #[test]
    fn dirac_order_min_matches_float_ceiling() {
        for k in 1..6 {
            for c in 1..30 {
                let f = dirac_order_bound(k, c);
                let exact = dirac_order_min(k, c);
                assert!(
                    exact as f64 >= f - 1e-9 && (exact as f64) - 1.0 < f - 1e-9,
                    "k={k} c={c}"
                );
            }
        }
    }

    #[test]
    fn navigation() {
        let k5 = complete(5);
        let c = cyc(&k5, &[3, 0, 4, 1, 2]);
        assert_eq!(c.succ(2), 3);
        assert_eq!(c.pred(3), 2);
        assert_eq!(c.arc(4, 3), vec![4, 1, 2, 3]);
        assert_eq!(c.arc_len(4, 3), 4);
        assert!(c.arc_contains(4, 3, 1));
        assert!(!c.arc_contains(4, 3, 0));
        assert_eq!(c.reversed().seq(), &[3, 2, 1, 4, 0]);
        assert_eq!(c.canonical().seq(), &[0, 3, 2, 1, 4]);
    }

    proptest! {
        #[test]
        fn reversal_and_rotation_preserve_chords(t in 4usize..9, rot in 0usize..9, drop_mask in 0u64..(1 << 20)) {
            // K_t minus a few non-cycle edges, Hamilton cycle 0..t
            let mut e = Vec::new();
            let mut bit = 0;
            for u in 0..t {
                for v in u + 1..t {
                    let on_cycle = v == u + 1 || (u == 0 && v == t - 1);
                    if on_cycle || drop_mask >> (bit % 20) & 1 == 0 {
                        e.push((u, v));
                    }
                    bit += 1;
                }
            }
            let g = Graph::from_edges(t, &e).unwrap();
            let seq: Vec<_> = (0..t).map(|i| (i + rot) % t).collect();
            let c = OrientedCycle::new(&g, seq).unwrap();
            let a = chords(&g, &c).unwrap();
            let b = chords(&g, &c.reversed()).unwrap();
            prop_assert_eq!(&a, &b);
            prop_assert_eq!(a.count, g.edges_within(c.seq()) - t);
            prop_assert_eq!(c.canonical(), c.reversed().canonical());
        }
    }
}
