//! Instance generators: fixed families, seeded random graphs meeting a
//! degree condition, and hand-built partial states that trigger one
//! particular move.

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::chorded::{min_bipartite_side, min_chorded_order, OrientedCycle};
use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder, Vertex};
use crate::partitioner::PartitionState;

use super::rng::{rng_for, Phase};

pub fn gen_complete(t: usize) -> Graph {
    let mut b = GraphBuilder::new(t);
    for u in 0..t {
        for v in u + 1..t {
            b.add_edge(u, v).unwrap();
        }
    }
    b.build()
}

/// Parts `0..a` and `a..a+b`.
pub fn gen_complete_bipartite(a: usize, b: usize) -> Graph {
    let mut g = GraphBuilder::new(a + b);
    for u in 0..a {
        for v in a..a + b {
            g.add_edge(u, v).unwrap();
        }
    }
    g.build()
}

pub fn gen_cycle(n: usize) -> Graph {
    let mut b = GraphBuilder::new(n);
    if n >= 3 {
        for i in 0..n {
            b.add_edge(i, (i + 1) % n).unwrap();
        }
    }
    b.build()
}

pub fn gen_path(n: usize) -> Graph {
    let mut b = GraphBuilder::new(n);
    for i in 1..n {
        b.add_edge(i - 1, i).unwrap();
    }
    b.build()
}

/// `K_{(n−1)/2, (n+1)/2}`: one short of the Ore bound.
pub fn gen_extremal_degree(n: usize) -> Result<Graph> {
    if n < 3 || n.is_multiple_of(2) {
        return Err(Error::InvalidParameter(format!(
            "extremal_degree needs odd n >= 3, got {n}"
        )));
    }
    Ok(gen_complete_bipartite(n / 2, n.div_ceil(2)))
}

/// Balanced `K_{s,s}` with `s = k⌈ψ(c)⌉ − 1`.
pub fn gen_extremal_order(k: usize, c: usize) -> Result<Graph> {
    if k == 0 || c == 0 {
        return Err(Error::InvalidParameter("k and c must be positive".into()));
    }
    let s = k * min_bipartite_side(c) - 1;
    Ok(gen_complete_bipartite(s, s))
}

/// `G(n, p)` from the given generator.
pub fn gnp<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut b = GraphBuilder::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                b.add_edge(u, v).unwrap();
            }
        }
    }
    b.build()
}

#[derive(Clone, Debug)]
pub struct RandomInstance {
    pub graph: Graph,
    pub p: f64,
    pub repairs: usize,
}

fn sigma2_of(b: &GraphBuilder) -> Option<(usize, Vertex, Vertex)> {
    let n = b.n();
    let mut best: Option<(usize, Vertex, Vertex)> = None;
    for u in 0..n {
        for v in u + 1..n {
            if !b.has_edge(u, v) {
                let s = b.degree(u) + b.degree(v);
                if best.is_none_or(|(bs, _, _)| s < bs) {
                    best = Some((s, u, v));
                }
            }
        }
    }
    best
}

/// Random graph with `σ₂ ≥ n`: `G(n, p)` with `p` drawn from `[0.5, 0.9]`,
/// then edges added between the non-adjacent pair of smallest degree sum
/// (ties to the lexicographically first pair) until the condition holds.
pub fn gen_ore_random(n: usize, seed: u64) -> Result<RandomInstance> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!(
            "ore_random needs n >= 3, got {n}"
        )));
    }
    let mut rng = rng_for(seed, Phase::Density);
    let p = rng.gen_range(0.5..=0.9);
    let mut rng = rng_for(seed, Phase::Edges);
    let mut b = GraphBuilder::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                b.add_edge(u, v).unwrap();
            }
        }
    }
    let mut repairs = 0;
    while let Some((s, u, v)) = sigma2_of(&b) {
        if s >= n {
            break;
        }
        b.add_edge(u, v).unwrap();
        repairs += 1;
    }
    let graph = b.build();
    assert!(graph.sigma2().at_least(n));
    Ok(RandomInstance { graph, p, repairs })
}

/// Random graph with `δ ≥ n/2`: `G(n, p)` with `p` from `[0.5, 0.9]`, then
/// the lowest-degree vertex is joined to its lowest-degree non-neighbour
/// until every degree reaches `⌈n/2⌉`.
pub fn gen_dirac_random(n: usize, seed: u64) -> Result<RandomInstance> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!(
            "dirac_random needs n >= 3, got {n}"
        )));
    }
    let mut rng = rng_for(seed, Phase::Density);
    let p = rng.gen_range(0.5..=0.9);
    let mut rng = rng_for(seed, Phase::Edges);
    let mut b = GraphBuilder::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                b.add_edge(u, v).unwrap();
            }
        }
    }
    let need = n.div_ceil(2);
    let mut repairs = 0;
    loop {
        let v = (0..n).min_by_key(|&v| (b.degree(v), v)).unwrap();
        if b.degree(v) >= need {
            break;
        }
        let u = (0..n)
            .filter(|&u| u != v && !b.has_edge(u, v))
            .min_by_key(|&u| (b.degree(u), u))
            .unwrap();
        b.add_edge(u, v).unwrap();
        repairs += 1;
    }
    let graph = b.build();
    assert!(2 * graph.min_degree().unwrap() >= n);
    Ok(RandomInstance { graph, p, repairs })
}

/// `G(n, p)` with an explicit `p`, seeded.
pub fn gen_gnp(n: usize, p: f64, seed: u64) -> Graph {
    gnp(n, p, &mut rng_for(seed, Phase::Edges))
}

/// A graph together with a planted non-spanning state.
#[derive(Clone, Debug)]
pub struct Staged {
    pub graph: Graph,
    pub state: PartitionState,
}

fn add_clique(b: &mut GraphBuilder, vs: &[Vertex]) {
    for (i, &u) in vs.iter().enumerate() {
        for &v in &vs[i + 1..] {
            b.add_edge(u, v).unwrap();
        }
    }
}

fn stage(b: GraphBuilder, cycles: Vec<Vec<Vertex>>, c: usize) -> Result<Staged> {
    let graph = b.build();
    let cycles = cycles
        .into_iter()
        .map(|s| OrientedCycle::new(&graph, s))
        .collect::<Result<Vec<_>>>()?;
    let state = PartitionState::new(&graph, cycles, c)?;
    Ok(Staged { graph, state })
}

/// `C₁` on `0..2c+2` with chords `(0, j)` for `2 ≤ j ≤ c+1`; a leftover path
/// `h₁h₂` with `h₁` adjacent to `0..=2c` (so `2c+1` attachments); `C₂` a
/// Hamilton cycle of a clique of order `⌈ω(c)⌉`, whose first two vertices
/// both see the gap vertex `2c+1`.
pub fn gen_split_case(c: usize) -> Result<Staged> {
    if c == 0 {
        return Err(Error::InvalidParameter("c must be positive".into()));
    }
    let m = 2 * c + 2;
    let t = min_chorded_order(c);
    let (h1, h2) = (m, m + 1);
    let c2: Vec<Vertex> = (m + 2..m + 2 + t).collect();
    let mut b = GraphBuilder::new(m + 2 + t);
    for i in 0..m {
        b.add_edge(i, (i + 1) % m)?;
    }
    for j in 2..=c + 1 {
        b.add_edge(0, j)?;
    }
    for v in 0..=2 * c {
        b.add_edge(h1, v)?;
    }
    b.add_edge(h1, h2)?;
    add_clique(&mut b, &c2);
    b.add_edge(2 * c + 1, c2[0])?;
    b.add_edge(2 * c + 1, c2[1])?;
    stage(b, vec![(0..m).collect(), c2], c)
}

/// `k` clique cycles of order `t = ⌈ω(c)⌉`, a leftover vertex `x` (the lowest
/// leftover id) joined to `C₁[0]` and `C₂[1]`, `C₁[1]` joined to `C₂[0]`, and
/// a leftover clique of order `h = max(t+1, kt − 4kc + 2)`. Then
/// `2|H*| ≥ n − 4kc + 2`.
pub fn gen_case1(k: usize, c: usize) -> Result<Staged> {
    if k < 2 || c == 0 {
        return Err(Error::InvalidParameter(
            "case1 needs k >= 2 and c >= 1".into(),
        ));
    }
    let t = min_chorded_order(c);
    let h = (t + 1).max((k * t + 2).saturating_sub(4 * k * c));
    let n = k * t + 1 + h;
    let mut b = GraphBuilder::new(n);
    let cycles: Vec<Vec<Vertex>> = (0..k).map(|i| (i * t..(i + 1) * t).collect()).collect();
    for cyc in &cycles {
        add_clique(&mut b, cyc);
    }
    let x = k * t;
    let rest: Vec<Vertex> = (x + 1..n).collect();
    add_clique(&mut b, &rest);
    b.add_edge(x, cycles[0][0])?;
    b.add_edge(x, cycles[1][1])?;
    b.add_edge(cycles[0][1], cycles[1][0])?;
    let staged = stage(b, cycles, c)?;
    let s = &staged.state;
    assert!(2 * s.leftover_size() + 4 * k * c >= n + 2);
    Ok(staged)
}

/// Shared shape of the second-case states: small clique cycles `C₁`, `C₂`
/// (the second replaced by a long clique cycle when `long_second`), an
/// optional long clique cycle `C₃`, and one leftover vertex `x` joined to
/// `C₁[0]` and `C₂[1]`, with `C₁[1]` joined to `C₂[0]`.
fn case2_shape(sizes: &[usize], c: usize) -> Result<Staged> {
    let n: usize = sizes.iter().sum::<usize>() + 1;
    let mut b = GraphBuilder::new(n);
    let mut cycles = Vec::new();
    let mut next = 0;
    for &s in sizes {
        let cyc: Vec<Vertex> = (next..next + s).collect();
        add_clique(&mut b, &cyc);
        next += s;
        cycles.push(cyc);
    }
    let x = next;
    b.add_edge(x, cycles[0][0])?;
    b.add_edge(x, cycles[1][1])?;
    b.add_edge(cycles[0][1], cycles[1][0])?;
    stage(b, cycles, c)
}

/// `k = 3, c = 1`: two 4-vertex clique cycles and one clique cycle of order
/// 30 (`8kc + 10c − 4`), with a single low-degree leftover vertex.
pub fn gen_case2() -> Result<Staged> {
    case2_shape(&[4, 4, 30], 1)
}

/// `k = 2, c = 1`: a 4-vertex clique cycle and a clique cycle of order 22,
/// so the long cycle is the one that also carries `w⁻w`.
pub fn gen_case2_r2() -> Result<Staged> {
    case2_shape(&[4, 22], 1)
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Params {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub c: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub a: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub b: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    /// Edge probability in percent, for `gnp`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p_percent: Option<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceSpec {
    pub family: String,
    pub params: Params,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected: Option<bool>,
}

pub const FAMILIES: &[&str] = &[
    "complete",
    "complete_bipartite",
    "cycle",
    "path",
    "extremal_degree",
    "extremal_order",
    "ore_random",
    "dirac_random",
    "gnp",
    "split_case",
    "case1",
    "case2",
    "case2_r2",
];

#[derive(Clone, Debug)]
pub struct Generated {
    pub graph: Graph,
    /// Cycles of the planted state for the staged families.
    pub planted: Option<Vec<Vec<Vertex>>>,
    pub p: Option<f64>,
    pub repairs: Option<usize>,
}

impl Generated {
    fn plain(graph: Graph) -> Self {
        Generated {
            graph,
            planted: None,
            p: None,
            repairs: None,
        }
    }

    fn random(r: RandomInstance) -> Self {
        Generated {
            graph: r.graph,
            planted: None,
            p: Some(r.p),
            repairs: Some(r.repairs),
        }
    }

    fn staged(s: Staged) -> Self {
        let planted = s.state.cycles().iter().map(|c| c.seq().to_vec()).collect();
        Generated {
            graph: s.graph,
            planted: Some(planted),
            p: None,
            repairs: None,
        }
    }
}

fn need<T: Copy>(v: Option<T>, name: &str, family: &str) -> Result<T> {
    v.ok_or_else(|| Error::InvalidParameter(format!("family {family} needs parameter {name}")))
}

/// Builds the instance named by `spec`.
pub fn generate(spec: &InstanceSpec) -> Result<Generated> {
    let p = &spec.params;
    let f = spec.family.as_str();
    let seed = p.seed.unwrap_or(0);
    Ok(match f {
        "complete" => Generated::plain(gen_complete(need(p.n, "n", f)?)),
        "complete_bipartite" => Generated::plain(gen_complete_bipartite(
            need(p.a, "a", f)?,
            need(p.b, "b", f)?,
        )),
        "cycle" => Generated::plain(gen_cycle(need(p.n, "n", f)?)),
        "path" => Generated::plain(gen_path(need(p.n, "n", f)?)),
        "extremal_degree" => Generated::plain(gen_extremal_degree(need(p.n, "n", f)?)?),
        "extremal_order" => {
            Generated::plain(gen_extremal_order(need(p.k, "k", f)?, need(p.c, "c", f)?)?)
        }
        "ore_random" => Generated::random(gen_ore_random(need(p.n, "n", f)?, seed)?),
        "dirac_random" => Generated::random(gen_dirac_random(need(p.n, "n", f)?, seed)?),
        "gnp" => {
            let pct = p.p_percent.unwrap_or(50);
            if pct > 100 {
                return Err(Error::InvalidParameter(format!(
                    "p_percent {pct} exceeds 100"
                )));
            }
            let mut out = Generated::plain(gen_gnp(need(p.n, "n", f)?, pct as f64 / 100.0, seed));
            out.p = Some(pct as f64 / 100.0);
            out
        }
        "split_case" => Generated::staged(gen_split_case(p.c.unwrap_or(1))?),
        "case1" => Generated::staged(gen_case1(p.k.unwrap_or(2), p.c.unwrap_or(1))?),
        "case2" => Generated::staged(gen_case2()?),
        "case2_r2" => Generated::staged(gen_case2_r2()?),
        other => return Err(Error::InvalidParameter(format!("unknown family {other}"))),
    })
}
