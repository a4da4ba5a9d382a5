//! Move constructors. Each `try_move_*` either returns an exchange that
//! strictly increases the potential or reports that its trigger or one of
//! its witnesses is missing.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::chorded::{chord_count, min_chorded_order, OrientedCycle};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::search::{find_chorded_cycle, Budget};

use super::state::PartitionState;
use super::two_chords::{find_two_chords_on, TwoChordsError};
use super::{Move, MoveKind};

/// Oriented edge `w⁻ → w` of cycle `q`; the orientation is the one in which
/// `w` follows `w⁻`, which may be the reverse of the stored one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitWitness {
    pub q: usize,
    pub w_minus: Vertex,
    pub w: Vertex,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum Case2Blocked {
    #[error("leftover is large enough for the first case")]
    NotCase2,
    #[error("leftover is empty")]
    EmptyLeftover,
    #[error("leftover vertex {0} is not low-degree")]
    LeftoverNotLow(Vertex),
    #[error("leftover is not complete")]
    LeftoverNotComplete,
    #[error("leftover has {size} vertices, more than {bound}")]
    LeftoverTooLarge { size: usize, bound: usize },
    #[error("only one cycle")]
    SingleCycle,
    #[error("no leftover vertex sees a cycle")]
    NoAttachment,
    #[error("no consecutive pair on another cycle")]
    NoSplitWitness,
    #[error("no cycle long enough")]
    NoLongCycle,
    #[error("two chords: {0}")]
    TwoChords(TwoChordsError),
    #[error("replacement does not raise the potential")]
    NoPotentialGain,
}

/// `cyc` oriented so that `succ(a) == b`; `None` if `ab` is not a cycle edge.
fn oriented(cyc: &OrientedCycle, a: Vertex, b: Vertex) -> Option<OrientedCycle> {
    if cyc.succ(a) == b {
        Some(cyc.clone())
    } else if cyc.pred(a) == b {
        Some(cyc.reversed())
    } else {
        None
    }
}

fn make(g: &Graph, seq: Vec<Vertex>) -> Option<OrientedCycle> {
    OrientedCycle::new(g, seq).ok()
}

/// Keeps `mv` only if all produced cycles are `c`-chorded and the potential
/// strictly increases.
fn accept(g: &Graph, state: &PartitionState, mv: Move) -> Option<Move> {
    let chorded = mv
        .produced
        .iter()
        .all(|d| chord_count(g, d.seq()) >= state.c());
    (chorded && state.potential_after(&mv) > state.potential()).then_some(mv)
}

fn component_of(g: &Graph, state: &PartitionState, x: Vertex) -> Vec<bool> {
    let mut mask = vec![false; g.n()];
    mask[x] = true;
    let mut queue = VecDeque::from([x]);
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            if state.in_leftover(w) && !mask[w] {
                mask[w] = true;
                queue.push_back(w);
            }
        }
    }
    mask
}

/// Exchange from the crossing argument: extends `C_p` through the leftover
/// component of `x` along `P = C[v⁺, v]` followed by a shortest `(v, x)`-path.
/// Both orientations of `C_p` are tried.
pub fn try_move_crossing(
    g: &Graph,
    state: &PartitionState,
    p: usize,
    v: Vertex,
    x: Vertex,
) -> Result<Option<Move>> {
    if p >= state.k() {
        return Err(Error::InvalidParameter(format!(
            "cycle index {p} out of range"
        )));
    }
    if x >= g.n() || !state.in_leftover(x) {
        return Err(Error::Precondition(format!("{x} is not a leftover vertex")));
    }
    let cyc = state.cycle(p);
    let comp = component_of(g, state, x);
    if !cyc.contains(v) || !g.neighbors(v).iter().any(|&h| comp[h]) {
        return Err(Error::Precondition(format!(
            "{v} does not attach to the component of {x}"
        )));
    }
    let mut allowed = comp.clone();
    allowed[v] = true;
    let to_x = g
        .shortest_path_within(v, x, &allowed)
        .expect("component is connected and v attaches to it");

    for orient in [cyc.clone(), cyc.reversed()] {
        let vp = orient.succ(v);
        let mut path = orient.arc(vp, v);
        path.extend_from_slice(&to_x[1..]);
        let last = path.len() - 1;

        if let Some(i) = (0..last).find(|&i| g.has_edge(path[i], x) && g.has_edge(path[i + 1], vp))
        {
            let mut seq = path[i + 1..].to_vec();
            seq.extend(path[..=i].iter().rev());
            if let Some(d) = make(g, seq) {
                let mv = Move::new(state, MoveKind::CrossingRotation, vec![p], vec![d]);
                if let Some(mv) = accept(g, state, mv) {
                    return Ok(Some(mv));
                }
            }
        }

        let mut on_path = vec![false; g.n()];
        for &u in &path {
            on_path[u] = true;
        }
        let b = g
            .neighbors(vp)
            .iter()
            .copied()
            .find(|&b| state.in_leftover(b) && !on_path[b] && g.has_edge(b, x));
        if let Some(b) = b {
            let mut seq = path.clone();
            seq.push(b);
            if let Some(d) = make(g, seq) {
                let mv = Move::new(state, MoveKind::CrossingExternal, vec![p], vec![d]);
                if let Some(mv) = accept(g, state, mv) {
                    return Ok(Some(mv));
                }
            }
        }
    }
    Ok(None)
}

/// First oriented edge `w⁻w` on a cycle `q ≠ p` with `u_star ~ w⁻` and
/// `other ~ w`, scanning `q` ascending, stored orientation first.
pub fn check_lemma2(
    g: &Graph,
    state: &PartitionState,
    p: usize,
    u_star: Vertex,
    other: Vertex,
) -> Option<SplitWitness> {
    for q in (0..state.k()).filter(|&q| q != p) {
        let cyc = state.cycle(q);
        for (a, b) in cyc.oriented_edges() {
            if g.has_edge(u_star, a) && g.has_edge(other, b) {
                return Some(SplitWitness {
                    q,
                    w_minus: a,
                    w: b,
                });
            }
        }
        for (a, b) in cyc.oriented_edges() {
            if g.has_edge(u_star, b) && g.has_edge(other, a) {
                return Some(SplitWitness {
                    q,
                    w_minus: b,
                    w: a,
                });
            }
        }
    }
    None
}

/// Shortest path from `from` to `to` whose interior is non-empty and lies
/// in `inside`. Returns the interior only.
fn interior_path(g: &Graph, from: Vertex, to: Vertex, inside: &[bool]) -> Option<Vec<Vertex>> {
    let mut prev = vec![usize::MAX; g.n()];
    let mut queue = VecDeque::new();
    for &h in g.neighbors(from) {
        if inside[h] {
            prev[h] = h;
            queue.push_back(h);
        }
    }
    while let Some(u) = queue.pop_front() {
        if g.has_edge(u, to) {
            let mut out = vec![u];
            let mut cur = u;
            while prev[cur] != cur {
                cur = prev[cur];
                out.push(cur);
            }
            out.reverse();
            return Some(out);
        }
        for &w in g.neighbors(u) {
            if inside[w] && prev[w] == usize::MAX {
                prev[w] = u;
                queue.push_back(w);
            }
        }
    }
    None
}

/// Exchange for a leftover component with at least `2c+1` attachments on
/// `C_p`: routes `C_p` through the component and hands the skipped gap to a
/// second cycle.
pub fn try_move_split(g: &Graph, state: &PartitionState, p: usize) -> Option<Move> {
    if state.k() < 2 || p >= state.k() {
        return None;
    }
    let c = state.c();
    let cyc = state.cycle(p);
    let chords = crate::chorded::chords(g, cyc).ok()?;
    let mut endpoint = vec![false; g.n()];
    for &(a, b) in chords.chords.iter().take(c) {
        endpoint[a] = true;
        endpoint[b] = true;
    }
    for comp in state.leftover_components(g) {
        let mut inside = vec![false; g.n()];
        for &h in &comp {
            inside[h] = true;
        }
        let att: Vec<Vertex> = cyc
            .seq()
            .iter()
            .copied()
            .filter(|&v| g.neighbors(v).iter().any(|&h| inside[h]))
            .collect();
        if att.len() < 2 * c + 1 {
            continue;
        }
        for i in 0..att.len() {
            let (v1, v2) = (att[i], att[(i + 1) % att.len()]);
            let (v1p, v2m) = (cyc.succ(v1), cyc.pred(v2));
            if v1p == v2 {
                continue;
            }
            let gap = cyc.arc(v1p, v2m);
            if gap.iter().any(|&u| endpoint[u]) {
                continue;
            }
            let Some(wit) = check_lemma2(g, state, p, v1p, v2m) else {
                continue;
            };
            let Some(through) = interior_path(g, v1, v2, &inside) else {
                continue;
            };
            let cq = oriented(state.cycle(wit.q), wit.w_minus, wit.w)?;
            let mut d1 = cyc.arc(v2, v1);
            d1.extend(through);
            let mut d2 = gap;
            d2.extend(cq.arc(wit.w, wit.w_minus));
            let (Some(d1), Some(d2)) = (make(g, d1), make(g, d2)) else {
                continue;
            };
            let mv = Move::new(state, MoveKind::SplitClaim2, vec![p, wit.q], vec![d1, d2]);
            if let Some(mv) = accept(g, state, mv) {
                return Some(mv);
            }
        }
    }
    None
}

/// A `c`-chorded cycle of `g_sub`, preferring long ones.
pub fn find_chorded_cycle_in(g_sub: &Graph, c: usize) -> Option<OrientedCycle> {
    find_chorded_cycle(g_sub, c, 16, &mut Budget::new(2_000_000))
}

fn leftover_trigger(state: &PartitionState) -> bool {
    let n = state.n() as i64;
    let (k, c) = (state.k() as i64, state.c() as i64);
    2 * state.leftover_size() as i64 >= n - 4 * k * c + 2
}

/// `C_p[v⁺, v] x C_q[w, w⁻]` together with the orientations used.
struct Absorb {
    p: usize,
    v: Vertex,
    vp: Vertex,
    x: Vertex,
    wit: SplitWitness,
    cp: OrientedCycle,
    cq: OrientedCycle,
}

/// Every `(x, p, v, orientation)` with a split witness, in scan order.
fn absorptions<'a>(g: &'a Graph, state: &'a PartitionState) -> impl Iterator<Item = Absorb> + 'a {
    state.leftover().into_iter().flat_map(move |x| {
        (0..state.k()).flat_map(move |p| {
            let cyc = state.cycle(p);
            let mut nbrs: Vec<Vertex> = cyc
                .seq()
                .iter()
                .copied()
                .filter(|&v| g.has_edge(v, x))
                .collect();
            nbrs.sort_unstable();
            nbrs.into_iter().flat_map(move |v| {
                [cyc.clone(), cyc.reversed()]
                    .into_iter()
                    .filter_map(move |cp| {
                        let vp = cp.succ(v);
                        let wit = check_lemma2(g, state, p, vp, x)?;
                        let cq = oriented(state.cycle(wit.q), wit.w_minus, wit.w)?;
                        Some(Absorb {
                            p,
                            v,
                            vp,
                            x,
                            wit,
                            cp,
                            cq,
                        })
                    })
            })
        })
    })
}

/// First-case exchange: a large leftover holds a chorded cycle of its own
/// once a vertex `x` is spliced between two current cycles.
pub fn try_move_absorb_case1(g: &Graph, state: &PartitionState) -> Option<Move> {
    if state.k() < 2 || state.leftover_size() == 0 || !leftover_trigger(state) {
        return None;
    }
    let mut inner: Vec<Option<Option<OrientedCycle>>> = vec![None; g.n()];
    for a in absorptions(g, state) {
        let d1 = inner[a.x]
            .get_or_insert_with(|| {
                let rest: Vec<Vertex> =
                    state.leftover().into_iter().filter(|&u| u != a.x).collect();
                let sub = g.induced(&rest).ok()?;
                let cyc = find_chorded_cycle_in(&sub.graph, state.c())?;
                make(g, cyc.seq().iter().map(|&l| sub.host(l)).collect())
            })
            .clone();
        let Some(d1) = d1 else { continue };
        let mut d2 = a.cp.arc(a.vp, a.v);
        d2.push(a.x);
        d2.extend(a.cq.arc(a.wit.w, a.wit.w_minus));
        let Some(d2) = make(g, d2) else { continue };
        let mv = Move::new(
            state,
            MoveKind::AbsorbCase1,
            vec![a.p, a.wit.q],
            vec![d1, d2],
        );
        if let Some(mv) = accept(g, state, mv) {
            return Some(mv);
        }
    }
    None
}

/// Replaces the cycle with the fewest covered low-degree vertices by a
/// Hamilton cycle of a complete leftover, when that raises the potential.
pub fn try_move_leftover_clique(g: &Graph, state: &PartitionState) -> Option<Move> {
    let h = state.leftover();
    if h.len() < min_chorded_order(state.c()) {
        return None;
    }
    if h.iter()
        .enumerate()
        .any(|(i, &a)| h[i + 1..].iter().any(|&b| !g.has_edge(a, b)))
    {
        return None;
    }
    let p = (0..state.k()).min_by_key(|&p| {
        let cyc = state.cycle(p);
        (
            cyc.seq().iter().filter(|&&v| state.is_low(v)).count(),
            cyc.len(),
            p,
        )
    })?;
    let d = make(g, h)?;
    accept(
        g,
        state,
        Move::new(state, MoveKind::AbsorbCase2Clique, vec![p], vec![d]),
    )
}

/// Second-case exchange: `x` is spliced between two cycles and a long cycle
/// gives up a stretch of high-degree vertices via two chords.
pub fn try_move_absorb_case2(
    g: &Graph,
    state: &PartitionState,
) -> std::result::Result<Move, Case2Blocked> {
    let h = state.leftover();
    if h.is_empty() {
        return Err(Case2Blocked::EmptyLeftover);
    }
    if leftover_trigger(state) {
        return Err(Case2Blocked::NotCase2);
    }
    let (k, c, n) = (state.k(), state.c(), state.n());
    if k < 2 {
        return Err(Case2Blocked::SingleCycle);
    }
    if let Some(&v) = h.iter().find(|&&v| !state.is_low(v)) {
        return Err(Case2Blocked::LeftoverNotLow(v));
    }
    if h.iter()
        .enumerate()
        .any(|(i, &a)| h[i + 1..].iter().any(|&b| !g.has_edge(a, b)))
    {
        return Err(Case2Blocked::LeftoverNotComplete);
    }
    if h.len() > 2 * c + 1 {
        return Err(Case2Blocked::LeftoverTooLarge {
            size: h.len(),
            bound: 2 * c + 1,
        });
    }
    let long: Vec<usize> = (0..k)
        .filter(|&r| k * state.cycle(r).len() + 2 * c + 1 >= n)
        .collect();
    if long.is_empty() {
        return Err(Case2Blocked::NoLongCycle);
    }
    let attached = h
        .iter()
        .any(|&x| (0..k).any(|p| state.cycle(p).seq().iter().any(|&v| g.has_edge(v, x))));
    if !attached {
        return Err(Case2Blocked::NoAttachment);
    }

    let mut last = Case2Blocked::NoSplitWitness;
    for a in absorptions(g, state) {
        let (p, q) = (a.p, a.wit.q);
        for &r in &long {
            let built = if r != p && r != q {
                build_r3(g, state, &a, r)
            } else if r == q {
                // C_q carries the chords and must keep w⁻w
                build_r2(
                    g,
                    state,
                    p,
                    a.vp,
                    a.v,
                    a.x,
                    &a.cp,
                    q,
                    a.wit.w_minus,
                    a.wit.w,
                    &a.cq,
                )
            } else {
                // mirror: reversed C_q plays the first cycle, reversed C_p the second
                build_r2(
                    g,
                    state,
                    q,
                    a.wit.w_minus,
                    a.wit.w,
                    a.x,
                    &a.cq.reversed(),
                    p,
                    a.vp,
                    a.v,
                    &a.cp.reversed(),
                )
            };
            match built {
                Ok(mv) => match accept(g, state, mv) {
                    Some(mv) => return Ok(mv),
                    None => last = Case2Blocked::NoPotentialGain,
                },
                Err(e) => last = e,
            }
        }
    }
    Err(last)
}

fn build_r3(
    g: &Graph,
    state: &PartitionState,
    a: &Absorb,
    r: usize,
) -> std::result::Result<Move, Case2Blocked> {
    let cr = state.cycle(r);
    let s = state.attachments(g, r, &state.leftover());
    let (wm, w) = (cr.at(cr.len() - 1), cr.at(0));
    let tc = find_two_chords_on(g, cr, &s, wm, w, state.k(), state.c())
        .map_err(Case2Blocked::TwoChords)?;
    let mut d1 = a.cp.arc(a.vp, a.v);
    d1.push(a.x);
    d1.extend(a.cq.arc(a.wit.w, a.wit.w_minus));
    let d2 = cr.arc(tc.v1, tc.u1);
    let d3 = cr.arc(tc.u2, tc.v2);
    let produced = [d1, d2, d3]
        .into_iter()
        .map(|s| make(g, s))
        .collect::<Option<Vec<_>>>()
        .ok_or(Case2Blocked::NoPotentialGain)?;
    Ok(Move::new(
        state,
        MoveKind::AbsorbCase2R3,
        vec![a.p, a.wit.q, r],
        produced,
    ))
}

/// `D₁ = C₁[v⁺, v] x C₂[w, u₁] C₂[v₁, w⁻]`, `D₂ = C₂[u₂, v₂]` with the chords
/// taken on `C₂` against its edge `w⁻w`.
#[allow(clippy::too_many_arguments)]
fn build_r2(
    g: &Graph,
    state: &PartitionState,
    p1: usize,
    vp: Vertex,
    v: Vertex,
    x: Vertex,
    c1: &OrientedCycle,
    p2: usize,
    w_minus: Vertex,
    w: Vertex,
    c2: &OrientedCycle,
) -> std::result::Result<Move, Case2Blocked> {
    let s = state.attachments(g, p2, &state.leftover());
    let tc = find_two_chords_on(g, c2, &s, w_minus, w, state.k(), state.c())
        .map_err(Case2Blocked::TwoChords)?;
    let mut d1 = c1.arc(vp, v);
    d1.push(x);
    d1.extend(c2.arc(w, tc.u1));
    d1.extend(c2.arc(tc.v1, w_minus));
    let d2 = c2.arc(tc.u2, tc.v2);
    let produced = [d1, d2]
        .into_iter()
        .map(|s| make(g, s))
        .collect::<Option<Vec<_>>>()
        .ok_or(Case2Blocked::NoPotentialGain)?;
    Ok(Move::new(
        state,
        MoveKind::AbsorbCase2R2,
        vec![p1, p2],
        produced,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete(t: usize) -> Graph {
        let mut e = Vec::new();
        for u in 0..t {
            for v in u + 1..t {
                e.push((u, v));
            }
        }
        Graph::from_edges(t, &e).unwrap()
    }

    fn crossing_graph() -> Graph {
        Graph::from_edges(
            6,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (0, 3),
                (0, 2),
                (0, 4),
                (4, 5),
                (3, 5),
            ],
        )
        .unwrap()
    }

    #[test]
    fn crossing_rotation_example() {
        let g = crossing_graph();
        let s = PartitionState::new(
            &g,
            vec![OrientedCycle::new(&g, vec![0, 1, 2, 3]).unwrap()],
            1,
        )
        .unwrap();
        let mv = try_move_crossing(&g, &s, 0, 0, 5).unwrap().unwrap();
        assert_eq!(mv.kind, MoveKind::CrossingRotation);
        let d = &mv.produced[0];
        assert_eq!(
            d.canonical().seq(),
            OrientedCycle::new(&g, vec![1, 0, 4, 5, 3, 2])
                .unwrap()
                .canonical()
                .seq()
        );
        let ch = crate::chorded::chords(&g, d).unwrap();
        assert_eq!(ch.chords, vec![(0, 2), (0, 3)]);
        assert_eq!(s.potential().covered, 4);
        assert_eq!(s.potential_after(&mv).covered, 6);
    }

    #[test]
    fn crossing_without_witness() {
        // 4 hangs off 0 only; 5 is detached from the cycle
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (0, 3), (0, 2), (0, 4), (4, 5)])
            .unwrap();
        let s = PartitionState::new(
            &g,
            vec![OrientedCycle::new(&g, vec![0, 1, 2, 3]).unwrap()],
            1,
        )
        .unwrap();
        assert_eq!(try_move_crossing(&g, &s, 0, 0, 4).unwrap(), None);
    }

    #[test]
    fn crossing_errors() {
        let g = crossing_graph();
        let s = PartitionState::new(
            &g,
            vec![OrientedCycle::new(&g, vec![0, 1, 2, 3]).unwrap()],
            1,
        )
        .unwrap();
        assert!(try_move_crossing(&g, &s, 1, 0, 5).is_err());
        assert!(try_move_crossing(&g, &s, 0, 1, 5).is_err());
        assert!(try_move_crossing(&g, &s, 0, 0, 2).is_err());

        let k4 = complete(4);
        let full = PartitionState::new(
            &k4,
            vec![OrientedCycle::new(&k4, vec![0, 1, 2, 3]).unwrap()],
            1,
        )
        .unwrap();
        assert!(matches!(
            try_move_crossing(&k4, &full, 0, 0, 1),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn split_witness_examples() {
        let g = complete(9);
        let one = PartitionState::new(
            &g,
            vec![OrientedCycle::new(&g, vec![0, 1, 2, 3]).unwrap()],
            1,
        )
        .unwrap();
        assert_eq!(check_lemma2(&g, &one, 0, 1, 8), None);

        let two = PartitionState::new(
            &g,
            vec![
                OrientedCycle::new(&g, vec![0, 1, 2, 3]).unwrap(),
                OrientedCycle::new(&g, vec![4, 5, 6, 7]).unwrap(),
            ],
            1,
        )
        .unwrap();
        assert_eq!(
            check_lemma2(&g, &two, 0, 1, 8),
            Some(SplitWitness {
                q: 1,
                w_minus: 4,
                w: 5
            })
        );
    }

    #[test]
    fn alternating_pattern_has_no_split_witness() {
        // C2 = 4-5-6-7, both 1 and 8 see only {4, 6}: degree sum 4 = |C2|
        let mut e = vec![
            (0, 1),
            (1, 2),
            (2, 3),
            (0, 3),
            (0, 2),
            (4, 5),
            (5, 6),
            (6, 7),
            (4, 7),
            (4, 6),
        ];
        e.extend([(1, 4), (1, 6), (8, 4), (8, 6), (0, 8)]);
        let g = Graph::from_edges(9, &e).unwrap();
        let s = PartitionState::new(
            &g,
            vec![
                OrientedCycle::new(&g, vec![0, 1, 2, 3]).unwrap(),
                OrientedCycle::new(&g, vec![4, 5, 6, 7]).unwrap(),
            ],
            1,
        )
        .unwrap();
        assert_eq!(check_lemma2(&g, &s, 0, 1, 8), None);
    }

    #[test]
    fn chorded_cycle_in_examples() {
        let c = find_chorded_cycle_in(&complete(5), 1).unwrap();
        assert_eq!(c.len(), 5);
        let c7 =
            Graph::from_edges(7, &(0..7).map(|i| (i, (i + 1) % 7)).collect::<Vec<_>>()).unwrap();
        assert!(find_chorded_cycle_in(&c7, 1).is_none());
    }

    #[test]
    fn split_needs_trigger_and_second_cycle() {
        let g = complete(10);
        let s = PartitionState::new(
            &g,
            vec![
                OrientedCycle::new(&g, vec![0, 1, 2, 3]).unwrap(),
                OrientedCycle::new(&g, vec![4, 5, 6, 7]).unwrap(),
            ],
            1,
        )
        .unwrap();
        // 8, 9 see everything, so the trigger is present; the move must be sound
        if let Some(mv) = try_move_split(&g, &s, 0) {
            let mut t = s.clone();
            t.apply(&g, &mv).unwrap();
        }
        let one = PartitionState::new(
            &g,
            vec![OrientedCycle::new(&g, vec![0, 1, 2, 3]).unwrap()],
            1,
        )
        .unwrap();
        assert!(try_move_split(&g, &one, 0).is_none());
    }

    #[test]
    fn case_helpers_on_trivial_states() {
        let g = complete(8);
        let one = PartitionState::new(
            &g,
            vec![OrientedCycle::new(&g, vec![0, 1, 2, 3]).unwrap()],
            1,
        )
        .unwrap();
        assert!(try_move_absorb_case1(&g, &one).is_none());
        let full = PartitionState::new(
            &g,
            vec![
                OrientedCycle::new(&g, vec![0, 1, 2, 3]).unwrap(),
                OrientedCycle::new(&g, vec![4, 5, 6, 7]).unwrap(),
            ],
            1,
        )
        .unwrap();
        assert_eq!(
            try_move_absorb_case2(&g, &full),
            Err(Case2Blocked::EmptyLeftover)
        );
    }
}
