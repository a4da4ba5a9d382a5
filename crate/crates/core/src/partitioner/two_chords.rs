//! Two crossing-free chords `u₁v₁`, `u₂v₂` on a long cycle that split it
//! into two `c`-chorded cycles while keeping a given edge `w⁻w` and a small
//! vertex set `S` on the retained arcs.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::chorded::OrientedCycle;
use crate::graph::{Graph, Vertex};

use super::state::PartitionState;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoChords {
    pub u1: Vertex,
    pub u2: Vertex,
    pub v1: Vertex,
    pub v2: Vertex,
    pub x: Vertex,
    pub y: Vertex,
    /// `z₀ = x, z₁, …, z_{2c}, z_{2c+1} = y`, in reverse cycle order.
    pub z: Vec<Vertex>,
    pub s: Vec<Vertex>,
    pub w_minus: Vertex,
    pub w: Vertex,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum TwoChordsError {
    #[error("cycle has {len} vertices, needs at least {required}")]
    CycleTooShort { len: usize, required: usize },
    #[error("|S| = {size} exceeds {bound}")]
    SeparatorTooLarge { size: usize, bound: usize },
    #[error("vertex {vertex} has {degree} neighbours on the cycle, needs {required}")]
    DegreeBound {
        vertex: Vertex,
        degree: usize,
        required: usize,
    },
    #[error("w⁻w is not an edge of the cycle")]
    WEdgeNotOnCycle,
    #[error("no consecutive pair avoids w⁻ and S")]
    NoConsecutivePair,
    #[error("no vertex x with enough neighbours of u1")]
    NoX,
    #[error("u2 has fewer than c+2 neighbours ahead")]
    NoY,
    #[error("y does not precede x with a gap")]
    OrderViolated,
    #[error("only {found} common neighbours of u1, u2 between y and x, need {required}")]
    TooFewCommonNeighbors { found: usize, required: usize },
    #[error("every gap between consecutive z's meets S")]
    NoCleanGap,
    #[error("postcondition failed: {0}")]
    PostconditionFailed(String),
}

/// Runs the construction on `state`'s cycle `r`, oriented so that `w_edge`
/// = `(w⁻, w)` is an oriented edge, with `S = N_{C_r}(H*)`.
pub fn find_two_chords(
    g: &Graph,
    state: &PartitionState,
    r: usize,
    w_edge: (Vertex, Vertex),
) -> Result<TwoChords, TwoChordsError> {
    let base = state.cycle(r);
    let (w_minus, w) = w_edge;
    if !base.contains(w_minus) || !base.contains(w) {
        return Err(TwoChordsError::WEdgeNotOnCycle);
    }
    let cyc = if base.succ(w_minus) == w {
        base.clone()
    } else if base.pred(w_minus) == w {
        base.reversed()
    } else {
        return Err(TwoChordsError::WEdgeNotOnCycle);
    };
    let s = state.attachments(g, r, &state.leftover());
    find_two_chords_on(g, &cyc, &s, w_minus, w, state.k(), state.c())
}

fn nbrs_on(g: &Graph, u: Vertex, arc: &[Vertex]) -> usize {
    arc.iter().filter(|&&t| g.has_edge(u, t)).count()
}

/// The construction on an explicitly oriented cycle.
pub fn find_two_chords_on(
    g: &Graph,
    cyc: &OrientedCycle,
    s: &[Vertex],
    w_minus: Vertex,
    w: Vertex,
    k: usize,
    c: usize,
) -> Result<TwoChords, TwoChordsError> {
    let len = cyc.len();
    let required = 8 * k * c + 10 * c - 4;
    if len < required {
        return Err(TwoChordsError::CycleTooShort { len, required });
    }
    if s.len() > 2 * c {
        return Err(TwoChordsError::SeparatorTooLarge {
            size: s.len(),
            bound: 2 * c,
        });
    }
    if !cyc.contains(w_minus) || !cyc.contains(w) || cyc.succ(w_minus) != w {
        return Err(TwoChordsError::WEdgeNotOnCycle);
    }
    let mut in_s = vec![false; g.n()];
    for &v in s {
        in_s[v] = true;
    }
    let min_deg = (len + 1).saturating_sub(2 * k * c);
    for &v in cyc.seq() {
        if in_s[v] {
            continue;
        }
        let d = nbrs_on(g, v, cyc.seq());
        if d < min_deg {
            return Err(TwoChordsError::DegreeBound {
                vertex: v,
                degree: d,
                required: min_deg,
            });
        }
    }

    // (I) first consecutive pair from w avoiding {w⁻} ∪ S
    let bad = |v: Vertex| v == w_minus || in_s[v];
    let start = cyc.position(w).unwrap();
    let (u1, u2) = (0..len)
        .map(|t| cyc.at(start + t))
        .map(|u| (u, cyc.succ(u)))
        .find(|&(a, b)| !bad(a) && !bad(b))
        .ok_or(TwoChordsError::NoConsecutivePair)?;

    // (II) walk back from w⁻ until u1 has c+2 neighbours on C[x, u1]
    let mut count = nbrs_on(g, u1, &cyc.arc(w, u1));
    let mut x = None;
    let mut t = w_minus;
    loop {
        if g.has_edge(t, u1) {
            count += 1;
            if count >= c + 2 {
                x = Some(t);
                break;
            }
        }
        if t == u2 {
            break;
        }
        t = cyc.pred(t);
    }
    let x = x.ok_or(TwoChordsError::NoX)?;

    // (III) the (c+2)-th neighbour of u2 ahead of it
    let mut count = 0;
    let mut y = None;
    let mut t = cyc.succ(u2);
    while t != u1 {
        if g.has_edge(t, u2) {
            count += 1;
            if count == c + 2 {
                y = Some(t);
                break;
            }
        }
        t = cyc.succ(t);
    }
    let y = y.ok_or(TwoChordsError::NoY)?;

    // (III-3)
    let off = |v: Vertex| cyc.arc_len(u2, v);
    if !(off(y) < off(x) && cyc.succ(y) != x) || x == u2 {
        return Err(TwoChordsError::OrderViolated);
    }

    // (IV) common neighbours on C[y⁺, x⁻], nearest to x first
    let mut common = Vec::new();
    let mut t = cyc.pred(x);
    while t != y {
        if g.has_edge(t, u1) && g.has_edge(t, u2) {
            common.push(t);
        }
        t = cyc.pred(t);
    }
    if common.len() < 2 * c {
        return Err(TwoChordsError::TooFewCommonNeighbors {
            found: common.len(),
            required: 2 * c,
        });
    }
    let mut z = Vec::with_capacity(2 * c + 2);
    z.push(x);
    z.extend_from_slice(&common[..2 * c]);
    z.push(y);

    let mut pick = None;
    for i in 0..=2 * c {
        let (hi, lo) = (z[i], z[i + 1]);
        if cyc.succ(lo) == hi {
            pick = Some(i);
            break;
        }
        let gap = cyc.arc(cyc.succ(lo), cyc.pred(hi));
        if !gap.iter().any(|&v| in_s[v]) {
            pick = Some(i);
            break;
        }
    }
    let i = pick.ok_or(TwoChordsError::NoCleanGap)?;
    let out = TwoChords {
        u1,
        u2,
        v1: z[i],
        v2: z[i + 1],
        x,
        y,
        z,
        s: s.to_vec(),
        w_minus,
        w,
    };
    check_conditions(g, cyc, &out, c).map_err(TwoChordsError::PostconditionFailed)?;
    Ok(out)
}

/// Checks (A)–(C) and that both pairs are chords.
pub(crate) fn check_conditions(
    g: &Graph,
    cyc: &OrientedCycle,
    tc: &TwoChords,
    c: usize,
) -> Result<(), String> {
    let TwoChords { u1, u2, v1, v2, .. } = *tc;
    for (a, b) in [(u1, v1), (u2, v2)] {
        if !g.has_edge(a, b) || cyc.is_cycle_edge(a, b) {
            return Err(format!("{a}{b} is not a chord"));
        }
    }
    if (u1, v1) == (u2, v2) {
        return Err("chords coincide".into());
    }
    // (A)
    let off = |v: Vertex| cyc.arc_len(u1, v);
    if !(off(u2) == 2 && off(u2) < off(v2) && off(v2) < off(v1)) {
        return Err("u1, u2, v2, v1 out of order".into());
    }
    // (B)
    let left = cyc.arc(v1, u1);
    let right = cyc.arc(u2, v2);
    if !left.contains(&tc.w_minus) || !left.contains(&tc.w) {
        return Err("w⁻w not on C[v1, u1]".into());
    }
    if let Some(&v) =
        tc.s.iter()
            .find(|v| !left.contains(v) && !right.contains(v))
    {
        return Err(format!("S vertex {v} dropped"));
    }
    // (C)
    if nbrs_on(g, u1, &left) < c + 2 || nbrs_on(g, u2, &right) < c + 2 {
        return Err("arc degree below c+2".into());
    }
    Ok(())
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

    #[test]
    fn clique_of_order_14() {
        let g = complete(14);
        let cyc = OrientedCycle::new(&g, (0..14).collect()).unwrap();
        for i in 0..14 {
            let (wm, w) = (i, (i + 1) % 14);
            let tc = find_two_chords_on(&g, &cyc, &[], wm, w, 1, 1).unwrap();
            check_conditions(&g, &cyc, &tc, 1).unwrap();
            assert_eq!(tc.u2, cyc.succ(tc.u1));
        }
    }

    #[test]
    fn one_short_is_rejected() {
        let g = complete(13);
        let cyc = OrientedCycle::new(&g, (0..13).collect()).unwrap();
        assert_eq!(
            find_two_chords_on(&g, &cyc, &[], 0, 1, 1, 1),
            Err(TwoChordsError::CycleTooShort {
                len: 13,
                required: 14
            })
        );
    }

    #[test]
    fn oversized_separator_is_rejected() {
        let g = complete(14);
        let cyc = OrientedCycle::new(&g, (0..14).collect()).unwrap();
        assert_eq!(
            find_two_chords_on(&g, &cyc, &[3, 5, 7], 0, 1, 1, 1),
            Err(TwoChordsError::SeparatorTooLarge { size: 3, bound: 2 })
        );
    }

    #[test]
    fn reversed_edge_is_rejected() {
        let g = complete(14);
        let cyc = OrientedCycle::new(&g, (0..14).collect()).unwrap();
        assert_eq!(
            find_two_chords_on(&g, &cyc, &[], 1, 0, 1, 1),
            Err(TwoChordsError::WEdgeNotOnCycle)
        );
    }

    #[test]
    fn separator_stays_on_kept_arcs() {
        let g = complete(20);
        let cyc = OrientedCycle::new(&g, (0..20).collect()).unwrap();
        for s in [vec![2, 9], vec![10, 11], vec![15, 16], vec![0, 19]] {
            let tc = find_two_chords_on(&g, &cyc, &s, 4, 5, 1, 1).unwrap();
            check_conditions(&g, &cyc, &tc, 1).unwrap();
        }
    }

    #[test]
    fn sparse_vertex_breaks_degree_bound() {
        let n = 22;
        let mut e = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if u != 0 || v == 1 || v == n - 1 {
                    e.push((u, v));
                }
            }
        }
        let g = Graph::from_edges(n, &e).unwrap();
        let cyc = OrientedCycle::new(&g, (0..n).collect()).unwrap();
        assert!(matches!(
            find_two_chords_on(&g, &cyc, &[], 5, 6, 2, 1),
            Err(TwoChordsError::DegreeBound { vertex: 0, .. })
        ));
        // exempt when in S
        let tc = find_two_chords_on(&g, &cyc, &[0], 5, 6, 2, 1).unwrap();
        check_conditions(&g, &cyc, &tc, 1).unwrap();
    }
}
