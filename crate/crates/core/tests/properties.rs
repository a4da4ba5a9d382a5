use proptest::prelude::*;

use chordpart::chorded::{chords, min_chorded_order};
use chordpart::packing::{check_packing_preconditions, find_packing};
use chordpart::partitioner::{
    fixpoint_diagnostics, next_move, partition, verify_packing, verify_partition, verify_state,
    PartitionOptions, PartitionState,
};
use chordpart::testlab::{gen_extremal_order, gen_ore_random, oracle_packing, oracle_partition};
use chordpart::{Graph, OrientedCycle, Sigma2, Vertex};

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut i = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[i] {
                        edges.push((u, v));
                    }
                    i += 1;
                }
            }
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

/// Dense graphs: each pair present with probability about 3/4.
fn dense_strategy(min_n: usize, max_n: usize) -> impl Strategy<Value = Graph> {
    (min_n..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(0u8..4, pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut i = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[i] != 0 {
                        edges.push((u, v));
                    }
                    i += 1;
                }
            }
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

fn seqs(cycles: &[OrientedCycle]) -> Vec<Vec<Vertex>> {
    cycles.iter().map(|c| c.seq().to_vec()).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn sigma2_infinite_iff_complete(g in graph_strategy(9)) {
        prop_assert_eq!(g.sigma2() == Sigma2::Infinite, g.is_complete());
    }

    #[test]
    fn components_partition_vertices(g in graph_strategy(12)) {
        let comps = g.components();
        let mut owner = vec![usize::MAX; g.n()];
        for (i, comp) in comps.iter().enumerate() {
            for &v in comp {
                prop_assert_eq!(owner[v], usize::MAX);
                owner[v] = i;
            }
        }
        prop_assert!(owner.iter().all(|&o| o != usize::MAX));
        for &(u, v) in g.edges() {
            prop_assert_eq!(owner[u], owner[v]);
        }
    }

    #[test]
    fn block_structure(g in graph_strategy(11)) {
        let blocks = g.blocks();
        for &(u, v) in g.edges() {
            let holders = blocks.iter().filter(|b| b.vertices.contains(&u) && b.vertices.contains(&v)).count();
            prop_assert_eq!(holders, 1);
        }
        for (i, a) in blocks.iter().enumerate() {
            for b in &blocks[i + 1..] {
                let shared = a.vertices.iter().filter(|v| b.vertices.contains(v)).count();
                prop_assert!(shared <= 1);
            }
        }
        for comp in g.components() {
            let inside: Vec<_> = blocks.iter().filter(|b| b.vertices.iter().all(|v| comp.contains(v))).collect();
            if inside.len() >= 2 {
                prop_assert!(inside.iter().filter(|b| b.is_end_block).count() >= 2);
            }
        }
    }

    #[test]
    fn induced_on_everything_is_identity(g in graph_strategy(10)) {
        let all: Vec<Vertex> = g.vertices().collect();
        let h = g.induced(&all).unwrap();
        prop_assert_eq!(h.graph.edges(), g.edges());
        prop_assert!((0..g.n()).all(|v| h.host(v) == v));
    }

    #[test]
    fn chord_identity_and_reversal(g in dense_strategy(4, 10), rot in 0usize..10) {
        // any Hamilton cycle the packing search finds serves as a sample cycle
        if let Ok(out) = find_packing(&g, 1, 1, 200_000) {
            if let Some(p) = out.packing {
                let cyc = &p.cycles[0];
                let set = chords(&g, cyc).unwrap();
                let vs = cyc.seq();
                prop_assert_eq!(set.count, g.edges_within(vs) - vs.len());
                let mut rev = chords(&g, &cyc.reversed()).unwrap().chords;
                let mut fwd = set.chords.clone();
                rev.sort();
                fwd.sort();
                prop_assert_eq!(&rev, &fwd);
                let mut rotated = vs.to_vec();
                rotated.rotate_left(rot % vs.len());
                let mut r = chords(&g, &OrientedCycle::new(&g, rotated).unwrap()).unwrap().chords;
                r.sort();
                prop_assert_eq!(r, fwd);
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(120))]

    #[test]
    fn packing_is_sound_and_complete(g in dense_strategy(3, 11), k in 1usize..=2, c in 1usize..=2) {
        let found = find_packing(&g, k, c, 5_000_000).unwrap();
        prop_assert!(!found.budget_exhausted);
        let oracle = oracle_packing(&g, k, c).unwrap();
        prop_assert_eq!(found.packing.is_some(), oracle.is_some());
        if let Some(p) = &found.packing {
            prop_assert!(verify_packing(&g, k, c, &seqs(&p.cycles)).passed);
        }
        if let Some(w) = &oracle {
            prop_assert!(verify_packing(&g, k, c, w).passed);
        }
        let pre = check_packing_preconditions(&g, k, c);
        if pre.order_ok && pre.sigma2_ok {
            prop_assert!(found.packing.is_some());
        }
    }

    #[test]
    fn oracle_witnesses_verify(g in dense_strategy(3, 11), k in 1usize..=2, c in 1usize..=3) {
        if let Some(w) = oracle_partition(&g, k, c).unwrap() {
            prop_assert!(verify_partition(&g, k, c, &w).passed);
            prop_assert!(verify_packing(&g, k, c, &w).passed);
            prop_assert!(oracle_packing(&g, k, c).unwrap().is_some());
        }
    }

    #[test]
    fn partition_agrees_with_oracle(g in dense_strategy(3, 12), k in 1usize..=2, c in 1usize..=2) {
        let out = partition(&g, k, c, &PartitionOptions::default()).unwrap();
        let oracle = oracle_partition(&g, k, c).unwrap();
        prop_assert_eq!(out.is_partitioned(), oracle.is_some());
        if let Some(p) = out.partition() {
            prop_assert!(verify_partition(&g, k, c, &seqs(&p.cycles)).passed);
        }
        let log = out.log();
        prop_assert!(log.len() <= log.bound);
        for r in &log.records {
            prop_assert!(r.potential_after > r.potential_before);
        }
        for f in &log.fixpoints {
            prop_assert!(f.neighbour.is_empty());
        }
    }

    /// Steps a state built from a packing one move at a time.
    #[test]
    fn every_move_raises_the_potential(g in dense_strategy(8, 20), k in 1usize..=2) {
        let Ok(out) = find_packing(&g, k, 1, 2_000_000) else { return Ok(()) };
        let Some(p) = out.packing else { return Ok(()) };
        let mut state = PartitionState::new(&g, p.cycles, 1).unwrap();
        let bound = (state.low_count() + 1) * (g.n() + 1);
        let mut steps = 0;
        while let Some(mv) = next_move(&g, &state) {
            let predicted = state.potential_after(&mv);
            let (before, after) = state.apply(&g, &mv).unwrap();
            prop_assert!(after > before);
            prop_assert_eq!(predicted, after);
            prop_assert!(verify_state(&g, &state).passed);
            steps += 1;
            prop_assert!(steps <= bound);
            if state.is_spanning() {
                break;
            }
        }
        if !state.is_spanning() {
            prop_assert!(fixpoint_diagnostics(&g, &state).neighbour.is_empty());
        }
    }

    #[test]
    fn ore_instances_meet_the_condition(n in 3usize..40, seed in any::<u64>()) {
        let r = gen_ore_random(n, seed).unwrap();
        prop_assert!(r.graph.sigma2().at_least(n));
    }
}

#[test]
fn extremal_order_cannot_be_partitioned() {
    for (k, c) in [(1, 1), (1, 2), (1, 3), (2, 1)] {
        let g = gen_extremal_order(k, c).unwrap();
        assert_eq!(2 * g.min_degree().unwrap(), g.n());
        assert_eq!(g.sigma2(), Sigma2::Finite(g.n()));
        assert!(oracle_partition(&g, k, c).unwrap().is_none());
    }
    assert_eq!(min_chorded_order(1), 4);
}
