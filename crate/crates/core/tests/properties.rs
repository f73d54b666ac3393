use proptest::prelude::*;

use zf_core::forcing::{closure, force_round, is_zero_forcing_set, propagation_time, replay, ColorState, Propagation};
use zf_core::graph::graph6::{parse_graph6, write_graph6};
use zf_core::graph::json::{parse_json, write_json};
use zf_core::graph::{Graph, VertexSet};
use zf_core::solver::{bound_amos, greedy_upper_bound, z_branch_and_bound, z_exhaustive, Budget};

/// Sequential forcing: scan vertices in the given order, apply any force
/// found, restart until nothing changes.
fn naive_closure(g: &Graph, start: &[bool], order: &[usize]) -> Vec<bool> {
    let mut black = start.to_vec();
    loop {
        let mut changed = false;
        for &v in order {
            if !black[v] {
                continue;
            }
            let white: Vec<usize> = g.neighbors(v).iter().copied().filter(|&u| !black[u]).collect();
            if white.len() == 1 {
                black[white[0]] = true;
                changed = true;
            }
        }
        if !changed {
            return black;
        }
    }
}

/// Minimum forcing set size by trying every subset with the naive closure.
fn naive_z(g: &Graph) -> usize {
    let n = g.order();
    let order: Vec<usize> = (0..n).collect();
    (0u32..1 << n)
        .filter(|mask| {
            let start: Vec<bool> = (0..n).map(|v| mask >> v & 1 == 1).collect();
            naive_closure(g, &start, &order).iter().all(|&b| b)
        })
        .map(|mask| mask.count_ones() as usize)
        .min()
        .unwrap_or(0)
}

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            Graph::from_edge_list(n, &edges).unwrap()
        })
    })
}

fn graph_and_set(max_n: usize) -> impl Strategy<Value = (Graph, VertexSet)> {
    graph_strategy(max_n).prop_flat_map(|g| {
        let n = g.order();
        proptest::collection::vec(any::<bool>(), n).prop_map(move |bits| {
            let set = VertexSet::from_indices(n, (0..n).filter(|&v| bits[v])).unwrap();
            (g.clone(), set)
        })
    })
}

fn connected_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    graph_strategy(max_n).prop_filter("connected", |g| g.is_connected() && g.order() >= 2)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn graph6_round_trip(g in graph_strategy(8)) {
        let text = write_graph6(&g).unwrap();
        prop_assert_eq!(parse_graph6(&text).unwrap(), g);
    }

    #[test]
    fn json_round_trip(g in graph_strategy(8)) {
        prop_assert_eq!(parse_json(&write_json(&g)).unwrap(), g);
    }

    #[test]
    fn symmetry_and_handshake(g in graph_strategy(10)) {
        let mut degree_sum = 0;
        for v in 0..g.order() {
            degree_sum += g.degree(v);
            for &u in g.neighbors(v) {
                prop_assert!(g.has_edge(u, v));
                prop_assert_ne!(u, v);
            }
        }
        prop_assert_eq!(degree_sum, 2 * g.size());
        prop_assert_eq!(g.edges().count(), g.size());
    }

    #[test]
    fn closure_matches_sequential_oracle((g, s) in graph_and_set(9), seed in any::<u64>()) {
        let n = g.order();
        let start: Vec<bool> = (0..n).map(|v| s.contains(v)).collect();
        // any scan order reaches the same closure
        let mut order: Vec<usize> = (0..n).collect();
        let k = (seed as usize) % n.max(1);
        order.rotate_left(k);
        if seed % 2 == 1 {
            order.reverse();
        }
        let expected = naive_closure(&g, &start, &order);
        let (state, _) = closure(&g, &s);
        for v in 0..n {
            prop_assert_eq!(state.black.contains(v), expected[v]);
        }
    }

    #[test]
    fn closure_is_extensive_idempotent_monotone((g, s) in graph_and_set(9), extra in any::<u16>()) {
        let n = g.order();
        let (state, _) = closure(&g, &s);
        prop_assert!(s.is_subset(&state.black));
        prop_assert_eq!(&closure(&g, &state.black).0.black, &state.black);
        let mut bigger = s.clone();
        for v in 0..n {
            if extra >> v & 1 == 1 {
                bigger.insert(v);
            }
        }
        prop_assert!(state.black.is_subset(&closure(&g, &bigger).0.black));
    }

    #[test]
    fn chronicle_is_sound((g, s) in graph_and_set(9)) {
        let (state, chronicle) = closure(&g, &s);
        prop_assert_eq!(&chronicle.initial, &s);
        let mut black = s.clone();
        let mut round = 0;
        for e in &chronicle.events {
            prop_assert!(e.round >= round && e.round >= 1);
            if e.round > round {
                round = e.round;
            }
            prop_assert!(g.has_edge(e.forcer, e.forced));
            prop_assert!(!black.contains(e.forced));
            black.insert(e.forced);
        }
        prop_assert_eq!(&black, &state.black);
        prop_assert_eq!(replay(&g, &chronicle).unwrap(), state.black.clone());
        // one event per newly black vertex, each forcer used at most once
        let mut forcers: Vec<usize> = chronicle.events.iter().map(|e| e.forcer).collect();
        forcers.sort_unstable();
        forcers.dedup();
        prop_assert_eq!(forcers.len(), chronicle.events.len());
        prop_assert_eq!(chronicle.events.len(), state.black.len() - s.len());
    }

    #[test]
    fn rounds_terminate((g, s) in graph_and_set(9)) {
        let n = g.order();
        let mut state = ColorState::new(s.clone());
        let mut rounds = 0;
        loop {
            let (next, forces) = force_round(&g, &state);
            if forces.is_empty() {
                break;
            }
            rounds += 1;
            prop_assert!(rounds <= n);
            state = next;
        }
        match propagation_time(&g, &s) {
            Propagation::Rounds(r) => {
                prop_assert!(state.is_all_black());
                prop_assert_eq!(r, rounds);
            }
            Propagation::Stalled => prop_assert!(!state.is_all_black()),
        }
    }

    #[test]
    fn exhaustive_matches_naive(g in graph_strategy(7)) {
        let r = z_exhaustive(&g, None, &Budget::unlimited()).unwrap();
        prop_assert_eq!(r.z, naive_z(&g));
        prop_assert_eq!(r.witness.len(), r.z);
        prop_assert!(is_zero_forcing_set(&g, &r.witness));
    }

    #[test]
    fn solvers_agree(g in graph_strategy(9)) {
        let ex = z_exhaustive(&g, None, &Budget::unlimited()).unwrap();
        let bb = z_branch_and_bound(&g, &Budget::unlimited()).unwrap();
        prop_assert_eq!(ex.z, bb.z);
        prop_assert!(is_zero_forcing_set(&g, &bb.witness));
        prop_assert_eq!(bb.witness.len(), bb.z);
        let greedy = greedy_upper_bound(&g);
        prop_assert!(is_zero_forcing_set(&g, &greedy));
        prop_assert!(greedy.len() >= ex.z);
    }

    #[test]
    fn z_at_least_min_degree(g in connected_graph(9)) {
        let z = z_exhaustive(&g, None, &Budget::unlimited()).unwrap().z;
        prop_assert!(z >= g.min_degree());
    }

    #[test]
    fn deterministic_witnesses(g in graph_strategy(8)) {
        let a = z_exhaustive(&g, None, &Budget::unlimited()).unwrap();
        let b = z_exhaustive(&g, None, &Budget::unlimited().with_threads(3)).unwrap();
        prop_assert_eq!(a.witness, b.witness);
        let c = z_branch_and_bound(&g, &Budget::unlimited()).unwrap();
        let d = z_branch_and_bound(&g, &Budget::unlimited()).unwrap();
        prop_assert_eq!(c.witness, d.witness);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn amos_bound_is_sound(g in connected_graph(10)) {
        let z = z_exhaustive(&g, None, &Budget::unlimited()).unwrap().z;
        let delta = g.max_degree();
        if delta >= 2 {
            prop_assert_eq!(bound_amos(g.order(), delta).unwrap().admits(z), Some(true));
        }
    }
}
