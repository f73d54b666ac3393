//! Best-first branch-and-bound over closed black sets.
//!
//! A node is a closed set `B` (its own forcing closure) together with the
//! number of vertices paid for so far. Branching activates one vertex `v`
//! whose closed neighbourhood is not yet black: every white vertex of
//! `N[v]` is paid for except one white neighbour, which `v` then forces,
//! and the child is the closure of `B ∪ N[v]`. A white `v` with no white
//! neighbour is paid for alone.
//!
//! Paid vertices collected along any root-to-full path form a zero forcing
//! set: holding them black from the start, every activated `v` sees at most
//! one white neighbour when its turn comes. Conversely, replaying the
//! forces of a minimum forcing set `P` in chronological order as
//! activations pays only for members of `P`, each at most once. So the
//! cheapest path costs exactly `Z(G)`.
//!
//! In a closed set no black vertex has exactly one white neighbour, so
//! every useful move costs at least one. The bound at a node is its paid
//! count plus the cheapest move available from it (at the root this is the
//! minimum degree). The incumbent comes from a greedy pass and prunes any
//! node whose bound reaches it.

use std::cmp::Reverse;
use std::collections::hash_map::Entry;
use std::collections::{BinaryHeap, HashMap};

use super::kernel::{Kernel, MaskKernel, WideKernel};
use super::{Budget, Certificate, Meter, SolverResult, Timeout};
use crate::forcing;
use crate::graph::{Graph, VertexSet};

pub fn z_branch_and_bound(g: &Graph, budget: &Budget) -> Result<SolverResult, Timeout> {
    let greedy = greedy_upper_bound(g);
    match MaskKernel::new(g) {
        Some(k) => search(&k, g, greedy, budget),
        None => search(&WideKernel::new(g), g, greedy, budget),
    }
}

/// Repeatedly adds the vertex whose addition grows the closure most
/// (lowest index on ties) until everything is black.
pub fn greedy_upper_bound(g: &Graph) -> VertexSet {
    let n = g.order();
    let mut chosen = VertexSet::new(n);
    let mut black = VertexSet::new(n);
    while !black.is_full() {
        let mut best: Option<(usize, VertexSet)> = None;
        for v in 0..n {
            if black.contains(v) {
                continue;
            }
            let mut trial = black.clone();
            trial.insert(v);
            let grown = forcing::closure(g, &trial).0.black;
            if best.as_ref().is_none_or(|(_, b)| grown.len() > b.len()) {
                best = Some((v, grown));
            }
        }
        let (v, grown) = best.expect("a white vertex exists");
        chosen.insert(v);
        black = grown;
    }
    chosen
}

struct Node<S> {
    set: S,
    cost: usize,
    parent: Option<usize>,
    paid: Vec<usize>,
}

/// Cost of activating `v` from `black`, and the vertices paid for, or
/// `None` when `N[v]` is already black.
fn activation<K: Kernel>(kernel: &K, g: &Graph, black: &K::Set, v: usize) -> Option<(usize, Vec<usize>)> {
    let mut paid: Vec<usize> = g.neighbors(v).iter().copied().filter(|&u| !kernel.contains(black, u)).collect();
    let forced = paid.pop();
    if !kernel.contains(black, v) {
        paid.push(v);
    }
    match forced {
        Some(_) => Some((paid.len(), paid)),
        None if paid.is_empty() => None,
        None => Some((1, paid)),
    }
}

fn cheapest_move<K: Kernel>(kernel: &K, g: &Graph, black: &K::Set) -> usize {
    (0..g.order())
        .filter_map(|v| activation(kernel, g, black, v).map(|(c, _)| c))
        .min()
        .unwrap_or(0)
}

fn search<K: Kernel>(kernel: &K, g: &Graph, greedy: VertexSet, budget: &Budget) -> Result<SolverResult, Timeout> {
    let n = g.order();
    let meter = Meter::new(budget);
    let mut incumbent = greedy.len();
    let mut witness = greedy;

    let root = kernel.empty();
    let root_bound = cheapest_move(kernel, g, &root);
    let mut nodes = vec![Node { set: root.clone(), cost: 0, parent: None, paid: vec![] }];
    let mut best: HashMap<K::Set, usize> = HashMap::from([(root, 0)]);
    let mut heap = BinaryHeap::from([Reverse((root_bound, 0usize))]);
    let mut expanded = 0u64;

    while let Some(&Reverse((bound, idx))) = heap.peek() {
        if bound >= incumbent {
            break;
        }
        heap.pop();
        if best[&nodes[idx].set] < nodes[idx].cost {
            continue;
        }
        expanded += 1;
        if !meter.tick(1, 0) {
            return Err(Timeout {
                lower: bound.max(root_bound).min(incumbent),
                upper: incumbent,
                witness: Some(witness),
                stats: meter.stats(expanded),
            });
        }
        let mut closures = 0;
        for v in 0..n {
            let parent_set = &nodes[idx].set;
            let Some((extra, paid)) = activation(kernel, g, parent_set, v) else {
                continue;
            };
            let cost = nodes[idx].cost + extra;
            if cost >= incumbent {
                continue;
            }
            let mut child = parent_set.clone();
            kernel.insert(&mut child, v);
            for &u in g.neighbors(v) {
                kernel.insert(&mut child, u);
            }
            kernel.close(&mut child);
            closures += 1;
            if kernel.is_full(&child) {
                incumbent = cost;
                witness = collect_paid(&nodes, idx, &paid, n);
                continue;
            }
            let child_bound = cost + cheapest_move(kernel, g, &child);
            if child_bound >= incumbent {
                continue;
            }
            match best.entry(child.clone()) {
                Entry::Occupied(mut e) => {
                    if *e.get() <= cost {
                        continue;
                    }
                    e.insert(cost);
                }
                Entry::Vacant(e) => {
                    e.insert(cost);
                }
            }
            nodes.push(Node { set: child, cost, parent: Some(idx), paid });
            heap.push(Reverse((child_bound, nodes.len() - 1)));
        }
        meter.tick(0, closures);
    }

    debug_assert!(forcing::is_zero_forcing_set(g, &witness));
    Ok(SolverResult {
        z: incumbent,
        witness,
        certificate: Certificate::BnBClosed,
        stats: meter.stats(expanded),
    })
}

fn collect_paid<S>(nodes: &[Node<S>], mut idx: usize, last: &[usize], n: usize) -> VertexSet {
    let mut set = VertexSet::from_indices(n, last.iter().copied()).expect("paid vertices in range");
    loop {
        for &v in &nodes[idx].paid {
            set.insert(v);
        }
        match nodes[idx].parent {
            Some(p) => idx = p,
            None => return set,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_graphs() {
        let b = Budget::unlimited();
        for (g, z) in [
            (Graph::path(5), 1),
            (Graph::cycle(6), 2),
            (Graph::complete(4), 3),
            (Graph::complete_bipartite(3, 3), 4),
            (Graph::empty(3), 3),
            (Graph::empty(0), 0),
            (Graph::empty(1), 1),
        ] {
            let r = z_branch_and_bound(&g, &b).unwrap();
            assert_eq!(r.z, z, "{g:?}");
            assert_eq!(r.witness.len(), z);
            assert!(forcing::is_zero_forcing_set(&g, &r.witness));
            assert_eq!(r.certificate, Certificate::BnBClosed);
        }
    }

    #[test]
    fn greedy_forces() {
        let g = Graph::from_edge_list(7, &[(0, 1), (1, 2), (1, 3), (3, 4), (3, 5), (5, 6)]).unwrap();
        let s = greedy_upper_bound(&g);
        assert!(forcing::is_zero_forcing_set(&g, &s));
    }

    #[test]
    fn petersen() {
        let g = crate::graph::graph6::parse_graph6("IheA@GUAo").unwrap();
        let bnb = z_branch_and_bound(&g, &Budget::unlimited()).unwrap();
        let ex = super::super::z_exhaustive(&g, None, &Budget::unlimited()).unwrap();
        assert_eq!(bnb.z, ex.z);
        assert_eq!(bnb.z, 5);
    }

    #[test]
    fn node_limit_gives_sound_interval() {
        let g = crate::graph::graph6::parse_graph6("IheA@GUAo").unwrap();
        match z_branch_and_bound(&g, &Budget::unlimited().with_node_limit(1)) {
            Ok(r) => assert_eq!(r.z, 5),
            Err(t) => {
                assert!(t.lower <= 5 && 5 <= t.upper);
                assert!(forcing::is_zero_forcing_set(&g, t.witness.as_ref().unwrap()));
            }
        }
    }
}
