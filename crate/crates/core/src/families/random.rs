//! Seeded random base graphs for exploration. The same seed always yields
//! the same graph.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{FamilyError, FamilyGraph};
use crate::graph::{Graph, GraphBuilder, VertexSet};

const MAX_ATTEMPTS: usize = 10_000;

/// Random tree on `n` vertices with maximum degree 3: vertex `i` attaches
/// to a uniformly chosen earlier vertex that still has room. Region
/// `leaves` holds the degree-one vertices.
pub fn random_subcubic_tree(n: usize, seed: u64) -> Result<FamilyGraph, FamilyError> {
    if n < 2 {
        return Err(FamilyError::Domain(format!("tree order {n} < 2")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut degree = vec![0usize; n];
    let mut builder = GraphBuilder::with_vertices(n);
    for i in 1..n {
        let open: Vec<usize> = (0..i).filter(|&v| degree[v] < 3).collect();
        let parent = open[rng.gen_range(0..open.len())];
        builder.add_edge(parent, i).expect("tree edge");
        degree[parent] += 1;
        degree[i] += 1;
    }
    Ok(with_leaf_region(builder.build()))
}

/// Random connected cubic graph on `m` vertices (configuration model with
/// rejection) in which `subdivisions` distinct edges are subdivided and
/// every subdividing vertex receives a pendant leaf. Injecting the gadget
/// at the leaves gives a cubic graph.
pub fn random_cubic_hairy(m: usize, subdivisions: usize, seed: u64) -> Result<FamilyGraph, FamilyError> {
    if m < 4 || m % 2 == 1 {
        return Err(FamilyError::Domain(format!("cubic order {m} must be even and at least 4")));
    }
    let edges_total = 3 * m / 2;
    if subdivisions > edges_total {
        return Err(FamilyError::Domain(format!("{subdivisions} subdivisions exceed the {edges_total} edges")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let cubic = (0..MAX_ATTEMPTS)
        .find_map(|_| cubic_attempt(m, &mut rng))
        .ok_or_else(|| FamilyError::Domain("no simple connected cubic graph sampled".into()))?;

    let mut edges: Vec<(usize, usize)> = cubic.edges().collect();
    edges.shuffle(&mut rng);
    let n = m + 2 * subdivisions;
    let mut builder = GraphBuilder::with_vertices(n);
    for (i, &(u, v)) in edges.iter().enumerate() {
        if i < subdivisions {
            let (mid, leaf) = (m + 2 * i, m + 2 * i + 1);
            builder.add_edge(u, mid).expect("edge");
            builder.add_edge(mid, v).expect("edge");
            builder.add_edge(mid, leaf).expect("edge");
        } else {
            builder.add_edge(u, v).expect("edge");
        }
    }
    Ok(with_leaf_region(builder.build()))
}

/// Random connected graph on `n` vertices: each pair is an edge with
/// probability `p`, resampled until connected.
pub fn random_connected(n: usize, p: f64, seed: u64) -> Result<Graph, FamilyError> {
    if n == 0 || !(0.0..=1.0).contains(&p) {
        return Err(FamilyError::Domain(format!("invalid order {n} or edge probability {p}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..MAX_ATTEMPTS {
        let mut builder = GraphBuilder::with_vertices(n);
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    builder.add_edge(u, v).expect("edge");
                }
            }
        }
        let g = builder.build();
        if g.is_connected() {
            return Ok(g);
        }
    }
    Err(FamilyError::Domain(format!("no connected graph sampled with p = {p}")))
}

fn cubic_attempt(m: usize, rng: &mut ChaCha8Rng) -> Option<Graph> {
    let mut points: Vec<usize> = (0..m).flat_map(|v| [v; 3]).collect();
    points.shuffle(rng);
    let mut builder = GraphBuilder::with_vertices(m);
    let mut seen = std::collections::BTreeSet::new();
    for pair in points.chunks(2) {
        let (u, v) = (pair[0].min(pair[1]), pair[0].max(pair[1]));
        if u == v || !seen.insert((u, v)) {
            return None;
        }
        builder.add_edge(u, v).ok()?;
    }
    let g = builder.build();
    g.is_connected().then_some(g)
}

fn with_leaf_region(graph: Graph) -> FamilyGraph {
    let n = graph.order();
    let leaves = VertexSet::from_indices(n, (0..n).filter(|&v| graph.degree(v) == 1)).expect("in range");
    FamilyGraph {
        graph,
        landmarks: BTreeMap::new(),
        regions: BTreeMap::from([("leaves".to_string(), leaves)]),
        embeddings: BTreeMap::new(),
    }
}
