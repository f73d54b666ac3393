//! Gadget-injected graph families.
//!
//! The gadget is `K_4` on `{a, b, c, e}` with the edge `a–b` subdivided by
//! `d`; `d` is the attachment vertex. Injecting it at a vertex `x` of a
//! base graph deletes `x` and hands its edges to a fresh copy of `d`.
//!
//! `G_n` is the complete binary tree on `2^(2n−1) − 1` vertices with every
//! leaf injected, and `Ĝ_n` adds a pendant vertex `y_n` at the root `r_n`.
//!
//! # Index layout
//!
//! Base vertices that survive injection keep their relative order and come
//! first; then one block of five per injected target, in ascending target
//! order, laid out `a, b, c, e, d`. Binary trees are numbered in preorder
//! with the first child before the second. Consequently `G_n` occupies
//! indices `0..|V(G_n)|` of `Ĝ_n` and `y_n` is the last vertex.
//!
//! # Names
//!
//! Landmarks use `r{k}` for a root at level `k`, `y{k}_{i}` for the children
//! `y^i_k` of `r_{k+1}`, `r{k}_{ij}` for the grandchild roots `r^{i,j}_k`, and
//! `y{n}` for the pendant of `Ĝ_n`. Gadget vertices are `g{k}_{a|b|c|e|d}`
//! for the `k`-th injected target. Regions: `G` (all of `V(G_n)`), `H1` and
//! `H2` (the components of `G_n − r_n`), `G11`, `G12`, `G21`, `G22` (the
//! four copies of `G_{n−1}`).

mod lemma;
mod random;
mod ratio;

use std::collections::BTreeMap;

use thiserror::Error;

use crate::graph::{Graph, GraphBuilder, VertexSet};

pub use lemma::{lemma1_check_exhaustive, Lemma1Report, Lemma1Violation};
pub use random::{random_connected, random_cubic_hairy, random_subcubic_tree};
pub use ratio::{ratio_report, RatioReport, Relation, ThresholdComparison, ZValue};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("{0}")]
    Domain(String),
    #[error("injecting at vertex {vertex} (degree {degree}) would exceed maximum degree 3")]
    DegreeOverflow { vertex: usize, degree: usize },
    #[error("check infeasible within budget: {0}")]
    Timeout(String),
}

/// A graph with named vertices and named vertex subsets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyGraph {
    pub graph: Graph,
    pub landmarks: BTreeMap<String, usize>,
    pub regions: BTreeMap<String, VertexSet>,
    /// For each copy region of `G_{n−1}`, the map from `build_g(n−1)`
    /// indices to indices of this graph.
    pub embeddings: BTreeMap<String, Vec<usize>>,
}

impl FamilyGraph {
    pub fn vertex(&self, name: &str) -> Option<usize> {
        self.landmarks.get(name).copied()
    }

    pub fn region(&self, name: &str) -> Option<&VertexSet> {
        self.regions.get(name)
    }

    pub fn order(&self) -> usize {
        self.graph.order()
    }

    /// The graph with display labels taken from the landmarks.
    pub fn labelled_graph(&self) -> Graph {
        let mut labels: BTreeMap<usize, String> = BTreeMap::new();
        // gadget names first so structural names win on shared vertices
        let (gadget, structural): (Vec<_>, Vec<_>) = self.landmarks.iter().partition(|(k, _)| k.starts_with('g'));
        for (name, &v) in gadget.into_iter().chain(structural) {
            labels.insert(v, name.clone());
        }
        self.graph.clone().with_labels(labels).expect("landmarks are in range")
    }
}

/// The subdivided `K_4` with its attachment vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GadgetAttachment {
    pub gadget: Graph,
    pub attach: usize,
}

pub const GADGET_NAMES: [&str; 5] = ["a", "b", "c", "e", "d"];

pub fn subdivided_k4() -> GadgetAttachment {
    let (a, b, c, e, d) = (0, 1, 2, 3, 4);
    let edges = [(a, c), (c, b), (a, e), (e, b), (c, e), (a, d), (d, b)];
    let gadget = Graph::from_edge_list(5, &edges)
        .expect("gadget edges are valid")
        .with_labels(GADGET_NAMES.iter().enumerate().map(|(i, s)| (i, s.to_string())).collect())
        .expect("labels in range");
    GadgetAttachment { gadget, attach: d }
}

/// Complete binary tree of the given depth on `2^depth − 1` vertices,
/// numbered in preorder. Landmark `root`; region `leaves`.
pub fn binary_tree(depth: u32) -> Result<FamilyGraph, FamilyError> {
    if depth == 0 || depth > 30 {
        return Err(FamilyError::Domain(format!("binary tree depth {depth} outside 1..=30")));
    }
    let size = (1usize << depth) - 1;
    let mut builder = GraphBuilder::with_vertices(size);
    let mut leaves = VertexSet::new(size);
    fn grow(builder: &mut GraphBuilder, leaves: &mut VertexSet, at: usize, depth: u32) {
        if depth == 1 {
            leaves.insert(at);
            return;
        }
        let left = at + 1;
        let right = at + (1 << (depth - 1));
        builder.add_edge(at, left).expect("tree edge");
        builder.add_edge(at, right).expect("tree edge");
        grow(builder, leaves, left, depth - 1);
        grow(builder, leaves, right, depth - 1);
    }
    grow(&mut builder, &mut leaves, 0, depth);
    Ok(FamilyGraph {
        graph: builder.build(),
        landmarks: BTreeMap::from([("root".to_string(), 0)]),
        regions: BTreeMap::from([("leaves".to_string(), leaves)]),
        embeddings: BTreeMap::new(),
    })
}

/// Where a base vertex ended up after injection.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Placement {
    Kept(usize),
    /// Replaced by the gadget block starting at this index.
    Gadget(usize),
}

/// Replaces every target by a fresh gadget copy whose attachment vertex
/// takes over the target's edges.
pub fn inject_gadget(
    base: &FamilyGraph,
    targets: &VertexSet,
    gadget: &GadgetAttachment,
) -> Result<FamilyGraph, FamilyError> {
    inject_with_placements(base, targets, gadget).map(|(fg, _)| fg)
}

fn inject_with_placements(
    base: &FamilyGraph,
    targets: &VertexSet,
    gadget: &GadgetAttachment,
) -> Result<(FamilyGraph, Vec<Placement>), FamilyError> {
    let g = &base.graph;
    let width = gadget.gadget.order();
    let attach_degree = gadget.gadget.degree(gadget.attach);
    for v in targets {
        if v >= g.order() {
            return Err(FamilyError::Domain(format!("target {v} outside base graph")));
        }
        if g.degree(v) + attach_degree > 3 {
            return Err(FamilyError::DegreeOverflow { vertex: v, degree: g.degree(v) });
        }
    }

    let kept = g.order() - targets.len();
    let mut placements = Vec::with_capacity(g.order());
    let (mut next_kept, mut next_block) = (0, kept);
    for v in 0..g.order() {
        if targets.contains(v) {
            placements.push(Placement::Gadget(next_block));
            next_block += width;
        } else {
            placements.push(Placement::Kept(next_kept));
            next_kept += 1;
        }
    }
    let image = |v: usize| match placements[v] {
        Placement::Kept(i) => i,
        Placement::Gadget(first) => first + gadget.attach,
    };

    let mut builder = GraphBuilder::with_vertices(next_block);
    for (u, v) in g.edges() {
        builder.add_edge(image(u), image(v)).expect("mapped edge is valid");
    }
    let mut landmarks = BTreeMap::new();
    for (k, v) in targets.iter().enumerate() {
        let Placement::Gadget(first) = placements[v] else { unreachable!() };
        for (u, w) in gadget.gadget.edges() {
            builder.add_edge(first + u, first + w).expect("gadget edge is valid");
        }
        for slot in 0..width {
            let name = gadget.gadget.label(slot).map_or_else(|| slot.to_string(), str::to_owned);
            landmarks.insert(format!("g{k}_{name}"), first + slot);
        }
    }
    for (name, &v) in &base.landmarks {
        landmarks.insert(name.clone(), image(v));
    }
    let mut regions = BTreeMap::new();
    for (name, set) in &base.regions {
        let mut mapped = VertexSet::new(next_block);
        for v in set {
            match placements[v] {
                Placement::Kept(i) => {
                    mapped.insert(i);
                }
                Placement::Gadget(first) => {
                    for slot in 0..width {
                        mapped.insert(first + slot);
                    }
                }
            }
        }
        regions.insert(name.clone(), mapped);
    }
    let fg = FamilyGraph {
        graph: builder.build(),
        landmarks,
        regions,
        embeddings: BTreeMap::new(),
    };
    Ok((fg, placements))
}

/// Sequence `t_1 = 2`, `t_{k+1} = 4·t_k + 2`.
///
/// # Panics
/// For `n = 0` or `n > 31` (overflow).
pub fn t(n: u32) -> u64 {
    assert!((1..=31).contains(&n), "t is defined for 1 ≤ n ≤ 31");
    (1..n).fold(2, |acc, _| 4 * acc + 2)
}

/// Depth-`2n−1` binary tree with injected leaves, before relabelling.
fn injected_tree(n: u32) -> Result<(FamilyGraph, Vec<Placement>), FamilyError> {
    let tree = binary_tree(2 * n - 1)?;
    let leaves = tree.regions["leaves"].clone();
    inject_with_placements(&tree, &leaves, &subdivided_k4())
}

/// The graph `G_n`.
pub fn build_g(n: u32) -> Result<FamilyGraph, FamilyError> {
    if !(1..=10).contains(&n) {
        return Err(FamilyError::Domain(format!("level {n} outside 1..=10")));
    }
    let (mut fg, placements) = injected_tree(n)?;
    let order = fg.order();
    fg.landmarks.remove("root");
    fg.regions.remove("leaves");
    fg.regions.insert("G".into(), VertexSet::full(order));
    let root = match placements[0] {
        Placement::Kept(i) => i,
        Placement::Gadget(first) => first + subdivided_k4().attach,
    };
    fg.landmarks.insert(format!("r{n}"), root);
    if n == 1 {
        return Ok(fg);
    }

    let depth = 2 * n - 1;
    let child_span = 1usize << (depth - 1);
    let grand_span = 1usize << (depth - 2);
    let (_, sub_placements) = injected_tree(n - 1)?;
    let sub_order = 6 * 4usize.pow(n - 2) - 1;
    for i in 1..=2usize {
        let child = 1 + (i - 1) * (child_span - 1);
        let Placement::Kept(child_index) = placements[child] else { unreachable!("internal vertex") };
        fg.landmarks.insert(format!("y{}_{i}", n - 1), child_index);
        let mut h = VertexSet::new(order);
        for j in 1..=2usize {
            let grandchild = child + 1 + (j - 1) * (grand_span - 1);
            let embedding = embed(&placements, &sub_placements, grandchild, sub_order);
            let mut region = VertexSet::new(order);
            for &v in &embedding {
                region.insert(v);
                h.insert(v);
            }
            fg.landmarks.insert(format!("r{}_{i}{j}", n - 1), embedding[sub_root(n - 1)]);
            fg.regions.insert(format!("G{i}{j}"), region);
            fg.embeddings.insert(format!("G{i}{j}"), embedding);
        }
        h.insert(child_index);
        fg.regions.insert(format!("H{i}"), h);
    }
    Ok(fg)
}

/// Index of `r_k` in `G_k`.
fn sub_root(k: u32) -> usize {
    if k == 1 {
        subdivided_k4().attach
    } else {
        0
    }
}

/// Maps each vertex of `G_{n−1}` to the copy hanging below base vertex
/// `offset` of the depth-`2n−1` tree, whose preorder subtree starting at
/// `offset` matches the depth-`2n−3` tree index for index.
fn embed(outer: &[Placement], inner: &[Placement], offset: usize, inner_order: usize) -> Vec<usize> {
    let mut map = vec![usize::MAX; inner_order];
    for (k, placement) in inner.iter().enumerate() {
        match (*placement, outer[offset + k]) {
            (Placement::Kept(i), Placement::Kept(o)) => map[i] = o,
            (Placement::Gadget(fi), Placement::Gadget(fo)) => {
                for slot in 0..GADGET_NAMES.len() {
                    map[fi + slot] = fo + slot;
                }
            }
            _ => unreachable!("leaves of the subtree are exactly the leaves of the smaller tree"),
        }
    }
    debug_assert!(map.iter().all(|&v| v != usize::MAX));
    map
}

/// The graph `Ĝ_n`: `G_n` plus a pendant `y_n` at `r_n`.
pub fn build_ghat(n: u32) -> Result<FamilyGraph, FamilyError> {
    let g = build_g(n)?;
    let order = g.order() + 1;
    let mut builder = GraphBuilder::with_vertices(order);
    for (u, v) in g.graph.edges() {
        builder.add_edge(u, v).expect("edge");
    }
    let pendant = order - 1;
    builder.add_edge(g.landmarks[&format!("r{n}")], pendant).expect("pendant edge");
    let mut landmarks = g.landmarks;
    landmarks.insert(format!("y{n}"), pendant);
    let regions = g
        .regions
        .into_iter()
        .map(|(name, set)| (name, widen(&set, order)))
        .collect();
    Ok(FamilyGraph { graph: builder.build(), landmarks, regions, embeddings: g.embeddings })
}

/// The same members over a larger universe.
pub fn widen(set: &VertexSet, universe: usize) -> VertexSet {
    VertexSet::from_indices(universe, set.iter()).expect("widening keeps members in range")
}

/// The explicit forcing set `P_n` of size `t_n + 1`, in `G_n` indices.
///
/// `P_1 = {d, a, c}`. `P_{n+1}` is `r_{n+1}` together with copies of `P_n`
/// in the four `G^{i,j}_n`, minus the copy roots `r^{1,2}_n` and `r^{2,2}_n`.
pub fn canonical_forcing_set(n: u32) -> Result<VertexSet, FamilyError> {
    if !(1..=10).contains(&n) {
        return Err(FamilyError::Domain(format!("level {n} outside 1..=10")));
    }
    let k4 = subdivided_k4();
    let mut members = vec![k4.attach, 0, 2];
    for level in 2..=n {
        let fg = build_g(level)?;
        let mut next = vec![fg.landmarks[&format!("r{level}")]];
        for (name, embedding) in &fg.embeddings {
            let drop_root = name.ends_with('2');
            for &v in &members {
                if drop_root && v == sub_root(level - 1) {
                    continue;
                }
                next.push(embedding[v]);
            }
        }
        members = next;
    }
    let order = 6 * 4usize.pow(n - 1) - 1;
    Ok(VertexSet::from_indices(order, members).expect("members in range"))
}

/// Cycle `C_n` with a pendant at every vertex, each pendant then replaced
/// by the gadget. Requires `n ≥ 6` and `6 | n`.
pub fn cycle_gadget_family(n: usize) -> Result<FamilyGraph, FamilyError> {
    if n < 6 || n % 6 != 0 {
        return Err(FamilyError::Domain(format!("cycle length {n} must be a positive multiple of 6")));
    }
    let base = hairy_cycle(n);
    let leaves = base.regions["leaves"].clone();
    inject_gadget(&base, &leaves, &subdivided_k4())
}

/// `C_n` with one pendant leaf per cycle vertex. Cycle vertices are
/// `0..n` (landmarks `c{i}`, region `cycle`), leaf `n + i` hangs on `i`.
pub fn hairy_cycle(n: usize) -> FamilyGraph {
    let mut builder = GraphBuilder::with_vertices(2 * n);
    let mut landmarks = BTreeMap::new();
    for i in 0..n {
        builder.add_edge(i, (i + 1) % n).expect("cycle edge");
        builder.add_edge(i, n + i).expect("pendant edge");
        landmarks.insert(format!("c{i}"), i);
    }
    let cycle = VertexSet::from_indices(2 * n, 0..n).expect("in range");
    let leaves = VertexSet::from_indices(2 * n, n..2 * n).expect("in range");
    FamilyGraph {
        graph: builder.build(),
        landmarks,
        regions: BTreeMap::from([("cycle".into(), cycle), ("leaves".into(), leaves)]),
        embeddings: BTreeMap::new(),
    }
}

/// Injects the gadget at every degree-one vertex of `base`.
pub fn inject_at_leaves(base: &FamilyGraph) -> Result<FamilyGraph, FamilyError> {
    let g = &base.graph;
    let leaves = VertexSet::from_indices(g.order(), (0..g.order()).filter(|&v| g.degree(v) == 1))
        .expect("in range");
    inject_gadget(base, &leaves, &subdivided_k4())
}

impl From<Graph> for FamilyGraph {
    fn from(graph: Graph) -> Self {
        FamilyGraph { graph, landmarks: BTreeMap::new(), regions: BTreeMap::new(), embeddings: BTreeMap::new() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forcing::{closure, force_round, ColorState};

    #[test]
    fn gadget_shape() {
        let k4 = subdivided_k4();
        assert_eq!((k4.gadget.order(), k4.gadget.size()), (5, 7));
        assert_eq!(k4.gadget.degree(k4.attach), 2);
        for v in 0..4 {
            assert_eq!(k4.gadget.degree(v), 3);
        }
        let keep = VertexSet::from_indices(5, 0..4).unwrap();
        let (rest, _) = k4.gadget.induced_subgraph(&keep);
        assert_eq!(rest.size(), 5);
        // the missing K_4 edge is a–b
        assert!(!rest.has_edge(0, 1));
    }

    #[test]
    fn trees() {
        let b1 = binary_tree(1).unwrap();
        assert_eq!(b1.order(), 1);
        assert_eq!(b1.regions["leaves"].to_vec(), vec![0]);
        let b3 = binary_tree(3).unwrap();
        assert_eq!((b3.order(), b3.regions["leaves"].len()), (7, 4));
        assert_eq!(b3.regions["leaves"].to_vec(), vec![2, 3, 5, 6]);
        let b5 = binary_tree(5).unwrap();
        assert_eq!((b5.order(), b5.regions["leaves"].len()), (31, 16));
        assert!(binary_tree(0).is_err());
    }

    #[test]
    fn injection_into_single_vertex_is_the_gadget() {
        let b1 = binary_tree(1).unwrap();
        let g1 = inject_gadget(&b1, &b1.regions["leaves"].clone(), &subdivided_k4()).unwrap();
        assert_eq!(g1.graph, subdivided_k4().gadget.clone().with_labels(BTreeMap::new()).unwrap());
        assert_eq!(g1.vertex("root"), Some(4));
    }

    #[test]
    fn injection_into_b3_is_g2() {
        let b3 = binary_tree(3).unwrap();
        let core = inject_gadget(&b3, &b3.regions["leaves"].clone(), &subdivided_k4()).unwrap();
        assert_eq!(core.graph, build_g(2).unwrap().graph);
    }

    #[test]
    fn injection_degree_overflow() {
        let b3 = binary_tree(3).unwrap();
        let err = inject_gadget(&b3, &VertexSet::from_indices(7, [1]).unwrap(), &subdivided_k4()).unwrap_err();
        assert_eq!(err, FamilyError::DegreeOverflow { vertex: 1, degree: 3 });
    }

    #[test]
    fn small_family_counts() {
        let g1 = build_ghat(1).unwrap();
        assert_eq!((g1.order(), g1.graph.size()), (6, 8));
        let p = g1.graph.degree_profile();
        assert_eq!((p.min, p.max), (1, 3));
        assert_eq!(p.counts, BTreeMap::from([(1, 1), (3, 5)]));
        let g2 = build_ghat(2).unwrap();
        assert_eq!((g2.order(), g2.graph.size()), (24, 35));
        let g3 = build_g(3).unwrap();
        assert_eq!(g3.order(), 95);
        assert_eq!(g3.graph.max_degree(), 3);
        assert!(g3.graph.is_connected());
        assert!(build_g(0).is_err());
    }

    #[test]
    fn level_one_landmarks() {
        let g = build_ghat(1).unwrap();
        assert_eq!(g.vertex("r1"), Some(4));
        assert_eq!(g.vertex("y1"), Some(5));
        assert_eq!(g.vertex("g0_a"), Some(0));
        assert_eq!(g.labelled_graph().label(4), Some("r1"));
    }

    #[test]
    fn level_two_landmarks() {
        let g = build_g(2).unwrap();
        assert_eq!(g.vertex("r2"), Some(0));
        assert_eq!(g.vertex("y1_1"), Some(1));
        assert_eq!(g.vertex("y1_2"), Some(2));
        let r11 = g.vertex("r1_11").unwrap();
        assert!(g.graph.has_edge(1, r11));
        assert_eq!(g.region("G11").unwrap().len(), 5);
        assert_eq!(g.region("H1").unwrap().len(), 11);
    }

    #[test]
    fn t_sequence() {
        assert_eq!((t(1), t(2), t(3)), (2, 10, 42));
    }

    #[test]
    fn round_on_gadget() {
        // black {d, a, c}: a sees only e white, d sees only b white
        let g1 = build_g(1).unwrap();
        let black = VertexSet::from_indices(5, [4, 0, 2]).unwrap();
        let (next, forces) = force_round(&g1.graph, &ColorState::new(black));
        let pairs: Vec<_> = forces.iter().map(|f| (f.forcer, f.forced)).collect();
        assert_eq!(pairs, vec![(0, 3), (4, 1)]);
        assert!(next.is_all_black());
    }

    #[test]
    fn pendant_forces_root() {
        let g = build_ghat(1).unwrap();
        let s = VertexSet::from_indices(6, [5, 0, 2]).unwrap();
        let (state, chronicle) = closure(&g.graph, &s);
        assert!(state.is_all_black());
        assert!(chronicle.events.iter().any(|e| e.forcer == 5 && e.forced == 4));
    }

    #[test]
    fn canonical_sets_small() {
        assert_eq!(canonical_forcing_set(1).unwrap().to_vec(), vec![0, 2, 4]);
        assert_eq!(canonical_forcing_set(2).unwrap().len(), 11);
        assert_eq!(canonical_forcing_set(3).unwrap().len(), 43);
    }

    #[test]
    fn cycle_family() {
        let fg = cycle_gadget_family(6).unwrap();
        assert_eq!((fg.order(), fg.graph.size()), (36, 54));
        assert_eq!(fg.graph.degree_profile().counts, BTreeMap::from([(3, 36)]));
        assert!(fg.graph.is_connected());
        assert_eq!(cycle_gadget_family(12).unwrap().order(), 72);
        assert!(cycle_gadget_family(7).is_err());
        assert!(cycle_gadget_family(0).is_err());
    }
}
