//! Immutable simple undirected graphs with dense vertex indices.
//!
//! Vertices are `0..n`. Display names, when present, live in a side table
//! and never affect structure. Graphs are frozen once built; family
//! constructors go through [`GraphBuilder`].

mod bitset;
pub mod dot;
pub mod graph6;
pub mod json;

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use thiserror::Error;

pub use bitset::{Iter as VertexSetIter, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for graph of order {n}")]
    IndexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("malformed graph6 header: {0}")]
    MalformedHeader(String),
    #[error("graph6 bitstream truncated: expected {expected} data bytes, found {found}")]
    TruncatedBitstream { expected: usize, found: usize },
    #[error("trailing data at byte offset {offset}")]
    TrailingGarbage { offset: usize },
    #[error("invalid graph6 byte {byte:#04x} at offset {offset}")]
    InvalidByte { offset: usize, byte: u8 },
    #[error("graph of order {n} exceeds the supported graph6 limit {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("invalid JSON graph: {0}")]
    Json(String),
}

#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    labels: BTreeMap<usize, String>,
    edge_count: usize,
}

/// Minimum degree, maximum degree and the degree multiset (degree -> count).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeProfile {
    pub min: usize,
    pub max: usize,
    pub counts: BTreeMap<usize, usize>,
}

impl Graph {
    /// Builds a graph from an edge list. Repeated edges collapse; self-loops
    /// and out-of-range endpoints are errors.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut builder = GraphBuilder::with_vertices(n);
        for &(u, v) in edges {
            builder.add_edge(u, v)?;
        }
        Ok(builder.build())
    }

    pub fn empty(n: usize) -> Graph {
        GraphBuilder::with_vertices(n).build()
    }

    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Graph::from_edge_list(n, &edges).expect("path edges are valid")
    }

    /// Cycle on `n ≥ 3` vertices.
    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "a simple cycle needs at least 3 vertices");
        let edges: Vec<_> = (0..n).map(|v| (v, (v + 1) % n)).collect();
        Graph::from_edge_list(n, &edges).expect("cycle edges are valid")
    }

    pub fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::from_edge_list(n, &edges).expect("complete edges are valid")
    }

    /// Complete bipartite graph with parts `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..a {
            for v in a..a + b {
                edges.push((u, v));
            }
        }
        Graph::from_edge_list(a + b, &edges).expect("bipartite edges are valid")
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.adjacency.len()
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.edge_count
    }

    /// Sorted neighbours of `v`.
    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in ascending order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, nbrs)| nbrs.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn labels(&self) -> &BTreeMap<usize, String> {
        &self.labels
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels.get(&v).map(String::as_str)
    }

    /// Looks a vertex up by display name.
    pub fn vertex_by_label(&self, name: &str) -> Option<usize> {
        self.labels.iter().find(|(_, l)| *l == name).map(|(&v, _)| v)
    }

    /// Replaces the display names. Out-of-range indices are rejected.
    pub fn with_labels(mut self, labels: BTreeMap<usize, String>) -> Result<Graph, GraphError> {
        if let Some((&v, _)) = labels.iter().find(|(&v, _)| v >= self.order()) {
            return Err(GraphError::IndexOutOfRange { vertex: v, n: self.order() });
        }
        self.labels = labels;
        Ok(self)
    }

    pub fn neighbor_set(&self, v: usize) -> VertexSet {
        let mut set = VertexSet::new(self.order());
        for &u in self.neighbors(v) {
            set.insert(u);
        }
        set
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn degree_profile(&self) -> DegreeProfile {
        let mut counts = BTreeMap::new();
        for nbrs in &self.adjacency {
            *counts.entry(nbrs.len()).or_insert(0) += 1;
        }
        DegreeProfile {
            min: self.min_degree(),
            max: self.max_degree(),
            counts,
        }
    }

    pub fn is_connected(&self) -> bool {
        let n = self.order();
        if n <= 1 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut reached = 1;
        while let Some(v) = queue.pop_front() {
            for &u in self.neighbors(v) {
                if !seen[u] {
                    seen[u] = true;
                    reached += 1;
                    queue.push_back(u);
                }
            }
        }
        reached == n
    }

    /// Subgraph induced on `keep`, relabelled to `0..|keep|` in ascending
    /// order. Returns the graph and the map from new to old indices.
    pub fn induced_subgraph(&self, keep: &VertexSet) -> (Graph, Vec<usize>) {
        let old: Vec<usize> = keep.iter().collect();
        let mut new_index = vec![usize::MAX; self.order()];
        for (i, &v) in old.iter().enumerate() {
            new_index[v] = i;
        }
        let mut builder = GraphBuilder::with_vertices(old.len());
        for (u, v) in self.edges() {
            if new_index[u] != usize::MAX && new_index[v] != usize::MAX {
                builder
                    .add_edge(new_index[u], new_index[v])
                    .expect("induced edge is valid");
            }
        }
        (builder.build(), old)
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.order())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// Edge accumulator used to construct a [`Graph`].
#[derive(Debug, Clone, Default)]
pub struct GraphBuilder {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
    labels: BTreeMap<usize, String>,
}

impl GraphBuilder {
    pub fn new() -> Self {
        GraphBuilder::default()
    }

    pub fn with_vertices(n: usize) -> Self {
        GraphBuilder { n, ..Default::default() }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn add_vertex(&mut self) -> usize {
        self.n += 1;
        self.n - 1
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        for w in [u, v] {
            if w >= self.n {
                return Err(GraphError::IndexOutOfRange { vertex: w, n: self.n });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        self.edges.insert((u.min(v), u.max(v)));
        Ok(())
    }

    pub fn set_label(&mut self, v: usize, name: impl Into<String>) {
        self.labels.insert(v, name.into());
    }

    pub fn build(self) -> Graph {
        let mut adjacency = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for nbrs in adjacency.iter_mut() {
            nbrs.sort_unstable();
        }
        Graph {
            adjacency,
            labels: self.labels,
            edge_count: self.edges.len(),
        }
    }
}
