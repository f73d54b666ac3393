//! Closure kernels used in the solver's hot loops. Graphs with at most 64
//! vertices use single-word masks; larger graphs use [`VertexSet`].

use std::hash::Hash;

use crate::graph::{Graph, VertexSet};

pub(crate) trait Kernel: Sync {
    type Set: Clone + Eq + Hash + Send + Sync;

    fn order(&self) -> usize;
    fn empty(&self) -> Self::Set;
    fn is_full(&self, s: &Self::Set) -> bool;
    fn contains(&self, s: &Self::Set, v: usize) -> bool;
    fn insert(&self, s: &mut Self::Set, v: usize);
    /// Replaces `s` by its forcing closure.
    fn close(&self, s: &mut Self::Set);

    fn from_indices(&self, vs: &[usize]) -> Self::Set {
        let mut s = self.empty();
        for &v in vs {
            self.insert(&mut s, v);
        }
        s
    }
}

pub(crate) struct MaskKernel {
    adj: Vec<u64>,
    full: u64,
}

impl MaskKernel {
    pub fn new(g: &Graph) -> Option<MaskKernel> {
        let n = g.order();
        if n > 64 {
            return None;
        }
        let adj = (0..n)
            .map(|v| g.neighbors(v).iter().fold(0u64, |m, &u| m | 1 << u))
            .collect();
        let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        Some(MaskKernel { adj, full })
    }
}

impl Kernel for MaskKernel {
    type Set = u64;

    fn order(&self) -> usize {
        self.adj.len()
    }

    fn empty(&self) -> u64 {
        0
    }

    #[inline]
    fn is_full(&self, s: &u64) -> bool {
        *s == self.full
    }

    #[inline]
    fn contains(&self, s: &u64, v: usize) -> bool {
        s >> v & 1 == 1
    }

    #[inline]
    fn insert(&self, s: &mut u64, v: usize) {
        *s |= 1 << v;
    }

    #[inline]
    fn close(&self, s: &mut u64) {
        loop {
            let before = *s;
            let mut bits = *s;
            while bits != 0 {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                let white = self.adj[v] & !*s;
                if white != 0 && white & (white - 1) == 0 {
                    *s |= white;
                }
            }
            if *s == before {
                return;
            }
        }
    }
}

pub(crate) struct WideKernel<'g> {
    graph: &'g Graph,
}

impl<'g> WideKernel<'g> {
    pub fn new(graph: &'g Graph) -> Self {
        WideKernel { graph }
    }
}

impl Kernel for WideKernel<'_> {
    type Set = VertexSet;

    fn order(&self) -> usize {
        self.graph.order()
    }

    fn empty(&self) -> VertexSet {
        VertexSet::new(self.order())
    }

    fn is_full(&self, s: &VertexSet) -> bool {
        s.is_full()
    }

    fn contains(&self, s: &VertexSet, v: usize) -> bool {
        s.contains(v)
    }

    fn insert(&self, s: &mut VertexSet, v: usize) {
        s.insert(v);
    }

    fn close(&self, s: &mut VertexSet) {
        let g = self.graph;
        let mut stack: Vec<usize> = s.iter().collect();
        // a vertex is re-examined whenever one of its neighbours turns black
        while let Some(v) = stack.pop() {
            let mut white = None;
            let mut count = 0;
            for &u in g.neighbors(v) {
                if !s.contains(u) {
                    count += 1;
                    white = Some(u);
                    if count > 1 {
                        break;
                    }
                }
            }
            if count == 1 {
                let u = white.unwrap();
                s.insert(u);
                stack.push(u);
                stack.extend(g.neighbors(u).iter().copied().filter(|&w| w != v && s.contains(w)));
            }
        }
    }
}
