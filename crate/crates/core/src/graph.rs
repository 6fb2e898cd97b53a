//! Small simple undirected graphs with bitmask adjacency.

use alloc::vec::Vec;
use core::fmt;

use crate::error::GraphError;

/// Largest vertex count accepted by [`Graph`].
pub const MAX_VERTICES: usize = 32;

/// A set of vertex ids `0..32`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct VertexSet(u32);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    #[inline]
    pub const fn from_bits(bits: u32) -> Self {
        VertexSet(bits)
    }

    #[inline]
    pub const fn bits(self) -> u32 {
        self.0
    }

    pub const fn all(n: usize) -> Self {
        if n >= 32 {
            VertexSet(u32::MAX)
        } else {
            VertexSet((1u32 << n) - 1)
        }
    }

    #[inline]
    pub const fn singleton(v: usize) -> Self {
        VertexSet(1 << v)
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(vs: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in vs {
            s.insert(v);
        }
        s
    }

    #[inline]
    pub const fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 & (1 << v) != 0
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.0 |= 1 << v;
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1 << v);
    }

    #[inline]
    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub const fn union(self, o: VertexSet) -> VertexSet {
        VertexSet(self.0 | o.0)
    }

    #[inline]
    pub const fn intersection(self, o: VertexSet) -> VertexSet {
        VertexSet(self.0 & o.0)
    }

    #[inline]
    pub const fn difference(self, o: VertexSet) -> VertexSet {
        VertexSet(self.0 & !o.0)
    }

    pub const fn first(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    pub fn iter(self) -> impl Iterator<Item = usize> + Clone {
        let mut bits = self.0;
        core::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(v)
            }
        })
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// A simple undirected graph on vertices `0..n` with `n <= 32`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices { n });
        }
        Ok(Graph {
            n,
            adj: alloc::vec![VertexSet::EMPTY; n],
        })
    }

    /// Builds a graph, rejecting loops, repeated edges and out-of-range ids.
    pub fn new<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        if u >= self.n || v >= self.n {
            return Err(GraphError::VertexOutOfRange {
                vertex: u.max(v),
                n: self.n,
            });
        }
        if u == v {
            return Err(GraphError::Loop { vertex: u });
        }
        if self.adj[u].contains(v) {
            return Err(GraphError::DuplicateEdge { u, v });
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::all(self.n)
    }

    #[inline]
    pub fn neighbours(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.adj[u].iter() {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn min_degree(&self) -> Option<usize> {
        (0..self.n).map(|v| self.degree(v)).min()
    }

    pub fn max_degree(&self) -> Option<usize> {
        (0..self.n).map(|v| self.degree(v)).max()
    }

    /// The subgraph induced by `keep`, renumbered in increasing id order.
    /// Also returns the old id of each new vertex.
    pub fn induced(&self, keep: VertexSet) -> (Graph, Vec<usize>) {
        let keep = keep.intersection(self.vertices());
        let old: Vec<usize> = keep.iter().collect();
        let mut new_id = [usize::MAX; MAX_VERTICES];
        for (i, &v) in old.iter().enumerate() {
            new_id[v] = i;
        }
        let mut adj = alloc::vec![VertexSet::EMPTY; old.len()];
        for (i, &v) in old.iter().enumerate() {
            for w in self.adj[v].intersection(keep).iter() {
                adj[i].insert(new_id[w]);
            }
        }
        (Graph { n: old.len(), adj }, old)
    }

    /// Vertex sets of the connected components of `G[within]`, ordered by smallest vertex.
    pub fn components_within(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut left = within.intersection(self.vertices());
        let mut out = Vec::new();
        while let Some(start) = left.first() {
            let mut comp = VertexSet::singleton(start);
            let mut frontier = comp;
            while !frontier.is_empty() {
                let mut next = VertexSet::EMPTY;
                for v in frontier.iter() {
                    next = next.union(self.adj[v].intersection(left));
                }
                frontier = next.difference(comp);
                comp = comp.union(frontier);
            }
            left = left.difference(comp);
            out.push(comp);
        }
        out
    }

    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(self.vertices())
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    pub fn is_bipartite(&self) -> bool {
        let mut side = [u8::MAX; MAX_VERTICES];
        for comp in self.components() {
            let root = comp.first().unwrap_or(0);
            side[root] = 0;
            let mut stack = alloc::vec![root];
            while let Some(v) = stack.pop() {
                for w in self.adj[v].iter() {
                    if side[w] == u8::MAX {
                        side[w] = 1 - side[v];
                        stack.push(w);
                    } else if side[w] == side[v] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// A copy with the edge `uv` removed.
    pub fn without_edge(&self, u: usize, v: usize) -> Graph {
        let mut g = self.clone();
        g.adj[u].remove(v);
        g.adj[v].remove(u);
        g
    }

    /// Vertices sorted by decreasing degree, ties by id.
    pub fn degree_order(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.n).collect();
        order.sort_by_key(|&v| (core::cmp::Reverse(self.degree(v)), v));
        order
    }

    /// Applies a vertex relabelling `new = perm[old]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph, GraphError> {
        if perm.len() != self.n {
            return Err(GraphError::BadPermutation);
        }
        let mut seen = VertexSet::EMPTY;
        for &p in perm {
            if p >= self.n || seen.contains(p) {
                return Err(GraphError::BadPermutation);
            }
            seen.insert(p);
        }
        Graph::new(self.n, self.edges().into_iter().map(|(u, v)| (perm[u], perm[v])))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}
