//! Immutable simple undirected graphs on dense vertex indices `0..n`.

use alloc::vec::Vec;
use core::fmt;

use crate::bitset::VertexSet;

/// Errors raised while constructing a graph from raw edge data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphError {
    /// An endpoint is not in `[0, n)`.
    IndexOutOfRange { vertex: usize, n: usize },
    /// An edge joins a vertex to itself.
    SelfLoop { vertex: usize },
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::IndexOutOfRange { vertex, n } => {
                write!(f, "vertex index {vertex} out of range for order {n}")
            }
            GraphError::SelfLoop { vertex } => write!(f, "self-loop at vertex {vertex}"),
        }
    }
}

impl core::error::Error for GraphError {}

/// An immutable simple undirected graph.
///
/// Invariants (checked on construction, preserved thereafter):
/// adjacency is symmetric, irreflexive, and every index is in `[0, n)`.
/// The empty graph (`n = 0`) is legal.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<VertexSet>,
}

impl Graph {
    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: (0..n).map(|_| VertexSet::new(n)).collect(),
        }
    }

    /// Builds a graph from an edge list; duplicate edges collapse.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.try_add_edge(u, v)?;
        }
        Ok(g)
    }

    pub(crate) fn try_add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        let n = self.n();
        if u >= n {
            return Err(GraphError::IndexOutOfRange { vertex: u, n });
        }
        if v >= n {
            return Err(GraphError::IndexOutOfRange { vertex: v, n });
        }
        if u == v {
            return Err(GraphError::SelfLoop { vertex: u });
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    /// Adds an edge known to be in range; used by generators.
    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        self.try_add_edge(u, v).expect("generator produced an invalid edge");
    }

    /// Number of vertices.
    #[inline(always)]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    /// Neighbour set of `v`.
    #[inline(always)]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    #[inline(always)]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Minimum degree; 0 for the empty graph.
    pub fn min_degree(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    #[inline(always)]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].contains(v)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    /// All edges as ordered pairs `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n() {
            for v in self.adj[u].iter() {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Complement graph on the same vertex set.
    pub fn complement(&self) -> Graph {
        let n = self.n();
        let mut g = Graph::empty(n);
        for v in 0..n {
            let mut row = self.adj[v].complement();
            row.remove(v);
            g.adj[v] = row;
        }
        g
    }

    pub fn is_complete(&self) -> bool {
        let n = self.n();
        (0..n).all(|v| self.degree(v) == n.saturating_sub(1))
    }

    /// Connected components as vertex sets, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let n = self.n();
        let mut seen = VertexSet::new(n);
        let mut out = Vec::new();
        for start in 0..n {
            if seen.contains(start) {
                continue;
            }
            let comp = self.reachable_within(start, &VertexSet::full(n));
            seen.union_with(&comp);
            out.push(comp);
        }
        out
    }

    /// Vertices reachable from `start` using only vertices in `allowed`.
    ///
    /// `start` must itself be in `allowed`; the result contains it.
    pub fn reachable_within(&self, start: usize, allowed: &VertexSet) -> VertexSet {
        debug_assert!(allowed.contains(start));
        let n = self.n();
        let mut seen = VertexSet::new(n);
        let mut queue = Vec::new();
        seen.insert(start);
        queue.push(start);
        while let Some(v) = queue.pop() {
            let mut next = self.adj[v].intersection(allowed);
            next.difference_with(&seen);
            for w in next.iter() {
                seen.insert(w);
                queue.push(w);
            }
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        let n = self.n();
        n <= 1 || self.reachable_within(0, &VertexSet::full(n)).len() == n
    }

    /// Induced subgraph on `s`, plus the index mapping.
    ///
    /// Kept vertices are renumbered `0..|s|` in ascending order of their old
    /// indices.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<(Graph, IndexMap), GraphError> {
        let n = self.n();
        if s.capacity() != n {
            if let Some(v) = s.iter().find(|&v| v >= n) {
                return Err(GraphError::IndexOutOfRange { vertex: v, n });
            }
        }
        let old_of_new: Vec<usize> = s.iter().collect();
        let mut g = Graph::empty(old_of_new.len());
        for (new_u, &old_u) in old_of_new.iter().enumerate() {
            for old_v in self.adj[old_u].intersection(s).iter() {
                if old_v > old_u {
                    let new_v = old_of_new.binary_search(&old_v).expect("member of s");
                    g.add_edge(new_u, new_v);
                }
            }
        }
        Ok((g, IndexMap { old_of_new }))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n(), self.edges())
    }
}

/// Mapping between the host graph's indices and an induced subgraph's.
#[derive(Clone, Debug)]
pub struct IndexMap {
    old_of_new: Vec<usize>,
}

impl IndexMap {
    /// Old index of the subgraph vertex `new`.
    pub fn old(&self, new: usize) -> usize {
        self.old_of_new[new]
    }

    /// New index of the host vertex `old`, if it was kept.
    pub fn to_new(&self, old: usize) -> Option<usize> {
        self.old_of_new.binary_search(&old).ok()
    }

    pub fn len(&self) -> usize {
        self.old_of_new.len()
    }

    pub fn is_empty(&self) -> bool {
        self.old_of_new.is_empty()
    }
}
