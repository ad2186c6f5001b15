//! Cycles with a fixed orientation and arc-interval queries.

use alloc::vec::Vec;
use core::fmt;

use crate::bitset::VertexSet;
use crate::graph::Graph;

/// Why a vertex sequence fails to be a cycle of the host graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CycleError {
    TooShort { len: usize },
    OutOfRange { vertex: usize, n: usize },
    Repeated { vertex: usize },
    NotAdjacent { u: usize, v: usize },
}

impl fmt::Display for CycleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CycleError::TooShort { len } => write!(f, "a cycle needs at least 3 vertices, got {len}"),
            CycleError::OutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} out of range for order {n}")
            }
            CycleError::Repeated { vertex } => write!(f, "vertex {vertex} repeats"),
            CycleError::NotAdjacent { u, v } => {
                write!(f, "consecutive cycle vertices {u} and {v} are not adjacent")
            }
        }
    }
}

impl core::error::Error for CycleError {}

/// A cycle of a host graph with the orientation fixed by its vertex order.
///
/// Supports successor/predecessor queries and the four arc intervals between
/// two cycle vertices (endpoints included or excluded on either side).
#[derive(Clone, PartialEq, Eq)]
pub struct OrientedCycle {
    order: Vec<usize>,
    /// position[v] = index of v in `order`, or usize::MAX.
    position: Vec<usize>,
}

impl OrientedCycle {
    /// Validates `order` as a cycle of `g` (length >= 3, distinct vertices,
    /// consecutive adjacency including the wrap-around edge).
    pub fn new(g: &Graph, order: Vec<usize>) -> Result<Self, CycleError> {
        if order.len() < 3 {
            return Err(CycleError::TooShort { len: order.len() });
        }
        let n = g.n();
        let mut position = alloc::vec![usize::MAX; n];
        for (i, &v) in order.iter().enumerate() {
            if v >= n {
                return Err(CycleError::OutOfRange { vertex: v, n });
            }
            if position[v] != usize::MAX {
                return Err(CycleError::Repeated { vertex: v });
            }
            position[v] = i;
        }
        for i in 0..order.len() {
            let (u, v) = (order[i], order[(i + 1) % order.len()]);
            if !g.has_edge(u, v) {
                return Err(CycleError::NotAdjacent { u, v });
            }
        }
        Ok(OrientedCycle { order, position })
    }

    #[inline(always)]
    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        false // a valid cycle has at least 3 vertices
    }

    /// The vertices in orientation order, starting at the anchor.
    pub fn order(&self) -> &[usize] {
        &self.order
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < self.position.len() && self.position[v] != usize::MAX
    }

    /// Position of `v` along the orientation (anchor = 0).
    pub fn position(&self, v: usize) -> Option<usize> {
        if self.contains(v) {
            Some(self.position[v])
        } else {
            None
        }
    }

    pub fn vertex_at(&self, pos: usize) -> usize {
        self.order[pos % self.len()]
    }

    /// Successor of `v` along the orientation.
    pub fn successor(&self, v: usize) -> usize {
        let p = self.position[v];
        debug_assert_ne!(p, usize::MAX);
        self.order[(p + 1) % self.len()]
    }

    /// Predecessor of `v` along the orientation.
    pub fn predecessor(&self, v: usize) -> usize {
        let p = self.position[v];
        debug_assert_ne!(p, usize::MAX);
        self.order[(p + self.len() - 1) % self.len()]
    }

    /// The vertex set of the cycle, with the host graph's capacity.
    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::from_members(self.position.len(), self.order.iter().copied())
    }

    /// The arc from `x` to `y` along the orientation.
    ///
    /// `include_x` / `include_y` select among the four interval kinds. For
    /// `x == y`: the closed arc is the trivial single-vertex path `[x]`, and
    /// the open arc is the whole cycle except `x`.
    pub fn arc(&self, x: usize, y: usize, include_x: bool, include_y: bool) -> Vec<usize> {
        debug_assert!(self.contains(x) && self.contains(y));
        let len = self.len();
        if x == y {
            if include_x && include_y {
                return alloc::vec![x];
            }
            if !include_x && !include_y {
                let px = self.position[x];
                return (1..len).map(|d| self.order[(px + d) % len]).collect();
            }
            // Half-open arcs with equal endpoints traverse the full cycle.
            let px = self.position[x];
            return (0..len)
                .map(|d| self.order[(px + if include_x { 0 } else { 1 } + d) % len])
                .collect();
        }
        let mut out = Vec::new();
        let mut p = self.position[x];
        if !include_x {
            p = (p + 1) % len;
        }
        loop {
            let v = self.order[p];
            if v == y {
                if include_y {
                    out.push(v);
                }
                return out;
            }
            out.push(v);
            p = (p + 1) % len;
        }
    }

    /// Consecutive pairs of `vertices` as path edges, ascending-normalised.
    pub fn path_edges(vertices: &[usize]) -> Vec<(usize, usize)> {
        vertices
            .windows(2)
            .map(|w| (w[0].min(w[1]), w[0].max(w[1])))
            .collect()
    }

    /// The cycle's own edges, ascending-normalised.
    pub fn cycle_edges(&self) -> Vec<(usize, usize)> {
        (0..self.len())
            .map(|i| {
                let (u, v) = (self.order[i], self.order[(i + 1) % self.len()]);
                (u.min(v), u.max(v))
            })
            .collect()
    }

    /// Rotates so the smallest vertex leads, picking the lexicographically
    /// smaller of the two directions. Useful for comparing cycles as sets.
    pub fn canonical_order(&self) -> Vec<usize> {
        let len = self.len();
        let min_pos = (0..len).min_by_key(|&i| self.order[i]).expect("nonempty");
        let forward: Vec<usize> = (0..len).map(|d| self.order[(min_pos + d) % len]).collect();
        let backward: Vec<usize> = (0..len)
            .map(|d| self.order[(min_pos + len - d % len) % len])
            .collect();
        forward.min(backward)
    }
}

impl fmt::Debug for OrientedCycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "OrientedCycle({:?})", self.order)
    }
}
