//! Exact ground-truth solvers: Hamiltonian-cycle existence with cycle
//! extraction, exact longest cycle, and cut-based non-Hamiltonicity
//! witnesses.
//!
//! Both searches accept an optional budget. Results carry an `exact` flag:
//! a returned cycle is always genuine, but a `None` produced after the
//! budget ran out proves nothing. Only exact results should feed
//! verification campaigns.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::bitset::VertexSet;
use crate::cycle::OrientedCycle;
use crate::graph::{Graph, GraphError};

/// Outcome of a cycle search.
#[derive(Clone, Debug)]
pub struct CycleSearch {
    /// The cycle found, if any.
    pub cycle: Option<OrientedCycle>,
    /// Whether the answer is proven. `cycle: None, exact: false` means the
    /// budget ran out before the search space was exhausted; for the longest
    /// cycle, `Some` with `exact: false` is the best cycle seen so far.
    pub exact: bool,
}

impl CycleSearch {
    fn exact(cycle: Option<OrientedCycle>) -> Self {
        CycleSearch { cycle, exact: true }
    }
}

/// Searches for a Hamiltonian cycle by depth-first backtracking over partial
/// paths anchored at vertex 0, with three prunes at every node:
///
/// * reachability: the endpoint must reach every unused vertex and the
///   anchor through unused vertices;
/// * degree forcing: every unused vertex needs at least two usable
///   neighbours;
/// * articulation: no remaining vertex may split the rest into parts the
///   path cannot thread through.
///
/// Cyclic symmetry is broken by requiring the second path vertex to be
/// smaller than the last. `budget` bounds the number of search nodes.
pub fn hamiltonian_cycle(g: &Graph, budget: Option<u64>) -> CycleSearch {
    let n = g.n();
    if n < 3 || !g.is_connected() || (0..n).any(|v| g.degree(v) < 2) {
        return CycleSearch::exact(None);
    }
    let mut search = HamSearch {
        g,
        path: Vec::with_capacity(n),
        used: VertexSet::new(n),
        nodes: 0,
        budget: budget.unwrap_or(u64::MAX),
        exhausted: false,
    };
    search.path.push(0);
    search.used.insert(0);
    match search.extend(0) {
        Some(order) => CycleSearch::exact(Some(
            OrientedCycle::new(g, order).expect("search yields a valid cycle"),
        )),
        None => CycleSearch {
            cycle: None,
            exact: !search.exhausted,
        },
    }
}

struct HamSearch<'a> {
    g: &'a Graph,
    path: Vec<usize>,
    used: VertexSet,
    nodes: u64,
    budget: u64,
    exhausted: bool,
}

impl HamSearch<'_> {
    fn extend(&mut self, endpoint: usize) -> Option<Vec<usize>> {
        self.nodes += 1;
        if self.nodes > self.budget {
            self.exhausted = true;
            return None;
        }
        let n = self.g.n();
        if self.path.len() == n {
            // Adjacency to the anchor and the symmetry tie-break were
            // enforced when the last vertex was chosen.
            return Some(self.path.clone());
        }
        if !self.prune_ok(endpoint) {
            return None;
        }
        let last_level = self.path.len() == n - 1;
        let candidates: Vec<usize> = self
            .g
            .neighbors(endpoint)
            .difference(&self.used)
            .iter()
            .collect();
        for w in candidates {
            if last_level && (!self.g.has_edge(w, 0) || w <= self.path[1]) {
                continue;
            }
            self.path.push(w);
            self.used.insert(w);
            if let Some(found) = self.extend(w) {
                return Some(found);
            }
            self.used.remove(w);
            self.path.pop();
            if self.exhausted {
                return None;
            }
        }
        None
    }

    /// Feasibility checks on the remaining graph
    /// `R = unused ∪ {endpoint, anchor}`.
    fn prune_ok(&self, endpoint: usize) -> bool {
        let remaining = self.used.complement();
        let mut r = remaining.clone();
        r.insert(endpoint);
        r.insert(0);

        // Every unused vertex keeps two usable neighbours; the completion
        // assigns it two cycle edges inside R.
        for v in remaining.iter() {
            if self.g.neighbors(v).intersection_len(&r) < 2 {
                return false;
            }
        }
        // The endpoint must reach the anchor and every unused vertex.
        let reach = self.g.reachable_within(endpoint, &r);
        if reach.len() != r.len() {
            return false;
        }
        // Articulation prune: a completion is a Hamiltonian endpoint-anchor
        // path of R. Removing one vertex may split R into at most two parts,
        // and then only with endpoint and anchor separated; removing the
        // endpoint or the anchor must not disconnect the rest.
        if remaining.len() >= 2 {
            for c in r.iter() {
                let mut rest = r.clone();
                rest.remove(c);
                let Some(start) = rest.first() else { continue };
                let reach = self.g.reachable_within(start, &rest);
                if reach.len() == rest.len() {
                    continue;
                }
                if c == endpoint || c == 0 {
                    return false;
                }
                // Count parts and check which one holds endpoint and anchor.
                let mut parts = 0;
                let mut same_side = false;
                let mut left = rest.clone();
                while let Some(s) = left.first() {
                    let comp = self.g.reachable_within(s, &left);
                    parts += 1;
                    if comp.contains(endpoint) && comp.contains(0) {
                        same_side = true;
                    }
                    left.difference_with(&comp);
                }
                if parts >= 3 || same_side {
                    return false;
                }
            }
        }
        true
    }
}

/// Exact longest cycle by dynamic programming over vertex subsets.
///
/// For each anchor `a` (the smallest vertex of the candidate cycle) the
/// search tracks, per subset of larger vertices, which endpoints admit a
/// path from `a` through exactly that subset. Intended for `n <= ~16`;
/// `budget` caps the number of DP states (default `2^22`).
pub fn longest_cycle(g: &Graph, budget: Option<u64>) -> CycleSearch {
    const DEFAULT_STATE_BUDGET: u64 = 1 << 22;
    let n = g.n();
    if n < 3 {
        return CycleSearch::exact(None);
    }
    let budget = budget.unwrap_or(DEFAULT_STATE_BUDGET);
    let mut states_used = 0u64;
    let mut truncated = false;
    let mut best: Option<Vec<usize>> = None;
    let mut best_len = 2usize; // cycles have length >= 3

    for anchor in 0..n {
        let window: Vec<usize> = ((anchor + 1)..n).collect();
        let w = window.len();
        if w < best_len {
            break; // even a full window cannot beat the best
        }
        if w >= 63 || (1u64 << w) > budget.saturating_sub(states_used) {
            truncated = true;
            continue; // later anchors have smaller windows and may still fit
        }
        states_used += 1 << w;

        // Window-relative adjacency bitmasks.
        let offset = anchor + 1;
        let adj_of = |v: usize| -> u64 {
            let mut m = 0u64;
            for u in g.neighbors(v).iter() {
                if u >= offset {
                    m |= 1 << (u - offset);
                }
            }
            m
        };
        let adj_win: Vec<u64> = window.iter().map(|&v| adj_of(v)).collect();
        let adj_anchor = adj_of(anchor);

        let mut dp = vec![0u64; 1 << w];
        let mut seed = adj_anchor;
        while seed != 0 {
            let i = seed.trailing_zeros() as usize;
            seed &= seed - 1;
            dp[1 << i] = 1 << i;
        }

        for mask in 1usize..(1 << w) {
            let ends = dp[mask];
            if ends == 0 {
                continue;
            }
            let size = mask.count_ones() as usize;
            if size >= 2 {
                let closable = ends & adj_anchor;
                if closable != 0 && size + 1 > best_len {
                    best_len = size + 1;
                    let end = closable.trailing_zeros() as usize;
                    best = Some(reconstruct(anchor, offset, &adj_win, &dp, mask, end));
                }
            }
            // Expanding beyond the best is still useful; longer paths may
            // close later. Expand unconditionally.
            let mut e = ends;
            while e != 0 {
                let i = e.trailing_zeros() as usize;
                e &= e - 1;
                let mut nbrs = adj_win[i] & !(mask as u64);
                while nbrs != 0 {
                    let j = nbrs.trailing_zeros() as usize;
                    nbrs &= nbrs - 1;
                    dp[mask | (1 << j)] |= 1 << j;
                }
            }
        }
        if best_len == n {
            break; // cannot do better than Hamiltonian
        }
    }

    let cycle = best.map(|order| {
        OrientedCycle::new(g, order).expect("DP reconstruction yields a valid cycle")
    });
    let exact = !truncated || cycle.as_ref().map(|c| c.len()) == Some(n);
    CycleSearch { cycle, exact }
}

/// Walks the DP table backwards from `(mask, end)` to the anchor.
fn reconstruct(
    anchor: usize,
    offset: usize,
    adj_win: &[u64],
    dp: &[u64],
    mut mask: usize,
    mut end: usize,
) -> Vec<usize> {
    let mut rev = vec![offset + end];
    while mask.count_ones() > 1 {
        let prev_mask = mask & !(1 << end);
        let preds = dp[prev_mask] & adj_win[end];
        debug_assert_ne!(preds, 0, "DP invariant: every endpoint has a predecessor");
        let p = preds.trailing_zeros() as usize;
        mask = prev_mask;
        end = p;
        rev.push(offset + end);
    }
    rev.push(anchor);
    rev.reverse();
    rev
}

/// A vertex cut together with the component count it produces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CutWitness {
    pub cut: VertexSet,
    pub component_count: usize,
}

/// Verdict of a cut-witness check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CutVerdict {
    /// Deleting the cut leaves more components than a Hamiltonian cycle
    /// could thread: the graph is certainly non-Hamiltonian.
    NonHamiltonian,
    Inconclusive,
}

impl fmt::Display for CutVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CutVerdict::NonHamiltonian => write!(f, "non-hamiltonian"),
            CutVerdict::Inconclusive => write!(f, "inconclusive"),
        }
    }
}

/// Counts the components of `G - S`. A Hamiltonian cycle broken at the `|S|`
/// deleted vertices falls apart into at most `max(|S|, 1)` arcs, so a larger
/// component count certifies non-Hamiltonicity. (The `max` keeps the empty
/// cut sound on connected graphs while still flagging disconnected ones.)
pub fn cut_witness_check(g: &Graph, s: &VertexSet) -> Result<(CutWitness, CutVerdict), GraphError> {
    let n = g.n();
    if let Some(v) = s.iter().find(|&v| v >= n) {
        return Err(GraphError::IndexOutOfRange { vertex: v, n });
    }
    let keep = VertexSet::from_members(n, (0..n).filter(|&v| !s.contains(v)));
    let (rest, _) = g.induced_subgraph(&keep)?;
    let component_count = rest.components().len();
    let verdict = if component_count > s.len().max(1) {
        CutVerdict::NonHamiltonian
    } else {
        CutVerdict::Inconclusive
    };
    Ok((
        CutWitness {
            cut: VertexSet::from_members(n, s.iter()),
            component_count,
        },
        verdict,
    ))
}
