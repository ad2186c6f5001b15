//! Exact graph invariants: connectivity, independence number, and minimum
//! degree sums over independent sets.
//!
//! All results are exact integers; +∞ for degree sums is the distinguished
//! [`DegreeSum::Infinite`] sentinel, which compares above every finite value
//! and supports no arithmetic.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::bitset::VertexSet;
use crate::graph::Graph;

/// A degree sum that may be +∞ (when no independent set of the requested
/// size exists).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum DegreeSum {
    Finite(u64),
    Infinite,
}

impl DegreeSum {
    pub fn is_finite(&self) -> bool {
        matches!(self, DegreeSum::Finite(_))
    }

    pub fn finite(&self) -> Option<u64> {
        match self {
            DegreeSum::Finite(v) => Some(*v),
            DegreeSum::Infinite => None,
        }
    }

    /// `self >= bound`, with +∞ satisfying every bound.
    pub fn meets(&self, bound: i64) -> bool {
        match self {
            DegreeSum::Infinite => true,
            DegreeSum::Finite(v) => i64::try_from(*v).map(|v| v >= bound).unwrap_or(true),
        }
    }

    /// `self > bound`, with +∞ exceeding every bound.
    pub fn exceeds(&self, bound: i64) -> bool {
        match self {
            DegreeSum::Infinite => true,
            DegreeSum::Finite(v) => i64::try_from(*v).map(|v| v > bound).unwrap_or(true),
        }
    }

    /// `self - bound` when finite.
    pub fn margin(&self, bound: i64) -> Option<i64> {
        self.finite().map(|v| v as i64 - bound)
    }
}

impl fmt::Display for DegreeSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DegreeSum::Finite(v) => write!(f, "{v}"),
            DegreeSum::Infinite => write!(f, "inf"),
        }
    }
}

/// Errors for invariant queries with preconditions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InvariantError {
    /// `local_connectivity` needs two distinct vertices.
    SameVertex { vertex: usize },
    /// A vertex argument is out of range.
    IndexOutOfRange { vertex: usize, n: usize },
    /// Degree-sum sizes must be >= 1 (and condition parameters likewise).
    InvalidK { k: usize },
}

impl fmt::Display for InvariantError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InvariantError::SameVertex { vertex } => {
                write!(f, "local connectivity needs distinct vertices, got {vertex} twice")
            }
            InvariantError::IndexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} out of range for order {n}")
            }
            InvariantError::InvalidK { k } => write!(f, "k must be at least 1, got {k}"),
        }
    }
}

impl core::error::Error for InvariantError {}

/// Bundle of the invariants used by the condition checkers.
///
/// Maintains: `kappa <= min_degree <= n-1` (for `n >= 2`), `alpha >= 1` for
/// `n >= 1`, and `sigma[k]` is infinite exactly when `alpha < k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantProfile {
    pub n: usize,
    pub kappa: usize,
    pub alpha: usize,
    pub min_degree: usize,
    pub sigma: BTreeMap<usize, DegreeSum>,
}

/// Computes the profile for the requested degree-sum sizes.
pub fn profile(g: &Graph, ks: &[usize]) -> Result<InvariantProfile, InvariantError> {
    let sigma = sigma_many(g, ks)?
        .into_iter()
        .map(|(k, r)| (k, r.value))
        .collect();
    let p = InvariantProfile {
        n: g.n(),
        kappa: connectivity(g),
        alpha: independence_number(g),
        min_degree: g.min_degree(),
        sigma,
    };
    if p.n >= 2 {
        debug_assert!(p.kappa <= p.min_degree && p.min_degree < p.n);
    }
    debug_assert!(p.n == 0 || p.alpha >= 1);
    for (&k, &s) in &p.sigma {
        debug_assert_eq!(s == DegreeSum::Infinite, p.alpha < k);
    }
    Ok(p)
}

// ---------------------------------------------------------------------------
// Connectivity via unit-vertex-capacity max-flow
// ---------------------------------------------------------------------------

/// Flow network for internally-disjoint path counting. Every vertex `v` is
/// split into `in(v) = 2v` and `out(v) = 2v+1` joined by a capacity-1 arc;
/// each graph edge contributes capacity-1 arcs in both directions.
struct SplitFlow {
    heads: Vec<Vec<usize>>,
    to: Vec<usize>,
    residual: Vec<u32>,
}

impl SplitFlow {
    fn new(g: &Graph, s: usize, t: usize) -> Self {
        let n = g.n();
        let mut net = SplitFlow {
            heads: vec![Vec::new(); 2 * n],
            to: Vec::new(),
            residual: Vec::new(),
        };
        for v in 0..n {
            if v != s && v != t {
                net.arc(2 * v, 2 * v + 1, 1);
            }
        }
        for (u, v) in g.edges() {
            net.arc(2 * u + 1, 2 * v, 1);
            net.arc(2 * v + 1, 2 * u, 1);
        }
        net
    }

    fn arc(&mut self, from: usize, to: usize, cap: u32) {
        let id = self.to.len();
        self.heads[from].push(id);
        self.to.push(to);
        self.residual.push(cap);
        self.heads[to].push(id + 1);
        self.to.push(from);
        self.residual.push(0);
    }

    /// Edmonds–Karp; flow values here are tiny so BFS count is bounded by n.
    fn max_flow(&mut self, source: usize, sink: usize) -> usize {
        let mut total = 0;
        let mut parent_arc = vec![usize::MAX; self.heads.len()];
        loop {
            for p in parent_arc.iter_mut() {
                *p = usize::MAX;
            }
            let mut queue = alloc::collections::VecDeque::new();
            queue.push_back(source);
            parent_arc[source] = usize::MAX - 1;
            let mut reached = false;
            'bfs: while let Some(v) = queue.pop_front() {
                for &a in &self.heads[v] {
                    let w = self.to[a];
                    if self.residual[a] > 0 && parent_arc[w] == usize::MAX {
                        parent_arc[w] = a;
                        if w == sink {
                            reached = true;
                            break 'bfs;
                        }
                        queue.push_back(w);
                    }
                }
            }
            if !reached {
                return total;
            }
            let mut v = sink;
            while v != source {
                let a = parent_arc[v];
                self.residual[a] -= 1;
                self.residual[a ^ 1] += 1;
                v = self.to[a ^ 1];
            }
            total += 1;
        }
    }
}

/// Maximum number of internally-disjoint `x`–`y` paths.
pub fn local_connectivity(g: &Graph, x: usize, y: usize) -> Result<usize, InvariantError> {
    let n = g.n();
    for v in [x, y] {
        if v >= n {
            return Err(InvariantError::IndexOutOfRange { vertex: v, n });
        }
    }
    if x == y {
        return Err(InvariantError::SameVertex { vertex: x });
    }
    let mut net = SplitFlow::new(g, x, y);
    Ok(net.max_flow(2 * x + 1, 2 * y))
}

/// Vertex connectivity, with `kappa(K_n) = n - 1` and 0 for disconnected or
/// single-vertex graphs.
///
/// Uses the standard reduction: fix a vertex `v` of minimum degree, take the
/// minimum of the max-flows from `v` to each of its non-neighbours and
/// between each nonadjacent pair of its neighbours.
pub fn connectivity(g: &Graph) -> usize {
    let n = g.n();
    if n <= 1 {
        return 0;
    }
    if g.is_complete() {
        return n - 1;
    }
    if !g.is_connected() {
        return 0;
    }
    let v = (0..n).min_by_key(|&v| (g.degree(v), v)).expect("n >= 2");
    let mut best = n - 1;
    for u in 0..n {
        if u != v && !g.has_edge(v, u) {
            best = best.min(local_connectivity(g, v, u).expect("distinct"));
        }
    }
    let nbrs: Vec<usize> = g.neighbors(v).iter().collect();
    for (i, &a) in nbrs.iter().enumerate() {
        for &b in &nbrs[i + 1..] {
            if !g.has_edge(a, b) {
                best = best.min(local_connectivity(g, a, b).expect("distinct"));
            }
        }
    }
    best
}

// ---------------------------------------------------------------------------
// Independence number via branch-and-bound on the complement clique problem
// ---------------------------------------------------------------------------

struct CliqueSearch<'a> {
    rows: &'a [VertexSet],
    best: Vec<usize>,
    current: Vec<usize>,
}

impl CliqueSearch<'_> {
    /// Greedy colouring of `cand`; the colour count bounds the clique size.
    fn color_bound(&self, cand: &VertexSet) -> usize {
        let mut uncolored = cand.clone();
        let mut colors = 0;
        while !uncolored.is_empty() {
            colors += 1;
            let mut available = uncolored.clone();
            while let Some(v) = available.first() {
                available.remove(v);
                uncolored.remove(v);
                available.difference_with(&self.rows[v]);
            }
        }
        colors
    }

    fn expand(&mut self, cand: &VertexSet) {
        if cand.is_empty() {
            if self.current.len() > self.best.len() {
                self.best = self.current.clone();
            }
            return;
        }
        if self.current.len() + self.color_bound(cand) <= self.best.len() {
            return;
        }
        // Branch on the highest-degree undecided vertex (ties: lowest index).
        let pivot = cand
            .iter()
            .max_by_key(|&v| (self.rows[v].intersection_len(cand), usize::MAX - v))
            .expect("cand nonempty");
        let mut with = cand.intersection(&self.rows[pivot]);
        self.current.push(pivot);
        self.expand(&with);
        self.current.pop();
        with.clone_from(cand);
        with.remove(pivot);
        self.expand(&with);
    }
}

/// A maximum independent set (exact), found as a maximum clique of the
/// complement.
pub fn max_independent_set(g: &Graph) -> VertexSet {
    let n = g.n();
    if n == 0 {
        return VertexSet::new(0);
    }
    let comp = g.complement();
    let rows: Vec<VertexSet> = (0..n).map(|v| comp.neighbors(v).clone()).collect();
    let mut search = CliqueSearch {
        rows: &rows,
        best: Vec::new(),
        current: Vec::new(),
    };
    search.expand(&VertexSet::full(n));
    VertexSet::from_members(n, search.best)
}

/// The independence number α(G); 0 for the empty graph.
pub fn independence_number(g: &Graph) -> usize {
    max_independent_set(g).len()
}

// ---------------------------------------------------------------------------
// Degree sums over independent sets
// ---------------------------------------------------------------------------

/// Calls `f` for every maximal independent set, as a sorted vertex slice.
///
/// Bron–Kerbosch with pivoting on the complement graph; maximal cliques of
/// the complement are exactly the maximal independent sets.
pub fn for_each_maximal_independent_set<F: FnMut(&[usize])>(g: &Graph, mut f: F) {
    let n = g.n();
    if n == 0 {
        return;
    }
    let comp = g.complement();
    let rows: Vec<VertexSet> = (0..n).map(|v| comp.neighbors(v).clone()).collect();
    let mut current = Vec::new();
    bron_kerbosch(
        &rows,
        &mut current,
        VertexSet::full(n),
        VertexSet::new(n),
        &mut f,
    );
}

fn bron_kerbosch<F: FnMut(&[usize])>(
    rows: &[VertexSet],
    current: &mut Vec<usize>,
    mut p: VertexSet,
    mut x: VertexSet,
    f: &mut F,
) {
    if p.is_empty() && x.is_empty() {
        f(current);
        return;
    }
    let pivot = p
        .union(&x)
        .iter()
        .max_by_key(|&v| (rows[v].intersection_len(&p), usize::MAX - v))
        .expect("p or x nonempty");
    let candidates = p.difference(&rows[pivot]);
    for v in candidates.iter() {
        current.push(v);
        bron_kerbosch(
            rows,
            current,
            p.intersection(&rows[v]),
            x.intersection(&rows[v]),
            f,
        );
        current.pop();
        p.remove(v);
        x.insert(v);
    }
}

/// σ_k with the independent set achieving it, when finite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SigmaResult {
    pub value: DegreeSum,
    /// A minimizing independent set of size exactly `k`, ascending.
    pub witness: Option<Vec<usize>>,
}

/// σ_k(G): the minimum total degree over independent sets of size `k`, or
/// +∞ when α(G) < k.
///
/// Reduction: every independent `k`-set extends to a maximal independent
/// set, and restricting a maximal set to its `k` smallest degrees only
/// lowers the sum, so it suffices to scan maximal independent sets of size
/// at least `k`.
pub fn sigma_with_witness(g: &Graph, k: usize) -> Result<SigmaResult, InvariantError> {
    let mut many = sigma_many(g, &[k])?;
    Ok(many.remove(&k).expect("requested size present"))
}

/// σ_k for several sizes from a single maximal-independent-set sweep.
pub fn sigma_many(
    g: &Graph,
    ks: &[usize],
) -> Result<BTreeMap<usize, SigmaResult>, InvariantError> {
    if let Some(&k) = ks.iter().find(|&&k| k == 0) {
        return Err(InvariantError::InvalidK { k });
    }
    let ks: Vec<usize> = {
        let mut v = ks.to_vec();
        v.sort_unstable();
        v.dedup();
        v
    };
    let mut best: BTreeMap<usize, (u64, Vec<usize>)> = BTreeMap::new();
    for_each_maximal_independent_set(g, |m| {
        let mut by_degree: Vec<usize> = m.to_vec();
        by_degree.sort_by_key(|&v| (g.degree(v), v));
        let mut prefix = 0u64;
        let mut prefix_sums = Vec::with_capacity(by_degree.len());
        for &v in &by_degree {
            prefix += g.degree(v) as u64;
            prefix_sums.push(prefix);
        }
        for &k in &ks {
            if m.len() < k {
                continue;
            }
            let total = prefix_sums[k - 1];
            let mut chosen: Vec<usize> = by_degree[..k].to_vec();
            chosen.sort_unstable();
            let replace = match best.get(&k) {
                None => true,
                Some((value, witness)) => {
                    total < *value || (total == *value && chosen < *witness)
                }
            };
            if replace {
                best.insert(k, (total, chosen));
            }
        }
    });
    Ok(ks
        .iter()
        .map(|&k| {
            let r = match best.remove(&k) {
                Some((value, witness)) => SigmaResult {
                    value: DegreeSum::Finite(value),
                    witness: Some(witness),
                },
                None => SigmaResult {
                    value: DegreeSum::Infinite,
                    witness: None,
                },
            };
            (k, r)
        })
        .collect())
}

/// σ_k(G) without the witness.
pub fn sigma(g: &Graph, k: usize) -> Result<DegreeSum, InvariantError> {
    sigma_with_witness(g, k).map(|r| r.value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn connectivity_of_classics() {
        assert_eq!(connectivity(&families::complete(5)), 4);
        assert_eq!(connectivity(&families::cycle(6).unwrap()), 2);
        assert_eq!(connectivity(&families::petersen()), 3);
        assert_eq!(connectivity(&families::complete(1)), 0);
        assert_eq!(connectivity(&Graph::empty(4)), 0);
        assert_eq!(connectivity(&Graph::empty(0)), 0);
        assert_eq!(connectivity(&families::complete_bipartite(1, 3).unwrap()), 1);
    }

    #[test]
    fn petersen_has_no_two_cut_but_a_three_cut() {
        // Independent confirmation of kappa(Petersen) = 3 by enumeration.
        let g = families::petersen();
        let full = VertexSet::full(10);
        for a in 0..10 {
            for b in a + 1..10 {
                let mut allowed = full.clone();
                allowed.remove(a);
                allowed.remove(b);
                let start = allowed.first().unwrap();
                let reach = g.reachable_within(start, &allowed);
                assert_eq!(reach.len(), 8, "removing {{{a},{b}}} must not disconnect");
            }
        }
        // Removing a vertex's whole neighbourhood isolates it.
        let mut allowed = full.clone();
        for v in g.neighbors(0).iter() {
            allowed.remove(v);
        }
        assert_eq!(g.reachable_within(0, &allowed).len(), 1);
    }

    #[test]
    fn local_connectivity_examples() {
        let k4 = families::complete(4);
        assert_eq!(local_connectivity(&k4, 0, 3).unwrap(), 3);
        let p3 = families::path(3).unwrap();
        assert_eq!(local_connectivity(&p3, 0, 2).unwrap(), 1);
        let c6 = families::cycle(6).unwrap();
        assert_eq!(local_connectivity(&c6, 0, 3).unwrap(), 2);
        assert_eq!(
            local_connectivity(&c6, 1, 1),
            Err(InvariantError::SameVertex { vertex: 1 })
        );
    }

    #[test]
    fn independence_number_of_classics() {
        assert_eq!(independence_number(&families::cycle(5).unwrap()), 2);
        assert_eq!(independence_number(&Graph::empty(4)), 4);
        assert_eq!(independence_number(&families::petersen()), 4);
        assert_eq!(independence_number(&Graph::empty(0)), 0);
        let witness = max_independent_set(&families::petersen());
        for u in witness.iter() {
            for v in witness.iter() {
                assert!(u == v || !families::petersen().has_edge(u, v));
            }
        }
    }

    #[test]
    fn sigma_examples() {
        let c6 = families::cycle(6).unwrap();
        assert_eq!(sigma(&c6, 2).unwrap(), DegreeSum::Finite(4));
        let k4 = families::complete(4);
        assert_eq!(sigma(&k4, 2).unwrap(), DegreeSum::Infinite);
        assert_eq!(sigma(&k4, 1).unwrap(), DegreeSum::Finite(3));
        assert_eq!(sigma(&k4, 0), Err(InvariantError::InvalidK { k: 0 }));
        let r = sigma_with_witness(&c6, 2).unwrap();
        let w = r.witness.unwrap();
        assert_eq!(w.len(), 2);
        assert!(!c6.has_edge(w[0], w[1]));
    }

    #[test]
    fn profile_of_c5_and_k1() {
        let p = profile(&families::cycle(5).unwrap(), &[2]).unwrap();
        assert_eq!(
            (p.n, p.kappa, p.alpha, p.min_degree),
            (5, 2, 2, 2)
        );
        assert_eq!(p.sigma[&2], DegreeSum::Finite(4));

        let p = profile(&families::complete(1), &[]).unwrap();
        assert_eq!((p.n, p.kappa, p.alpha, p.min_degree), (1, 0, 1, 0));
    }

    #[test]
    fn degree_sum_ordering_and_display() {
        use alloc::string::ToString;
        assert!(DegreeSum::Infinite > DegreeSum::Finite(u64::MAX));
        assert!(DegreeSum::Infinite.meets(i64::MAX));
        assert!(DegreeSum::Finite(5).meets(5));
        assert!(!DegreeSum::Finite(5).exceeds(5));
        assert_eq!(DegreeSum::Finite(5).margin(7), Some(-2));
        assert_eq!(DegreeSum::Infinite.margin(7), None);
        assert_eq!(DegreeSum::Infinite.to_string(), "inf");
    }
}
