//! The insertible-vertex machinery for extending cycles.
//!
//! Terminology used throughout this module, for a host graph G:
//!
//! * `X(H)`: vertices outside a subgraph H adjacent to both ends of some
//!   H-edge (candidate insertion points).
//! * `I(x; H)`: the H-edges into which x can be inserted.
//! * `Y(H)`: vertices outside H with at least α(G) neighbours inside H.
//! * For a cycle C, a component H0 of G−C and an attachment
//!   u ∈ N_C(H0) with successor attachment u′: a vertex v strictly inside
//!   the arc C(u,u′) is *insertible* if `v ∈ X(C[u′,u]) ∪ Y(C(v,u])`, and
//!   non-insertible otherwise. On a longest cycle every such arc contains a
//!   non-insertible vertex, which is what the frame extractor harvests.
//!
//! α(G) is computed once by the caller and passed in; the Y-sets depend on
//! it globally and recomputing it per call would dominate the runtime.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::bitset::VertexSet;
use crate::cycle::OrientedCycle;
use crate::graph::Graph;

/// Errors of the insertion machinery.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InsertionError {
    /// The queried vertex belongs to the subgraph it must avoid.
    VertexInsideSubgraph { vertex: usize },
    /// A vertex expected on the cycle is not on it.
    NotOnCycle { vertex: usize },
    /// `u` is not an attachment of the component.
    NotAnAttachment { vertex: usize },
    /// `v` does not lie strictly inside the arc C(u,u′).
    VertexNotOnArc { vertex: usize, u: usize, u_prime: usize },
    /// Every vertex of the arc C(u,u′) is insertible; the cycle is not a
    /// longest cycle, and a longer one is constructible.
    AllInsertible { u: usize },
    /// The component handed to the frame builder is empty.
    EmptyComponent,
    /// A path system is malformed (overlaps, broken adjacency, ...).
    InvalidPathSystem { reason: String },
    /// Merge precondition: some path vertex is neither an insertion
    /// candidate of the base cycle nor Y-covered by its suffix and the base.
    PreconditionIFailed { vertex: usize },
    /// Merge precondition: two vertices on different paths share a base
    /// edge they would both insert into.
    PreconditionIIFailed { x: usize, y: usize, edge: (usize, usize) },
    /// The merge could not make progress; with verified preconditions this
    /// signals an implementation bug, not a property of the input.
    MergeStuck { reason: &'static str },
    /// The crossing scan is an exactness oracle and refuses hosts larger
    /// than its limit rather than sampling.
    HostTooLarge { n: usize, limit: usize },
}

impl fmt::Display for InsertionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InsertionError::VertexInsideSubgraph { vertex } => {
                write!(f, "vertex {vertex} lies inside the subgraph")
            }
            InsertionError::NotOnCycle { vertex } => write!(f, "vertex {vertex} is not on the cycle"),
            InsertionError::NotAnAttachment { vertex } => {
                write!(f, "vertex {vertex} is not an attachment of the component")
            }
            InsertionError::VertexNotOnArc { vertex, u, u_prime } => {
                write!(f, "vertex {vertex} is not strictly inside the arc ({u},{u_prime})")
            }
            InsertionError::AllInsertible { u } => {
                write!(f, "every vertex after attachment {u} is insertible; the cycle is not longest")
            }
            InsertionError::EmptyComponent => write!(f, "component is empty"),
            InsertionError::InvalidPathSystem { reason } => {
                write!(f, "invalid path system: {reason}")
            }
            InsertionError::PreconditionIFailed { vertex } => {
                write!(f, "path vertex {vertex} is neither insertible into the base nor Y-covered")
            }
            InsertionError::PreconditionIIFailed { x, y, edge } => {
                write!(
                    f,
                    "vertices {x} and {y} on different paths share insertion edge ({},{})",
                    edge.0, edge.1
                )
            }
            InsertionError::MergeStuck { reason } => write!(f, "merge stuck: {reason}"),
            InsertionError::HostTooLarge { n, limit } => {
                write!(f, "crossing scan limited to hosts of order {limit}, got {n}")
            }
        }
    }
}

impl core::error::Error for InsertionError {}

// ---------------------------------------------------------------------------
// Subgraph references and the X / I / Y sets
// ---------------------------------------------------------------------------

/// A subgraph given by its vertices and a subset of the host edges inside
/// them (for paths and cycles: exactly the path/cycle edges).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubgraphRef {
    pub vertices: VertexSet,
    /// Edges as `(min, max)` pairs.
    pub edges: Vec<(usize, usize)>,
}

impl SubgraphRef {
    /// The subgraph of a path, with its consecutive edges.
    pub fn from_path(n: usize, path: &[usize]) -> SubgraphRef {
        SubgraphRef {
            vertices: VertexSet::from_members(n, path.iter().copied()),
            edges: OrientedCycle::path_edges(path),
        }
    }

    /// The subgraph of a whole cycle, with its cycle edges.
    pub fn from_cycle(c: &OrientedCycle) -> SubgraphRef {
        SubgraphRef {
            vertices: c.vertex_set(),
            edges: c.cycle_edges(),
        }
    }
}

/// `X(H)`: vertices outside H adjacent to both ends of some H-edge.
pub fn x_set(g: &Graph, h: &SubgraphRef) -> VertexSet {
    let mut out = VertexSet::new(g.n());
    for &(a, b) in &h.edges {
        let mut both = g.neighbors(a).intersection(g.neighbors(b));
        both.difference_with(&h.vertices);
        out.union_with(&both);
    }
    out
}

/// `I(x; H)`: the H-edges whose both ends are adjacent to `x`.
pub fn i_edges(
    g: &Graph,
    x: usize,
    h: &SubgraphRef,
) -> Result<Vec<(usize, usize)>, InsertionError> {
    if h.vertices.contains(x) {
        return Err(InsertionError::VertexInsideSubgraph { vertex: x });
    }
    Ok(h.edges
        .iter()
        .copied()
        .filter(|&(a, b)| g.has_edge(x, a) && g.has_edge(x, b))
        .collect())
}

/// `Y(H)`: vertices outside H with at least `alpha` neighbours in H.
/// Membership depends only on H's vertex set.
pub fn y_set(g: &Graph, h: &SubgraphRef, alpha: usize) -> VertexSet {
    let mut out = VertexSet::new(g.n());
    for v in h.vertices.complement().iter() {
        if g.neighbors(v).intersection_len(&h.vertices) >= alpha {
            out.insert(v);
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Insertible vertices and frames
// ---------------------------------------------------------------------------

/// Attachments of `h0` on the cycle, in orientation order from the anchor.
pub fn cycle_attachments(g: &Graph, c: &OrientedCycle, h0: &VertexSet) -> Vec<usize> {
    let mut hit = VertexSet::new(g.n());
    for v in h0.iter() {
        hit.union_with(g.neighbors(v));
    }
    let mut out: Vec<usize> = c.order().iter().copied().filter(|&v| hit.contains(v)).collect();
    out.sort_by_key(|&v| c.position(v).expect("cycle vertex"));
    out
}

/// Decides insertibility of `v` inside the arc C(u,u′).
///
/// With a single attachment (`u == u_prime`) the spanned arc degenerates to
/// the trivial one-vertex path at `u`, so only the Y-clause can apply.
pub fn is_insertible(
    g: &Graph,
    c: &OrientedCycle,
    u: usize,
    u_prime: usize,
    v: usize,
    alpha: usize,
) -> Result<bool, InsertionError> {
    for w in [u, u_prime, v] {
        if !c.contains(w) {
            return Err(InsertionError::NotOnCycle { vertex: w });
        }
    }
    let arc_open = c.arc(u, u_prime, false, false);
    if !arc_open.contains(&v) {
        return Err(InsertionError::VertexNotOnArc { vertex: v, u, u_prime });
    }
    // X-clause on the complementary closed arc C[u′,u] with its path edges.
    let spine = c.arc(u_prime, u, true, true);
    let spine_ref = SubgraphRef::from_path(g.n(), &spine);
    if x_set(g, &spine_ref).contains(v) {
        return Ok(true);
    }
    // Y-clause on the vertex set of C(v,u].
    let tail = c.arc(v, u, false, true);
    let tail_set = VertexSet::from_members(g.n(), tail.iter().copied());
    Ok(g.neighbors(v).intersection_len(&tail_set) >= alpha)
}

/// First non-insertible vertex along C(u,u′) for the attachment `u` of the
/// component `h0`; errors with [`InsertionError::AllInsertible`] when none
/// exists (impossible when the cycle is longest).
pub fn first_non_insertible(
    g: &Graph,
    c: &OrientedCycle,
    h0: &VertexSet,
    u: usize,
    alpha: usize,
) -> Result<usize, InsertionError> {
    let attachments = cycle_attachments(g, c, h0);
    let i = attachments
        .iter()
        .position(|&a| a == u)
        .ok_or(InsertionError::NotAnAttachment { vertex: u })?;
    let u_prime = attachments[(i + 1) % attachments.len()];
    for v in c.arc(u, u_prime, false, false) {
        if !is_insertible(g, c, u, u_prime, v, alpha)? {
            return Ok(v);
        }
    }
    Err(InsertionError::AllInsertible { u })
}

/// One attachment record of a frame: the attachment `u`, its successor
/// attachment `u′`, the first non-insertible vertex `x` in C(u,u′), and the
/// (all-insertible) gap C(u,x) strictly between them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Attachment {
    pub u: usize,
    pub u_prime: usize,
    pub x: usize,
    pub gap: Vec<usize>,
}

/// For a longest cycle C and a component H0 of G−C: the attachments in
/// cycle order, each with its first non-insertible vertex, plus a chosen
/// component vertex `x0` (the smallest index in H0).
///
/// On a genuine longest cycle the non-insertible vertices together with
/// `x0` form an independent set, and each satisfies
/// `d_C(x) <= |gap| + alpha - 1`; both are exposed as checks below.
#[derive(Clone, Debug)]
pub struct NonInsertibleFrame {
    pub cycle: OrientedCycle,
    pub component: VertexSet,
    pub attachments: Vec<Attachment>,
    pub x0: usize,
}

impl NonInsertibleFrame {
    /// The non-insertible vertices x_1..x_m in attachment order.
    pub fn x_vertices(&self) -> Vec<usize> {
        self.attachments.iter().map(|a| a.x).collect()
    }

    /// Adjacent pairs inside `X ∪ {x0}`; empty on a longest cycle.
    pub fn independence_violations(&self, g: &Graph) -> Vec<(usize, usize)> {
        let mut xs = self.x_vertices();
        xs.push(self.x0);
        let mut out = Vec::new();
        for (i, &a) in xs.iter().enumerate() {
            for &b in &xs[i + 1..] {
                if g.has_edge(a, b) {
                    out.push((a.min(b), a.max(b)));
                }
            }
        }
        out
    }

    /// Attachment indices whose non-insertible vertex has too many cycle
    /// neighbours (`d_C(x) > |gap| + alpha - 1`); empty on a longest cycle.
    pub fn degree_bound_violations(&self, g: &Graph, alpha: usize) -> Vec<usize> {
        let cycle_set = self.cycle.vertex_set();
        self.attachments
            .iter()
            .enumerate()
            .filter(|(_, a)| {
                let d_c = g.neighbors(a.x).intersection_len(&cycle_set);
                d_c > a.gap.len() + alpha.saturating_sub(1)
            })
            .map(|(i, _)| i)
            .collect()
    }
}

/// Builds the frame for `(g, c, h0)`. The caller certifies that `c` is a
/// longest cycle; if it is not, [`InsertionError::AllInsertible`] may
/// surface from the scan.
pub fn build_frame(
    g: &Graph,
    c: &OrientedCycle,
    h0: &VertexSet,
    alpha: usize,
) -> Result<NonInsertibleFrame, InsertionError> {
    let x0 = h0.first().ok_or(InsertionError::EmptyComponent)?;
    let attachments_in_order = cycle_attachments(g, c, h0);
    if attachments_in_order.is_empty() {
        return Err(InsertionError::NotAnAttachment { vertex: x0 });
    }
    let mut attachments = Vec::with_capacity(attachments_in_order.len());
    for (i, &u) in attachments_in_order.iter().enumerate() {
        let u_prime = attachments_in_order[(i + 1) % attachments_in_order.len()];
        let x = first_non_insertible(g, c, h0, u, alpha)?;
        let gap = c.arc(u, x, false, false);
        debug_assert!(gap.iter().all(|&v| {
            is_insertible(g, c, u, u_prime, v, alpha).expect("gap vertex on arc")
        }));
        attachments.push(Attachment { u, u_prime, x, gap });
    }
    Ok(NonInsertibleFrame {
        cycle: c.clone(),
        component: h0.clone(),
        attachments,
        x0,
    })
}

// ---------------------------------------------------------------------------
// Merging path systems into a cycle
// ---------------------------------------------------------------------------

/// A base cycle plus vertex-disjoint oriented paths outside it.
#[derive(Clone, Debug)]
pub struct PathSystem {
    pub base: OrientedCycle,
    pub paths: Vec<Vec<usize>>,
}

impl PathSystem {
    fn validate(&self, g: &Graph) -> Result<(), InsertionError> {
        let n = g.n();
        let base_set = self.base.vertex_set();
        let mut seen = VertexSet::new(n);
        for path in &self.paths {
            if path.is_empty() {
                return Err(InsertionError::InvalidPathSystem {
                    reason: String::from("empty path"),
                });
            }
            for &v in path {
                if v >= n {
                    return Err(InsertionError::InvalidPathSystem {
                        reason: alloc::format!("vertex {v} out of range"),
                    });
                }
                if base_set.contains(v) {
                    return Err(InsertionError::InvalidPathSystem {
                        reason: alloc::format!("path vertex {v} lies on the base cycle"),
                    });
                }
                if !seen.insert(v) {
                    return Err(InsertionError::InvalidPathSystem {
                        reason: alloc::format!("vertex {v} appears on two paths"),
                    });
                }
            }
            for w in path.windows(2) {
                if !g.has_edge(w[0], w[1]) {
                    return Err(InsertionError::InvalidPathSystem {
                        reason: alloc::format!("path vertices {} and {} not adjacent", w[0], w[1]),
                    });
                }
            }
        }
        Ok(())
    }
}

/// Merges the paths of `sys` into its base cycle, producing a cycle that
/// spans the base and every path exactly.
///
/// Verified preconditions:
///
/// * (I) every path vertex `a` is in `X(D)` or has at least `alpha`
///   neighbours among its own path suffix after `a` plus the base;
/// * (II) vertices on different paths never share a base insertion edge.
///
/// Procedure: per path, repeatedly take the first not-yet-inserted `X(D)`
/// vertex `u` along the path and the last `X(D)` vertex `v` with
/// `I(u;D) ∩ I(v;D)` nonempty, and splice the whole segment `[u..v]` into
/// the earliest surviving edge of that intersection. Afterwards the
/// leftover vertices are absorbed one at a time from the back of each path:
/// a leftover with `alpha` cycle neighbours always admits a reroute, either
/// inserting it between a neighbour and that neighbour's successor, or
/// opening the cycle at two neighbours whose successors are adjacent.
pub fn merge_insert(
    g: &Graph,
    sys: &PathSystem,
    alpha: usize,
) -> Result<OrientedCycle, InsertionError> {
    sys.validate(g)?;
    let n = g.n();
    let base_ref = SubgraphRef::from_cycle(&sys.base);
    let xd = x_set(g, &base_ref);

    // Precondition (I).
    for path in &sys.paths {
        for (i, &a) in path.iter().enumerate() {
            if xd.contains(a) {
                continue;
            }
            let mut cover = VertexSet::from_members(n, path[i + 1..].iter().copied());
            cover.union_with(&base_ref.vertices);
            if g.neighbors(a).intersection_len(&cover) < alpha {
                return Err(InsertionError::PreconditionIFailed { vertex: a });
            }
        }
    }
    // Precondition (II).
    let insertions: Vec<Vec<Vec<(usize, usize)>>> = sys
        .paths
        .iter()
        .map(|path| {
            path.iter()
                .map(|&v| i_edges(g, v, &base_ref).expect("path vertex outside base"))
                .collect()
        })
        .collect();
    for i in 0..sys.paths.len() {
        for j in (i + 1)..sys.paths.len() {
            for (xi, xe) in sys.paths[i].iter().zip(&insertions[i]) {
                for (yj, ye) in sys.paths[j].iter().zip(&insertions[j]) {
                    if let Some(&edge) = xe.iter().find(|e| ye.contains(e)) {
                        return Err(InsertionError::PreconditionIIFailed {
                            x: *xi,
                            y: *yj,
                            edge,
                        });
                    }
                }
            }
        }
    }

    // Rank base edges by the position of their first endpoint along the
    // orientation, so "earliest edge" is well defined.
    let edge_rank = |e: (usize, usize)| -> usize {
        let (pa, pb) = (
            sys.base.position(e.0).expect("base edge endpoint"),
            sys.base.position(e.1).expect("base edge endpoint"),
        );
        let len = sys.base.len();
        // The edge occupies positions {p, p+1 mod len}; rank it by p.
        if (pa + 1) % len == pb {
            pa
        } else {
            pb
        }
    };

    let mut cycle: Vec<usize> = sys.base.order().to_vec();
    let mut on_cycle = sys.base.vertex_set();

    // Phase 1: splice segments around the X(D) vertices of each path.
    for (path, edges_of) in sys.paths.iter().zip(&insertions) {
        let mut from = 0usize;
        while let Some(u_idx) = (from..path.len()).find(|&i| xd.contains(path[i])) {
            let u_edges = &edges_of[u_idx];
            let v_idx = (u_idx..path.len())
                .rev()
                .find(|&i| {
                    xd.contains(path[i]) && edges_of[i].iter().any(|e| u_edges.contains(e))
                })
                .expect("u itself qualifies");
            let mut shared: Vec<(usize, usize)> = edges_of[v_idx]
                .iter()
                .copied()
                .filter(|e| u_edges.contains(e))
                .collect();
            shared.sort_by_key(|&e| edge_rank(e));
            let (w, w_succ) = orient_edge(&sys.base, shared[0]);
            splice_segment(&mut cycle, &mut on_cycle, w, w_succ, &path[u_idx..=v_idx])?;
            from = v_idx + 1;
        }
    }

    // Phase 2: absorb leftovers from the back of each path.
    loop {
        let mut progressed = false;
        for path in &sys.paths {
            let Some(&w) = path.iter().rev().find(|&&v| !on_cycle.contains(v)) else {
                continue;
            };
            absorb_vertex(g, &mut cycle, &mut on_cycle, w)?;
            progressed = true;
        }
        if !progressed {
            break;
        }
    }

    debug_assert_eq!(
        cycle.len(),
        sys.base.len() + sys.paths.iter().map(|p| p.len()).sum::<usize>()
    );
    OrientedCycle::new(g, cycle).map_err(|_| InsertionError::MergeStuck {
        reason: "merged sequence is not a cycle of the host",
    })
}

/// Returns a base edge as `(w, w⁺)` in orientation order.
fn orient_edge(base: &OrientedCycle, e: (usize, usize)) -> (usize, usize) {
    if base.successor(e.0) == e.1 {
        (e.0, e.1)
    } else {
        debug_assert_eq!(base.successor(e.1), e.0);
        (e.1, e.0)
    }
}

/// Replaces the edge `w→w_succ` of the working cycle by `w → segment → w_succ`.
fn splice_segment(
    cycle: &mut Vec<usize>,
    on_cycle: &mut VertexSet,
    w: usize,
    w_succ: usize,
    segment: &[usize],
) -> Result<(), InsertionError> {
    let len = cycle.len();
    let pos = (0..len)
        .find(|&i| cycle[i] == w && cycle[(i + 1) % len] == w_succ)
        .ok_or(InsertionError::MergeStuck {
            reason: "chosen insertion edge no longer on the working cycle",
        })?;
    for (offset, &v) in segment.iter().enumerate() {
        cycle.insert(pos + 1 + offset, v);
        on_cycle.insert(v);
    }
    Ok(())
}

/// Inserts one outside vertex with enough cycle neighbours via the first
/// applicable reroute, scanning cycle positions from the anchor:
/// (a) some neighbour `z` whose successor is also adjacent to `w`: insert
/// `w` between them; (b) two neighbours `z1`, `z2` whose successors are
/// adjacent: reverse the stretch between them and thread `w` through.
fn absorb_vertex(
    g: &Graph,
    cycle: &mut Vec<usize>,
    on_cycle: &mut VertexSet,
    w: usize,
) -> Result<(), InsertionError> {
    let len = cycle.len();
    let nbr_positions: Vec<usize> = (0..len).filter(|&i| g.has_edge(cycle[i], w)).collect();
    // Pattern (a), smallest z in orientation order.
    for &zp in &nbr_positions {
        if g.has_edge(w, cycle[(zp + 1) % len]) {
            cycle.insert(zp + 1, w);
            on_cycle.insert(w);
            return Ok(());
        }
    }
    // Pattern (b), lexicographically first pair of positions.
    for (i, &z1p) in nbr_positions.iter().enumerate() {
        for &z2p in &nbr_positions[i + 1..] {
            if g.has_edge(cycle[(z1p + 1) % len], cycle[(z2p + 1) % len]) {
                // New cycle, concretely:
                // w, z1, z1⁻, ..., z2⁺, z1⁺, ..., z2, back to w.
                let mut next = Vec::with_capacity(len + 1);
                next.push(w);
                let mut p = z1p;
                loop {
                    next.push(cycle[p]);
                    if p == (z2p + 1) % len {
                        break;
                    }
                    p = (p + len - 1) % len;
                }
                let mut p = (z1p + 1) % len;
                loop {
                    next.push(cycle[p]);
                    if p == z2p {
                        break;
                    }
                    p = (p + 1) % len;
                }
                debug_assert_eq!(next.len(), len + 1);
                *cycle = next;
                on_cycle.insert(w);
                return Ok(());
            }
        }
    }
    Err(InsertionError::MergeStuck {
        reason: "no reroute absorbs the leftover vertex",
    })
}

// ---------------------------------------------------------------------------
// Cycle extension
// ---------------------------------------------------------------------------

/// Result of one extension attempt.
#[derive(Clone, Debug)]
pub enum Extension {
    /// A strictly longer cycle of the same host.
    Extended(OrientedCycle),
    /// No extension found by this heuristic (the cycle may still not be
    /// longest).
    Unchanged,
}

/// Tries to grow `c` by one of two moves and returns the first success:
///
/// * if every vertex of some arc C(u,u′) between consecutive attachments of
///   an outside component is insertible, reroute the cycle through that
///   component and re-insert the arc (always succeeds by construction);
/// * absorb a single outside vertex adjacent to two consecutive cycle
///   vertices.
///
/// Never returns a shorter or invalid cycle.
pub fn extend_cycle(g: &Graph, c: &OrientedCycle, alpha: usize) -> Extension {
    let cycle_set = c.vertex_set();
    let outside = cycle_set.complement();
    let mut remaining = outside.clone();
    while let Some(start) = remaining.first() {
        let h0 = g.reachable_within(start, &outside);
        remaining.difference_with(&h0);
        let attachments = cycle_attachments(g, c, &h0);
        for (i, &u) in attachments.iter().enumerate() {
            match first_non_insertible(g, c, &h0, u, alpha) {
                Ok(_) | Err(InsertionError::NotAnAttachment { .. }) => continue,
                Err(InsertionError::AllInsertible { .. }) => {
                    let u_prime = attachments[(i + 1) % attachments.len()];
                    if u == u_prime {
                        continue; // a single attachment admits no through-path
                    }
                    if let Some(ext) = reroute_through_component(g, c, &h0, u, u_prime, alpha) {
                        return Extension::Extended(ext);
                    }
                }
                Err(_) => continue,
            }
        }
    }
    // Direct absorption of a single outside vertex.
    for v in outside.iter() {
        for i in 0..c.len() {
            let (a, b) = (c.vertex_at(i), c.vertex_at(i + 1));
            if g.has_edge(v, a) && g.has_edge(v, b) {
                let mut order = Vec::with_capacity(c.len() + 1);
                order.extend_from_slice(&c.order()[..i + 1]);
                order.push(v);
                order.extend_from_slice(&c.order()[i + 1..]);
                let ext = OrientedCycle::new(g, order).expect("splice preserves validity");
                return Extension::Extended(ext);
            }
        }
    }
    Extension::Unchanged
}

/// Builds the rerouted base cycle C[u′,u] + (u, through h0, u′) and merges
/// the bypassed arc C(u,u′) back into it.
fn reroute_through_component(
    g: &Graph,
    c: &OrientedCycle,
    h0: &VertexSet,
    u: usize,
    u_prime: usize,
    alpha: usize,
) -> Option<OrientedCycle> {
    let through = component_path(g, h0, u, u_prime)?;
    let mut base = c.arc(u_prime, u, true, true);
    base.extend_from_slice(&through);
    let base = OrientedCycle::new(g, base).ok()?;
    let arc = c.arc(u, u_prime, false, false);
    let paths = if arc.is_empty() { Vec::new() } else { alloc::vec![arc] };
    let sys = PathSystem { base, paths };
    merge_insert(g, &sys, alpha).ok()
}

/// Shortest path through `h0` joining a neighbour of `u` to a neighbour of
/// `u_prime` (internal vertices only; `u`, `u_prime` excluded).
fn component_path(g: &Graph, h0: &VertexSet, u: usize, u_prime: usize) -> Option<Vec<usize>> {
    let starts: Vec<usize> = g.neighbors(u).intersection(h0).to_vec();
    let goals = g.neighbors(u_prime).intersection(h0);
    if starts.is_empty() || goals.is_empty() {
        return None;
    }
    let n = g.n();
    let mut parent = alloc::vec![usize::MAX; n];
    let mut queue = alloc::collections::VecDeque::new();
    for &s in &starts {
        parent[s] = s;
        queue.push_back(s);
    }
    let mut reached = None;
    'bfs: for &s in &starts {
        if goals.contains(s) {
            reached = Some(s);
            break 'bfs;
        }
    }
    while reached.is_none() {
        let Some(v) = queue.pop_front() else { break };
        for w in g.neighbors(v).intersection(h0).iter() {
            if parent[w] == usize::MAX {
                parent[w] = v;
                if goals.contains(w) {
                    reached = Some(w);
                    break;
                }
                queue.push_back(w);
            }
        }
    }
    let mut at = reached?;
    let mut rev = alloc::vec![at];
    while parent[at] != at {
        at = parent[at];
        rev.push(at);
    }
    rev.reverse(); // now runs from the u-side neighbour to the u′-side one
    Some(rev)
}

// ---------------------------------------------------------------------------
// Forbidden crossing configurations
// ---------------------------------------------------------------------------

/// Hosts above this order are refused by [`crossing_scan`]; the scan is a
/// correctness oracle and must stay exact.
pub const CROSSING_SCAN_LIMIT: usize = 14;

/// A configuration of C-paths that cannot occur around the first
/// non-insertible vertices of a longest cycle. `u1`/`u2` are the two
/// attachments, `v1`/`v2` sit inside their arcs up to the non-insertible
/// vertex, and `w`/`w1`/`w2` locate the crossing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CrossingViolation {
    /// A C-path directly joins the two arcs.
    ArcToArc { u1: usize, v1: usize, u2: usize, v2: usize },
    /// A C-path from v1 reaches w while another joins v2 to w's predecessor.
    PredecessorLink { u1: usize, v1: usize, w: usize, u2: usize, v2: usize },
    /// Flanked paths from both arcs plus a bridge joining w1⁻ and w2⁺.
    FlankSuccessor { u1: usize, v1: usize, w1: usize, u2: usize, v2: usize, w2: usize },
    /// Flanked paths from both arcs plus a bridge joining w1⁻ and w2⁻.
    FlankPredecessor { u1: usize, v1: usize, w1: usize, u2: usize, v2: usize, w2: usize },
}

/// Scans every pair of attachments of the frame for the four forbidden
/// C-path patterns; for a longest cycle the result must be empty.
///
/// C-path existence between cycle vertices `a`, `b` means a direct edge or
/// an outside component of G−C adjacent to both; enumeration works through
/// the components plus the chords, so it stays polynomial, but the host
/// order is still capped at [`CROSSING_SCAN_LIMIT`].
pub fn crossing_scan(
    g: &Graph,
    c: &OrientedCycle,
    h0: &VertexSet,
    alpha: usize,
) -> Result<Vec<CrossingViolation>, InsertionError> {
    let n = g.n();
    if n > CROSSING_SCAN_LIMIT {
        return Err(InsertionError::HostTooLarge { n, limit: CROSSING_SCAN_LIMIT });
    }
    let frame = build_frame(g, c, h0, alpha)?;
    let reach = CPathReach::new(g, c);
    let mut out = Vec::new();
    let m = frame.attachments.len();
    for i in 0..m {
        for j in 0..m {
            if i == j {
                continue;
            }
            let a1 = &frame.attachments[i];
            let a2 = &frame.attachments[j];
            let range1 = c.arc(a1.u, a1.x, false, true);
            let range2 = c.arc(a2.u, a2.x, false, true);

            // Direct arc-to-arc paths (scan unordered: i < j only).
            if i < j {
                for &v1 in &range1 {
                    for &v2 in &range2 {
                        if reach.joined(v1, v2) {
                            out.push(CrossingViolation::ArcToArc {
                                u1: a1.u,
                                v1,
                                u2: a2.u,
                                v2,
                            });
                        }
                    }
                }
            }

            // A path from v1 to w together with one from v2 to w⁻.
            for &v1 in &range1 {
                for w in c.arc(v1, a2.u, false, true) {
                    if !reach.joined(v1, w) {
                        continue;
                    }
                    let w_pred = c.predecessor(w);
                    for &v2 in &range2 {
                        if v2 != w_pred && reach.joined(v2, w_pred) {
                            out.push(CrossingViolation::PredecessorLink {
                                u1: a1.u,
                                v1,
                                w,
                                u2: a2.u,
                                v2,
                            });
                        }
                    }
                }
            }

            // Flanked crossing bridged at (w1⁻, w2⁺): w1 strictly inside
            // C(v1,u2), w2 in C[w1,u2).
            for &v1 in &range1 {
                for w1 in c.arc(v1, a2.u, false, false) {
                    if !reach.joined(v1, w1) {
                        continue;
                    }
                    let w1_pred = c.predecessor(w1);
                    for &v2 in &range2 {
                        for w2 in c.arc(w1, a2.u, true, false) {
                            if reach.joined(v2, w2)
                                && reach.joined(w1_pred, c.successor(w2))
                            {
                                out.push(CrossingViolation::FlankSuccessor {
                                    u1: a1.u,
                                    v1,
                                    w1,
                                    u2: a2.u,
                                    v2,
                                    w2,
                                });
                            }
                        }
                    }
                }
            }

            // Flanked crossing bridged at (w1⁻, w2⁻): symmetric in the two
            // attachments, w_i anywhere in C(v_i, u_other]. Scan unordered.
            if i < j {
                for &v1 in &range1 {
                    for w1 in c.arc(v1, a2.u, false, true) {
                        if !reach.joined(v1, w1) {
                            continue;
                        }
                        let w1_pred = c.predecessor(w1);
                        for &v2 in &range2 {
                            for w2 in c.arc(v2, a1.u, false, true) {
                                if reach.joined(v2, w2)
                                    && reach.joined(w1_pred, c.predecessor(w2))
                                {
                                    out.push(CrossingViolation::FlankPredecessor {
                                        u1: a1.u,
                                        v1,
                                        w1,
                                        u2: a2.u,
                                        v2,
                                        w2,
                                    });
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

/// The "joined by a C-path" relation over cycle vertices: a direct host
/// edge, or some component of G−C adjacent to both ends.
struct CPathReach {
    n: usize,
    direct: Vec<bool>,
}

impl CPathReach {
    fn new(g: &Graph, c: &OrientedCycle) -> Self {
        let n = g.n();
        let mut direct = alloc::vec![false; n * n];
        let on_c = c.vertex_set();
        for &a in c.order() {
            for &b in c.order() {
                if a != b && g.has_edge(a, b) {
                    direct[a * n + b] = true;
                }
            }
        }
        let outside = on_c.complement();
        let mut remaining = outside.clone();
        while let Some(start) = remaining.first() {
            let comp = g.reachable_within(start, &outside);
            remaining.difference_with(&comp);
            let attach = cycle_attachments(g, c, &comp);
            for &a in &attach {
                for &b in &attach {
                    if a != b {
                        direct[a * n + b] = true;
                    }
                }
            }
        }
        CPathReach { n, direct }
    }

    #[inline]
    fn joined(&self, a: usize, b: usize) -> bool {
        a != b && self.direct[a * self.n + b]
    }
}
