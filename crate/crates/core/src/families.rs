//! Graph constructions: a join-expression language, the extremal families
//! used throughout the test harness, and the classic fixtures.
//!
//! A join expression like `K1+~K4+~K5+~K1` denotes a sequential join: the
//! disjoint union of its parts with every vertex of part i joined to every
//! vertex of part i+1. `Kl` is the complete graph of order l, `~Kl` its
//! complement, and a parenthesised chain is built first and then treated as
//! a single part. Vertices are numbered left to right, consecutively within
//! each part, so constructions are reproducible index for index.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::Range;

use crate::bitset::VertexSet;
use crate::graph::Graph;
use crate::invariants;
use crate::oracle::{self, CutVerdict, CutWitness};
use crate::rational::Rational;

/// Errors from family generators and the join-expression parser.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilyError {
    /// A parameter constraint is violated; the message names the inequality.
    InvalidParams { reason: String },
    /// Join-expression syntax error at a byte offset.
    SyntaxError { pos: usize, reason: String },
    /// Atoms must have order at least 1.
    ZeroOrderAtom { pos: usize },
}

impl fmt::Display for FamilyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyError::InvalidParams { reason } => write!(f, "invalid parameters: {reason}"),
            FamilyError::SyntaxError { pos, reason } => {
                write!(f, "syntax error at byte {pos}: {reason}")
            }
            FamilyError::ZeroOrderAtom { pos } => {
                write!(f, "atom of order 0 at byte {pos}")
            }
        }
    }
}

impl core::error::Error for FamilyError {}

// ---------------------------------------------------------------------------
// Join expressions
// ---------------------------------------------------------------------------

/// Parse tree of a join expression.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum JoinExpr {
    /// `Kl`: complete graph of order l >= 1.
    Complete(usize),
    /// `~Kl`: edgeless graph of order l >= 1.
    Empty(usize),
    /// Two or more parts joined sequentially.
    Chain(Vec<JoinExpr>),
}

impl JoinExpr {
    /// Total number of vertices.
    pub fn order(&self) -> usize {
        match self {
            JoinExpr::Complete(l) | JoinExpr::Empty(l) => *l,
            JoinExpr::Chain(parts) => parts.iter().map(JoinExpr::order).sum(),
        }
    }

    /// Canonical text form; `parse_join(render(e)) == e`.
    pub fn render(&self) -> String {
        match self {
            JoinExpr::Complete(l) => format!("K{l}"),
            JoinExpr::Empty(l) => format!("~K{l}"),
            JoinExpr::Chain(parts) => {
                let mut out = String::new();
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        out.push('+');
                    }
                    match p {
                        JoinExpr::Chain(_) => out.push_str(&format!("({})", p.render())),
                        _ => out.push_str(&p.render()),
                    }
                }
                out
            }
        }
    }
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn error(&self, reason: &str) -> FamilyError {
        FamilyError::SyntaxError {
            pos: self.pos,
            reason: String::from(reason),
        }
    }

    fn expr(&mut self) -> Result<JoinExpr, FamilyError> {
        let mut parts = Vec::new();
        parts.push(self.term()?);
        while self.peek() == Some(b'+') {
            self.pos += 1;
            parts.push(self.term()?);
        }
        Ok(if parts.len() == 1 {
            parts.pop().expect("one part")
        } else {
            JoinExpr::Chain(parts)
        })
    }

    fn term(&mut self) -> Result<JoinExpr, FamilyError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.error("expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(b'~') | Some(b'K') => self.atom(),
            _ => Err(self.error("expected an atom 'K<n>', '~K<n>' or '('")),
        }
    }

    fn atom(&mut self) -> Result<JoinExpr, FamilyError> {
        let complement = self.peek() == Some(b'~');
        let atom_pos = self.pos;
        if complement {
            self.pos += 1;
        }
        if self.peek() != Some(b'K') {
            return Err(self.error("expected 'K'"));
        }
        self.pos += 1;
        let digits_start = self.pos;
        while self
            .bytes
            .get(self.pos)
            .is_some_and(|b| b.is_ascii_digit())
        {
            self.pos += 1;
        }
        if self.pos == digits_start {
            return Err(self.error("expected an order after 'K'"));
        }
        let text = core::str::from_utf8(&self.bytes[digits_start..self.pos]).expect("digits");
        let order: usize = text.parse().map_err(|_| self.error("order too large"))?;
        if order == 0 {
            return Err(FamilyError::ZeroOrderAtom { pos: atom_pos });
        }
        Ok(if complement {
            JoinExpr::Empty(order)
        } else {
            JoinExpr::Complete(order)
        })
    }
}

/// Parses a join expression.
///
/// Grammar: `expr := term ('+' term)*`, `term := atom | '(' expr ')'`,
/// `atom := 'K' INT | '~K' INT`; whitespace is ignored.
pub fn parse_join(text: &str) -> Result<JoinExpr, FamilyError> {
    let mut p = Parser { bytes: text.as_bytes(), pos: 0 };
    let e = p.expr()?;
    if p.peek().is_some() {
        return Err(p.error("trailing input"));
    }
    Ok(e)
}

/// Builds the graph of a join expression with the documented left-to-right
/// vertex numbering.
pub fn build(expr: &JoinExpr) -> Graph {
    let mut g = Graph::empty(expr.order());
    build_into(expr, 0, &mut g);
    g
}

/// Recursively adds `expr`'s edges starting at index `base`; returns the
/// part's order.
fn build_into(expr: &JoinExpr, base: usize, g: &mut Graph) -> usize {
    match expr {
        JoinExpr::Complete(l) => {
            for i in 0..*l {
                for j in (i + 1)..*l {
                    g.add_edge(base + i, base + j);
                }
            }
            *l
        }
        JoinExpr::Empty(l) => *l,
        JoinExpr::Chain(parts) => {
            let mut offsets = Vec::with_capacity(parts.len() + 1);
            let mut at = base;
            for p in parts {
                offsets.push(at);
                at += build_into(p, at, g);
            }
            offsets.push(at);
            // Join consecutive parts completely, nested chains as blocks.
            for w in offsets.windows(3).map(|w| (w[0], w[1], w[2])) {
                let (lo, mid, hi) = w;
                for u in lo..mid {
                    for v in mid..hi {
                        g.add_edge(u, v);
                    }
                }
            }
            at - base
        }
    }
}

// ---------------------------------------------------------------------------
// Named parts
// ---------------------------------------------------------------------------

/// A named contiguous index range of a generated graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Part {
    pub name: String,
    pub range: Range<usize>,
}

/// A generated graph with its part layout.
#[derive(Clone, Debug)]
pub struct Generated {
    pub graph: Graph,
    pub parts: Vec<Part>,
}

impl Generated {
    /// Vertex set of part `i`.
    pub fn part_set(&self, i: usize) -> VertexSet {
        VertexSet::from_members(self.graph.n(), self.parts[i].range.clone())
    }
}

// ---------------------------------------------------------------------------
// The first extremal family
// ---------------------------------------------------------------------------

/// Parameters for `K_{n-2m} + ~K_kappa + ~K_m + ~K_{m-kappa}`.
///
/// Constraints: `k <= kappa < m` and `2m+1 <= n <= 3m-kappa`. The parameter
/// `k` selects which degree-sum condition the instance is calibrated
/// against; the graph itself depends only on `kappa`, `m`, `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct G1Params {
    pub k: usize,
    pub kappa: usize,
    pub m: usize,
    pub n: usize,
}

impl G1Params {
    pub fn validate(&self) -> Result<(), FamilyError> {
        let invalid = |reason: String| Err(FamilyError::InvalidParams { reason });
        if self.k < 1 {
            return invalid(format!("k >= 1 violated (k={})", self.k));
        }
        if self.k > self.kappa {
            return invalid(format!("k <= kappa violated ({} > {})", self.k, self.kappa));
        }
        if self.kappa >= self.m {
            return invalid(format!("kappa < m violated ({} >= {})", self.kappa, self.m));
        }
        if self.n < 2 * self.m + 1 {
            return invalid(format!("2m+1 <= n violated ({} > {})", 2 * self.m + 1, self.n));
        }
        if self.n > 3 * self.m - self.kappa {
            return invalid(format!(
                "n <= 3m-kappa violated ({} > {})",
                self.n,
                3 * self.m - self.kappa
            ));
        }
        Ok(())
    }

    /// All legal parameter tuples with order at most `n_max`.
    pub fn enumerate_legal(n_max: usize) -> Vec<G1Params> {
        let mut out = Vec::new();
        for m in 2..=n_max {
            if 2 * m + 1 > n_max {
                break;
            }
            for kappa in 1..m {
                for n in (2 * m + 1)..=(3 * m - kappa).min(n_max) {
                    for k in 1..=kappa {
                        let p = G1Params { k, kappa, m, n };
                        debug_assert!(p.validate().is_ok());
                        out.push(p);
                    }
                }
            }
        }
        out
    }

    fn expr(&self) -> JoinExpr {
        JoinExpr::Chain(alloc::vec![
            JoinExpr::Complete(self.n - 2 * self.m),
            JoinExpr::Empty(self.kappa),
            JoinExpr::Empty(self.m),
            JoinExpr::Empty(self.m - self.kappa),
        ])
    }
}

/// Builds the instance with its four parts named and indexed left to right.
pub fn generate_g1(p: G1Params) -> Result<Generated, FamilyError> {
    p.validate()?;
    let expr = p.expr();
    let orders = [p.n - 2 * p.m, p.kappa, p.m, p.m - p.kappa];
    let names = [
        format!("K{}", orders[0]),
        format!("~K{}", orders[1]),
        format!("~K{}", orders[2]),
        format!("~K{}", orders[3]),
    ];
    let mut parts = Vec::new();
    let mut at = 0;
    for (name, order) in names.into_iter().zip(orders) {
        parts.push(Part { name, range: at..at + order });
        at += order;
    }
    Ok(Generated { graph: build(&expr), parts })
}

/// The deletion set certifying non-Hamiltonicity: both edgeless flanks
/// (parts 1 and 3, of total size m). Removing it isolates the middle
/// edgeless part and the leading clique, leaving m+1 components.
pub fn g1_cut_set(g1: &Generated) -> VertexSet {
    g1.part_set(1).union(&g1.part_set(3))
}

/// A tightness certificate for the coefficient trade-off between the
/// connectivity and independence terms of the main degree-sum bound.
#[derive(Clone, Debug)]
pub struct EpsilonCertificate {
    pub params: G1Params,
    pub instance: Generated,
    pub epsilon: Rational,
    /// Computed α(G).
    pub alpha: usize,
    /// Computed κ(G).
    pub kappa: usize,
    /// Computed σ_{k+1}(G).
    pub sigma: u64,
    /// The rational bound `n + (1+ε)κ + (k-2-ε)(α-1)`.
    pub bound: Rational,
    /// Whether `sigma >= bound` (exact rational comparison).
    pub holds: bool,
    pub cut: CutWitness,
    pub cut_verdict: CutVerdict,
}

/// Picks the smallest instance with `ε(m-κ) >= 1` and builds the
/// certificate showing the degree-sum bound cannot be weakened by shifting
/// weight `ε` from the connectivity term to the independence term.
///
/// Scan rule: `m` grows upward with `κ = max(k, m - ceil(1/ε))`; the first
/// `m` satisfying all constraints is `m = k + ceil(1/ε)` with `κ = k` and
/// `n = 2m + 1`.
pub fn generate_g1_epsilon(k: usize, epsilon: Rational) -> Result<EpsilonCertificate, FamilyError> {
    if k < 1 {
        return Err(FamilyError::InvalidParams {
            reason: format!("k >= 1 violated (k={k})"),
        });
    }
    if !epsilon.is_positive() {
        return Err(FamilyError::InvalidParams {
            reason: format!("epsilon > 0 violated (epsilon={epsilon})"),
        });
    }
    let gap = epsilon.ceil_inverse() as usize;
    let m = k + gap;
    let params = G1Params { k, kappa: k, m, n: 2 * m + 1 };
    let instance = generate_g1(params)?;
    let g = &instance.graph;

    let alpha = invariants::independence_number(g);
    let kappa = invariants::connectivity(g);
    let sigma = invariants::sigma(g, k + 1)
        .expect("k+1 >= 1")
        .finite()
        .expect("instance has independent sets of every size up to alpha");

    // bound = n + (1+eps)*kappa + (k-2-eps)*(alpha-1), all exact.
    let one_plus = epsilon.add_int(1);
    let k_minus = Rational::from_integer(k as i64 - 2).sub(epsilon);
    let bound = one_plus
        .mul_int(kappa as i64)
        .add(k_minus.mul_int(alpha as i64 - 1))
        .add_int(params.n as i64);
    let holds = Rational::from_integer(sigma as i64) >= bound;

    let (cut, cut_verdict) = oracle::cut_witness_check(g, &g1_cut_set(&instance))
        .expect("cut set is within range");

    Ok(EpsilonCertificate {
        params,
        instance,
        epsilon,
        alpha,
        kappa,
        sigma,
        bound,
        holds,
        cut,
        cut_verdict,
    })
}

// ---------------------------------------------------------------------------
// The second extremal family
// ---------------------------------------------------------------------------

/// Parameters for `K_1 + ~K_kappa + K_{kappa+m-r} + (~K_m + K_r)`.
///
/// Constraints: `r >= 4`, `3 <= k <= kappa-2`, `m = (k+1)(r-2)+4`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct G2Params {
    pub kappa: usize,
    pub r: usize,
    pub k: usize,
    pub m: usize,
}

impl G2Params {
    pub fn validate(&self) -> Result<(), FamilyError> {
        let invalid = |reason: String| Err(FamilyError::InvalidParams { reason });
        if self.r < 4 {
            return invalid(format!("r >= 4 violated (r={})", self.r));
        }
        if self.k < 3 {
            return invalid(format!("k >= 3 violated (k={})", self.k));
        }
        if self.k + 2 > self.kappa {
            return invalid(format!(
                "k <= kappa-2 violated ({} > {})",
                self.k,
                self.kappa as i64 - 2
            ));
        }
        let expected_m = (self.k + 1) * (self.r - 2) + 4;
        if self.m != expected_m {
            return invalid(format!(
                "m = (k+1)(r-2)+4 violated ({} != {expected_m})",
                self.m
            ));
        }
        Ok(())
    }

    /// Order of the instance: `2*kappa + 2*m + 1`.
    pub fn order(&self) -> usize {
        2 * self.kappa + 2 * self.m + 1
    }

    /// All legal parameter tuples with order at most `n_max`.
    pub fn enumerate_legal(n_max: usize) -> Vec<G2Params> {
        let mut out = Vec::new();
        for r in 4..=n_max {
            for k in 3..=n_max {
                let m = (k + 1) * (r - 2) + 4;
                for kappa in (k + 2)..=n_max {
                    let p = G2Params { kappa, r, k, m };
                    if p.order() <= n_max {
                        debug_assert!(p.validate().is_ok());
                        out.push(p);
                    } else {
                        break;
                    }
                }
                if (G2Params { kappa: k + 2, r, k, m }).order() > n_max {
                    break;
                }
            }
        }
        out.sort_by_key(|p| (p.order(), p.kappa, p.r, p.k));
        out
    }

    fn expr(&self) -> JoinExpr {
        JoinExpr::Chain(alloc::vec![
            JoinExpr::Complete(1),
            JoinExpr::Empty(self.kappa),
            JoinExpr::Complete(self.kappa + self.m - self.r),
            JoinExpr::Chain(alloc::vec![
                JoinExpr::Empty(self.m),
                JoinExpr::Complete(self.r),
            ]),
        ])
    }
}

/// Builds the instance; the nested chain contributes two named parts, so
/// the layout has five ranges.
pub fn generate_g2(p: G2Params) -> Result<Generated, FamilyError> {
    p.validate()?;
    let orders = [1, p.kappa, p.kappa + p.m - p.r, p.m, p.r];
    let names = [
        String::from("K1"),
        format!("~K{}", p.kappa),
        format!("K{}", p.kappa + p.m - p.r),
        format!("~K{}", p.m),
        format!("K{}", p.r),
    ];
    let mut parts = Vec::new();
    let mut at = 0;
    for (name, order) in names.into_iter().zip(orders) {
        parts.push(Part { name, range: at..at + order });
        at += order;
    }
    Ok(Generated { graph: build(&p.expr()), parts })
}

// ---------------------------------------------------------------------------
// Classic fixtures
// ---------------------------------------------------------------------------

/// Complete graph `K_n`.
pub fn complete(n: usize) -> Graph {
    build(&JoinExpr::Complete(n))
}

/// Edgeless graph on `n` vertices.
pub fn empty_graph(n: usize) -> Graph {
    Graph::empty(n)
}

/// Cycle `C_n`, `n >= 3`.
pub fn cycle(n: usize) -> Result<Graph, FamilyError> {
    if n < 3 {
        return Err(FamilyError::InvalidParams {
            reason: format!("a cycle needs n >= 3, got {n}"),
        });
    }
    let mut g = Graph::empty(n);
    for v in 0..n {
        g.add_edge(v, (v + 1) % n);
    }
    Ok(g)
}

/// Path on `n` vertices, `n >= 1`.
pub fn path(n: usize) -> Result<Graph, FamilyError> {
    if n < 1 {
        return Err(FamilyError::InvalidParams {
            reason: String::from("a path needs n >= 1"),
        });
    }
    let mut g = Graph::empty(n);
    for v in 1..n {
        g.add_edge(v - 1, v);
    }
    Ok(g)
}

/// Complete bipartite `K_{a,b}` with sides `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph, FamilyError> {
    if a < 1 || b < 1 {
        return Err(FamilyError::InvalidParams {
            reason: String::from("both sides need at least one vertex"),
        });
    }
    Ok(build(&JoinExpr::Chain(alloc::vec![
        JoinExpr::Empty(a),
        JoinExpr::Empty(b),
    ])))
}

/// The Petersen graph: outer 5-cycle 0..4, inner pentagram 5..9, and a
/// spoke from each i to i+5.
pub fn petersen() -> Graph {
    let mut g = Graph::empty(10);
    for i in 0..5 {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(i, i + 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::DegreeSum;

    #[test]
    fn parse_atoms_and_chains() {
        assert_eq!(parse_join("K3").unwrap(), JoinExpr::Complete(3));
        assert_eq!(
            parse_join("~K2+~K2").unwrap(),
            JoinExpr::Chain(alloc::vec![JoinExpr::Empty(2), JoinExpr::Empty(2)])
        );
        let e = parse_join("K1+~K5+K13+(~K12+K4)").unwrap();
        match &e {
            JoinExpr::Chain(parts) => {
                assert_eq!(parts.len(), 4);
                assert_eq!(
                    parts[3],
                    JoinExpr::Chain(alloc::vec![JoinExpr::Empty(12), JoinExpr::Complete(4)])
                );
            }
            _ => panic!("expected a chain"),
        }
    }

    #[test]
    fn parse_rejects_bad_input() {
        assert!(matches!(
            parse_join("K0"),
            Err(FamilyError::ZeroOrderAtom { pos: 0 })
        ));
        assert!(matches!(parse_join("K2+"), Err(FamilyError::SyntaxError { .. })));
        assert!(matches!(parse_join("(K2"), Err(FamilyError::SyntaxError { .. })));
        assert!(matches!(parse_join("K2)K1"), Err(FamilyError::SyntaxError { .. })));
        assert!(matches!(parse_join("Q3"), Err(FamilyError::SyntaxError { .. })));
    }

    #[test]
    fn render_round_trips() {
        for text in ["K3", "~K2+~K2", "K1+~K5+K13+(~K12+K4)", "(K1+K2)+K3"] {
            let e = parse_join(text).unwrap();
            assert_eq!(parse_join(&e.render()).unwrap(), e);
        }
    }

    #[test]
    fn build_small_joins() {
        // ~K2+~K2 is the 4-cycle as K_{2,2}.
        let g = build(&parse_join("~K2+~K2").unwrap());
        assert_eq!(g.n(), 4);
        assert_eq!(g.edge_count(), 4);
        assert_eq!(invariants::connectivity(&g), 2);

        // K1+~K2 is the path centred at vertex 0.
        let g = build(&parse_join("K1+~K2").unwrap());
        assert_eq!(g.edges(), alloc::vec![(0, 1), (0, 2)]);
    }

    #[test]
    fn expression_matches_generator() {
        let expr = build(&parse_join("K1+~K4+~K5+~K1").unwrap());
        let gen = generate_g1(G1Params { k: 4, kappa: 4, m: 5, n: 11 }).unwrap();
        assert_eq!(expr, gen.graph);
    }

    #[test]
    fn g1_invariants_match_the_closed_forms() {
        let gen = generate_g1(G1Params { k: 4, kappa: 4, m: 5, n: 11 }).unwrap();
        let g = &gen.graph;
        assert_eq!(g.n(), 11);
        assert_eq!(invariants::independence_number(g), 6); // m+1
        assert_eq!(invariants::connectivity(g), 4);
        assert_eq!(invariants::sigma(g, 5).unwrap(), DegreeSum::Finite(24));
    }

    #[test]
    fn g1_rejects_bad_params() {
        assert!(matches!(
            generate_g1(G1Params { k: 4, kappa: 4, m: 5, n: 10 }),
            Err(FamilyError::InvalidParams { .. })
        ));
        assert!(generate_g1(G1Params { k: 5, kappa: 4, m: 5, n: 11 }).is_err());
        assert!(generate_g1(G1Params { k: 4, kappa: 5, m: 5, n: 11 }).is_err());
    }

    #[test]
    fn smallest_g1_instance() {
        let gen = generate_g1(G1Params { k: 1, kappa: 1, m: 2, n: 5 }).unwrap();
        assert_eq!(gen.graph.n(), 5);
        assert_eq!(gen.parts.len(), 4);
        assert_eq!(gen.parts[2].range, 2..4);
    }

    #[test]
    fn g1_cut_breaks_it_into_m_plus_one_components() {
        let gen = generate_g1(G1Params { k: 4, kappa: 4, m: 5, n: 11 }).unwrap();
        let s = g1_cut_set(&gen);
        assert_eq!(s.len(), 5);
        let (w, verdict) = oracle::cut_witness_check(&gen.graph, &s).unwrap();
        assert_eq!(w.component_count, 6);
        assert_eq!(verdict, CutVerdict::NonHamiltonian);
    }

    #[test]
    fn g2_invariants_match_the_closed_forms() {
        let gen = generate_g2(G2Params { kappa: 5, r: 4, k: 3, m: 12 }).unwrap();
        let g = &gen.graph;
        assert_eq!(g.n(), 35);
        assert_eq!(invariants::independence_number(g), 17); // kappa+m
        assert_eq!(invariants::connectivity(g), 5);
    }

    #[test]
    fn g2_rejects_inconsistent_m() {
        assert!(matches!(
            generate_g2(G2Params { kappa: 5, r: 4, k: 3, m: 11 }),
            Err(FamilyError::InvalidParams { .. })
        ));
        // Order formula for a neighbouring legal instance.
        let p = G2Params { kappa: 6, r: 4, k: 4, m: 14 };
        assert!(p.validate().is_ok());
        assert_eq!(p.order(), 41);
        let q = G2Params { kappa: 6, r: 4, k: 3, m: 12 };
        assert_eq!(q.order(), 37);
    }

    #[test]
    fn epsilon_instances_pick_the_smallest_parameters() {
        let one = Rational::from_integer(1);
        let cert = generate_g1_epsilon(4, one).unwrap();
        assert_eq!(
            (cert.params.kappa, cert.params.m, cert.params.n),
            (4, 5, 11)
        );
        let third = Rational::new(1, 3).unwrap();
        let cert = generate_g1_epsilon(4, third).unwrap();
        assert_eq!(
            (cert.params.kappa, cert.params.m, cert.params.n),
            (4, 7, 15)
        );
        assert!(cert.holds);
        // k=1 keeps a negative alpha coefficient; still exact.
        let cert = generate_g1_epsilon(1, one).unwrap();
        assert!(cert.holds);
        assert_eq!(cert.cut_verdict, CutVerdict::NonHamiltonian);
    }

    #[test]
    fn classic_fixtures() {
        assert!(cycle(2).is_err());
        assert_eq!(cycle(5).unwrap().edge_count(), 5);
        assert_eq!(path(1).unwrap().n(), 1);
        assert_eq!(complete_bipartite(2, 3).unwrap().edge_count(), 6);
        let p = petersen();
        assert_eq!(p.n(), 10);
        assert!((0..10).all(|v| p.degree(v) == 3));
        assert_eq!(girth(&p), Some(5));
    }

    /// Shortest cycle length by BFS from every vertex; independent of the
    /// cycle machinery elsewhere in the crate.
    fn girth(g: &Graph) -> Option<usize> {
        let n = g.n();
        let mut best: Option<usize> = None;
        for root in 0..n {
            let mut dist = alloc::vec![usize::MAX; n];
            let mut parent = alloc::vec![usize::MAX; n];
            dist[root] = 0;
            let mut queue = alloc::collections::VecDeque::from([root]);
            while let Some(v) = queue.pop_front() {
                for w in g.neighbors(v).iter() {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[v] + 1;
                        parent[w] = v;
                        queue.push_back(w);
                    } else if parent[v] != w {
                        let len = dist[v] + dist[w] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    #[test]
    fn g1_enumeration_is_exhaustive_for_small_orders() {
        let all = G1Params::enumerate_legal(11);
        assert!(all.contains(&G1Params { k: 4, kappa: 4, m: 5, n: 11 }));
        assert!(all.contains(&G1Params { k: 1, kappa: 1, m: 2, n: 5 }));
        for p in &all {
            assert!(p.validate().is_ok());
            assert!(p.n <= 11);
        }
        // Spot-check the count for m=2: only (k=1, kappa=1, n=5).
        assert_eq!(all.iter().filter(|p| p.m == 2).count(), 1);
    }

    #[test]
    fn g2_enumeration_finds_the_three_instances_up_to_order_40() {
        let all = G2Params::enumerate_legal(40);
        assert_eq!(
            all,
            alloc::vec![
                G2Params { kappa: 5, r: 4, k: 3, m: 12 },
                G2Params { kappa: 6, r: 4, k: 3, m: 12 },
                G2Params { kappa: 7, r: 4, k: 3, m: 12 },
            ]
        );
    }
}
