//! Degree-sum sufficient conditions for Hamiltonicity.
//!
//! Each checker separates *applicability* (the structural hypothesis such as
//! order at least 3 or k-connectivity) from *holding* (the numeric
//! inequality). A report never claims anything about a condition whose
//! hypothesis is unmet, which keeps soundness tests honest.
//!
//! All comparisons are exact integer arithmetic. The one half-integer bound
//! (BONDY) is evaluated as `2·σ_{k+1} > (k+1)(n-1)`, and its report carries
//! the doubled sides.

use alloc::vec::Vec;
use core::fmt;

use crate::graph::Graph;
use crate::invariants::{self, DegreeSum, InvariantError, SigmaResult};

/// The conditions understood by [`check`]. `Bondy`, `Li` and `Main` carry
/// the connectivity parameter `k >= 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConditionId {
    /// Minimum degree at least n/2.
    Dirac,
    /// σ_2 >= n.
    Ore,
    /// α <= κ.
    ChvatalErdos,
    /// k-connected and 2·σ_{k+1} > (k+1)(n-1), strictly.
    Bondy(usize),
    /// 2-connected and σ_3 >= n + κ.
    BauerBroersmaVeldmanLi,
    /// 2-connected and σ_{l+1} >= n + l(l-1) for every l in [κ, α-1].
    Ota,
    /// k-connected and σ_{k+1} >= n + (k-1)(α-1).
    Li(usize),
    /// k-connected and σ_{k+1} >= n + κ + (k-2)(α-1).
    Main(usize),
}

impl ConditionId {
    /// Stable identifier used in reports.
    pub fn name(&self) -> &'static str {
        match self {
            ConditionId::Dirac => "DIRAC",
            ConditionId::Ore => "ORE",
            ConditionId::ChvatalErdos => "CHVATAL_ERDOS",
            ConditionId::Bondy(_) => "BONDY",
            ConditionId::BauerBroersmaVeldmanLi => "BAUER_BROERSMA_VELDMAN_LI",
            ConditionId::Ota => "OTA",
            ConditionId::Li(_) => "LI",
            ConditionId::Main(_) => "MAIN",
        }
    }

    /// The parameter k, for the parameterised conditions.
    pub fn k(&self) -> Option<usize> {
        match self {
            ConditionId::Bondy(k) | ConditionId::Li(k) | ConditionId::Main(k) => Some(*k),
            _ => None,
        }
    }

    /// Whether the inequality is strict (`>` instead of `>=`).
    pub fn strict(&self) -> bool {
        matches!(self, ConditionId::Bondy(_))
    }
}

impl fmt::Display for ConditionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.k() {
            Some(k) => write!(f, "{}({k})", self.name()),
            None => write!(f, "{}", self.name()),
        }
    }
}

/// Verdict for one condition on one graph.
///
/// `lhs`/`rhs` are the two sides of the condition's inequality (for BONDY,
/// doubled). `margin = lhs - rhs` when the left side is finite; a
/// non-strict condition holds iff `margin >= 0`, a strict one iff
/// `margin >= 1`. `holds` implies `applicable`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConditionReport {
    pub id: ConditionId,
    pub applicable: bool,
    pub holds: bool,
    pub lhs: DegreeSum,
    pub rhs: i64,
    pub margin: Option<i64>,
    /// A minimizing independent set, when the left side is a degree sum.
    pub witness: Option<Vec<usize>>,
    /// For OTA only: the first l in [κ, α-1] whose bound fails.
    pub failing_l: Option<usize>,
}

/// Invariants needed by every checker, computed once per graph.
struct Ctx {
    n: usize,
    kappa: usize,
    alpha: usize,
    min_degree: usize,
}

impl Ctx {
    fn new(g: &Graph) -> Self {
        Ctx {
            n: g.n(),
            kappa: invariants::connectivity(g),
            alpha: invariants::independence_number(g),
            min_degree: g.min_degree(),
        }
    }
}

/// Evaluates one condition.
pub fn check(g: &Graph, id: ConditionId) -> Result<ConditionReport, InvariantError> {
    let ctx = Ctx::new(g);
    evaluate(g, &ctx, id)
}

/// Evaluates every condition, the parameterised ones for each `k` in
/// `k_min..=k_max`. Order: DIRAC, ORE, CHVATAL_ERDOS,
/// BAUER_BROERSMA_VELDMAN_LI, OTA, then BONDY(k), LI(k), MAIN(k) for each k
/// ascending.
pub fn check_all(
    g: &Graph,
    k_min: usize,
    k_max: usize,
) -> Result<Vec<ConditionReport>, InvariantError> {
    if k_min == 0 {
        return Err(InvariantError::InvalidK { k: 0 });
    }
    let ctx = Ctx::new(g);
    let mut out = Vec::new();
    for id in [
        ConditionId::Dirac,
        ConditionId::Ore,
        ConditionId::ChvatalErdos,
        ConditionId::BauerBroersmaVeldmanLi,
        ConditionId::Ota,
    ] {
        out.push(evaluate(g, &ctx, id)?);
    }
    for k in k_min..=k_max {
        for id in [ConditionId::Bondy(k), ConditionId::Li(k), ConditionId::Main(k)] {
            out.push(evaluate(g, &ctx, id)?);
        }
    }
    Ok(out)
}

fn sigma_of(g: &Graph, size: usize) -> Result<SigmaResult, InvariantError> {
    invariants::sigma_with_witness(g, size)
}

fn evaluate(g: &Graph, ctx: &Ctx, id: ConditionId) -> Result<ConditionReport, InvariantError> {
    if let Some(k) = id.k() {
        if k == 0 {
            return Err(InvariantError::InvalidK { k });
        }
    }
    let n = ctx.n as i64;
    let kappa = ctx.kappa as i64;
    let alpha = ctx.alpha as i64;
    let order_ok = ctx.n >= 3;
    let connected_enough = |k: usize| ctx.kappa >= k;

    let report = match id {
        ConditionId::Dirac => {
            let lhs = DegreeSum::Finite(ctx.min_degree as u64);
            let rhs = (n + 1) / 2; // δ >= ceil(n/2) is 2δ >= n in integers
            simple(id, order_ok, lhs, rhs, None)
        }
        ConditionId::Ore => {
            let s = sigma_of(g, 2)?;
            simple(id, order_ok, s.value, n, s.witness)
        }
        ConditionId::ChvatalErdos => {
            simple(id, order_ok, DegreeSum::Finite(ctx.kappa as u64), alpha, None)
        }
        ConditionId::Bondy(k) => {
            let s = sigma_of(g, k + 1)?;
            let doubled = match s.value {
                DegreeSum::Finite(v) => DegreeSum::Finite(2 * v),
                DegreeSum::Infinite => DegreeSum::Infinite,
            };
            let rhs = (k as i64 + 1) * (n - 1);
            simple(id, order_ok && connected_enough(k), doubled, rhs, s.witness)
        }
        ConditionId::BauerBroersmaVeldmanLi => {
            let s = sigma_of(g, 3)?;
            simple(id, order_ok && connected_enough(2), s.value, n + kappa, s.witness)
        }
        ConditionId::Ota => {
            let applicable = order_ok && connected_enough(2);
            // σ_{l+1} is infinite for l >= α, so only l in [κ, α-1] can bind.
            let ls: Vec<usize> = (ctx.kappa..ctx.alpha).collect();
            let sizes: Vec<usize> = ls.iter().map(|&l| l + 1).collect();
            let mut sigmas = invariants::sigma_many(g, &sizes)?;
            let mut failure = None;
            for &l in &ls {
                let s = sigmas.get(&(l + 1)).expect("requested").clone();
                let bound = n + (l as i64) * (l as i64 - 1);
                if !s.value.meets(bound) {
                    failure = Some((l, s, bound));
                    break;
                }
            }
            match failure {
                Some((l, s, bound)) => ConditionReport {
                    id,
                    applicable,
                    holds: false,
                    lhs: s.value,
                    rhs: bound,
                    margin: s.value.margin(bound),
                    witness: s.witness,
                    failing_l: Some(l),
                },
                None => {
                    // Report the boundary case l = α-1 when the range is
                    // nonempty; otherwise the condition held vacuously.
                    let (lhs, rhs, witness) = match ls.last() {
                        Some(&l) => {
                            let s = sigmas.remove(&(l + 1)).expect("requested");
                            (s.value, n + (l as i64) * (l as i64 - 1), s.witness)
                        }
                        None => (DegreeSum::Infinite, n + kappa * (kappa - 1), None),
                    };
                    ConditionReport {
                        id,
                        applicable,
                        holds: applicable,
                        lhs,
                        rhs,
                        margin: lhs.margin(rhs),
                        witness,
                        failing_l: None,
                    }
                }
            }
        }
        ConditionId::Li(k) => {
            let s = sigma_of(g, k + 1)?;
            let rhs = n + (k as i64 - 1) * (alpha - 1);
            simple(id, order_ok && connected_enough(k), s.value, rhs, s.witness)
        }
        ConditionId::Main(k) => {
            let s = sigma_of(g, k + 1)?;
            let rhs = n + kappa + (k as i64 - 2) * (alpha - 1);
            simple(id, order_ok && connected_enough(k), s.value, rhs, s.witness)
        }
    };
    debug_assert!(!report.holds || report.applicable);
    Ok(report)
}

fn simple(
    id: ConditionId,
    applicable: bool,
    lhs: DegreeSum,
    rhs: i64,
    witness: Option<Vec<usize>>,
) -> ConditionReport {
    let numeric = if id.strict() { lhs.exceeds(rhs) } else { lhs.meets(rhs) };
    ConditionReport {
        id,
        applicable,
        holds: applicable && numeric,
        lhs,
        rhs,
        margin: lhs.margin(rhs),
        witness,
        failing_l: None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn dirac_on_k4() {
        let r = check(&families::complete(4), ConditionId::Dirac).unwrap();
        assert!(r.applicable && r.holds);
        assert_eq!(r.lhs, DegreeSum::Finite(3));
        assert_eq!(r.rhs, 2);
        assert_eq!(r.margin, Some(1));
    }

    #[test]
    fn tiny_graphs_are_inapplicable() {
        // K2 satisfies every inequality vacuously but has no cycle at all;
        // the order hypothesis keeps the checkers silent.
        let k2 = families::complete(2);
        for id in [
            ConditionId::Dirac,
            ConditionId::Ore,
            ConditionId::ChvatalErdos,
            ConditionId::Main(1),
        ] {
            let r = check(&k2, id).unwrap();
            assert!(!r.applicable);
            assert!(!r.holds);
        }
    }

    #[test]
    fn chvatal_erdos_fails_on_petersen() {
        let r = check(&families::petersen(), ConditionId::ChvatalErdos).unwrap();
        assert!(r.applicable);
        assert!(!r.holds);
        assert_eq!(r.lhs, DegreeSum::Finite(3)); // kappa
        assert_eq!(r.rhs, 4); // alpha
    }

    #[test]
    fn every_condition_fails_on_petersen() {
        let reports = check_all(&families::petersen(), 1, 3).unwrap();
        assert_eq!(reports.len(), 5 + 3 * 3);
        for r in &reports {
            assert!(!r.holds, "{} unexpectedly holds", r.id);
        }
    }

    #[test]
    fn every_applicable_condition_holds_on_k5() {
        let reports = check_all(&families::complete(5), 1, 2).unwrap();
        for r in &reports {
            assert_eq!(r.holds, r.applicable, "{}", r.id);
        }
        // And the complete graph is 4-connected, so everything applies.
        assert!(reports.iter().all(|r| r.applicable));
    }

    #[test]
    fn c4_examples() {
        let c4 = families::cycle(4).unwrap();
        let dirac = check(&c4, ConditionId::Dirac).unwrap();
        assert!(dirac.holds);
        let ce = check(&c4, ConditionId::ChvatalErdos).unwrap();
        assert!(ce.holds);
        assert_eq!(ce.margin, Some(0));
    }

    #[test]
    fn bondy_uses_a_strict_doubled_bound_on_c4() {
        // C4: sigma_2 = 4, bound 2*sigma_2 = 8 > (1+1)(4-1) = 6 holds.
        let c4 = families::cycle(4).unwrap();
        let r = check(&c4, ConditionId::Bondy(1)).unwrap();
        assert_eq!(r.lhs, DegreeSum::Finite(8));
        assert_eq!(r.rhs, 6);
        assert!(r.holds);
        // C5: 2*sigma_2 = 8 > 2*4 = 8 is false: strictness matters.
        let c5 = families::cycle(5).unwrap();
        let r = check(&c5, ConditionId::Bondy(1)).unwrap();
        assert_eq!(r.margin, Some(0));
        assert!(!r.holds);
    }

    #[test]
    fn zero_k_is_rejected() {
        let g = families::complete(4);
        assert_eq!(
            check(&g, ConditionId::Main(0)),
            Err(InvariantError::InvalidK { k: 0 })
        );
        assert!(check_all(&g, 0, 2).is_err());
    }

    #[test]
    fn ota_vacuous_when_alpha_at_most_kappa() {
        // K5: alpha = 1 <= kappa = 4, so the quantifier range is empty.
        let r = check(&families::complete(5), ConditionId::Ota).unwrap();
        assert!(r.holds);
        assert_eq!(r.failing_l, None);
        assert_eq!(r.lhs, DegreeSum::Infinite);
    }

    #[test]
    fn ota_reports_first_failing_l_on_petersen() {
        let r = check(&families::petersen(), ConditionId::Ota).unwrap();
        assert!(!r.holds);
        assert_eq!(r.failing_l, Some(3));
        assert_eq!(r.lhs, DegreeSum::Finite(12)); // sigma_4
        assert_eq!(r.rhs, 16); // n + 3*2
    }

    #[test]
    fn witnesses_are_independent_sets_achieving_the_sigma() {
        let g = families::petersen();
        let r = check(&g, ConditionId::Main(3)).unwrap();
        let w = r.witness.unwrap();
        assert_eq!(w.len(), 4);
        for (i, &u) in w.iter().enumerate() {
            for &v in &w[i + 1..] {
                assert!(!g.has_edge(u, v));
            }
        }
        let total: u64 = w.iter().map(|&v| g.degree(v) as u64).sum();
        assert_eq!(DegreeSum::Finite(total), r.lhs);
    }
}
