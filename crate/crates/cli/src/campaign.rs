//! Verification campaigns over random corpora.
//!
//! Each campaign checks a proven implication on every sample, so a clean
//! run certifies the implementation rather than the mathematics: any
//! violation is a bug reproducer, serialized with the full graph.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use hamcycle::conditions::{self, ConditionId};
use hamcycle::formats;
use hamcycle::insertion;
use hamcycle::invariants;
use hamcycle::oracle;
use serde_json::{json, Value};

use crate::corpus::{CorpusSpec, Sample};

/// A failed check with a standalone reproducer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    /// Which check failed, e.g. `main-implies-hamiltonian`.
    pub check: String,
    /// The offending graph in graph6.
    pub graph6: String,
    pub detail: String,
}

/// Outcome of a campaign.
///
/// The canonical JSON serialization is byte-identical across runs with the
/// same spec and seed; wall-clock time is kept out of it on purpose.
#[derive(Clone, Debug)]
pub struct CampaignResult {
    pub graphs_tested: u64,
    /// Samples not in the campaign's scope, by reason.
    pub skipped: BTreeMap<&'static str, u64>,
    pub violations: Vec<Violation>,
    pub elapsed: Duration,
}

impl CampaignResult {
    fn new() -> Self {
        CampaignResult {
            graphs_tested: 0,
            skipped: BTreeMap::new(),
            violations: Vec::new(),
            elapsed: Duration::ZERO,
        }
    }

    fn skip(&mut self, reason: &'static str) {
        *self.skipped.entry(reason).or_insert(0) += 1;
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    /// Deterministic JSON form (no timing).
    pub fn canonical_json(&self) -> Value {
        json!({
            "graphs_tested": self.graphs_tested,
            "skipped": self.skipped.iter().map(|(k, v)| (k.to_string(), json!(v))).collect::<serde_json::Map<_, _>>(),
            "violations": self.violations.iter().map(|v| json!({
                "check": v.check,
                "graph6": v.graph6,
                "detail": v.detail,
            })).collect::<Vec<_>>(),
        })
    }
}

fn graph6_of(sample: &Sample) -> String {
    formats::format_graph6(&sample.graph).expect("corpus graphs fit graph6")
}

/// For every sample and every `k` in range with the graph `k`-connected:
/// if the main degree-sum condition holds, the exact oracle must find a
/// Hamiltonian cycle. The implication is a theorem, so any violation is an
/// implementation bug.
pub fn verify_main_theorem(spec: &CorpusSpec, k_min: usize, k_max: usize) -> CampaignResult {
    run_condition_campaign(spec, k_min, k_max, false)
}

/// For every sample and every `k` in range: if the strict half-bound
/// condition holds, then either the connectivity/independence comparison or
/// the main condition must hold as well (the inequality chain between the
/// two degree-sum bounds).
pub fn implication_scan(spec: &CorpusSpec, k_min: usize, k_max: usize) -> CampaignResult {
    run_condition_campaign(spec, k_min, k_max, true)
}

fn run_condition_campaign(
    spec: &CorpusSpec,
    k_min: usize,
    k_max: usize,
    chain_only: bool,
) -> CampaignResult {
    let start = Instant::now();
    let mut result = CampaignResult::new();
    for sample in spec.samples() {
        result.graphs_tested += 1;
        let g = &sample.graph;
        let reports = conditions::check_all(g, k_min, k_max).expect("k >= 1");
        let ce_holds = reports
            .iter()
            .find(|r| r.id == ConditionId::ChvatalErdos)
            .map(|r| r.holds)
            .unwrap_or(false);
        let mut ham: Option<bool> = None; // resolved lazily, oracle calls are the expensive part
        for k in k_min..=k_max {
            let main = reports
                .iter()
                .find(|r| r.id == ConditionId::Main(k))
                .expect("report present");
            if chain_only {
                let bondy = reports
                    .iter()
                    .find(|r| r.id == ConditionId::Bondy(k))
                    .expect("report present");
                if bondy.applicable && bondy.holds && !(ce_holds || main.holds) {
                    result.violations.push(Violation {
                        check: "bondy-implies-ce-or-main".into(),
                        graph6: graph6_of(&sample),
                        detail: format!(
                            "k={k}: strict bound holds but neither consequence does (seed {}, n {}, p {}/{}, index {})",
                            spec.seed, sample.n, sample.p.0, sample.p.1, sample.index
                        ),
                    });
                }
            } else if main.applicable && main.holds {
                let is_ham = *ham.get_or_insert_with(|| {
                    let r = oracle::hamiltonian_cycle(g, None);
                    assert!(r.exact, "oracle must stay exact at corpus scale");
                    r.cycle.is_some()
                });
                if !is_ham {
                    result.violations.push(Violation {
                        check: "main-implies-hamiltonian".into(),
                        graph6: graph6_of(&sample),
                        detail: format!(
                            "k={k}: condition holds with margin {:?} but no Hamiltonian cycle exists (seed {}, n {}, p {}/{}, index {})",
                            main.margin, spec.seed, sample.n, sample.p.0, sample.p.1, sample.index
                        ),
                    });
                }
            }
        }
    }
    result.elapsed = start.elapsed();
    result
}

/// Structural checks of the insertion machinery on connected
/// non-Hamiltonian samples with exact longest cycles: every attachment arc
/// contains a non-insertible vertex, the harvested vertices together with a
/// component vertex are independent, their cycle degrees obey the gap
/// bound, and no forbidden crossing configuration appears.
///
/// Samples that are disconnected, Hamiltonian or acyclic are out of scope
/// and counted in `skipped`. When `target` is set, the campaign stops after
/// that many qualifying samples.
pub fn verify_lemmas(spec: &CorpusSpec, target: Option<u64>) -> CampaignResult {
    let start = Instant::now();
    let mut result = CampaignResult::new();
    for sample in spec.samples() {
        if target.is_some_and(|t| result.graphs_tested >= t) {
            break;
        }
        let g = &sample.graph;
        if !g.is_connected() {
            result.skip("disconnected");
            continue;
        }
        let ham = oracle::hamiltonian_cycle(g, None);
        assert!(ham.exact);
        if ham.cycle.is_some() {
            result.skip("hamiltonian");
            continue;
        }
        let long = oracle::longest_cycle(g, None);
        assert!(long.exact);
        let Some(cycle) = long.cycle else {
            result.skip("acyclic");
            continue;
        };
        result.graphs_tested += 1;
        let alpha = invariants::independence_number(g);
        let g6 = graph6_of(&sample);
        let on_cycle = cycle.vertex_set();
        let mut remaining = on_cycle.complement();
        while let Some(seed_vertex) = remaining.first() {
            let h0 = g.reachable_within(seed_vertex, &on_cycle.complement());
            remaining.difference_with(&h0);
            let frame = match insertion::build_frame(g, &cycle, &h0, alpha) {
                Ok(f) => f,
                Err(e) => {
                    result.violations.push(Violation {
                        check: "non-insertible-exists".into(),
                        graph6: g6.clone(),
                        detail: format!("component {:?}: {e}", h0.to_vec()),
                    });
                    continue;
                }
            };
            for (a, b) in frame.independence_violations(g) {
                result.violations.push(Violation {
                    check: "frame-independence".into(),
                    graph6: g6.clone(),
                    detail: format!("adjacent pair ({a},{b}) in the harvested set"),
                });
            }
            for i in frame.degree_bound_violations(g, alpha) {
                let att = &frame.attachments[i];
                result.violations.push(Violation {
                    check: "frame-degree-bound".into(),
                    graph6: g6.clone(),
                    detail: format!("attachment {} exceeds |gap|+alpha-1", att.u),
                });
            }
            match insertion::crossing_scan(g, &cycle, &h0, alpha) {
                Ok(scan) if scan.is_empty() => {}
                Ok(scan) => {
                    result.violations.push(Violation {
                        check: "crossing-scan".into(),
                        graph6: g6.clone(),
                        detail: format!("{} forbidden configurations: {:?}", scan.len(), scan),
                    });
                }
                Err(e) => {
                    result.violations.push(Violation {
                        check: "crossing-scan".into(),
                        graph6: g6.clone(),
                        detail: format!("scan failed: {e}"),
                    });
                }
            }
        }
    }
    result.elapsed = start.elapsed();
    result
}
