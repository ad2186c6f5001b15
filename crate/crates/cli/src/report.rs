//! The JSON analysis report.
//!
//! Schema (field names are stable):
//!
//! ```json
//! {
//!   "graph":      {"n": 5, "format": "graph6", "data": "D?{"},
//!   "invariants": {"n": 5, "kappa": 1, "alpha": 4, "min_degree": 1,
//!                  "sigma": {"2": 2, "5": "inf"}},
//!   "conditions": [{"id": "MAIN", "k": 4, "applicable": true, "holds": false,
//!                   "lhs": 24, "rhs": 25, "margin": -1, "witness": [0, 5]}],
//!   "oracle":     {"hamiltonian": false, "exact": true, "cycle": null}
//! }
//! ```
//!
//! `lhs` is `"inf"` when no independent set of the required size exists (and
//! then `margin` is null). OTA entries carry an extra `detail` field with
//! the failing quantifier value when the condition fails. Graphs too large
//! for graph6 fall back to the edge-list format.

use hamcycle::conditions::{self, ConditionReport};
use hamcycle::formats;
use hamcycle::invariants::{self, DegreeSum};
use hamcycle::oracle;
use hamcycle::Graph;
use serde_json::{json, Value};

fn degree_sum_json(v: DegreeSum) -> Value {
    match v {
        DegreeSum::Finite(x) => json!(x),
        DegreeSum::Infinite => json!("inf"),
    }
}

fn graph_json(g: &Graph) -> Value {
    match formats::format_graph6(g) {
        Ok(data) => json!({"n": g.n(), "format": "graph6", "data": data}),
        Err(_) => json!({
            "n": g.n(),
            "format": "edge-list",
            "data": formats::format_edge_list(g),
        }),
    }
}

fn condition_json(r: &ConditionReport) -> Value {
    let mut obj = json!({
        "id": r.id.name(),
        "k": r.id.k(),
        "applicable": r.applicable,
        "holds": r.holds,
        "lhs": degree_sum_json(r.lhs),
        "rhs": r.rhs,
        "margin": r.margin,
        "witness": r.witness,
    });
    if let Some(l) = r.failing_l {
        obj["detail"] = json!(l);
    }
    obj
}

/// Builds the full analysis report. The oracle runs within `oracle_budget`
/// search nodes; an inconclusive search reports `hamiltonian: null`.
pub fn analysis_report(g: &Graph, k_min: usize, k_max: usize, oracle_budget: u64) -> Value {
    let sigma_sizes: Vec<usize> = {
        let mut v = vec![2, 3];
        v.extend((k_min..=k_max).map(|k| k + 1));
        v.sort_unstable();
        v.dedup();
        v
    };
    let profile = invariants::profile(g, &sigma_sizes).expect("sizes >= 2");
    let sigma: serde_json::Map<String, Value> = profile
        .sigma
        .iter()
        .map(|(k, v)| (k.to_string(), degree_sum_json(*v)))
        .collect();

    let reports = conditions::check_all(g, k_min, k_max).expect("k >= 1");

    let search = oracle::hamiltonian_cycle(g, Some(oracle_budget));
    let oracle_json = match (&search.cycle, search.exact) {
        (Some(c), _) => json!({"hamiltonian": true, "exact": true, "cycle": c.order()}),
        (None, true) => json!({"hamiltonian": false, "exact": true, "cycle": null}),
        (None, false) => json!({"hamiltonian": null, "exact": false, "cycle": null}),
    };

    json!({
        "graph": graph_json(g),
        "invariants": {
            "n": profile.n,
            "kappa": profile.kappa,
            "alpha": profile.alpha,
            "min_degree": profile.min_degree,
            "sigma": sigma,
        },
        "conditions": reports.iter().map(condition_json).collect::<Vec<_>>(),
        "oracle": oracle_json,
    })
}
