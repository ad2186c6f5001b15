//! Acceptance suite: one test per release criterion, each printing a
//! one-line verdict (visible with `--nocapture`) and asserting both the
//! exact expected values and its runtime budget.

use std::time::{Duration, Instant};

use hamcycle::conditions::{self, ConditionId};
use hamcycle::families::{self, G1Params, G2Params};
use hamcycle::insertion::{self, PathSystem, SubgraphRef};
use hamcycle::invariants::{self, DegreeSum};
use hamcycle::oracle::{self, CutVerdict};
use hamcycle::random::random_graph;
use hamcycle::{Graph, Rational, VertexSet};
use hamcycle_cli::campaign;
use hamcycle_cli::corpus::CorpusSpec;

const SEED: u64 = 20250810;

fn finish(criterion: &str, start: Instant, budget: Duration) {
    let elapsed = start.elapsed();
    println!("acceptance {criterion}: PASS in {elapsed:.2?} (budget {budget:.0?})");
    assert!(
        elapsed < budget,
        "{criterion} exceeded its runtime budget: {elapsed:.2?} >= {budget:.0?}"
    );
}

#[test]
fn criterion_1_first_family_arithmetic() {
    let start = Instant::now();
    let gen = families::generate_g1(G1Params { k: 4, kappa: 4, m: 5, n: 11 }).unwrap();
    let g = &gen.graph;
    assert_eq!(invariants::independence_number(g), 6);
    assert_eq!(invariants::connectivity(g), 4);
    assert_eq!(invariants::sigma(g, 5).unwrap(), DegreeSum::Finite(24));
    let main = conditions::check(g, ConditionId::Main(4)).unwrap();
    assert!(main.applicable);
    assert!(!main.holds);
    assert_eq!(main.margin, Some(-1));
    let ham = oracle::hamiltonian_cycle(g, None);
    assert!(ham.exact);
    assert!(ham.cycle.is_none());
    finish("1 (first-family arithmetic)", start, Duration::from_secs(1));
}

#[test]
fn criterion_2_first_family_sweep() {
    let start = Instant::now();
    let all = G1Params::enumerate_legal(14);
    assert!(!all.is_empty());
    for p in &all {
        let gen = families::generate_g1(*p).unwrap();
        let g = &gen.graph;
        let alpha = invariants::independence_number(g);
        let kappa = invariants::connectivity(g);
        let sigma = invariants::sigma(g, p.k + 1).unwrap();
        let bound = (p.n + kappa) as i64 + (p.k as i64 - 2) * (alpha as i64 - 1);
        assert_eq!(sigma, DegreeSum::Finite((bound - 1) as u64), "{p:?}");
        let ham = oracle::hamiltonian_cycle(g, None);
        assert!(ham.exact && ham.cycle.is_none(), "{p:?}");
    }
    println!("  swept {} parameter tuples", all.len());
    finish("2 (first-family sweep)", start, Duration::from_secs(60));
}

#[test]
fn criterion_3_second_family_arithmetic() {
    let start = Instant::now();
    let p = G2Params { kappa: 5, r: 4, k: 3, m: 12 };
    let gen = families::generate_g2(p).unwrap();
    let g = &gen.graph;
    let profile = invariants::profile(g, &[4, 17]).unwrap();
    assert_eq!(profile.n, 35);
    assert_eq!(profile.alpha, 17);
    assert_eq!(profile.kappa, 5);
    assert_eq!(profile.sigma[&4], DegreeSum::Finite(56));
    assert_eq!(profile.sigma[&17], DegreeSum::Finite(274));
    let main = conditions::check(g, ConditionId::Main(3)).unwrap();
    assert!(main.applicable && main.holds);
    assert_eq!(main.margin, Some(0));
    let ota = conditions::check(g, ConditionId::Ota).unwrap();
    assert!(ota.applicable && !ota.holds);
    assert_eq!(ota.failing_l, Some(16));
    let gap = ((p.kappa - p.k - 1) * (p.r - 2)) as i64 - 1;
    assert_eq!(gap, 1);
    assert_eq!(ota.margin, Some(-gap));
    finish("3 (second-family arithmetic)", start, Duration::from_secs(120));
}

#[test]
fn criterion_4_epsilon_tightness() {
    let start = Instant::now();
    for eps in [Rational::from_integer(1), Rational::new(1, 3).unwrap()] {
        let cert = families::generate_g1_epsilon(4, eps).unwrap();
        assert!(cert.holds, "certificate inequality must hold for eps={eps}");
        assert_eq!(cert.cut_verdict, CutVerdict::NonHamiltonian);
        assert_eq!(cert.cut.component_count, cert.params.m + 1);
        assert_eq!(cert.cut.cut.len(), cert.params.m);
    }
    finish("4 (epsilon tightness)", start, Duration::from_secs(1));
}

fn main_theorem_spec() -> CorpusSpec {
    CorpusSpec {
        n_min: 6,
        n_max: 14,
        samples_per_n: 75,
        probabilities: vec![(3, 10), (1, 2), (7, 10)],
        seed: SEED,
    }
}

#[test]
fn criterion_5_main_theorem_soundness_campaign() {
    let start = Instant::now();
    let spec = main_theorem_spec();
    assert!(spec.total() >= 2000);
    let result = campaign::verify_main_theorem(&spec, 1, 4);
    assert_eq!(result.graphs_tested, spec.total());
    assert!(result.passed(), "violations: {:?}", result.violations);
    println!("  {} samples, zero violations", result.graphs_tested);
    finish("5 (main-theorem soundness)", start, Duration::from_secs(600));
}

#[test]
fn criterion_6_lemma_campaign() {
    let start = Instant::now();
    let spec = CorpusSpec {
        n_min: 6,
        n_max: 12,
        samples_per_n: 150,
        probabilities: vec![(1, 4), (3, 10), (7, 20)],
        seed: SEED,
    };
    let result = campaign::verify_lemmas(&spec, None);
    assert!(
        result.graphs_tested >= 500,
        "corpus yielded too few connected non-Hamiltonian samples: {}",
        result.graphs_tested
    );
    assert!(result.passed(), "violations: {:?}", result.violations);
    println!(
        "  {} qualifying samples across the whole range, zero violations",
        result.graphs_tested
    );
    finish("6 (insertion-frame campaign)", start, Duration::from_secs(600));
}

/// Builds a path system on a random host: a base cycle through part of the
/// graph plus greedily chosen outside paths whose insertion-edge sets stay
/// pairwise disjoint. Construction guarantees both merge preconditions.
fn build_path_system(g: &Graph) -> Option<PathSystem> {
    let n = g.n();
    if n < 6 {
        return None;
    }
    // Base: a spanning cycle of the induced graph on the first s vertices.
    let s = n - 2;
    let keep = VertexSet::from_members(n, 0..s);
    let (sub, map) = g.induced_subgraph(&keep).ok()?;
    let base_sub = oracle::hamiltonian_cycle(&sub, None).cycle?;
    let order: Vec<usize> = base_sub.order().iter().map(|&v| map.old(v)).collect();
    let base = hamcycle::OrientedCycle::new(g, order).ok()?;

    let base_ref = SubgraphRef::from_cycle(&base);
    let xd = insertion::x_set(g, &base_ref);
    let mut used_edges: Vec<(usize, usize)> = Vec::new();
    let mut used_vertices = base.vertex_set();
    let mut paths: Vec<Vec<usize>> = Vec::new();
    for v in 0..n {
        if used_vertices.contains(v) || !xd.contains(v) {
            continue;
        }
        let v_edges = insertion::i_edges(g, v, &base_ref).ok()?;
        if v_edges.iter().any(|e| used_edges.contains(e)) {
            continue;
        }
        used_vertices.insert(v);
        // Try to grow a two-vertex path whose second vertex is also an
        // insertion candidate with non-overlapping edges.
        let mut path = vec![v];
        let mut path_edges = v_edges;
        for w in g.neighbors(v).iter() {
            if used_vertices.contains(w) || !xd.contains(w) {
                continue;
            }
            let w_edges = insertion::i_edges(g, w, &base_ref).ok()?;
            if w_edges.iter().any(|e| used_edges.contains(e)) {
                continue;
            }
            used_vertices.insert(w);
            path.push(w);
            path_edges.extend(w_edges);
            break;
        }
        used_edges.extend(path_edges);
        paths.push(path);
    }
    if paths.is_empty() {
        None
    } else {
        Some(PathSystem { base, paths })
    }
}

#[test]
fn criterion_7_merge_agrees_with_the_oracle() {
    let start = Instant::now();
    let mut built = 0u64;
    let mut attempt = 0u64;
    while built < 200 {
        assert!(attempt < 10_000, "generator failed to reach 200 instances");
        let n = 8 + (attempt % 5) as usize; // hosts of order 8..=12
        let p = [(1, 2), (3, 5), (7, 10)][(attempt / 5) as usize % 3];
        let g = random_graph(n, p.0, p.1, SEED ^ 0x7A7A, attempt).unwrap();
        attempt += 1;
        let Some(sys) = build_path_system(&g) else { continue };
        built += 1;

        let merged = insertion::merge_insert(&g, &sys, invariants::independence_number(&g))
            .unwrap_or_else(|e| panic!("merge failed on a valid system: {e}"));
        // The merge spans exactly the base plus the paths.
        let mut expected = sys.base.vertex_set();
        for p in &sys.paths {
            for &v in p {
                expected.insert(v);
            }
        }
        assert_eq!(merged.vertex_set(), expected);
        // Independent confirmation: the induced span is Hamiltonian.
        let (span, _) = g.induced_subgraph(&expected).unwrap();
        let ham = oracle::hamiltonian_cycle(&span, None);
        assert!(ham.exact && ham.cycle.is_some());
    }
    println!("  200 merged systems, all spanning and oracle-confirmed");
    finish("7 (merge/oracle agreement)", start, Duration::from_secs(120));
}

#[test]
fn criterion_8_implication_scan() {
    let start = Instant::now();
    let spec = main_theorem_spec();
    let result = campaign::implication_scan(&spec, 1, 4);
    assert_eq!(result.graphs_tested, spec.total());
    assert!(result.passed(), "violations: {:?}", result.violations);
    println!("  {} samples, zero violations", result.graphs_tested);
    finish("8 (bound implication scan)", start, Duration::from_secs(600));
}

/// Reference σ_k by direct enumeration of independent k-subsets.
fn sigma_by_enumeration(g: &Graph, k: usize) -> DegreeSum {
    fn go(g: &Graph, k: usize, start: usize, chosen: &mut Vec<usize>, best: &mut Option<u64>) {
        if chosen.len() == k {
            let total = chosen.iter().map(|&v| g.degree(v) as u64).sum();
            *best = Some(best.map_or(total, |b: u64| b.min(total)));
            return;
        }
        for v in start..g.n() {
            if chosen.iter().all(|&u| !g.has_edge(u, v)) {
                chosen.push(v);
                go(g, k, v + 1, chosen, best);
                chosen.pop();
            }
        }
    }
    let mut best = None;
    go(g, k, 0, &mut Vec::new(), &mut best);
    best.map_or(DegreeSum::Infinite, DegreeSum::Finite)
}

#[test]
fn criterion_9_sigma_reduction_equivalence() {
    let start = Instant::now();
    let spec = CorpusSpec {
        n_min: 4,
        n_max: 12,
        samples_per_n: 12,
        probabilities: vec![(3, 10), (1, 2), (7, 10)],
        seed: SEED,
    };
    assert!(spec.total() >= 300);
    let mut checked = 0u64;
    for sample in spec.samples() {
        for k in 1..=5 {
            let fast = invariants::sigma(&sample.graph, k).unwrap();
            let slow = sigma_by_enumeration(&sample.graph, k);
            assert_eq!(fast, slow, "sigma_{k} mismatch on {:?}", sample.graph);
        }
        checked += 1;
    }
    println!("  {checked} graphs, five sizes each, all equal");
    finish("9 (sigma dual-route equivalence)", start, Duration::from_secs(120));
}
