//! A deliberately broken transformation must be caught by the harness.

use sparsekit::harness::{verify_with, HarnessConfig, Transformation};
use sparsekit_core::model::{DecisionInstance, Digraph, Graph, Hypergraph};
use sparsekit_core::ReductionTrace;

/// Drops the arc `end -> start` that closes every Hamiltonian cycle.
fn drop_closing_arc(inst: &mut DecisionInstance, trace: &ReductionTrace) {
    let DecisionInstance::DirectedHamCycle(d) = inst else { return };
    let (end, start) = (trace.lookup("end").unwrap(), trace.lookup("start").unwrap());
    let arcs = d.arcs().iter().copied().filter(|&a| a != (end, start)).collect();
    *d = Digraph::new(d.num_vertices(), arcs).unwrap();
}

/// Drops the pendant edge `s'`–`s` of the selector hub.
fn drop_hub_edge(inst: &mut DecisionInstance, trace: &ReductionTrace) {
    let (s_prime, s) = (trace.lookup("s'").unwrap(), trace.lookup("s").unwrap());
    let cut = |g: &Graph| {
        let e = (s_prime.min(s), s_prime.max(s));
        Graph::new(g.num_vertices(), g.edges().iter().copied().filter(|&x| x != e).collect()).unwrap()
    };
    match inst {
        DecisionInstance::DomSet { graph, .. } | DecisionInstance::ConnectedDomSet { graph, .. } => *graph = cut(graph),
        _ => {}
    }
}

#[test]
fn broken_ham_composition_is_reported() {
    let cfg = HarnessConfig { trials: 20, m: 2, n: 3, ..HarnessConfig::new(Transformation::ComposeHamcycle) };
    let report = verify_with(&cfg, Some(&drop_closing_arc)).unwrap();
    assert!(!report.disagreements.is_empty());
    assert_eq!(report.exit_code(), 1);
    let d = &report.disagreements[0];
    assert!(d.replay.contains(&format!("--replay {}", d.trial_seed)));
    assert!(d.detail.contains("expected yes"), "{}", d.detail);
}

#[test]
fn broken_domset_composition_is_reported() {
    let cfg = HarnessConfig { trials: 20, ..HarnessConfig::new(Transformation::ComposeDomset) };
    let report = verify_with(&cfg, Some(&drop_hub_edge)).unwrap();
    assert!(!report.disagreements.is_empty());
    assert!(!report.success());
}

#[test]
fn broken_kernel_is_reported() {
    let poison = |inst: &mut DecisionInstance, _: &ReductionTrace| {
        if let DecisionInstance::TwoColor(h) = inst {
            let mut edges = h.edges().to_vec();
            edges.push(vec![]);
            *h = Hypergraph::new(h.num_vertices(), edges).unwrap();
        }
    };
    let cfg = HarnessConfig { trials: 50, ..HarnessConfig::new(Transformation::KernelHyp) };
    let report = verify_with(&cfg, Some(&poison)).unwrap();
    assert_eq!(report.disagreements.len() as u64, report.yes_trials);
    assert!(report.yes_trials > 0);
}

#[test]
fn intact_runs_have_no_disagreements() {
    let cfg = HarnessConfig { trials: 20, m: 2, n: 3, ..HarnessConfig::new(Transformation::ComposeHamcycle) };
    let report = verify_with(&cfg, None).unwrap();
    assert!(report.success(), "{}", report.summary());
    assert_eq!(report.exit_code(), 0);
}
