//! Kernel bounds, verdict preservation, idempotence and the partition
//! identity behind the soundness argument.

use proptest::prelude::*;

use sparsekit_core::exactrank::{dependency_certificate, RankMode};
use sparsekit_core::gen::{random_cnf, random_hypergraph, CnfParams, HypergraphParams};
use sparsekit_core::kernel::{sparsify_detailed, sparsify_hypergraph, sparsify_nae_sat};
use sparsekit_core::model::{Certificate, CnfFormula, Hypergraph};
use sparsekit_core::oracle::{solve_hypergraph_2col, solve_nae, Limits, Verdict};
use sparsekit_core::rng::SplitMix64;

/// Brute-force 2-colorability, independent of the oracle module.
fn two_colorable(h: &Hypergraph) -> bool {
    let n = h.num_vertices();
    (0u32..1 << n).any(|mask| {
        h.edges().iter().all(|e| {
            let ones = e.iter().filter(|&&v| mask >> (v - 1) & 1 == 1).count();
            ones != 0 && ones != e.len()
        })
    })
}

fn hypergraph_strategy() -> impl Strategy<Value = Hypergraph> {
    (any::<u64>(), 0usize..60).prop_map(|(seed, edges)| {
        let p = HypergraphParams { num_vertices: 7, num_edges: edges, min_edge_size: 1, max_edge_size: 3 };
        random_hypergraph(&mut SplitMix64::new(seed), &p).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn bounds_and_subset(h in hypergraph_strategy(), seed in any::<u64>()) {
        for mode in [RankMode::Exact, RankMode::Modular { seed }] {
            let run = sparsify_detailed(&h, mode);
            prop_assert!(run.report.bounds_hold());
            prop_assert_eq!(run.output.num_vertices(), h.num_vertices());
            let kept: Vec<Vec<u32>> = h.edges().iter().zip(&run.kept).filter(|(_, &k)| k).map(|(e, _)| e.clone()).collect();
            prop_assert_eq!(run.output.edges(), kept.as_slice());
        }
    }

    #[test]
    fn verdict_preserved(h in hypergraph_strategy()) {
        let (out, _) = sparsify_hypergraph(&h, RankMode::Exact);
        prop_assert_eq!(two_colorable(&out), two_colorable(&h));
    }

    #[test]
    fn idempotent(h in hypergraph_strategy()) {
        let (once, _) = sparsify_hypergraph(&h, RankMode::Exact);
        let (twice, _) = sparsify_hypergraph(&once, RankMode::Exact);
        prop_assert_eq!(once, twice);
    }

    /// Any proper 2-coloring of the kernel properly colors the input, and
    /// plugging its color classes into each dropped edge's dependency
    /// keeps both sides of the partition identity equal.
    #[test]
    fn kernel_colorings_lift(h in hypergraph_strategy()) {
        let run = sparsify_detailed(&h, RankMode::Exact);
        let ans = solve_hypergraph_2col(&run.output, &Limits::default()).unwrap();
        if let Some(Certificate::Coloring(c)) = ans.certificate {
            prop_assert!(h.is_properly_two_colored(&c));
            let in_v1: Vec<bool> = c.iter().map(|&x| x == 1).collect();
            for layer in &run.layers {
                for d in layer.dropped() {
                    let cert = dependency_certificate(&layer.matrix, &layer.basis, d).unwrap();
                    prop_assert!(cert.identity_holds(&layer.matrix, &in_v1));
                }
            }
        }
    }
}

#[test]
fn k4_keeps_four_edges() {
    let h = Hypergraph::new(4, vec![vec![1, 2], vec![1, 3], vec![1, 4], vec![2, 3], vec![2, 4], vec![3, 4]]).unwrap();
    let (out, report) = sparsify_hypergraph(&h, RankMode::Exact);
    assert_eq!(out.edges(), &[vec![1, 2], vec![1, 3], vec![1, 4], vec![2, 3]]);
    assert_eq!(report.sizes[1].bound, 4);
    assert!(!two_colorable(&out));
}

#[test]
fn empty_and_degenerate_inputs() {
    let h = Hypergraph::new(5, vec![]).unwrap();
    assert_eq!(sparsify_hypergraph(&h, RankMode::Exact).0, h);
    let h = Hypergraph::new(3, vec![vec![1, 2], vec![]]).unwrap();
    let (out, report) = sparsify_hypergraph(&h, RankMode::Exact);
    assert!(report.short_circuited && out.has_empty_edge());
}

#[test]
fn nae_examples() {
    let lim = Limits::default();
    let mut all: Vec<Vec<i64>> = Vec::new();
    for signs in 0..8 {
        all.push((1..=3).map(|v| if signs >> (v - 1) & 1 == 1 { -v } else { v }).collect());
    }
    let refs: Vec<&[i64]> = all.iter().map(Vec::as_slice).collect();
    let f = CnfFormula::from_dimacs(3, &refs).unwrap();
    let (out, _) = sparsify_nae_sat(&f, RankMode::Exact);
    assert_eq!(solve_nae(&f, &lim).unwrap().verdict, Verdict::No);
    assert_eq!(solve_nae(&out, &lim).unwrap().verdict, Verdict::No);

    let single = CnfFormula::from_dimacs(2, &[&[1, 2]]).unwrap();
    assert_eq!(sparsify_nae_sat(&single, RankMode::Exact).0, single);
}

#[test]
fn nae_kernel_on_random_formulas() {
    let lim = Limits::default();
    let p = CnfParams { num_vars: 8, num_clauses: 40, min_width: 2, max_width: 4 };
    for seed in 0..200 {
        let f = random_cnf(&mut SplitMix64::new(seed), &p).unwrap();
        let (out, report) = sparsify_nae_sat(&f, RankMode::Exact);
        assert!(report.bounds_hold());
        assert!(out.clauses().iter().all(|c| f.clauses().contains(c)));
        assert_eq!(
            solve_nae(&f, &lim).unwrap().verdict,
            solve_nae(&out, &lim).unwrap().verdict,
            "seed {seed}"
        );
    }
}
