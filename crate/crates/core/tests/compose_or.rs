//! OR-equivalence of the three compositions at minimum scale, with the
//! constructive witnesses checked on every YES batch.

use sparsekit_core::compose::{
    compose_dominating_set, compose_four_coloring, compose_hamiltonicity, pad_batch,
};
use sparsekit_core::gen::{
    random_batch, random_bipartite_ham, random_eq_col_rbds, random_tsd, RbdsParams, TsdParams,
};
use sparsekit_core::model::{check_certificate, Certificate, DecisionInstance};
use sparsekit_core::oracle::{
    solve_col_rbds, solve_directed_ham_cycle, solve_dom_set, solve_graph_coloring,
    solve_ham_path_st, solve_tsd, Limits, Verdict,
};
use sparsekit_core::rng::SplitMix64;

const TRIALS: u64 = 12;

#[test]
fn four_coloring_or() {
    let lim = Limits::default();
    let p = TsdParams { m: 3, n: 2, density: 600 };
    for seed in 0..TRIALS {
        let mut rng = SplitMix64::new(seed);
        let inputs = random_batch(&mut rng, 4, 0.5, |r, plant| random_tsd(r, &p, plant).unwrap());
        let answers: Vec<_> = inputs.iter().map(|x| solve_tsd(x, &lim)).collect();
        let batch = pad_batch(inputs).unwrap();
        let (g, layout, _) = compose_four_coloring(&batch).unwrap();
        assert_eq!(g.num_vertices(), 70);
        let out = solve_graph_coloring(&g, 4, &lim);
        assert_ne!(out.verdict, Verdict::Timeout);
        let or = answers.iter().any(|a| a.verdict == Verdict::Yes);
        assert_eq!(out.verdict == Verdict::Yes, or, "seed {seed}");
        if let Some(pos) = answers.iter().position(|a| a.verdict == Verdict::Yes) {
            let Some(Certificate::Coloring(c)) = &answers[pos].certificate else { panic!() };
            let (i, j) = batch.coordinates(pos);
            let w = layout.witness(&batch, i, j, c).unwrap();
            assert_eq!(check_certificate(&DecisionInstance::FourColor(g.clone()), &Certificate::Coloring(w)), Ok(true));
        }
    }
}

#[test]
fn hamiltonicity_or() {
    let lim = Limits::default();
    for seed in 0..TRIALS {
        let m = 1 + (seed % 2) as usize;
        let mut rng = SplitMix64::new(seed);
        let inputs = random_batch(&mut rng, 4, 0.5, |r, plant| random_bipartite_ham(r, m, 500, plant).unwrap());
        let answers: Vec<_> = inputs.iter().map(|x| solve_ham_path_st(x, &lim)).collect();
        let batch = pad_batch(inputs).unwrap();
        let (d, layout, _) = compose_hamiltonicity(&batch).unwrap();
        assert_eq!(d.num_vertices() as usize, 3 * (2 * m + 1) * 2 + 9);
        let out = solve_directed_ham_cycle(&d, &lim);
        assert_ne!(out.verdict, Verdict::Timeout);
        if let Some(Certificate::HamCycle(c)) = &out.certificate {
            assert!(layout.traversals(c).is_some(), "seed {seed}");
        }
        let or = answers.iter().any(|a| a.verdict == Verdict::Yes);
        assert_eq!(out.verdict == Verdict::Yes, or, "seed {seed}");
        if let Some(pos) = answers.iter().position(|a| a.verdict == Verdict::Yes) {
            let Some(Certificate::HamPath(path)) = &answers[pos].certificate else { panic!() };
            let (i, j) = batch.coordinates(pos);
            let cyc = layout.witness(&batch, i, j, path).unwrap();
            assert!(layout.traversals(&cyc).is_some());
            assert_eq!(check_certificate(&DecisionInstance::DirectedHamCycle(d.clone()), &Certificate::HamCycle(cyc)), Ok(true));
        }
    }
}

#[test]
fn dominating_set_or() {
    let lim = Limits::default();
    let p = RbdsParams { k: 2, class_size: 2, blue: 3, density: 250 };
    for seed in 0..TRIALS {
        let mut rng = SplitMix64::new(seed);
        let inputs = random_batch(&mut rng, 4, 0.5, |r, plant| random_eq_col_rbds(r, &p, plant).unwrap());
        let answers: Vec<_> = inputs.iter().map(|x| solve_col_rbds(x, &lim)).collect();
        let batch = pad_batch(inputs).unwrap();
        let (g, budget, layout, _) = compose_dominating_set(&batch).unwrap();
        assert_eq!((g.num_vertices(), budget), (39, 4));
        let or = answers.iter().any(|a| a.verdict == Verdict::Yes);
        for connected in [false, true] {
            let out = solve_dom_set(&g, budget, connected, &lim).unwrap();
            assert_ne!(out.verdict, Verdict::Timeout);
            assert_eq!(out.verdict == Verdict::Yes, or, "seed {seed} connected {connected}");
        }
        if let Some(pos) = answers.iter().position(|a| a.verdict == Verdict::Yes) {
            let Some(Certificate::DomSet(set)) = &answers[pos].certificate else { panic!() };
            let (i, j) = batch.coordinates(pos);
            let w = layout.unwrap().witness(&batch, i, j, set).unwrap();
            let cert = Certificate::DomSet(w);
            assert_eq!(check_certificate(&DecisionInstance::ConnectedDomSet { graph: g.clone(), budget }, &cert), Ok(true));
        }
    }
}
