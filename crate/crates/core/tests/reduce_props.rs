//! Verdict preservation of the stand-alone reductions.

use sparsekit_core::gen::{random_cnf, random_digraph, CnfParams};
use sparsekit_core::model::{CnfFormula, Digraph};
use sparsekit_core::oracle::{
    solve_directed_ham_cycle, solve_ham_cycle, solve_hypergraph_2col, solve_nae, solve_sat, solve_tsd,
    Limits, Verdict,
};
use sparsekit_core::reduce::{
    cnfsat_to_naesat, directed_hc_to_undirected, naesat3_to_tsd, naesat_to_hypergraph,
};
use sparsekit_core::rng::SplitMix64;

/// NAE satisfiability by plain enumeration.
fn nae_brute(f: &CnfFormula) -> bool {
    let n = f.num_vars();
    (0u32..1 << n).any(|mask| {
        let a: Vec<bool> = (0..n).map(|i| mask >> i & 1 == 1).collect();
        f.is_nae_satisfied_by(&a)
    })
}

fn sat_brute(f: &CnfFormula) -> bool {
    let n = f.num_vars();
    (0u32..1 << n).any(|mask| {
        let a: Vec<bool> = (0..n).map(|i| mask >> i & 1 == 1).collect();
        f.is_satisfied_by(&a)
    })
}

#[test]
fn nae_to_hypergraph_examples() {
    let f = CnfFormula::from_dimacs(2, &[&[1, 2]]).unwrap();
    let (h, trace) = naesat_to_hypergraph(&f);
    assert_eq!(h.edges(), &[vec![1, 3], vec![1, 2], vec![3, 4]]);
    assert_eq!(trace.output_vertices, 4);
    let empty = CnfFormula::from_dimacs(2, &[]).unwrap();
    let (h, _) = naesat_to_hypergraph(&empty);
    assert_eq!(h.num_edges(), 2);
    assert_eq!(solve_hypergraph_2col(&h, &Limits::default()).unwrap().verdict, Verdict::Yes);
}

#[test]
fn nae_to_hypergraph_random() {
    let lim = Limits::default();
    for seed in 0..200u64 {
        let mut rng = SplitMix64::new(seed);
        let n = 1 + rng.below(8) as u32;
        let p = CnfParams { num_vars: n, num_clauses: rng.below(12) as usize, min_width: 1, max_width: n.min(4) as usize };
        let f = random_cnf(&mut rng, &p).unwrap();
        let (h, _) = naesat_to_hypergraph(&f);
        assert_eq!(h.num_vertices(), 2 * n);
        let want = nae_brute(&f);
        assert_eq!(solve_hypergraph_2col(&h, &lim).unwrap().verdict.decided(), Some(want), "seed {seed}");
        assert_eq!(solve_nae(&f, &lim).unwrap().verdict.decided(), Some(want), "seed {seed}");
    }
}

#[test]
fn cnf_to_nae() {
    let f = CnfFormula::from_dimacs(1, &[&[1], &[-1]]).unwrap();
    let g = cnfsat_to_naesat(&f);
    assert_eq!(g, CnfFormula::from_dimacs(2, &[&[1, 2], &[-1, 2]]).unwrap());
    assert!(!nae_brute(&g));
    let lim = Limits::default();
    for seed in 0..200u64 {
        let mut rng = SplitMix64::new(seed);
        let n = 3 + rng.below(6) as u32;
        let p = CnfParams { num_vars: n, num_clauses: 1 + rng.below(20) as usize, min_width: 3, max_width: 3 };
        let f = random_cnf(&mut rng, &p).unwrap();
        let g = cnfsat_to_naesat(&f);
        assert_eq!(g.num_vars(), n + 1);
        assert_eq!(g.max_clause_size(), f.max_clause_size() + 1);
        let want = sat_brute(&f);
        assert_eq!(nae_brute(&g), want, "seed {seed}");
        assert_eq!(solve_sat(&f, &lim).unwrap().verdict.decided(), Some(want));
        assert_eq!(solve_nae(&g, &lim).unwrap().verdict.decided(), Some(want));
    }
}

#[test]
fn nae3_to_tsd() {
    let lim = Limits::default();
    let f = CnfFormula::from_dimacs(3, &[&[1, 2, 3]]).unwrap();
    let (t, _) = naesat3_to_tsd(&f).unwrap();
    assert_eq!(t.signature(), (4, 6));
    assert_eq!(solve_tsd(&t, &lim).verdict, Verdict::Yes);

    for seed in 0..200u64 {
        let mut rng = SplitMix64::new(seed);
        let n = 1 + rng.below(5) as u32;
        let p = CnfParams { num_vars: n, num_clauses: rng.below(7) as usize, min_width: 1, max_width: n.min(3) as usize };
        let f = random_cnf(&mut rng, &p).unwrap();
        let (t, trace) = naesat3_to_tsd(&f).unwrap();
        assert!(trace.is_injective());
        assert_eq!(solve_tsd(&t, &lim).verdict.decided(), Some(nae_brute(&f)), "seed {seed}");
    }
    let wide = CnfFormula::from_dimacs(4, &[&[1, 2, 3, 4]]).unwrap();
    assert!(naesat3_to_tsd(&wide).is_err());
}

#[test]
fn karp_transformation() {
    let lim = Limits::default();
    let tri = Digraph::new(3, vec![(1, 2), (2, 3), (3, 1)]).unwrap();
    let (g, _) = directed_hc_to_undirected(&tri);
    assert_eq!((g.num_vertices(), g.num_edges()), (9, 9));
    assert_eq!(solve_ham_cycle(&g, &lim).verdict, Verdict::Yes);

    let one = Digraph::new(1, vec![]).unwrap();
    let (g, _) = directed_hc_to_undirected(&one);
    assert_eq!((g.num_vertices(), g.num_edges()), (3, 2));
    assert_eq!(solve_ham_cycle(&g, &lim).verdict, Verdict::No);
    assert_eq!(solve_directed_ham_cycle(&one, &lim).verdict, Verdict::No);

    for seed in 0..200u64 {
        let mut rng = SplitMix64::new(seed);
        let n = 1 + rng.below(7) as u32;
        let plant = rng.coin();
        let d = random_digraph(&mut rng, n, 300, plant);
        let (g, trace) = directed_hc_to_undirected(&d);
        assert_eq!(g.num_vertices(), 3 * n);
        assert!(trace.is_injective());
        assert_eq!(
            solve_directed_ham_cycle(&d, &lim).verdict,
            solve_ham_cycle(&g, &lim).verdict,
            "seed {seed}"
        );
    }
}
