//! Column bases against an independent dense rational elimination.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;

use sparsekit_core::exactrank::{
    column_basis, dependency_certificate, InclusionMatrix, RankMode,
};
use sparsekit_core::model::Hypergraph;

/// Rank of the columns `cols` of `m` by dense Gauss-Jordan over Q.
fn dense_rank(m: &InclusionMatrix, cols: &[usize]) -> usize {
    let rows = m.num_rows();
    let mut a: Vec<Vec<BigRational>> = (0..rows)
        .map(|r| {
            cols.iter()
                .map(|&c| if m.entry(r, c) { BigRational::one() } else { BigRational::zero() })
                .collect()
        })
        .collect();
    let mut rank = 0;
    for col in 0..cols.len() {
        let Some(p) = (rank..rows).find(|&r| !a[r][col].is_zero()) else { continue };
        a.swap(rank, p);
        let pivot = a[rank][col].clone();
        for r in 0..rows {
            if r != rank && !a[r][col].is_zero() {
                let f = &a[r][col] / &pivot;
                for c in col..cols.len() {
                    let sub = &f * &a[rank][c];
                    a[r][c] -= sub;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Greedy-leftmost basis from repeated dense rank computations.
fn dense_greedy(m: &InclusionMatrix) -> Vec<usize> {
    let mut kept = Vec::new();
    for c in 0..m.num_columns() {
        kept.push(c);
        if dense_rank(m, &kept) < kept.len() {
            kept.pop();
        }
    }
    kept
}

fn edges_strategy(n: u32, r: usize, max_edges: usize) -> impl Strategy<Value = Hypergraph> {
    prop::collection::vec(prop::sample::subsequence((1..=n).collect::<Vec<u32>>(), r), 1..=max_edges)
        .prop_map(move |edges| Hypergraph::new(n, edges).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn exact_basis_matches_dense_oracle(h in (2usize..=3).prop_flat_map(|r| edges_strategy(6, r, 12))) {
        let r = h.max_edge_size();
        let m = InclusionMatrix::build(&h, r).unwrap();
        let exact = column_basis(&m, RankMode::Exact);
        prop_assert_eq!(&exact.kept, &dense_greedy(&m));
        prop_assert_eq!(exact.rank(), dense_rank(&m, &(0..m.num_columns()).collect::<Vec<_>>()));
    }

    #[test]
    fn modular_basis_within_exact(h in (2usize..=4).prop_flat_map(|r| edges_strategy(7, r, 20)), seed in any::<u64>()) {
        let m = InclusionMatrix::build(&h, h.max_edge_size()).unwrap();
        let exact = column_basis(&m, RankMode::Exact);
        let modular = column_basis(&m, RankMode::Modular { seed });
        prop_assert!(modular.kept.iter().all(|c| exact.contains(*c)));
        // a 61-bit prime never divides the small minors involved here
        prop_assert_eq!(modular.kept, exact.kept);
    }

    #[test]
    fn basis_is_minimal(h in edges_strategy(6, 2, 12)) {
        let m = InclusionMatrix::build(&h, 2).unwrap();
        let kept = column_basis(&m, RankMode::Exact).kept;
        for skip in 0..kept.len() {
            let rest: Vec<usize> = kept.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &c)| c).collect();
            prop_assert_eq!(dense_rank(&m, &rest), kept.len() - 1);
        }
    }

    #[test]
    fn every_dropped_column_has_a_certificate(h in (2usize..=3).prop_flat_map(|r| edges_strategy(6, r, 14))) {
        let m = InclusionMatrix::build(&h, h.max_edge_size()).unwrap();
        let basis = column_basis(&m, RankMode::Exact);
        for c in (0..m.num_columns()).filter(|&c| !basis.contains(c)) {
            let cert = dependency_certificate(&m, &basis, c).unwrap();
            prop_assert!(cert.verify(&m));
            prop_assert_eq!(cert.beta(c), -BigRational::one());
        }
    }
}

fn k4() -> Hypergraph {
    Hypergraph::new(4, vec![vec![1, 2], vec![1, 3], vec![1, 4], vec![2, 3], vec![2, 4], vec![3, 4]]).unwrap()
}

#[test]
fn k4_rank_and_certificate() {
    let m = InclusionMatrix::build(&k4(), 2).unwrap();
    let basis = column_basis(&m, RankMode::Exact);
    assert_eq!(basis.kept, vec![0, 1, 2, 3]);
    assert_eq!(dense_rank(&m, &[0, 1, 2, 3, 4, 5]), 4);

    // independent route: solve sum_{i<4} beta_i m_i = m_5 on the four rows
    // with dense elimination on the augmented 4x5 system
    let mut a: Vec<Vec<BigRational>> = (0..4)
        .map(|r| {
            (0..=4)
                .map(|k| {
                    let col = if k < 4 { k } else { 5 };
                    BigRational::from_integer(BigInt::from(m.entry(r, col) as i32))
                })
                .collect()
        })
        .collect();
    for col in 0..4 {
        let p = (col..4).find(|&r| !a[r][col].is_zero()).unwrap();
        a.swap(col, p);
        let pivot = a[col][col].clone();
        for k in 0..=4 {
            a[col][k] = &a[col][k] / &pivot;
        }
        for r in 0..4 {
            if r != col {
                let f = a[r][col].clone();
                for k in 0..=4 {
                    let sub = &f * &a[col][k];
                    a[r][k] -= sub;
                }
            }
        }
    }
    let cert = dependency_certificate(&m, &basis, 5).unwrap();
    for i in 0..4 {
        assert_eq!(cert.beta(i), a[i][4].clone(), "column {i}");
    }
    assert!(cert.verify(&m));
}

#[test]
fn small_examples() {
    let tri = Hypergraph::new(3, vec![vec![1, 2], vec![2, 3], vec![1, 3]]).unwrap();
    let m = InclusionMatrix::build(&tri, 2).unwrap();
    assert_eq!((m.num_rows(), m.num_columns()), (3, 3));
    assert_eq!(column_basis(&m, RankMode::Exact).rank(), 3);

    let single = Hypergraph::new(3, vec![vec![1, 2, 3]]).unwrap();
    let m = InclusionMatrix::build(&single, 3).unwrap();
    assert_eq!((m.num_rows(), m.num_columns()), (3, 1));
    assert!((0..3).all(|r| m.entry(r, 0)));

    let dup = Hypergraph::new(2, vec![vec![1, 2], vec![1, 2]]).unwrap();
    let m = InclusionMatrix::build(&dup, 2).unwrap();
    let b = column_basis(&m, RankMode::Modular { seed: 3 });
    assert_eq!(b.kept, vec![0]);
    let cert = dependency_certificate(&m, &b, 1).unwrap();
    assert_eq!(cert.beta(0), BigRational::one());

    let pair = Hypergraph::new(3, vec![vec![1, 2]]).unwrap();
    assert_eq!(InclusionMatrix::build(&pair, 3).unwrap().num_columns(), 0);
    assert!(InclusionMatrix::build(&pair, 4).is_err());
}
