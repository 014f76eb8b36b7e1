//! Treegadget and triangular gadget properties, decided by the list-coloring
//! oracle.

use sparsekit_core::compose::{Treegadget, TriangularGadget};
use sparsekit_core::model::{Certificate, Graph, ListColoringInstance};
use sparsekit_core::oracle::{list_coloring_backtrack, solve_list_coloring, Limits, Verdict};
use sparsekit_core::rng::SplitMix64;

fn gadget_graph(t: &Treegadget) -> Graph {
    let edges = t.edges().into_iter().map(|(a, b)| (a as u32 + 1, b as u32 + 1)).collect();
    Graph::new(t.num_vertices() as u32, edges).unwrap()
}

const ALL: u8 = 0b111;

/// With every leaf and the root barred from color `k`, no proper
/// 3-coloring exists.
#[test]
fn missing_leaf_color_forces_root() {
    let lim = Limits::default();
    for height in 0..=3 {
        let t = Treegadget::with_height(height);
        for k in 0..3u8 {
            let without = ALL & !(1 << k);
            let mut lists = vec![ALL; t.num_vertices()];
            for l in t.leaf_vertices() {
                lists[l] = without;
            }
            lists[t.root()] = without;
            let inst = ListColoringInstance::new(gadget_graph(&t), lists).unwrap();
            assert_eq!(solve_list_coloring(&inst, &lim).verdict, Verdict::No, "height {height} color {k}");
            assert_eq!(list_coloring_backtrack(&inst, &lim).verdict, Verdict::No);
        }
    }
}

/// A proper leaf precoloring that uses color `i` extends with the root
/// avoiding `i`; checked by the oracle and by the constructive extension.
#[test]
fn precolorings_extend_avoiding_a_present_color() {
    let lim = Limits::default();
    let mut rng = SplitMix64::new(2024);
    let mut trials = 0;
    while trials < 240 {
        let t = Treegadget::with_height(rng.below(4) as u32);
        let leaves: Vec<u8> = (0..t.num_leaves() / 2)
            .flat_map(|_| {
                let a = 1 + rng.below(3) as u8;
                let b = 1 + (a + rng.below(2) as u8) % 3;
                [a, b]
            })
            .collect();
        let i = leaves[rng.index(leaves.len())];
        let mut lists = vec![ALL; t.num_vertices()];
        for (l, &c) in leaves.iter().enumerate() {
            lists[t.leaf(l)] = 1 << (c - 1);
        }
        lists[t.root()] &= !(1 << (i - 1));
        let inst = ListColoringInstance::new(gadget_graph(&t), lists).unwrap();
        let ans = solve_list_coloring(&inst, &lim);
        assert_eq!(ans.verdict, Verdict::Yes, "leaves {leaves:?} avoid {i}");
        let built = t.extend(&leaves, [1, 2, 3], Some(i)).unwrap();
        let cert = Certificate::Coloring(built);
        assert_eq!(sparsekit_core::check_certificate(&sparsekit_core::DecisionInstance::ListColoring(inst), &cert), Ok(true));
        trials += 1;
    }
}

#[test]
fn triangular_gadget_exhaustive() {
    let check = TriangularGadget::exhaustive_check();
    assert_eq!(check.corner_clashes, 0);
    assert_eq!(check.rainbow_extendable, 6);
    assert!(TriangularGadget::certified());
}
