//! Sparsification of bounded-edge-size hypergraphs and NAE formulas.
//!
//! For every edge size `r`, only the edges whose columns form the
//! greedy-leftmost basis of the inclusion matrix `M_r` survive. A dropped
//! edge `e` is a rational combination `Σ α_i e_i` of kept edges, and the
//! partition identity on the dependency then forces `e` to be bichromatic
//! whenever all kept edges are, so 2-colorability is preserved. Each `M_r`
//! has at most `C(n, r-1) <= n^(r-1)` rows, which caps the kept edges per
//! size and gives `2 n^(d-1)` overall.

use alloc::vec;
use alloc::vec::Vec;

use crate::exactrank::{column_basis, ColumnBasis, InclusionMatrix, RankMode};
use crate::model::{Clause, CnfFormula, Hypergraph};
use crate::reduce::naesat_to_hypergraph;

/// Edge counts for one edge size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SizeCounts {
    pub r: usize,
    pub input: usize,
    pub output: usize,
    /// `n^(r-1)`, saturating.
    pub bound: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelReport {
    pub mode: RankMode,
    pub num_vertices: u32,
    /// Largest edge size `d` of the input.
    pub max_edge_size: usize,
    /// One entry per `r` in `1..=d`.
    pub sizes: Vec<SizeCounts>,
    /// `2 n^(d-1)`, saturating; 0 when there are no edges.
    pub total_bound: u64,
    /// The input had an empty edge and was replaced by the canonical NO
    /// instance.
    pub short_circuited: bool,
}

impl KernelReport {
    pub fn input_total(&self) -> usize {
        self.sizes.iter().map(|s| s.input).sum()
    }

    pub fn output_total(&self) -> usize {
        self.sizes.iter().map(|s| s.output).sum()
    }

    /// Per-size and total bounds all hold.
    pub fn bounds_hold(&self) -> bool {
        self.short_circuited
            || (self
                .sizes
                .iter()
                .all(|s| s.output <= s.input && s.output as u64 <= s.bound)
                && self.output_total() as u64 <= self.total_bound)
    }
}

pub fn pow_saturating(n: u32, e: usize) -> u64 {
    let e = u32::try_from(e).unwrap_or(u32::MAX);
    (n as u64).saturating_pow(e)
}

/// One processed edge size: the matrix and its basis.
#[derive(Debug, Clone)]
pub struct KernelLayer {
    pub matrix: InclusionMatrix,
    pub basis: ColumnBasis,
}

impl KernelLayer {
    /// Column positions not in the basis.
    pub fn dropped(&self) -> Vec<usize> {
        (0..self.matrix.num_columns())
            .filter(|&c| !self.basis.contains(c))
            .collect()
    }
}

#[derive(Debug, Clone)]
pub struct KernelRun {
    pub output: Hypergraph,
    pub report: KernelReport,
    /// Mask over input edges.
    pub kept: Vec<bool>,
    pub layers: Vec<KernelLayer>,
}

/// Full kernel run, keeping the matrices and bases for inspection.
pub fn sparsify_detailed(h: &Hypergraph, mode: RankMode) -> KernelRun {
    let n = h.num_vertices();
    let d = h.max_edge_size();
    let hist = h.size_histogram();
    let input_count = |r: usize| hist.get(r).copied().unwrap_or(0);
    let total_bound = if d == 0 {
        0
    } else {
        pow_saturating(n, d - 1).saturating_mul(2)
    };

    if h.has_empty_edge() {
        let output = Hypergraph::new(n, vec![Vec::new()]).expect("empty edge is valid");
        let sizes = (1..=d)
            .map(|r| SizeCounts {
                r,
                input: input_count(r),
                output: 0,
                bound: pow_saturating(n, r - 1),
            })
            .collect();
        return KernelRun {
            output,
            report: KernelReport {
                mode,
                num_vertices: n,
                max_edge_size: d,
                sizes,
                total_bound,
                short_circuited: true,
            },
            kept: vec![false; h.num_edges()],
            layers: Vec::new(),
        };
    }

    let mut kept = vec![false; h.num_edges()];
    let mut layers = Vec::new();
    let mut sizes = Vec::new();
    for r in 1..=d {
        let count = input_count(r);
        let mut output = 0;
        if count > 0 {
            let matrix = InclusionMatrix::build(h, r).expect("edges of size r imply r <= n");
            let basis = column_basis(&matrix, mode);
            for &c in &basis.kept {
                kept[matrix.columns()[c]] = true;
            }
            output = basis.rank();
            layers.push(KernelLayer { matrix, basis });
        }
        sizes.push(SizeCounts {
            r,
            input: count,
            output,
            bound: pow_saturating(n, r - 1),
        });
    }
    let edges = h
        .edges()
        .iter()
        .zip(&kept)
        .filter(|(_, &k)| k)
        .map(|(e, _)| e.clone())
        .collect();
    KernelRun {
        output: Hypergraph::new(n, edges).expect("subset of valid edges"),
        report: KernelReport {
            mode,
            num_vertices: n,
            max_edge_size: d,
            sizes,
            total_bound,
            short_circuited: false,
        },
        kept,
        layers,
    }
}

/// Keeps a representative subset of the edges; the result is 2-colorable
/// iff `h` is (always in exact mode, with high probability in modular mode).
pub fn sparsify_hypergraph(h: &Hypergraph, mode: RankMode) -> (Hypergraph, KernelReport) {
    let run = sparsify_detailed(h, mode);
    (run.output, run.report)
}

/// The NAE formula counterpart: encode with pair edges, sparsify, and keep the
/// clauses whose edges survive. The report describes the encoded hypergraph
/// on `2n` vertices.
pub fn sparsify_nae_sat(f: &CnfFormula, mode: RankMode) -> (CnfFormula, KernelReport) {
    let (h, _) = naesat_to_hypergraph(f);
    let run = sparsify_detailed(&h, mode);
    if run.report.short_circuited {
        let no = CnfFormula::new(f.num_vars(), vec![Clause::new(Vec::new())])
            .expect("empty clause is valid");
        return (no, run.report);
    }
    // clause edges come first in the encoding; pair edges are never emitted
    let clauses = f
        .clauses()
        .iter()
        .zip(&run.kept)
        .filter(|(_, &k)| k)
        .map(|(c, _)| c.clone())
        .collect();
    let out = CnfFormula::new(f.num_vars(), clauses).expect("subset of valid clauses");
    (out, run.report)
}
