//! Seeded random instance generators.
//!
//! Every generator is a pure function of its parameters and the
//! [`SplitMix64`] state it is handed. Generators that take `plant = true`
//! build a solution first and the instance around it, so the result is a YES
//! instance; unplanted instances are dense enough to be mostly NO.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::model::{
    BipartiteHamInstance, Clause, CnfFormula, Digraph, EqColRbdsInstance, Graph, Hypergraph, Literal,
    TsdInstance, Vertex,
};
use crate::rng::SplitMix64;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GenError {
    /// Parameters that no instance of the kind can satisfy.
    BadParams(&'static str),
}

impl fmt::Display for GenError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GenError::BadParams(why) => write!(f, "invalid generator parameters: {why}"),
        }
    }
}

/// Probability given in thousandths.
fn permille(rng: &mut SplitMix64, p: u32) -> bool {
    rng.chance(p as u64, 1000)
}

/// True with probability `p` in `[0, 1]`.
pub fn bernoulli(rng: &mut SplitMix64, p: f64) -> bool {
    let scaled = (p.clamp(0.0, 1.0) * (1u64 << 32) as f64) as u64;
    rng.chance(scaled, 1 << 32)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CnfParams {
    pub num_vars: u32,
    pub num_clauses: usize,
    pub min_width: usize,
    pub max_width: usize,
}

/// Clauses over distinct variables with uniform widths and signs.
pub fn random_cnf(rng: &mut SplitMix64, p: &CnfParams) -> Result<CnfFormula, GenError> {
    if p.min_width > p.max_width || p.max_width > p.num_vars as usize {
        return Err(GenError::BadParams("clause widths must fit the variable count"));
    }
    let mut clauses = Vec::with_capacity(p.num_clauses);
    for _ in 0..p.num_clauses {
        let w = rng.range_inclusive(p.min_width as u64, p.max_width as u64) as usize;
        let lits = rng
            .sample_distinct(p.num_vars as usize, w)
            .into_iter()
            .map(|v| Literal::new(v as u32 + 1, rng.coin()).expect("variable in range"))
            .collect();
        clauses.push(Clause::new(lits));
    }
    Ok(CnfFormula::new(p.num_vars, clauses).expect("variables in range"))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HypergraphParams {
    pub num_vertices: u32,
    pub num_edges: usize,
    pub min_edge_size: usize,
    pub max_edge_size: usize,
}

/// Edges with uniform sizes and uniform vertex subsets; repeats allowed.
pub fn random_hypergraph(rng: &mut SplitMix64, p: &HypergraphParams) -> Result<Hypergraph, GenError> {
    if p.min_edge_size > p.max_edge_size || p.max_edge_size > p.num_vertices as usize {
        return Err(GenError::BadParams("edge sizes must fit the vertex count"));
    }
    let edges = (0..p.num_edges)
        .map(|_| {
            let size = rng.range_inclusive(p.min_edge_size as u64, p.max_edge_size as u64) as usize;
            rng.sample_distinct(p.num_vertices as usize, size)
                .into_iter()
                .map(|v| v as Vertex + 1)
                .collect()
        })
        .collect();
    Ok(Hypergraph::new(p.num_vertices, edges).expect("vertices in range"))
}

/// Each ordered pair is an arc with probability `density` thousandths; a
/// planted instance also gets a Hamiltonian cycle through a random order.
pub fn random_digraph(rng: &mut SplitMix64, n: u32, density: u32, plant: bool) -> Digraph {
    let mut arcs = Vec::new();
    for u in 1..=n {
        for v in 1..=n {
            if u != v && permille(rng, density) {
                arcs.push((u, v));
            }
        }
    }
    if plant && n >= 2 {
        let mut order: Vec<Vertex> = (1..=n).collect();
        rng.shuffle(&mut order);
        for w in 0..order.len() {
            arcs.push((order[w], order[(w + 1) % order.len()]));
        }
    }
    Digraph::new(n, arcs).expect("vertices in range")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TsdParams {
    /// `|X|`.
    pub m: usize,
    /// Number of triangles.
    pub n: usize,
    /// Chance of each X–Y edge, in thousandths.
    pub density: u32,
}

/// X is `1..=m`, triangle `g` is `m+3g+1 ..= m+3g+3`. A planted instance
/// fixes a 2-3-coloring first and only adds edges it keeps proper.
pub fn random_tsd(rng: &mut SplitMix64, p: &TsdParams, plant: bool) -> Result<TsdInstance, GenError> {
    if p.n == 0 {
        return Err(GenError::BadParams("need at least one triangle"));
    }
    let total = p.m + 3 * p.n;
    let mut color = vec![0u8; total];
    if plant {
        for c in color.iter_mut().take(p.m) {
            *c = 1 + rng.coin() as u8;
        }
        for g in 0..p.n {
            let mut perm = [1u8, 2, 3];
            rng.shuffle(&mut perm);
            color[p.m + 3 * g..p.m + 3 * g + 3].copy_from_slice(&perm);
        }
    }
    let mut edges = Vec::new();
    let mut triangles = Vec::with_capacity(p.n);
    for g in 0..p.n {
        let base = (p.m + 3 * g) as Vertex;
        let tri = [base + 1, base + 2, base + 3];
        edges.extend([(tri[0], tri[1]), (tri[1], tri[2]), (tri[0], tri[2])]);
        triangles.push(tri);
    }
    for x in 0..p.m {
        for y in p.m..total {
            if permille(rng, p.density) && (!plant || color[x] != color[y]) {
                edges.push((x as Vertex + 1, y as Vertex + 1));
            }
        }
    }
    let g = Graph::new(total as u32, edges).expect("vertices in range");
    let independent = (1..=p.m as Vertex).collect();
    Ok(TsdInstance::new(g, independent, triangles).expect("structure holds by construction"))
}

/// `A = 1..=m`, `B = m+1 ..= 2m+1` with `s = m+1` and `t = 2m+1`. Interior
/// B vertices get random A-neighbors; `s` and `t` one each. A planted
/// instance threads an `s`–`t` path through random orders of both sides.
pub fn random_bipartite_ham(
    rng: &mut SplitMix64,
    m: usize,
    density: u32,
    plant: bool,
) -> Result<BipartiteHamInstance, GenError> {
    if m == 0 {
        return Err(GenError::BadParams("need |A| >= 1"));
    }
    let n = m + 1;
    let a: Vec<Vertex> = (1..=m as Vertex).collect();
    let b: Vec<Vertex> = (m as Vertex + 1..=(m + n) as Vertex).collect();
    let (s, t) = (b[0], b[n - 1]);
    let interior = &b[1..n - 1];
    let mut edges = Vec::new();
    for &bi in interior {
        for &ai in &a {
            if permille(rng, density) {
                edges.push((ai, bi));
            }
        }
    }
    if plant {
        let mut pa = a.clone();
        let mut pb = interior.to_vec();
        rng.shuffle(&mut pa);
        rng.shuffle(&mut pb);
        edges.push((s, pa[0]));
        for w in 0..pb.len() {
            edges.push((pa[w], pb[w]));
            edges.push((pb[w], pa[w + 1]));
        }
        edges.push((pa[m - 1], t));
    } else {
        edges.push((s, a[rng.index(m)]));
        edges.push((t, a[rng.index(m)]));
    }
    let g = Graph::new((m + n) as u32, edges).expect("vertices in range");
    BipartiteHamInstance::new(g, a, b).map_err(|_| GenError::BadParams("invalid bipartite instance"))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RbdsParams {
    /// Number of color classes.
    pub k: usize,
    /// Vertices per class after padding.
    pub class_size: usize,
    pub blue: usize,
    /// Chance of each red–blue edge, in thousandths.
    pub density: u32,
}

/// Each class draws between 1 and `class_size` active red vertices and is
/// padded with isolated ones. Every blue vertex gets at least one red
/// neighbor. A planted instance picks one active vertex per class and lets
/// each blue vertex see one of the picks. An unplanted instance with two
/// blue vertices and classes of size two or more is built around an
/// obstruction: the first two blue vertices see only two different red
/// vertices of one class, so it is NO.
pub fn random_eq_col_rbds(
    rng: &mut SplitMix64,
    p: &RbdsParams,
    plant: bool,
) -> Result<EqColRbdsInstance, GenError> {
    if p.k == 0 || p.class_size == 0 || p.blue == 0 {
        return Err(GenError::BadParams("need k, class size and |B| all positive"));
    }
    let red_total = p.k * p.class_size;
    let obstructed = (!plant && p.class_size >= 2 && p.blue >= 2).then(|| rng.index(p.k));
    let mut classes = Vec::with_capacity(p.k);
    let mut active: Vec<Vertex> = Vec::new();
    let mut picks: Vec<Vertex> = Vec::new();
    for c in 0..p.k {
        let class: Vec<Vertex> = (0..p.class_size).map(|v| (c * p.class_size + v + 1) as Vertex).collect();
        let mut live = rng.range_inclusive(1, p.class_size as u64) as usize;
        if obstructed == Some(c) {
            live = live.max(2);
        }
        active.extend_from_slice(&class[..live]);
        picks.push(class[rng.index(live)]);
        classes.push(class);
    }
    let blue: Vec<Vertex> = (0..p.blue).map(|b| (red_total + b + 1) as Vertex).collect();
    let mut edges = Vec::new();
    if let Some(c) = obstructed {
        let first = (c * p.class_size + 1) as Vertex;
        edges.push((first, blue[0]));
        edges.push((first + 1, blue[1]));
    }
    let free = if obstructed.is_some() { 2 } else { 0 };
    for &b in &blue[free..] {
        let mut has = false;
        for &r in &active {
            if permille(rng, p.density) {
                edges.push((r, b));
                has = true;
            }
        }
        if plant {
            edges.push((picks[rng.index(p.k)], b));
        } else if !has {
            edges.push((active[rng.index(active.len())], b));
        }
    }
    let g = Graph::new((red_total + p.blue) as u32, edges).expect("vertices in range");
    EqColRbdsInstance::new(g, classes, blue).map_err(|_| GenError::BadParams("invalid rbds instance"))
}

/// `t` instances from `make(rng, plant)`. With probability `yes_bias` one
/// uniformly chosen slot is planted; the others never are.
pub fn random_batch<T>(
    rng: &mut SplitMix64,
    t: usize,
    yes_bias: f64,
    mut make: impl FnMut(&mut SplitMix64, bool) -> T,
) -> Vec<T> {
    let planted = if bernoulli(rng, yes_bias) { Some(rng.index(t)) } else { None };
    (0..t).map(|slot| make(rng, planted == Some(slot))).collect()
}
