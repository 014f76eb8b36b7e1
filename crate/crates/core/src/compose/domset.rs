use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::{ComposeError, PaddedBatch, RbdsClass};
use crate::model::{EqColRbdsInstance, Graph, Vertex};
use crate::trace::ReductionTrace;

/// Pairwise distinct `K`-subsets of `[2K]`, one per red group, with
/// `K = 2 + k + log q`: the lexicographically first `q` of them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdAssignment {
    pub big_k: usize,
    pub ids: Vec<Vec<usize>>,
}

impl IdAssignment {
    pub fn new(k: usize, q: usize) -> Self {
        let big_k = 2 + k + q.trailing_zeros() as usize;
        let universe = 2 * big_k;
        let mut ids = Vec::with_capacity(q);
        let mut cur: Vec<usize> = (1..=big_k).collect();
        while ids.len() < q {
            ids.push(cur.clone());
            // advance to the next combination in lexicographic order
            let Some(pos) = (0..big_k).rev().find(|&p| cur[p] < universe - (big_k - 1 - p)) else {
                break;
            };
            cur[pos] += 1;
            for p in pos + 1..big_k {
                cur[p] = cur[p - 1] + 1;
            }
        }
        assert_eq!(ids.len(), q, "C(2K, K) >= q always holds");
        IdAssignment { big_k, ids }
    }

    /// Whether `x` is in `ID(R_i)`, `i` 1-based.
    pub fn contains(&self, i: usize, x: usize) -> bool {
        self.ids[i - 1].binary_search(&x).is_ok()
    }
}

/// Vertex numbering of the dominating-set composition: `r^i_{p,c}` (group
/// `i`, color `p`, `c`-th vertex of that color), then `b^j_l`, then `s'`,
/// `s`, the selector triangles `t^0_l, t^1_l, t^2_l`, and the sets
/// `W_(c1,c2)` over ordered color pairs in lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DomSetLayout {
    pub q: usize,
    /// `|R|` per input.
    pub m: usize,
    /// `|B|` per input.
    pub n: usize,
    pub k: usize,
    pub ids: IdAssignment,
}

impl DomSetLayout {
    pub fn new(q: usize, m: usize, n: usize, k: usize) -> Self {
        DomSetLayout {
            q,
            m,
            n,
            k,
            ids: IdAssignment::new(k, q),
        }
    }

    pub fn log_q(&self) -> usize {
        self.q.trailing_zeros() as usize
    }

    pub fn class_size(&self) -> usize {
        self.m / self.k
    }

    pub fn budget(&self) -> usize {
        self.k + 1 + self.log_q()
    }

    fn s_base(&self) -> usize {
        (self.m + self.n) * self.q
    }

    fn w_base(&self) -> usize {
        self.s_base() + 2 + 3 * self.log_q()
    }

    pub fn num_vertices(&self) -> usize {
        self.w_base() + self.k * (self.k - 1) * 2 * self.ids.big_k
    }

    pub fn r(&self, i: usize, p: usize, c: usize) -> Vertex {
        ((i - 1) * self.m + (p - 1) * self.class_size() + c) as Vertex
    }

    pub fn b(&self, j: usize, l: usize) -> Vertex {
        (self.m * self.q + (j - 1) * self.n + l) as Vertex
    }

    pub fn s_prime(&self) -> Vertex {
        (self.s_base() + 1) as Vertex
    }

    pub fn s(&self) -> Vertex {
        (self.s_base() + 2) as Vertex
    }

    /// `t^h_l`, `h` in `0..3`, `l` in `1..=log q`.
    pub fn t(&self, h: usize, l: usize) -> Vertex {
        (self.s_base() + 2 + 3 * (l - 1) + h + 1) as Vertex
    }

    fn pair_index(&self, c1: usize, c2: usize) -> usize {
        (c1 - 1) * (self.k - 1) + if c2 < c1 { c2 - 1 } else { c2 - 2 }
    }

    /// `w^{(c1,c2)}_x`, `c1 != c2`, `x` in `1..=2K`.
    pub fn w(&self, c1: usize, c2: usize, x: usize) -> Vertex {
        (self.w_base() + self.pair_index(c1, c2) * 2 * self.ids.big_k + x) as Vertex
    }

    /// Bit `l` (1-based) of `j - 1`.
    fn bit(j: usize, l: usize) -> usize {
        ((j - 1) >> (l - 1)) & 1
    }

    /// The dominating set built from a colorful red-blue dominating set of
    /// input `X_{i*,j*}`: the chosen red vertices in `R_{i*}`, `s`, and per
    /// selector triangle the vertex covering the blue groups whose bit
    /// differs from `j*`'s.
    pub fn witness(
        &self,
        batch: &PaddedBatch<EqColRbdsInstance>,
        i_star: usize,
        j_star: usize,
        chosen: &[Vertex],
    ) -> Result<Vec<Vertex>, ComposeError> {
        if !(1..=self.q).contains(&i_star) || !(1..=self.q).contains(&j_star) {
            return Err(ComposeError::BadWitness);
        }
        let inst = batch.get(i_star, j_star);
        let mut set = Vec::with_capacity(self.budget());
        for &v in chosen {
            let (p, c) = inst
                .classes()
                .iter()
                .enumerate()
                .find_map(|(p, class)| class.iter().position(|&x| x == v).map(|c| (p + 1, c + 1)))
                .ok_or(ComposeError::BadWitness)?;
            set.push(self.r(i_star, p, c));
        }
        set.push(self.s());
        for l in 1..=self.log_q() {
            set.push(self.t(1 - Self::bit(j_star, l), l));
        }
        set.sort_unstable();
        Ok(set)
    }
}

/// Two isolated vertices with budget 1.
fn canonical_no(batch: &PaddedBatch<EqColRbdsInstance>) -> (Graph, usize, ReductionTrace) {
    let g = Graph::new(2, vec![]).expect("static graph");
    let mut trace = ReductionTrace::new("compose-domset");
    trace.input_size = batch.instances().iter().map(|x| x.graph().num_vertices() as usize).sum();
    trace.output_vertices = 2;
    trace.name_vertex("no.1".into(), 1);
    trace.name_vertex("no.2".into(), 2);
    trace.facts.push(("budget".into(), 1));
    trace.facts.push(("canonical_no".into(), 1));
    (g, 1, trace)
}

/// Composes `t = q^2` Eq-Col-RBDS inputs into a graph with a dominating set
/// of size at most the returned budget iff it has a connected one iff some
/// input has a colorful red-blue dominating set. The layout is `None` for
/// the class of inputs with an isolated blue vertex, which maps to a fixed
/// NO instance.
pub fn compose_dominating_set(
    batch: &PaddedBatch<EqColRbdsInstance>,
) -> Result<(Graph, usize, Option<DomSetLayout>, ReductionTrace), ComposeError> {
    let (m, n, k) = match *batch.signature() {
        RbdsClass::IsolatedBlue => {
            let (g, budget, trace) = canonical_no(batch);
            return Ok((g, budget, None, trace));
        }
        RbdsClass::Sized { red, blue, k } => (red, blue, k),
    };
    let q = batch.q();
    let lay = DomSetLayout::new(q, m, n, k);
    let mut edges: Vec<(Vertex, Vertex)> = Vec::new();

    // R_i: remember each group's color classes as output vertices
    let mut colored: Vec<Vec<Vec<Vertex>>> = Vec::with_capacity(q);
    for i in 1..=q {
        let classes = (1..=k)
            .map(|p| (1..=lay.class_size()).map(|c| lay.r(i, p, c)).collect())
            .collect();
        colored.push(classes);
    }
    for i in 1..=q {
        for j in 1..=q {
            let inst = batch.get(i, j);
            let mut role = vec![0 as Vertex; inst.graph().num_vertices() as usize];
            for (p, class) in inst.classes().iter().enumerate() {
                for (c, &v) in class.iter().enumerate() {
                    role[v as usize - 1] = lay.r(i, p + 1, c + 1);
                }
            }
            for (l, &v) in inst.blue().iter().enumerate() {
                role[v as usize - 1] = lay.b(j, l + 1);
            }
            for &(u, v) in inst.graph().edges() {
                edges.push((role[u as usize - 1], role[v as usize - 1]));
            }
        }
    }
    edges.push((lay.s_prime(), lay.s()));
    for i in 1..=q {
        for p in 1..=k {
            for c in 1..=lay.class_size() {
                edges.push((lay.s(), lay.r(i, p, c)));
            }
        }
    }
    for c1 in 1..=k {
        for c2 in (1..=k).filter(|&c| c != c1) {
            for x in 1..=2 * lay.ids.big_k {
                let w = lay.w(c1, c2, x);
                for i in 1..=q {
                    let color = if lay.ids.contains(i, x) { c1 } else { c2 };
                    for &r in &colored[i - 1][color - 1] {
                        edges.push((w, r));
                    }
                }
            }
        }
    }
    for l in 1..=lay.log_q() {
        let (t0, t1, t2) = (lay.t(0, l), lay.t(1, l), lay.t(2, l));
        edges.extend([(t0, t1), (t1, t2), (t0, t2), (lay.s(), t0), (lay.s(), t1)]);
        for j in 1..=q {
            let t = if DomSetLayout::bit(j, l) == 0 { t0 } else { t1 };
            for b in 1..=n {
                edges.push((t, lay.b(j, b)));
            }
        }
    }

    let nv = lay.num_vertices() as u32;
    let g = Graph::new(nv, edges).expect("composition stays in range");
    let budget = lay.budget();
    let mut trace = ReductionTrace::new("compose-domset");
    trace.input_size = batch.instances().iter().map(|x| x.graph().num_vertices() as usize).sum();
    trace.output_vertices = nv;
    trace.output_edges = g.num_edges();
    for i in 1..=q {
        for p in 1..=k {
            for c in 1..=lay.class_size() {
                trace.name_vertex(format!("r{i}.{p}.{c}"), lay.r(i, p, c));
            }
        }
    }
    for j in 1..=q {
        for l in 1..=n {
            trace.name_vertex(format!("b{j}.{l}"), lay.b(j, l));
        }
    }
    trace.name_vertex("s'".into(), lay.s_prime());
    trace.name_vertex("s".into(), lay.s());
    for l in 1..=lay.log_q() {
        for h in 0..3 {
            trace.name_vertex(format!("t{l}.{h}"), lay.t(h, l));
        }
    }
    for c1 in 1..=k {
        for c2 in (1..=k).filter(|&c| c != c1) {
            for x in 1..=2 * lay.ids.big_k {
                trace.name_vertex(format!("w{c1},{c2}.{x}"), lay.w(c1, c2, x));
            }
        }
    }
    trace.facts.push(("budget".into(), budget as u64));
    trace.facts.push(("t".into(), batch.t() as u64));
    trace.facts.push(("q".into(), q as u64));
    trace.facts.push(("original_count".into(), batch.original_count() as u64));
    Ok((g, budget, Some(lay), trace))
}
