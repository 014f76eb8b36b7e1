use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::gadgets::PathGadget;
use super::{ComposeError, PaddedBatch};
use crate::model::{BipartiteHamInstance, Digraph, Vertex};
use crate::trace::ReductionTrace;

/// Vertex numbering of the Hamiltonicity composition: path gadgets of the
/// groups `A_1..A_q` (`m` each), then `B_1..B_q` (`n` each), then `start`,
/// `end`, `next`, then `x_i, y_i, z_i` for each selector `i` in `1..=2r`,
/// `r = q - 1`. `z_i` subdivides the arc leaving `y_i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HamLayout {
    pub q: usize,
    pub m: usize,
    pub n: usize,
}

impl HamLayout {
    pub fn new(q: usize, m: usize, n: usize) -> Self {
        HamLayout { q, m, n }
    }

    pub fn r(&self) -> usize {
        self.q - 1
    }

    fn gadget_base(&self) -> usize {
        3 * (self.m + self.n) * self.q
    }

    pub fn num_vertices(&self) -> usize {
        self.gadget_base() + 3 + 6 * self.r()
    }

    /// Vertex `local` (see [`PathGadget`]) of gadget `a^i_k`.
    pub fn a(&self, i: usize, k: usize, local: usize) -> Vertex {
        (3 * ((i - 1) * self.m + (k - 1)) + local + 1) as Vertex
    }

    pub fn b(&self, j: usize, l: usize, local: usize) -> Vertex {
        (3 * self.m * self.q + 3 * ((j - 1) * self.n + (l - 1)) + local + 1) as Vertex
    }

    pub fn start(&self) -> Vertex {
        (self.gadget_base() + 1) as Vertex
    }

    pub fn end(&self) -> Vertex {
        (self.gadget_base() + 2) as Vertex
    }

    pub fn next(&self) -> Vertex {
        (self.gadget_base() + 3) as Vertex
    }

    /// `x_i`, `y_i`, `z_i` as `part` 0, 1, 2.
    pub fn selector(&self, i: usize, part: usize) -> Vertex {
        (self.gadget_base() + 3 + 3 * (i - 1) + part + 1) as Vertex
    }

    /// Every gadget of the composition as its `[in0, mid, in1]`.
    pub fn gadgets(&self) -> Vec<[Vertex; 3]> {
        let mut out = Vec::new();
        for i in 1..=self.q {
            for k in 1..=self.m {
                out.push([0, 1, 2].map(|p| self.a(i, k, p)));
            }
        }
        for j in 1..=self.q {
            for l in 1..=self.n {
                out.push([0, 1, 2].map(|p| self.b(j, l, p)));
            }
        }
        out
    }

    /// For a Hamiltonian cycle of the composed digraph, the path (0 or 1)
    /// along which each gadget of [`gadgets`](Self::gadgets) is traversed;
    /// `None` if some gadget is not passed through in one piece.
    pub fn traversals(&self, cycle: &[Vertex]) -> Option<Vec<u8>> {
        let len = cycle.len();
        let mut pos = vec![usize::MAX; self.num_vertices() + 1];
        for (p, &v) in cycle.iter().enumerate() {
            *pos.get_mut(v as usize)? = p;
        }
        let at = |p: usize| cycle[p % len];
        self.gadgets()
            .into_iter()
            .map(|[in0, mid, in1]| {
                let p = pos[in0 as usize];
                if p == usize::MAX {
                    None
                } else if at(p + 1) == mid && at(p + 2) == in1 {
                    Some(0)
                } else if at(p + len - 1) == mid && at(p + len - 2) == in1 {
                    Some(1)
                } else {
                    None
                }
            })
            .collect()
    }

    /// The Hamiltonian cycle built from an `s`–`t` path of input
    /// `X_{i*,j*}`: selectors `1..=r` sweep every `A_i` with `i != i*`,
    /// selectors `r+1..=2r` sweep every `B_j` with `j != j*` (all along
    /// path 0), and `next` enters the chosen pair, walking the input path
    /// with path 1 on each gadget.
    pub fn witness(
        &self,
        batch: &PaddedBatch<BipartiteHamInstance>,
        i_star: usize,
        j_star: usize,
        path: &[Vertex],
    ) -> Result<Vec<Vertex>, ComposeError> {
        let q = self.q;
        if !(1..=q).contains(&i_star) || !(1..=q).contains(&j_star) {
            return Err(ComposeError::BadWitness);
        }
        let inst = batch.get(i_star, j_star);
        let mut cycle = vec![self.start()];
        let other_a = (1..=q).filter(|&i| i != i_star);
        for (sel, i) in (1..=self.r()).zip(other_a) {
            cycle.push(self.selector(sel, 0));
            for k in 1..=self.m {
                cycle.extend([0, 1, 2].map(|p| self.a(i, k, p)));
            }
            cycle.extend([self.selector(sel, 1), self.selector(sel, 2)]);
        }
        let other_b = (1..=q).filter(|&j| j != j_star);
        for (sel, j) in (self.r() + 1..=2 * self.r()).zip(other_b) {
            cycle.push(self.selector(sel, 0));
            for l in 1..=self.n {
                cycle.extend([0, 1, 2].map(|p| self.b(j, l, p)));
            }
            cycle.extend([self.selector(sel, 1), self.selector(sel, 2)]);
        }
        cycle.push(self.next());
        if path.len() != self.m + self.n {
            return Err(ComposeError::BadWitness);
        }
        for &v in path {
            let gadget = if let Some(k) = inst.a().iter().position(|&x| x == v) {
                [2, 1, 0].map(|p| self.a(i_star, k + 1, p))
            } else if let Some(l) = inst.b().iter().position(|&x| x == v) {
                [2, 1, 0].map(|p| self.b(j_star, l + 1, p))
            } else {
                return Err(ComposeError::BadWitness);
            };
            cycle.extend(gadget);
        }
        cycle.push(self.end());
        Ok(cycle)
    }
}

/// Composes `t = q^2` bipartite Hamiltonian-path inputs into a digraph that
/// has a Hamiltonian cycle iff some input has a Hamiltonian `s`–`t` path.
pub fn compose_hamiltonicity(
    batch: &PaddedBatch<BipartiteHamInstance>,
) -> Result<(Digraph, HamLayout, ReductionTrace), ComposeError> {
    let (m, n) = *batch.signature();
    let q = batch.q();
    let lay = HamLayout::new(q, m, n);
    let (in0, in1) = (PathGadget::IN0, PathGadget::IN1);
    let mut arcs: Vec<(Vertex, Vertex)> = Vec::new();

    for gadget in lay.gadgets() {
        for (u, v) in PathGadget::arcs() {
            arcs.push((gadget[u], gadget[v]));
        }
    }
    // input edges, one arc pair per edge
    for i in 1..=q {
        for j in 1..=q {
            let inst = batch.get(i, j);
            let nv = inst.graph().num_vertices() as usize;
            let mut side = vec![(false, 0usize); nv];
            for (k, &a) in inst.a().iter().enumerate() {
                side[a as usize - 1] = (true, k + 1);
            }
            for (l, &b) in inst.b().iter().enumerate() {
                side[b as usize - 1] = (false, l + 1);
            }
            for &(u, v) in inst.graph().edges() {
                let (su, sv) = (side[u as usize - 1], side[v as usize - 1]);
                let (k, l) = if su.0 { (su.1, sv.1) } else { (sv.1, su.1) };
                arcs.push((lay.a(i, k, in0), lay.b(j, l, in1)));
                arcs.push((lay.b(j, l, in0), lay.a(i, k, in1)));
            }
        }
    }
    // chains inside each group
    for g in 1..=q {
        for k in 1..m {
            arcs.push((lay.a(g, k, in1), lay.a(g, k + 1, in0)));
        }
        for l in 1..n {
            arcs.push((lay.b(g, l, in1), lay.b(g, l + 1, in0)));
        }
    }
    let r = lay.r();
    arcs.push((lay.end(), lay.start()));
    arcs.push((lay.start(), lay.selector(1, 0)));
    for sel in 1..=2 * r {
        let (x, y, z) = (lay.selector(sel, 0), lay.selector(sel, 1), lay.selector(sel, 2));
        for g in 1..=q {
            if sel <= r {
                arcs.push((x, lay.a(g, 1, in0)));
                arcs.push((lay.a(g, m, in1), y));
            } else {
                arcs.push((x, lay.b(g, 1, in0)));
                arcs.push((lay.b(g, n, in1), y));
            }
        }
        arcs.push((y, z));
        let after = if sel < 2 * r { lay.selector(sel + 1, 0) } else { lay.next() };
        arcs.push((z, after));
    }
    for g in 1..=q {
        arcs.push((lay.next(), lay.b(g, 1, in1)));
        arcs.push((lay.b(g, n, in0), lay.end()));
    }

    let nv = lay.num_vertices() as u32;
    let d = Digraph::new(nv, arcs).expect("composition stays in range");
    let mut trace = ReductionTrace::new("compose-hamcycle");
    trace.input_size = batch.instances().iter().map(|x| x.graph().num_vertices() as usize).sum();
    trace.output_vertices = nv;
    trace.output_edges = d.num_arcs();
    let parts = ["in0", "mid", "in1"];
    for i in 1..=q {
        for k in 1..=m {
            for (p, part) in parts.iter().enumerate() {
                trace.name_vertex(format!("a{i}.{k}.{part}"), lay.a(i, k, p));
            }
        }
    }
    for j in 1..=q {
        for l in 1..=n {
            for (p, part) in parts.iter().enumerate() {
                trace.name_vertex(format!("b{j}.{l}.{part}"), lay.b(j, l, p));
            }
        }
    }
    trace.name_vertex("start".into(), lay.start());
    trace.name_vertex("end".into(), lay.end());
    trace.name_vertex("next".into(), lay.next());
    for sel in 1..=2 * r {
        for (p, part) in ["x", "y", "z"].iter().enumerate() {
            trace.name_vertex(format!("{part}{sel}"), lay.selector(sel, p));
        }
    }
    trace.facts.push(("t".into(), batch.t() as u64));
    trace.facts.push(("q".into(), q as u64));
    trace.facts.push(("original_count".into(), batch.original_count() as u64));
    Ok((d, lay, trace))
}
