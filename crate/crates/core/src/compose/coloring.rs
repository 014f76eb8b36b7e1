use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::gadgets::{Treegadget, TriangularGadget};
use super::{ComposeError, PaddedBatch};
use crate::model::{
    Graph, ListColoringInstance, TsdInstance, Vertex, PALETTE_A, PALETTE_X, PALETTE_Y, PALETTE_Z,
};
use crate::trace::ReductionTrace;

/// Vertex numbering of the 4-coloring composition, in this order: the groups
/// `S_i` (`m` each), the groups `T_j` (`n` triangular gadgets each), the
/// selector `G_S`, the selector `G_T`, and the palette clique `x, y, z, a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FourColoringLayout {
    pub q: usize,
    /// `|X|` per input.
    pub m: usize,
    /// Triangles per input.
    pub n: usize,
}

impl FourColoringLayout {
    pub fn new(q: usize, m: usize, n: usize) -> Self {
        FourColoringLayout { q, m, n }
    }

    pub fn selector_s(&self) -> Treegadget {
        Treegadget::with_leaves(self.q)
    }

    pub fn selector_t(&self) -> Treegadget {
        Treegadget::with_leaves(2 * self.q)
    }

    fn t_base(&self) -> usize {
        self.m * self.q
    }

    fn gs_base(&self) -> usize {
        self.t_base() + 12 * self.n * self.q
    }

    fn gt_base(&self) -> usize {
        self.gs_base() + self.selector_s().num_vertices()
    }

    fn palette_base(&self) -> usize {
        self.gt_base() + self.selector_t().num_vertices()
    }

    /// Vertex count without the palette clique.
    pub fn num_list_vertices(&self) -> usize {
        self.palette_base()
    }

    pub fn num_vertices(&self) -> usize {
        self.palette_base() + 4
    }

    /// `s^i_k`, `i` in `1..=q`, `k` in `1..=m`.
    pub fn s(&self, i: usize, k: usize) -> Vertex {
        ((i - 1) * self.m + k) as Vertex
    }

    /// Local vertex `local` of gadget `g` (1-based) of `T_j`.
    pub fn gadget_vertex(&self, j: usize, g: usize, local: usize) -> Vertex {
        (self.t_base() + ((j - 1) * self.n + (g - 1)) * 12 + local + 1) as Vertex
    }

    /// Corner `t^j_l`, `l` in `1..=3n`: the corners of gadget `g` stand for
    /// the vertices of triangle `g`.
    pub fn corner(&self, j: usize, l: usize) -> Vertex {
        self.gadget_vertex(j, (l - 1) / 3 + 1, (l - 1) % 3)
    }

    pub fn gs(&self, local: usize) -> Vertex {
        (self.gs_base() + local + 1) as Vertex
    }

    pub fn gt(&self, local: usize) -> Vertex {
        (self.gt_base() + local + 1) as Vertex
    }

    pub fn palette(&self, color: u8) -> Vertex {
        (self.palette_base() + color as usize) as Vertex
    }

    /// Color lists (bitmasks) of the non-palette vertices.
    pub fn lists(&self) -> Vec<u8> {
        let m = ListColoringInstance::mask;
        let mut lists = vec![0u8; self.num_list_vertices()];
        let mut set = |v: Vertex, mask: u8| lists[v as usize - 1] = mask;
        for i in 1..=self.q {
            for k in 1..=self.m {
                set(self.s(i, k), m(&[PALETTE_X, PALETTE_Y, PALETTE_A]));
            }
        }
        for j in 1..=self.q {
            for g in 1..=self.n {
                for c in TriangularGadget::CORNERS {
                    set(self.gadget_vertex(j, g, c), m(&[PALETTE_X, PALETTE_Y, PALETTE_Z]));
                }
                for v in TriangularGadget::inner_vertices() {
                    set(self.gadget_vertex(j, g, v), m(&[PALETTE_X, PALETTE_Y, PALETTE_Z, PALETTE_A]));
                }
            }
        }
        let gs = self.selector_s();
        for v in 0..gs.num_vertices() {
            set(self.gs(v), m(&[PALETTE_X, PALETTE_Y, PALETTE_A]));
        }
        set(self.gs(gs.root()), m(&[PALETTE_X, PALETTE_Y]));
        let gt = self.selector_t();
        for v in 0..gt.num_vertices() {
            set(self.gt(v), m(&[PALETTE_Y, PALETTE_Z, PALETTE_A]));
        }
        set(self.gt(gt.root()), m(&[PALETTE_Y, PALETTE_Z]));
        for l in (1..gt.num_leaves()).step_by(2) {
            // 1-based even leaves
            set(self.gt(gt.leaf(l)), m(&[PALETTE_Y, PALETTE_Z]));
        }
        lists
    }

    /// Proper coloring of the composed graph (palette included) built from a
    /// 2-3-coloring of input `X_{i*,j*}`: that input's copy keeps its colors,
    /// every other `S_i` takes `a`, every other `T_j` has corners `z`, and
    /// the selectors are extended with roots avoiding `a`.
    pub fn witness(
        &self,
        batch: &PaddedBatch<TsdInstance>,
        i_star: usize,
        j_star: usize,
        coloring: &[u8],
    ) -> Result<Vec<u8>, ComposeError> {
        let q = self.q;
        if !(1..=q).contains(&i_star) || !(1..=q).contains(&j_star) {
            return Err(ComposeError::BadWitness);
        }
        let inst = batch.get(i_star, j_star);
        if coloring.len() != inst.graph().num_vertices() as usize {
            return Err(ComposeError::BadWitness);
        }
        let col = |v: Vertex| coloring[v as usize - 1];
        let mut c = vec![0u8; self.num_vertices()];
        let mut set = |v: Vertex, color: u8| c[v as usize - 1] = color;

        for i in 1..=q {
            for (k, &x) in inst.independent().iter().enumerate() {
                set(self.s(i, k + 1), if i == i_star { col(x) } else { PALETTE_A });
            }
        }
        for j in 1..=q {
            for (g, tri) in inst.triangles().iter().enumerate() {
                let corners = if j == j_star {
                    [col(tri[0]), col(tri[1]), col(tri[2])]
                } else {
                    [PALETTE_Z; 3]
                };
                let inner = TriangularGadget::extend(corners, [PALETTE_X, PALETTE_Y, PALETTE_A])
                    .ok_or(ComposeError::BadWitness)?;
                for (ci, &cc) in corners.iter().enumerate() {
                    set(self.gadget_vertex(j, g + 1, ci), cc);
                }
                for (v, &cc) in TriangularGadget::inner_vertices().iter().zip(inner.iter()) {
                    set(self.gadget_vertex(j, g + 1, *v), cc);
                }
            }
        }

        let gs = self.selector_s();
        let mut leaves = vec![0u8; q];
        for pair in 0..q / 2 {
            let (l, r) = (2 * pair + 1, 2 * pair + 2);
            let (cl, cr) = if l == i_star {
                (PALETTE_A, PALETTE_X)
            } else if r == i_star {
                (PALETTE_X, PALETTE_A)
            } else {
                (PALETTE_X, PALETTE_Y)
            };
            leaves[l - 1] = cl;
            leaves[r - 1] = cr;
        }
        let gs_colors = gs
            .extend(&leaves, [PALETTE_X, PALETTE_Y, PALETTE_A], Some(PALETTE_A))
            .ok_or(ComposeError::BadWitness)?;
        for (v, &cc) in gs_colors.iter().enumerate() {
            set(self.gs(v), cc);
        }

        let gt = self.selector_t();
        let mut leaves = vec![PALETTE_Y; 2 * q];
        for j in 1..=q {
            leaves[2 * j - 2] = if j == j_star { PALETTE_A } else { PALETTE_Z };
        }
        let gt_colors = gt
            .extend(&leaves, [PALETTE_Y, PALETTE_Z, PALETTE_A], Some(PALETTE_A))
            .ok_or(ComposeError::BadWitness)?;
        for (v, &cc) in gt_colors.iter().enumerate() {
            set(self.gt(v), cc);
        }

        for color in [PALETTE_X, PALETTE_Y, PALETTE_Z, PALETTE_A] {
            set(self.palette(color), color);
        }
        Ok(c)
    }
}

struct Built {
    layout: FourColoringLayout,
    edges: Vec<(Vertex, Vertex)>,
    trace: ReductionTrace,
}

fn build(batch: &PaddedBatch<TsdInstance>, name: &str) -> Result<Built, ComposeError> {
    if !TriangularGadget::certified() {
        return Err(ComposeError::GadgetCheckFailed);
    }
    let (n, m) = *batch.signature();
    let q = batch.q();
    let layout = FourColoringLayout::new(q, m, n);
    let mut edges: Vec<(Vertex, Vertex)> = Vec::new();

    // triangular gadgets
    for j in 1..=q {
        for g in 1..=n {
            for (a, b) in TriangularGadget::edges() {
                edges.push((layout.gadget_vertex(j, g, a), layout.gadget_vertex(j, g, b)));
            }
        }
    }
    // copies of G_{i,j} between S_i and T_j
    for i in 1..=q {
        for j in 1..=q {
            let inst = batch.get(i, j);
            let nv = inst.graph().num_vertices() as usize;
            let mut role = vec![0 as Vertex; nv];
            for (k, &x) in inst.independent().iter().enumerate() {
                role[x as usize - 1] = layout.s(i, k + 1);
            }
            for (g, tri) in inst.triangles().iter().enumerate() {
                for (c, &v) in tri.iter().enumerate() {
                    role[v as usize - 1] = layout.corner(j, 3 * g + c + 1);
                }
            }
            let in_x = |v: Vertex| role[v as usize - 1] <= layout.s(q, m);
            for &(u, v) in inst.graph().edges() {
                // edges inside a triangle are realized by the gadget
                if in_x(u) || in_x(v) {
                    edges.push((role[u as usize - 1], role[v as usize - 1]));
                }
            }
        }
    }
    // selector G_S: leaf i sees all of S_i
    let gs = layout.selector_s();
    for (a, b) in gs.edges() {
        edges.push((layout.gs(a), layout.gs(b)));
    }
    for i in 1..=q {
        for k in 1..=m {
            edges.push((layout.gs(gs.leaf(i - 1)), layout.s(i, k)));
        }
    }
    // selector G_T: odd leaf 2j-1 sees every inner vertex of T_j
    let gt = layout.selector_t();
    for (a, b) in gt.edges() {
        edges.push((layout.gt(a), layout.gt(b)));
    }
    for j in 1..=q {
        for g in 1..=n {
            for v in TriangularGadget::inner_vertices() {
                edges.push((layout.gt(gt.leaf(2 * j - 2)), layout.gadget_vertex(j, g, v)));
            }
        }
    }

    let mut trace = ReductionTrace::new(name);
    trace.input_size = batch.instances().iter().map(|x| x.graph().num_vertices() as usize).sum();
    for i in 1..=q {
        for k in 1..=m {
            trace.name_vertex(format!("S{i}.{k}"), layout.s(i, k));
        }
    }
    for j in 1..=q {
        for g in 1..=n {
            for local in 0..TriangularGadget::NUM_VERTICES {
                let role = if local < 3 {
                    format!("T{j}.{g}.{}", ["u", "v", "w"][local])
                } else {
                    format!("T{j}.{g}.in{}", local - 3)
                };
                trace.name_vertex(role, layout.gadget_vertex(j, g, local));
            }
        }
    }
    for (tag, tree) in [("GS", gs), ("GT", gt)] {
        for node in 0..tree.num_nodes() {
            for (off, part) in ["r", "x", "y"].iter().enumerate() {
                let v = if tag == "GS" { layout.gs(3 * node + off) } else { layout.gt(3 * node + off) };
                trace.name_vertex(format!("{tag}.{node}.{part}"), v);
            }
        }
    }
    trace.facts.push(("t".into(), batch.t() as u64));
    trace.facts.push(("q".into(), q as u64));
    trace.facts.push(("original_count".into(), batch.original_count() as u64));
    Ok(Built { layout, edges, trace })
}

/// The list-coloring instance over colors `x, y, z, a` before the palette
/// clique is added.
pub fn compose_four_list_coloring(
    batch: &PaddedBatch<TsdInstance>,
) -> Result<(ListColoringInstance, FourColoringLayout, ReductionTrace), ComposeError> {
    let Built { layout, edges, mut trace } = build(batch, "compose-4listcol")?;
    let nv = layout.num_list_vertices() as u32;
    let g = Graph::new(nv, edges).expect("composition stays in range");
    trace.output_vertices = nv;
    trace.output_edges = g.num_edges();
    let inst = ListColoringInstance::new(g, layout.lists()).expect("lists are nonempty");
    Ok((inst, layout, trace))
}

/// Plain 4-coloring: the list instance plus a palette 4-clique, each vertex
/// joined to the palette vertices of the colors missing from its list.
pub fn compose_four_coloring(
    batch: &PaddedBatch<TsdInstance>,
) -> Result<(Graph, FourColoringLayout, ReductionTrace), ComposeError> {
    let Built { layout, mut edges, mut trace } = build(batch, "compose-4col")?;
    let palette = [PALETTE_X, PALETTE_Y, PALETTE_Z, PALETTE_A];
    for (a, &ca) in palette.iter().enumerate() {
        for &cb in &palette[a + 1..] {
            edges.push((layout.palette(ca), layout.palette(cb)));
        }
    }
    for (v, &list) in layout.lists().iter().enumerate() {
        for c in palette {
            if list & (1 << (c - 1)) == 0 {
                edges.push((v as Vertex + 1, layout.palette(c)));
            }
        }
    }
    for (c, tag) in palette.iter().zip(["x", "y", "z", "a"]) {
        trace.name_vertex(format!("palette.{tag}"), layout.palette(*c));
    }
    let nv = layout.num_vertices() as u32;
    let g = Graph::new(nv, edges).expect("composition stays in range");
    trace.output_vertices = nv;
    trace.output_edges = g.num_edges();
    Ok((g, layout, trace))
}
