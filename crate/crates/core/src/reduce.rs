//! Stand-alone polynomial-time transformations between the problems.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::model::{Clause, CnfFormula, Digraph, Graph, Hypergraph, Literal, TsdInstance, Vertex};
use crate::trace::ReductionTrace;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ReduceError {
    /// A clause is larger than the reduction accepts.
    ClauseTooLarge { size: usize, limit: usize },
}

impl fmt::Display for ReduceError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ReduceError::ClauseTooLarge { size, limit } => {
                write!(f, "clause of size {size} exceeds the limit {limit}")
            }
        }
    }
}

/// Vertex of a literal in the literal encoding: `x_i -> 2i-1`, `~x_i -> 2i`.
pub fn literal_vertex(l: Literal) -> Vertex {
    2 * l.var() - u32::from(!l.is_negated())
}

fn name_literals(trace: &mut ReductionTrace, n: u32) {
    for i in 1..=n {
        trace.name_vertex(format!("x{i}"), 2 * i - 1);
        trace.name_vertex(format!("~x{i}"), 2 * i);
    }
}

/// Hypergraph on the `2n` literals with one edge per clause followed by the
/// `n` pair edges `{x_i, ~x_i}`. It is 2-colorable iff `f` is NAE-satisfiable.
pub fn naesat_to_hypergraph(f: &CnfFormula) -> (Hypergraph, ReductionTrace) {
    let n = f.num_vars();
    let mut edges: Vec<Vec<Vertex>> = f
        .clauses()
        .iter()
        .map(|c| c.literals().iter().map(|&l| literal_vertex(l)).collect())
        .collect();
    edges.extend((1..=n).map(|i| vec![2 * i - 1, 2 * i]));
    let h = Hypergraph::new(2 * n, edges).expect("literal vertices are in range");
    let mut trace = ReductionTrace::new("nae-to-2col");
    trace.input_size = f.num_clauses();
    trace.output_vertices = h.num_vertices();
    trace.output_edges = h.num_edges();
    name_literals(&mut trace, n);
    (h, trace)
}

/// Adds a fresh variable `x_{n+1}` positively to every clause; the result is
/// NAE-satisfiable iff `f` is satisfiable.
pub fn cnfsat_to_naesat(f: &CnfFormula) -> CnfFormula {
    let fresh = Literal::positive(f.num_vars() + 1);
    let clauses = f
        .clauses()
        .iter()
        .map(|c| {
            let mut lits = c.literals().to_vec();
            lits.push(fresh);
            Clause::new(lits)
        })
        .collect();
    CnfFormula::new(f.num_vars() + 1, clauses).expect("fresh variable is in range")
}

/// Reduction from NAE-SAT with clauses of size at most 3 to 2-3-coloring.
///
/// Literal `x_i` is vertex `2i-1` and `~x_i` is `2i` (the independent set).
/// Each variable gets a triangle `(a, b, c)` with `x_i–a`, `x_i–c`, `~x_i–b`:
/// since `a` and `c` avoid the color of `x_i`, `b` takes it and `~x_i` must
/// differ. A 3-clause gets a triangle `(p1, p2, p3)` with `l_j–p_j`, which
/// extends exactly when the literal colors are not all equal. A 2-clause gets
/// the variable-style triangle on its two literals. Clauses containing a
/// complementary pair are dropped; a clause of size at most 1 makes the
/// answer NO and yields [`TsdInstance::canonical_no`].
pub fn naesat3_to_tsd(f: &CnfFormula) -> Result<(TsdInstance, ReductionTrace), ReduceError> {
    let d = f.max_clause_size();
    if d > 3 {
        return Err(ReduceError::ClauseTooLarge { size: d, limit: 3 });
    }
    let mut trace = ReductionTrace::new("nae3-to-tsd");
    trace.input_size = f.num_clauses();
    let clauses: Vec<(usize, &Clause)> = f
        .clauses()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_tautological())
        .collect();
    if clauses.iter().any(|(_, c)| c.len() <= 1) {
        let inst = TsdInstance::canonical_no();
        trace.output_vertices = inst.graph().num_vertices();
        trace.output_edges = inst.graph().num_edges();
        for (name, v) in [("t1", 1), ("t2", 2), ("t3", 3), ("x", 4)] {
            trace.name_vertex(name.into(), v);
        }
        trace.facts.push(("canonical_no".into(), 1));
        return Ok((inst, trace));
    }

    let n = f.num_vars();
    name_literals(&mut trace, n);
    let mut next = 2 * n;
    let mut edges = Vec::new();
    let mut triangles = Vec::new();
    let mut new_triangle = |edges: &mut Vec<(Vertex, Vertex)>| {
        let t = [next + 1, next + 2, next + 3];
        next += 3;
        edges.extend([(t[0], t[1]), (t[1], t[2]), (t[0], t[2])]);
        triangles.push(t);
        t
    };
    let inequality = |edges: &mut Vec<(Vertex, Vertex)>, t: [Vertex; 3], u, v| {
        edges.extend([(u, t[0]), (u, t[2]), (v, t[1])]);
    };
    for i in 1..=n {
        let t = new_triangle(&mut edges);
        inequality(&mut edges, t, 2 * i - 1, 2 * i);
        for (label, v) in ["a", "b", "c"].iter().zip(t) {
            trace.name_vertex(format!("{label}{i}"), v);
        }
    }
    for (ci, clause) in &clauses {
        let lits: Vec<Vertex> = clause.literals().iter().map(|&l| literal_vertex(l)).collect();
        let t = new_triangle(&mut edges);
        if lits.len() == 3 {
            for (&l, &p) in lits.iter().zip(&t) {
                edges.push((l, p));
            }
        } else {
            inequality(&mut edges, t, lits[0], lits[1]);
        }
        for (j, v) in t.into_iter().enumerate() {
            trace.name_vertex(format!("clause{}.p{}", ci + 1, j + 1), v);
        }
    }
    let graph = Graph::new(next, edges).expect("gadget vertices are in range");
    trace.output_vertices = graph.num_vertices();
    trace.output_edges = graph.num_edges();
    let independent = (1..=2 * n).collect();
    let inst = TsdInstance::new(graph, independent, triangles)
        .expect("construction yields a triangle split decomposition");
    Ok((inst, trace))
}

/// Karp's transformation: `v` becomes the path `v_in – v_mid – v_out`
/// (`3v-2, 3v-1, 3v`) and arc `(u, v)` becomes the edge `{u_out, v_in}`.
pub fn directed_hc_to_undirected(g: &Digraph) -> (Graph, ReductionTrace) {
    let n = g.num_vertices();
    let mut edges = Vec::with_capacity(2 * n as usize + g.num_arcs());
    for v in 1..=n {
        edges.push((3 * v - 2, 3 * v - 1));
        edges.push((3 * v - 1, 3 * v));
    }
    edges.extend(g.arcs().iter().map(|&(u, v)| (3 * u, 3 * v - 2)));
    let out = Graph::new(3 * n, edges).expect("gadget vertices are in range");
    let mut trace = ReductionTrace::new("dhc-to-hc");
    trace.input_size = n as usize;
    trace.output_vertices = out.num_vertices();
    trace.output_edges = out.num_edges();
    for v in 1..=n {
        trace.name_vertex(format!("{v}.in"), 3 * v - 2);
        trace.name_vertex(format!("{v}.mid"), 3 * v - 1);
        trace.name_vertex(format!("{v}.out"), 3 * v);
    }
    (out, trace)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nae_encoding_of_single_clause() {
        let f = CnfFormula::from_dimacs(2, &[&[1, 2]]).unwrap();
        let (h, trace) = naesat_to_hypergraph(&f);
        assert_eq!(h.num_vertices(), 4);
        assert_eq!(h.edges(), &[vec![1, 3], vec![1, 2], vec![3, 4]]);
        assert!(trace.is_injective());
        assert_eq!(trace.lookup("~x2"), Some(4));
    }

    #[test]
    fn nae_encoding_without_clauses() {
        let f = CnfFormula::new(2, vec![]).unwrap();
        let (h, _) = naesat_to_hypergraph(&f);
        assert_eq!(h.edges(), &[vec![1, 2], vec![3, 4]]);
    }

    #[test]
    fn fresh_variable_added() {
        let f = CnfFormula::from_dimacs(1, &[&[1], &[-1]]).unwrap();
        let g = cnfsat_to_naesat(&f);
        assert_eq!(g, CnfFormula::from_dimacs(2, &[&[1, 2], &[-1, 2]]).unwrap());
        let empty = cnfsat_to_naesat(&CnfFormula::new(0, vec![]).unwrap());
        assert_eq!(empty.num_vars(), 1);
        assert_eq!(empty.num_clauses(), 0);
    }

    #[test]
    fn tsd_single_clause_shape() {
        let f = CnfFormula::from_dimacs(3, &[&[1, 2, 3]]).unwrap();
        let (inst, trace) = naesat3_to_tsd(&f).unwrap();
        assert_eq!(inst.triangles().len(), 4);
        assert_eq!(inst.independent().len(), 6);
        assert_eq!(inst.graph().num_vertices(), 18);
        assert!(trace.is_injective());
    }

    #[test]
    fn tsd_degenerate_clauses() {
        let unit = CnfFormula::from_dimacs(2, &[&[1, 2], &[-2]]).unwrap();
        assert_eq!(naesat3_to_tsd(&unit).unwrap().0, TsdInstance::canonical_no());
        let taut = CnfFormula::from_dimacs(2, &[&[1, -1, 2]]).unwrap();
        let (inst, _) = naesat3_to_tsd(&taut).unwrap();
        assert_eq!(inst.triangles().len(), 2);
        let big = CnfFormula::from_dimacs(4, &[&[1, 2, 3, 4]]).unwrap();
        assert!(naesat3_to_tsd(&big).is_err());
    }

    #[test]
    fn karp_on_directed_triangle() {
        let g = Digraph::new(3, vec![(1, 2), (2, 3), (3, 1)]).unwrap();
        let (u, trace) = directed_hc_to_undirected(&g);
        assert_eq!(u.num_vertices(), 9);
        assert_eq!(u.num_edges(), 9);
        assert!(u.adjacency().iter().all(|a| a.len() == 2));
        assert_eq!(trace.lookup("2.in"), Some(4));
    }

    #[test]
    fn karp_on_single_vertex() {
        let g = Digraph::new(1, vec![]).unwrap();
        let (u, _) = directed_hc_to_undirected(&g);
        assert_eq!(u.edges(), &[(1, 2), (2, 3)]);
    }
}
