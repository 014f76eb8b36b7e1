//! Polynomial-time certificate checkers, one per decision problem.

use alloc::vec::Vec;
use core::fmt;

use super::{
    BipartiteHamInstance, Certificate, CnfFormula, Digraph, EqColRbdsInstance, Graph, Hypergraph,
    ListColoringInstance, TsdInstance, Vertex,
};

/// A problem instance tagged with the question being asked about it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DecisionInstance {
    Sat(CnfFormula),
    Nae(CnfFormula),
    TwoColor(Hypergraph),
    FourColor(Graph),
    HamCycle(Graph),
    DirectedHamCycle(Digraph),
    DomSet { graph: Graph, budget: usize },
    ConnectedDomSet { graph: Graph, budget: usize },
    Tsd(TsdInstance),
    BipartiteHam(BipartiteHamInstance),
    ColRbds(EqColRbdsInstance),
    ListColoring(ListColoringInstance),
}

impl DecisionInstance {
    pub fn problem_name(&self) -> &'static str {
        match self {
            DecisionInstance::Sat(_) => "sat",
            DecisionInstance::Nae(_) => "nae",
            DecisionInstance::TwoColor(_) => "2col",
            DecisionInstance::FourColor(_) => "4col",
            DecisionInstance::HamCycle(_) => "hc",
            DecisionInstance::DirectedHamCycle(_) => "dhc",
            DecisionInstance::DomSet { .. } => "ds",
            DecisionInstance::ConnectedDomSet { .. } => "cds",
            DecisionInstance::Tsd(_) => "tsd",
            DecisionInstance::BipartiteHam(_) => "bipham",
            DecisionInstance::ColRbds(_) => "colrbds",
            DecisionInstance::ListColoring(_) => "listcol",
        }
    }

    /// The certificate variant a YES answer carries.
    pub fn certificate_kind(&self) -> &'static str {
        match self {
            DecisionInstance::Sat(_) | DecisionInstance::Nae(_) => "assignment",
            DecisionInstance::TwoColor(_)
            | DecisionInstance::FourColor(_)
            | DecisionInstance::Tsd(_)
            | DecisionInstance::ListColoring(_) => "coloring",
            DecisionInstance::HamCycle(_) | DecisionInstance::DirectedHamCycle(_) => "ham-cycle",
            DecisionInstance::BipartiteHam(_) => "ham-path",
            DecisionInstance::DomSet { .. }
            | DecisionInstance::ConnectedDomSet { .. }
            | DecisionInstance::ColRbds(_) => "dom-set",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckError {
    pub problem: &'static str,
    pub expected: &'static str,
    pub found: &'static str,
}

impl fmt::Display for CheckError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "problem {} takes a {} certificate, got {}",
            self.problem, self.expected, self.found
        )
    }
}

/// Returns whether `cert` is a valid solution of `instance`.
///
/// Fails only when the certificate variant does not fit the problem.
pub fn check_certificate(
    instance: &DecisionInstance,
    cert: &Certificate,
) -> Result<bool, CheckError> {
    use Certificate as C;
    use DecisionInstance as D;
    let valid = match (instance, cert) {
        (D::Sat(f), C::Assignment(a)) => f.is_satisfied_by(a),
        (D::Nae(f), C::Assignment(a)) => f.is_nae_satisfied_by(a),
        (D::TwoColor(h), C::Coloring(c)) => {
            c.iter().all(|&x| x == 1 || x == 2) && h.is_properly_two_colored(c)
        }
        (D::FourColor(g), C::Coloring(c)) => {
            proper_with_lists(g, c, |_| 0b1111)
        }
        (D::ListColoring(inst), C::Coloring(c)) => {
            proper_with_lists(inst.graph(), c, |v| inst.lists()[v])
        }
        (D::Tsd(inst), C::Coloring(c)) => {
            let lists = inst.color_lists();
            proper_with_lists(inst.graph(), c, |v| lists[v])
        }
        (D::HamCycle(g), C::HamCycle(order)) => {
            g.num_vertices() >= 3
                && is_permutation(order, g.num_vertices())
                && cyclic_pairs(order).all(|(u, v)| g.has_edge(u, v))
        }
        (D::DirectedHamCycle(g), C::HamCycle(order)) => {
            g.num_vertices() >= 2
                && is_permutation(order, g.num_vertices())
                && cyclic_pairs(order).all(|(u, v)| g.has_arc(u, v))
        }
        (D::BipartiteHam(inst), C::HamPath(order)) => {
            is_permutation(order, inst.graph().num_vertices())
                && order.first() == Some(&inst.s())
                && order.last() == Some(&inst.t())
                && order.windows(2).all(|w| inst.graph().has_edge(w[0], w[1]))
        }
        (D::DomSet { graph, budget }, C::DomSet(set)) => {
            set.len() <= *budget && dominates(graph, set)
        }
        (D::ConnectedDomSet { graph, budget }, C::DomSet(set)) => {
            set.len() <= *budget && dominates(graph, set) && graph.induces_connected(set)
        }
        (D::ColRbds(inst), C::DomSet(set)) => is_col_rbds(inst, set),
        _ => {
            return Err(CheckError {
                problem: instance.problem_name(),
                expected: instance.certificate_kind(),
                found: cert.kind(),
            })
        }
    };
    Ok(valid)
}

fn proper_with_lists(g: &Graph, colors: &[u8], list: impl Fn(usize) -> u8) -> bool {
    colors.len() == g.num_vertices() as usize
        && colors
            .iter()
            .enumerate()
            .all(|(v, &c)| (1..=8).contains(&c) && list(v) & (1 << (c - 1)) != 0)
        && g
            .edges()
            .iter()
            .all(|&(u, v)| colors[u as usize - 1] != colors[v as usize - 1])
}

fn is_permutation(order: &[Vertex], n: u32) -> bool {
    if order.len() != n as usize {
        return false;
    }
    let mut seen = alloc::vec![false; n as usize];
    order.iter().all(|&v| {
        v >= 1 && v <= n && !core::mem::replace(&mut seen[v as usize - 1], true)
    })
}

fn cyclic_pairs(order: &[Vertex]) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
    order
        .iter()
        .copied()
        .zip(order.iter().copied().cycle().skip(1))
}

fn distinct_in_range(set: &[Vertex], n: u32) -> Option<Vec<bool>> {
    let mut inside = alloc::vec![false; n as usize];
    for &v in set {
        if v == 0 || v > n || core::mem::replace(&mut inside[v as usize - 1], true) {
            return None;
        }
    }
    Some(inside)
}

fn dominates(g: &Graph, set: &[Vertex]) -> bool {
    let Some(mut covered) = distinct_in_range(set, g.num_vertices()) else {
        return false;
    };
    let chosen = covered.clone();
    for &(u, v) in g.edges() {
        let (ui, vi) = (u as usize - 1, v as usize - 1);
        if chosen[ui] {
            covered[vi] = true;
        }
        if chosen[vi] {
            covered[ui] = true;
        }
    }
    covered.iter().all(|&c| c)
}

fn is_col_rbds(inst: &EqColRbdsInstance, set: &[Vertex]) -> bool {
    let g = inst.graph();
    let Some(chosen) = distinct_in_range(set, g.num_vertices()) else {
        return false;
    };
    let one_per_class = inst
        .classes()
        .iter()
        .all(|class| class.iter().filter(|&&v| chosen[v as usize - 1]).count() == 1);
    if !one_per_class || set.len() != inst.k() {
        return false;
    }
    let adj = g.adjacency();
    inst.blue()
        .iter()
        .all(|&b| adj[b as usize - 1].iter().any(|&r| chosen[r as usize - 1]))
}
