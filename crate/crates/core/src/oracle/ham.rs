//! Hamiltonian cycle and path oracles.
//!
//! Two engines decide directed Hamiltonicity: a subset dynamic program for
//! graphs of at most [`DP_MAX_VERTICES`] vertices, and path-extension
//! backtracking for larger ones. Undirected graphs are treated as symmetric
//! digraphs that need at least 3 vertices.

use alloc::vec;
use alloc::vec::Vec;

use super::{Limits, Meter, OracleAnswer};
use crate::model::{BipartiteHamInstance, Certificate, DecisionInstance, Digraph, Graph, Vertex};

pub const DP_MAX_VERTICES: u32 = 20;

fn zero_based(lists: Vec<Vec<Vertex>>) -> Vec<Vec<usize>> {
    lists
        .into_iter()
        .map(|l| l.into_iter().map(|v| v as usize - 1).collect())
        .collect()
}

/// Held-Karp over subsets containing vertex 1: `reach[mask]` is the set of
/// end vertices of paths from vertex 1 that visit exactly `mask`.
fn dp_cycle(g: &Digraph, meter: &mut Meter) -> Option<Vec<Vertex>> {
    let n = g.num_vertices() as usize;
    assert!(n as u32 <= DP_MAX_VERTICES, "subset DP is limited to {DP_MAX_VERTICES} vertices");
    if n < 2 {
        return None;
    }
    let out = zero_based(g.out_adjacency());
    let inn = zero_based(g.in_adjacency());
    let out_mask: Vec<u32> = out.iter().map(|l| l.iter().fold(0, |m, &w| m | 1 << w)).collect();
    let full = (1u32 << n) - 1;
    let mut reach = vec![0u32; 1 << n];
    reach[1] = 1;
    for mask in 1..=full {
        if mask & 1 == 0 || reach[mask as usize] == 0 {
            continue;
        }
        if !meter.tick() {
            return None;
        }
        let mut ends = reach[mask as usize];
        while ends != 0 {
            let v = ends.trailing_zeros() as usize;
            ends &= ends - 1;
            let mut next = out_mask[v] & !mask;
            while next != 0 {
                let w = next.trailing_zeros();
                next &= next - 1;
                reach[(mask | 1 << w) as usize] |= 1 << w;
            }
        }
    }
    // close the cycle back to vertex 1, then walk predecessors
    let last = (0..n).find(|&v| v != 0 && reach[full as usize] >> v & 1 == 1 && out_mask[v] & 1 == 1)?;
    let mut order = vec![last];
    let mut mask = full;
    let mut v = last;
    while v != 0 {
        let prev_mask = mask & !(1 << v);
        let u = *inn[v]
            .iter()
            .find(|&&u| prev_mask >> u & 1 == 1 && reach[prev_mask as usize] >> u & 1 == 1)
            .expect("DP table is consistent");
        order.push(u);
        mask = prev_mask;
        v = u;
    }
    order.reverse();
    Some(order.into_iter().map(|v| v as Vertex + 1).collect())
}

struct Backtrack<'m, 'l> {
    out: Vec<Vec<usize>>,
    inn: Vec<Vec<usize>>,
    visited: Vec<bool>,
    path: Vec<usize>,
    meter: &'m mut Meter<'l>,
}

impl Backtrack<'_, '_> {
    /// Cheap necessary conditions on the current partial path. Returns the
    /// forced next vertex when one exists, `Err` when the branch is dead.
    fn prune(&self) -> Result<Option<usize>, ()> {
        let n = self.out.len();
        let end = *self.path.last().expect("path starts at vertex 0");
        let mut forced = None;
        for w in 0..n {
            if self.visited[w] {
                continue;
            }
            // w needs a predecessor among the unvisited vertices or the end
            let mut preds = self.inn[w].iter().filter(|&&u| !self.visited[u] || u == end);
            let first = preds.next();
            match (first, preds.next()) {
                (None, _) => return Err(()),
                (Some(&u), None) if u == end => {
                    if forced.is_some_and(|f| f != w) {
                        return Err(());
                    }
                    forced = Some(w);
                }
                _ => {}
            }
            // and a successor among the unvisited vertices or the start
            if !self.out[w].iter().any(|&x| !self.visited[x] || x == 0) {
                return Err(());
            }
        }
        // every unvisited vertex must be reachable from the end
        let mut seen = vec![false; n];
        let mut stack = vec![end];
        let mut count = 0;
        while let Some(u) = stack.pop() {
            for &w in &self.out[u] {
                if !self.visited[w] && !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        let unvisited = n - self.path.len();
        if count < unvisited {
            return Err(());
        }
        Ok(forced)
    }

    fn extend(&mut self) -> bool {
        let n = self.out.len();
        let end = *self.path.last().expect("nonempty path");
        if self.path.len() == n {
            return self.out[end].contains(&0);
        }
        if !self.meter.tick() {
            return false;
        }
        let forced = match self.prune() {
            Err(()) => return false,
            Ok(f) => f,
        };
        let candidates: Vec<usize> = match forced {
            Some(w) => vec![w],
            None => self.out[end].iter().copied().filter(|&w| !self.visited[w]).collect(),
        };
        for w in candidates {
            self.visited[w] = true;
            self.path.push(w);
            if self.extend() {
                return true;
            }
            self.path.pop();
            self.visited[w] = false;
            if self.meter.exhausted {
                return false;
            }
        }
        false
    }
}

fn backtrack_cycle(g: &Digraph, meter: &mut Meter) -> Option<Vec<Vertex>> {
    let n = g.num_vertices() as usize;
    if n < 2 {
        return None;
    }
    let mut out = zero_based(g.out_adjacency());
    for l in &mut out {
        l.sort_unstable();
    }
    let mut bt = Backtrack {
        out,
        inn: zero_based(g.in_adjacency()),
        visited: vec![false; n],
        path: vec![0],
        meter,
    };
    bt.visited[0] = true;
    bt.extend()
        .then(|| bt.path.iter().map(|&v| v as Vertex + 1).collect())
}

/// Subset DP engine; panics above [`DP_MAX_VERTICES`] vertices.
pub fn ham_cycle_dp(g: &Digraph, limits: &Limits) -> OracleAnswer {
    let mut meter = Meter::new(limits);
    let found = dp_cycle(g, &mut meter);
    meter.finish(
        || DecisionInstance::DirectedHamCycle(g.clone()),
        found.map(Certificate::HamCycle),
    )
}

/// Backtracking engine.
pub fn ham_cycle_backtrack(g: &Digraph, limits: &Limits) -> OracleAnswer {
    let mut meter = Meter::new(limits);
    let found = backtrack_cycle(g, &mut meter);
    meter.finish(
        || DecisionInstance::DirectedHamCycle(g.clone()),
        found.map(Certificate::HamCycle),
    )
}

pub fn solve_directed_ham_cycle(g: &Digraph, limits: &Limits) -> OracleAnswer {
    if g.num_vertices() <= DP_MAX_VERTICES {
        ham_cycle_dp(g, limits)
    } else {
        ham_cycle_backtrack(g, limits)
    }
}

pub fn solve_ham_cycle(g: &Graph, limits: &Limits) -> OracleAnswer {
    let mut meter = Meter::new(limits);
    let found = if g.num_vertices() < 3 {
        None
    } else {
        backtrack_cycle(&Digraph::symmetric(g), &mut meter)
    };
    meter.finish(|| DecisionInstance::HamCycle(g.clone()), found.map(Certificate::HamCycle))
}

/// Hamiltonian `s`–`t` path: a Hamiltonian cycle of the digraph with both
/// edge directions, arcs into `s` and out of `t` removed, and the arc `t → s`.
pub fn solve_ham_path_st(inst: &BipartiteHamInstance, limits: &Limits) -> OracleAnswer {
    let g = inst.graph();
    let (s, t) = (inst.s(), inst.t());
    let mut arcs: Vec<(Vertex, Vertex)> = g
        .edges()
        .iter()
        .flat_map(|&(u, v)| [(u, v), (v, u)])
        .filter(|&(u, v)| v != s && u != t)
        .collect();
    arcs.push((t, s));
    let d = Digraph::new(g.num_vertices(), arcs).expect("arcs of a valid graph");
    let mut meter = Meter::new(limits);
    let cycle = if d.num_vertices() <= DP_MAX_VERTICES {
        dp_cycle(&d, &mut meter)
    } else {
        backtrack_cycle(&d, &mut meter)
    };
    let path = cycle.map(|c| {
        let at = c.iter().position(|&v| v == s).expect("cycle covers s");
        let mut p = c[at..].to_vec();
        p.extend_from_slice(&c[..at]);
        p
    });
    meter.finish(
        || DecisionInstance::BipartiteHam(inst.clone()),
        path.map(Certificate::HamPath),
    )
}
