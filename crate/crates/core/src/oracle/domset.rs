//! Bounded-size (connected) dominating sets and colorful red-blue domination.

use alloc::vec;
use alloc::vec::Vec;

use super::{Limits, Meter, OracleAnswer, OracleError};
use crate::model::{Certificate, DecisionInstance, EqColRbdsInstance, Graph, Vertex};

struct DomSearch<'m, 'l> {
    /// Closed neighborhoods, sorted.
    closed: Vec<Vec<usize>>,
    max_closed: usize,
    connected: bool,
    chosen: Vec<usize>,
    /// How many chosen vertices dominate each vertex.
    cover: Vec<u32>,
    meter: &'m mut Meter<'l>,
}

impl DomSearch<'_, '_> {
    fn push(&mut self, w: usize) {
        self.chosen.push(w);
        for &x in &self.closed[w] {
            self.cover[x] += 1;
        }
    }

    fn pop(&mut self) {
        let w = self.chosen.pop().expect("nonempty");
        for &x in &self.closed[w] {
            self.cover[x] -= 1;
        }
    }

    /// Vertices adjacent to the component of `chosen[0]`, excluding chosen
    /// ones; `None` when the chosen set is connected.
    fn frontier(&self) -> Option<Vec<usize>> {
        let n = self.closed.len();
        let mut inside = vec![false; n];
        for &c in &self.chosen {
            inside[c] = true;
        }
        let mut comp = vec![false; n];
        let mut stack = vec![self.chosen[0]];
        comp[self.chosen[0]] = true;
        let mut size = 1;
        while let Some(u) = stack.pop() {
            for &w in &self.closed[u] {
                if inside[w] && !comp[w] {
                    comp[w] = true;
                    size += 1;
                    stack.push(w);
                }
            }
        }
        if size == self.chosen.len() {
            return None;
        }
        let mut out: Vec<usize> = (0..n)
            .filter(|&w| !inside[w] && self.closed[w].iter().any(|&x| comp[x]))
            .collect();
        out.sort_unstable();
        Some(out)
    }

    /// Searches for a solution extending `chosen` with at most `size` vertices.
    fn search(&mut self, size: usize) -> bool {
        if !self.meter.tick() {
            return false;
        }
        let room = size - self.chosen.len();
        let undominated = self.cover.iter().filter(|&&c| c == 0).count();
        let candidates = if undominated > 0 {
            if undominated > room * self.max_closed {
                return false;
            }
            let u = self.cover.iter().position(|&c| c == 0).expect("some undominated");
            self.closed[u].clone()
        } else if !self.connected || self.chosen.is_empty() {
            return true;
        } else {
            match self.frontier() {
                None => return true,
                Some(f) => f,
            }
        };
        if room == 0 {
            return false;
        }
        for w in candidates {
            if self.chosen.contains(&w) {
                continue;
            }
            self.push(w);
            let ok = self.search(size);
            if ok {
                return true;
            }
            self.pop();
            if self.meter.exhausted {
                return false;
            }
        }
        false
    }
}

/// Dominating set (optionally inducing a connected subgraph) of size at most
/// `budget`, by iterative deepening on the size. The certificate is a
/// smallest such set.
pub fn solve_dom_set(
    g: &Graph,
    budget: usize,
    connected: bool,
    limits: &Limits,
) -> Result<OracleAnswer, OracleError> {
    let n = g.num_vertices() as usize;
    if budget > limits.budget_cap && budget < n {
        return Err(OracleError::BudgetTooLarge {
            budget,
            cap: limits.budget_cap,
        });
    }
    let closed: Vec<Vec<usize>> = g
        .adjacency()
        .into_iter()
        .enumerate()
        .map(|(v, a)| {
            let mut c: Vec<usize> = a.into_iter().map(|w| w as usize - 1).collect();
            c.push(v);
            c.sort_unstable();
            c
        })
        .collect();
    let max_closed = closed.iter().map(Vec::len).max().unwrap_or(1);
    let mut meter = Meter::new(limits);
    let mut s = DomSearch {
        closed,
        max_closed,
        connected,
        chosen: Vec::new(),
        cover: vec![0; n],
        meter: &mut meter,
    };
    let mut found = None;
    for size in 0..=budget.min(n) {
        if s.search(size) {
            let mut set: Vec<Vertex> = s.chosen.iter().map(|&v| v as Vertex + 1).collect();
            set.sort_unstable();
            found = Some(set);
            break;
        }
        if s.meter.exhausted {
            break;
        }
    }
    let inst = || {
        if connected {
            DecisionInstance::ConnectedDomSet { graph: g.clone(), budget }
        } else {
            DecisionInstance::DomSet { graph: g.clone(), budget }
        }
    };
    Ok(meter.finish(inst, found.map(Certificate::DomSet)))
}

/// One red vertex per color class dominating all blue vertices, by
/// enumerating the product of the classes.
pub fn solve_col_rbds(inst: &EqColRbdsInstance, limits: &Limits) -> OracleAnswer {
    let g = inst.graph();
    let n = g.num_vertices() as usize;
    let adj = g.adjacency();
    let blue: Vec<usize> = inst.blue().iter().map(|&b| b as usize - 1).collect();
    let mut blue_pos = vec![usize::MAX; n];
    for (i, &b) in blue.iter().enumerate() {
        blue_pos[b] = i;
    }
    let reach: Vec<Vec<usize>> = (0..n)
        .map(|v| {
            adj[v]
                .iter()
                .map(|&w| blue_pos[w as usize - 1])
                .filter(|&p| p != usize::MAX)
                .collect()
        })
        .collect();
    let classes = inst.classes();
    let mut meter = Meter::new(limits);
    let mut cover = vec![0u32; blue.len()];
    let mut pick: Vec<Vertex> = Vec::new();

    fn go(
        depth: usize,
        classes: &[Vec<Vertex>],
        reach: &[Vec<usize>],
        cover: &mut [u32],
        pick: &mut Vec<Vertex>,
        meter: &mut Meter,
    ) -> bool {
        if depth == classes.len() {
            return cover.iter().all(|&c| c > 0);
        }
        for &r in &classes[depth] {
            if !meter.tick() {
                return false;
            }
            let ri = r as usize - 1;
            for &b in &reach[ri] {
                cover[b] += 1;
            }
            pick.push(r);
            if go(depth + 1, classes, reach, cover, pick, meter) {
                return true;
            }
            pick.pop();
            for &b in &reach[ri] {
                cover[b] -= 1;
            }
            if meter.exhausted {
                return false;
            }
        }
        false
    }

    let found = go(0, classes, &reach, &mut cover, &mut pick, &mut meter).then(|| {
        pick.sort_unstable();
        pick
    });
    meter.finish(|| DecisionInstance::ColRbds(inst.clone()), found.map(Certificate::DomSet))
}
