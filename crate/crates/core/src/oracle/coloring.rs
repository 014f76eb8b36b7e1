//! List coloring, with two engines.
//!
//! The default engine encodes the instance as CNF (one variable per vertex
//! and allowed color) and runs the clause-learning solver; learning is what
//! keeps refutations of composed instances, made of many loosely coupled
//! gadgets, from thrashing.
//!
//! The second engine is plain backtracking with forward checking. Domains
//! are bitmasks over colors `1..=8`. Assigning a color removes it from the
//! neighbors' domains; a neighbor left with a single color is assigned at
//! once, and an emptied domain fails the branch. The next vertex to branch
//! on has the smallest domain, then the highest degree, then the lowest
//! index.

use alloc::vec;
use alloc::vec::Vec;

use super::cdcl::{neg, pos, Cdcl, Outcome};
use super::{Limits, Meter, OracleAnswer};
use crate::model::{Certificate, DecisionInstance, Graph, ListColoringInstance, TsdInstance, Vertex};

struct Search<'m, 'l> {
    adj: Vec<Vec<usize>>,
    /// Plain coloring with one palette everywhere: unused colors are
    /// interchangeable, so only the lowest unused one is ever tried.
    symmetric: bool,
    meter: &'m mut Meter<'l>,
}

#[derive(Clone)]
struct State {
    domains: Vec<u8>,
    color: Vec<u8>,
    /// Highest color in use, 0 when none.
    top: u8,
}

impl Search<'_, '_> {
    /// Colors `v` with `c` and propagates; false on a wipe-out.
    fn assign(&self, st: &mut State, v: usize, c: u8) -> bool {
        let mut queue = vec![(v, c)];
        while let Some((v, c)) = queue.pop() {
            if st.color[v] != 0 {
                if st.color[v] != c {
                    return false;
                }
                continue;
            }
            st.color[v] = c;
            st.domains[v] = 1 << (c - 1);
            st.top = st.top.max(c);
            for &w in &self.adj[v] {
                if st.color[w] == c {
                    return false;
                }
                if st.color[w] != 0 {
                    continue;
                }
                let before = st.domains[w];
                let after = before & !(1 << (c - 1));
                if after == 0 {
                    return false;
                }
                st.domains[w] = after;
                if after != before && after.count_ones() == 1 {
                    queue.push((w, after.trailing_zeros() as u8 + 1));
                }
            }
        }
        true
    }

    fn pick(&self, st: &State) -> Option<usize> {
        (0..st.color.len())
            .filter(|&v| st.color[v] == 0)
            .min_by_key(|&v| {
                (
                    st.domains[v].count_ones(),
                    core::cmp::Reverse(self.adj[v].len()),
                    v,
                )
            })
    }

    fn solve(&mut self, st: State) -> Option<State> {
        let Some(v) = self.pick(&st) else {
            return Some(st);
        };
        let mut options = st.domains[v];
        if self.symmetric {
            let allowed = if st.top >= 8 { 0xff } else { (1u16 << (st.top + 1)) - 1 };
            options &= allowed as u8;
        }
        while options != 0 {
            let c = options.trailing_zeros() as u8 + 1;
            options &= options - 1;
            if !self.meter.tick() {
                return None;
            }
            let mut next = st.clone();
            if self.assign(&mut next, v, c) {
                if let Some(done) = self.solve(next) {
                    return Some(done);
                }
                if self.meter.exhausted {
                    return None;
                }
            }
        }
        None
    }
}

fn backtrack_search(g: &Graph, lists: &[u8], symmetric: bool, meter: &mut Meter) -> Option<Vec<u8>> {
    let adj: Vec<Vec<usize>> = g
        .adjacency()
        .into_iter()
        .map(|a| a.into_iter().map(|w| w as usize - 1).collect())
        .collect();
    let n = lists.len();
    let mut st = State {
        domains: lists.to_vec(),
        color: vec![0; n],
        top: 0,
    };
    let mut search = Search {
        adj,
        symmetric,
        meter,
    };
    for v in 0..n {
        if st.domains[v] == 0 {
            return None;
        }
        if st.color[v] == 0 && st.domains[v].count_ones() == 1 {
            let c = st.domains[v].trailing_zeros() as u8 + 1;
            if !search.assign(&mut st, v, c) {
                return None;
            }
        }
    }
    search.solve(st).map(|s| s.color)
}

/// Greedy clique: vertices by decreasing degree, each kept if adjacent to
/// all kept so far.
fn greedy_clique(adj: &[Vec<Vertex>]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..adj.len()).collect();
    order.sort_by_key(|&v| (core::cmp::Reverse(adj[v].len()), v));
    let mut clique: Vec<usize> = Vec::new();
    for v in order {
        if clique.iter().all(|&c| adj[v].contains(&(c as Vertex + 1))) {
            clique.push(v);
        }
    }
    clique
}

/// CNF search. With `symmetric` (one palette everywhere) a greedy clique is
/// precolored `1, 2, ...`, which loses no solutions up to renaming colors.
fn cdcl_search(g: &Graph, lists: &[u8], symmetric: bool, meter: &mut Meter) -> Option<Vec<u8>> {
    let n = lists.len();
    let mut var = vec![[usize::MAX; 8]; n];
    let mut count = 0;
    for v in 0..n {
        for c in 0..8 {
            if lists[v] >> c & 1 == 1 {
                var[v][c] = count;
                count += 1;
            }
        }
    }
    let mut s = Cdcl::new(count);
    for v in 0..n {
        let own: Vec<usize> = var[v].iter().copied().filter(|&x| x != usize::MAX).collect();
        s.add_clause(own.iter().map(|&x| pos(x)).collect());
        for (i, &a) in own.iter().enumerate() {
            for &b in &own[i + 1..] {
                s.add_clause(vec![neg(a), neg(b)]);
            }
        }
    }
    for &(u, w) in g.edges() {
        let (u, w) = (u as usize - 1, w as usize - 1);
        for c in 0..8 {
            if var[u][c] != usize::MAX && var[w][c] != usize::MAX {
                s.add_clause(vec![neg(var[u][c]), neg(var[w][c])]);
            }
        }
    }
    if symmetric {
        let clique = greedy_clique(&g.adjacency());
        for (i, &v) in clique.iter().enumerate().take(8) {
            if var[v][i] != usize::MAX {
                s.add_clause(vec![pos(var[v][i])]);
            }
        }
    }
    match s.solve(meter) {
        Outcome::Sat(a) => Some(
            (0..n)
                .map(|v| (0..8).find(|&c| var[v][c] != usize::MAX && a[var[v][c]]).expect("one color") as u8 + 1)
                .collect(),
        ),
        Outcome::Unsat | Outcome::Stopped => None,
    }
}

pub fn solve_list_coloring(inst: &ListColoringInstance, limits: &Limits) -> OracleAnswer {
    let mut meter = Meter::new(limits);
    let found = cdcl_search(inst.graph(), inst.lists(), false, &mut meter);
    meter.finish(
        || DecisionInstance::ListColoring(inst.clone()),
        found.map(Certificate::Coloring),
    )
}

/// The forward-checking engine, kept as an independent second route.
pub fn list_coloring_backtrack(inst: &ListColoringInstance, limits: &Limits) -> OracleAnswer {
    let mut meter = Meter::new(limits);
    let found = backtrack_search(inst.graph(), inst.lists(), false, &mut meter);
    meter.finish(
        || DecisionInstance::ListColoring(inst.clone()),
        found.map(Certificate::Coloring),
    )
}

/// 2-3-coloring: colors `{1,2}` on the independent set, `{1,2,3}` elsewhere.
pub fn solve_tsd(inst: &TsdInstance, limits: &Limits) -> OracleAnswer {
    let mut meter = Meter::new(limits);
    let found = cdcl_search(inst.graph(), &inst.color_lists(), false, &mut meter);
    meter.finish(|| DecisionInstance::Tsd(inst.clone()), found.map(Certificate::Coloring))
}

/// Proper coloring with `palette` colors (at most 8). Only the 4-color case
/// has a matching [`DecisionInstance`]; other palettes are not re-checked.
pub fn solve_graph_coloring(g: &Graph, palette: u8, limits: &Limits) -> OracleAnswer {
    color_with(g, palette, limits, cdcl_search)
}

/// [`solve_graph_coloring`] on the forward-checking engine, with symmetry
/// breaking by trying only the lowest unused color.
pub fn graph_coloring_backtrack(g: &Graph, palette: u8, limits: &Limits) -> OracleAnswer {
    color_with(g, palette, limits, backtrack_search)
}

type Engine = fn(&Graph, &[u8], bool, &mut Meter) -> Option<Vec<u8>>;

fn color_with(g: &Graph, palette: u8, limits: &Limits, engine: Engine) -> OracleAnswer {
    assert!((1..=8).contains(&palette), "palette of 1 to 8 colors");
    let full = if palette == 8 { 0xff } else { (1u8 << palette) - 1 };
    let lists = vec![full; g.num_vertices() as usize];
    let mut meter = Meter::new(limits);
    let found = engine(g, &lists, true, &mut meter);
    if palette == 4 {
        return meter.finish(|| DecisionInstance::FourColor(g.clone()), found.map(Certificate::Coloring));
    }
    if let Some(c) = &found {
        assert!(g.edges().iter().all(|&(u, v)| c[u as usize - 1] != c[v as usize - 1]));
    }
    let verdict = match (&found, meter.exhausted) {
        (Some(_), _) => super::Verdict::Yes,
        (None, true) => super::Verdict::Timeout,
        (None, false) => super::Verdict::No,
    };
    OracleAnswer {
        verdict,
        certificate: found.map(Certificate::Coloring),
        nodes: meter.nodes,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::Verdict;

    fn complete(n: u32) -> Graph {
        let mut e = Vec::new();
        for u in 1..=n {
            for v in u + 1..=n {
                e.push((u, v));
            }
        }
        Graph::new(n, e).unwrap()
    }

    #[test]
    fn cliques() {
        let lim = Limits::default();
        assert_eq!(solve_graph_coloring(&complete(5), 4, &lim).verdict, Verdict::No);
        assert_eq!(solve_graph_coloring(&complete(4), 4, &lim).verdict, Verdict::Yes);
        assert_eq!(solve_graph_coloring(&complete(3), 2, &lim).verdict, Verdict::No);
        assert_eq!(graph_coloring_backtrack(&complete(5), 4, &lim).verdict, Verdict::No);
        assert_eq!(graph_coloring_backtrack(&complete(4), 4, &lim).verdict, Verdict::Yes);
    }

    #[test]
    fn lists_respected() {
        // path 1-2-3 with lists {1}, {1,2}, {2}: 2 has no color left
        let g = Graph::new(3, vec![(1, 2), (2, 3)]).unwrap();
        let inst = ListColoringInstance::new(g, vec![0b01, 0b11, 0b10]).unwrap();
        assert_eq!(solve_list_coloring(&inst, &Limits::default()).verdict, Verdict::No);
        assert_eq!(list_coloring_backtrack(&inst, &Limits::default()).verdict, Verdict::No);
    }

    #[test]
    fn canonical_tsd_no() {
        let ans = solve_tsd(&TsdInstance::canonical_no(), &Limits::default());
        assert_eq!(ans.verdict, Verdict::No);
    }

    #[test]
    fn odd_cycle_three_colors() {
        let g = Graph::new(5, vec![(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)]).unwrap();
        let ans = solve_graph_coloring(&g, 3, &Limits::default());
        assert_eq!(ans.verdict, Verdict::Yes);
        assert_eq!(solve_graph_coloring(&g, 2, &Limits::default()).verdict, Verdict::No);
    }
}
