//! A small conflict-driven clause-learning SAT engine: two watched literals,
//! first-UIP learning, activity-based branching with saved phases, and Luby
//! restarts. No clause deletion; the instances it serves are a few thousand
//! clauses at most.

use alloc::vec;
use alloc::vec::Vec;

use super::Meter;

/// `2 * var + 1` for the negative literal.
pub(crate) type Lit = u32;

pub(crate) fn pos(var: usize) -> Lit {
    (2 * var) as Lit
}

pub(crate) fn neg(var: usize) -> Lit {
    (2 * var + 1) as Lit
}

fn var_of(l: Lit) -> usize {
    (l >> 1) as usize
}

const NO_REASON: usize = usize::MAX;
const UNSET: u8 = 0;
const TRUE: u8 = 1;
const FALSE: u8 = 2;

pub(crate) enum Outcome {
    Sat(Vec<bool>),
    Unsat,
    Stopped,
}

pub(crate) struct Cdcl {
    clauses: Vec<Vec<Lit>>,
    watches: Vec<Vec<usize>>,
    units: Vec<Lit>,
    value: Vec<u8>,
    level: Vec<u32>,
    reason: Vec<usize>,
    trail: Vec<Lit>,
    trail_lim: Vec<usize>,
    qhead: usize,
    activity: Vec<f64>,
    inc: f64,
    phase: Vec<bool>,
    seen: Vec<bool>,
    trivially_unsat: bool,
}

fn lit_value(value: &[u8], l: Lit) -> u8 {
    match value[var_of(l)] {
        UNSET => UNSET,
        v if (v == TRUE) == (l & 1 == 0) => TRUE,
        _ => FALSE,
    }
}

fn luby(mut x: u64) -> u64 {
    let (mut size, mut seq) = (1u64, 0u32);
    while size < x + 1 {
        seq += 1;
        size = 2 * size + 1;
    }
    while size - 1 != x {
        size = (size - 1) >> 1;
        seq -= 1;
        x %= size;
    }
    1 << seq
}

impl Cdcl {
    pub(crate) fn new(num_vars: usize) -> Self {
        Cdcl {
            clauses: Vec::new(),
            watches: vec![Vec::new(); 2 * num_vars],
            units: Vec::new(),
            value: vec![UNSET; num_vars],
            level: vec![0; num_vars],
            reason: vec![NO_REASON; num_vars],
            trail: Vec::new(),
            trail_lim: Vec::new(),
            qhead: 0,
            activity: vec![0.0; num_vars],
            inc: 1.0,
            phase: vec![false; num_vars],
            seen: vec![false; num_vars],
            trivially_unsat: false,
        }
    }

    pub(crate) fn add_clause(&mut self, mut lits: Vec<Lit>) {
        lits.sort_unstable();
        lits.dedup();
        if lits.windows(2).any(|w| w[0] ^ 1 == w[1]) {
            return;
        }
        match lits.len() {
            0 => self.trivially_unsat = true,
            1 => self.units.push(lits[0]),
            _ => {
                let ci = self.clauses.len();
                self.watches[lits[0] as usize].push(ci);
                self.watches[lits[1] as usize].push(ci);
                self.clauses.push(lits);
            }
        }
    }

    fn decision_level(&self) -> u32 {
        self.trail_lim.len() as u32
    }

    fn enqueue(&mut self, l: Lit, reason: usize) {
        let v = var_of(l);
        self.value[v] = if l & 1 == 0 { TRUE } else { FALSE };
        self.level[v] = self.decision_level();
        self.reason[v] = reason;
        self.trail.push(l);
    }

    /// Unit propagation; returns a falsified clause on conflict.
    fn propagate(&mut self) -> Option<usize> {
        while self.qhead < self.trail.len() {
            let false_lit = self.trail[self.qhead] ^ 1;
            self.qhead += 1;
            let mut ws = core::mem::take(&mut self.watches[false_lit as usize]);
            let (mut i, mut j) = (0, 0);
            let mut conflict = None;
            while i < ws.len() {
                let ci = ws[i];
                i += 1;
                let c = &mut self.clauses[ci];
                if c[0] == false_lit {
                    c.swap(0, 1);
                }
                if lit_value(&self.value, c[0]) == TRUE {
                    ws[j] = ci;
                    j += 1;
                    continue;
                }
                if let Some(k) = (2..c.len()).find(|&k| lit_value(&self.value, c[k]) != FALSE) {
                    c.swap(1, k);
                    self.watches[c[1] as usize].push(ci);
                    continue;
                }
                ws[j] = ci;
                j += 1;
                let first = c[0];
                if lit_value(&self.value, first) == FALSE {
                    conflict = Some(ci);
                    while i < ws.len() {
                        ws[j] = ws[i];
                        i += 1;
                        j += 1;
                    }
                } else {
                    self.enqueue(first, ci);
                }
            }
            ws.truncate(j);
            self.watches[false_lit as usize] = ws;
            if conflict.is_some() {
                self.qhead = self.trail.len();
                return conflict;
            }
        }
        None
    }

    fn bump(&mut self, v: usize) {
        self.activity[v] += self.inc;
        if self.activity[v] > 1e100 {
            for a in &mut self.activity {
                *a *= 1e-100;
            }
            self.inc *= 1e-100;
        }
    }

    /// First-UIP learning; returns the learnt clause (asserting literal
    /// first) and the level to jump back to.
    fn analyze(&mut self, mut confl: usize) -> (Vec<Lit>, u32) {
        let mut learnt: Vec<Lit> = vec![0];
        let mut path = 0;
        let mut p: Option<Lit> = None;
        let mut idx = self.trail.len();
        let current = self.decision_level();
        loop {
            let start = usize::from(p.is_some());
            for k in start..self.clauses[confl].len() {
                let q = self.clauses[confl][k];
                let v = var_of(q);
                if !self.seen[v] && self.level[v] > 0 {
                    self.seen[v] = true;
                    self.bump(v);
                    if self.level[v] >= current {
                        path += 1;
                    } else {
                        learnt.push(q);
                    }
                }
            }
            loop {
                idx -= 1;
                if self.seen[var_of(self.trail[idx])] {
                    break;
                }
            }
            let lit = self.trail[idx];
            p = Some(lit);
            self.seen[var_of(lit)] = false;
            path -= 1;
            if path == 0 {
                break;
            }
            confl = self.reason[var_of(lit)];
        }
        learnt[0] = p.expect("conflict above level 0") ^ 1;
        for &l in &learnt[1..] {
            self.seen[var_of(l)] = false;
        }
        let mut back = 0;
        if learnt.len() > 1 {
            let best = (1..learnt.len())
                .max_by_key(|&k| (self.level[var_of(learnt[k])], core::cmp::Reverse(k)))
                .expect("nonempty tail");
            learnt.swap(1, best);
            back = self.level[var_of(learnt[1])];
        }
        (learnt, back)
    }

    fn backtrack(&mut self, level: u32) {
        if self.decision_level() <= level {
            return;
        }
        let keep = self.trail_lim[level as usize];
        for k in (keep..self.trail.len()).rev() {
            let v = var_of(self.trail[k]);
            self.phase[v] = self.value[v] == TRUE;
            self.value[v] = UNSET;
            self.reason[v] = NO_REASON;
        }
        self.trail.truncate(keep);
        self.trail_lim.truncate(level as usize);
        self.qhead = self.trail.len();
    }

    fn pick_branch(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for v in 0..self.value.len() {
            if self.value[v] == UNSET && best.is_none_or(|b| self.activity[v] > self.activity[b]) {
                best = Some(v);
            }
        }
        best
    }

    pub(crate) fn solve(mut self, meter: &mut Meter) -> Outcome {
        if self.trivially_unsat {
            return Outcome::Unsat;
        }
        for l in core::mem::take(&mut self.units) {
            match lit_value(&self.value, l) {
                FALSE => return Outcome::Unsat,
                TRUE => {}
                _ => self.enqueue(l, NO_REASON),
            }
        }
        let mut restarts = 0u64;
        let mut conflicts_left = 64 * luby(0);
        loop {
            if let Some(confl) = self.propagate() {
                if !meter.tick() {
                    return Outcome::Stopped;
                }
                if self.decision_level() == 0 {
                    return Outcome::Unsat;
                }
                let (learnt, back) = self.analyze(confl);
                self.backtrack(back);
                if learnt.len() == 1 {
                    self.enqueue(learnt[0], NO_REASON);
                } else {
                    let ci = self.clauses.len();
                    self.watches[learnt[0] as usize].push(ci);
                    self.watches[learnt[1] as usize].push(ci);
                    let asserting = learnt[0];
                    self.clauses.push(learnt);
                    self.enqueue(asserting, ci);
                }
                self.inc /= 0.95;
                conflicts_left = conflicts_left.saturating_sub(1);
                continue;
            }
            if conflicts_left == 0 {
                restarts += 1;
                conflicts_left = 64 * luby(restarts);
                self.backtrack(0);
                continue;
            }
            let Some(v) = self.pick_branch() else {
                return Outcome::Sat(self.value.iter().map(|&x| x == TRUE).collect());
            };
            if !meter.tick() {
                return Outcome::Stopped;
            }
            self.trail_lim.push(self.trail.len());
            let l = if self.phase[v] { pos(v) } else { neg(v) };
            self.enqueue(l, NO_REASON);
        }
    }
}
