//! Assignment enumeration for SAT, NAE-SAT and hypergraph 2-coloring.
//!
//! Variables are assigned in index order, false before true. A clause is
//! checked as soon as its largest variable is set, which prunes the whole
//! subtree under a violated prefix.

use alloc::vec;
use alloc::vec::Vec;

use super::{Limits, Meter, OracleAnswer, OracleError};
use crate::model::{Certificate, CnfFormula, DecisionInstance, Hypergraph};

#[derive(Clone, Copy, PartialEq, Eq)]
enum Semantics {
    Sat,
    Nae,
}

/// Constraint as `(variable index from 0, negated)` pairs.
type Constraint = Vec<(usize, bool)>;

struct Enumerator<'m, 'l> {
    semantics: Semantics,
    /// `by_last[v]`: constraints whose largest variable is `v`.
    by_last: Vec<Vec<Constraint>>,
    values: Vec<bool>,
    meter: &'m mut Meter<'l>,
}

impl Enumerator<'_, '_> {
    fn holds(&self, c: &Constraint) -> bool {
        let mut truth = c.iter().map(|&(v, neg)| self.values[v] != neg);
        match self.semantics {
            Semantics::Sat => truth.any(|t| t),
            Semantics::Nae => {
                let mut seen = [false; 2];
                for t in truth {
                    seen[t as usize] = true;
                }
                seen[0] && seen[1]
            }
        }
    }

    /// Tries every extension of the first `depth` values.
    fn search(&mut self, depth: usize) -> bool {
        if depth == self.values.len() {
            return true;
        }
        // complementing a NAE solution keeps it one; fix the first variable
        let choices: &[bool] = if depth == 0 && self.semantics == Semantics::Nae {
            &[false]
        } else {
            &[false, true]
        };
        for &value in choices {
            if !self.meter.tick() {
                return false;
            }
            self.values[depth] = value;
            let ok = self.by_last[depth].iter().all(|c| self.holds(c));
            if ok && self.search(depth + 1) {
                return true;
            }
            if self.meter.exhausted {
                return false;
            }
        }
        false
    }
}

fn run(
    n: u32,
    constraints: Vec<Constraint>,
    semantics: Semantics,
    limits: &Limits,
    meter: &mut Meter,
) -> Result<Option<Vec<bool>>, OracleError> {
    if n > limits.var_cap {
        return Err(OracleError::TooManyVariables {
            count: n,
            cap: limits.var_cap,
        });
    }
    let mut by_last = vec![Vec::new(); n as usize];
    for c in constraints {
        match c.iter().map(|&(v, _)| v).max() {
            // an empty constraint fails under both semantics
            None => return Ok(None),
            Some(last) => by_last[last].push(c),
        }
    }
    let mut e = Enumerator {
        semantics,
        by_last,
        values: vec![false; n as usize],
        meter,
    };
    Ok(e.search(0).then_some(e.values))
}

fn clause_constraints(f: &CnfFormula) -> Vec<Constraint> {
    f.clauses()
        .iter()
        .map(|c| {
            c.literals()
                .iter()
                .map(|l| (l.var() as usize - 1, l.is_negated()))
                .collect()
        })
        .collect()
}

pub fn solve_sat(f: &CnfFormula, limits: &Limits) -> Result<OracleAnswer, OracleError> {
    let mut meter = Meter::new(limits);
    let found = run(f.num_vars(), clause_constraints(f), Semantics::Sat, limits, &mut meter)?;
    Ok(meter.finish(|| DecisionInstance::Sat(f.clone()), found.map(Certificate::Assignment)))
}

pub fn solve_nae(f: &CnfFormula, limits: &Limits) -> Result<OracleAnswer, OracleError> {
    let mut meter = Meter::new(limits);
    let found = run(f.num_vars(), clause_constraints(f), Semantics::Nae, limits, &mut meter)?;
    Ok(meter.finish(|| DecisionInstance::Nae(f.clone()), found.map(Certificate::Assignment)))
}

/// Colors are 1 and 2 in the certificate.
pub fn solve_hypergraph_2col(h: &Hypergraph, limits: &Limits) -> Result<OracleAnswer, OracleError> {
    let constraints = h
        .edges()
        .iter()
        .map(|e| e.iter().map(|&v| (v as usize - 1, false)).collect())
        .collect();
    let mut meter = Meter::new(limits);
    let found = run(h.num_vertices(), constraints, Semantics::Nae, limits, &mut meter)?;
    let cert = found.map(|vals| Certificate::Coloring(vals.iter().map(|&b| 1 + b as u8).collect()));
    Ok(meter.finish(|| DecisionInstance::TwoColor(h.clone()), cert))
}
