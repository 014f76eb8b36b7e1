//! Exact exponential-time deciders. Every YES answer carries a certificate
//! that has been run through [`check_certificate`](crate::check_certificate)
//! before it is returned.
//!
//! The search procedures count nodes against [`Limits::node_budget`] and poll
//! an optional interrupt callback, which is how callers with a clock impose a
//! wall-clock limit; running out of either yields [`Verdict::Timeout`].
//! Inputs beyond the size caps are refused with an [`OracleError`] instead.

mod cdcl;
mod coloring;
mod domset;
mod ham;
mod sat;

pub use coloring::{
    graph_coloring_backtrack, list_coloring_backtrack, solve_graph_coloring, solve_list_coloring,
    solve_tsd,
};
pub use domset::{solve_col_rbds, solve_dom_set};
pub use ham::{
    ham_cycle_backtrack, ham_cycle_dp, solve_directed_ham_cycle, solve_ham_cycle,
    solve_ham_path_st, DP_MAX_VERTICES,
};
pub use sat::{solve_hypergraph_2col, solve_nae, solve_sat};

use core::fmt;

use crate::model::{check_certificate, Certificate, DecisionInstance};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Yes,
    No,
    Timeout,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Yes => "yes",
            Verdict::No => "no",
            Verdict::Timeout => "timeout",
        }
    }

    /// `Some(true)` for YES, `Some(false)` for NO.
    pub fn decided(self) -> Option<bool> {
        match self {
            Verdict::Yes => Some(true),
            Verdict::No => Some(false),
            Verdict::Timeout => None,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy)]
pub struct Limits<'a> {
    /// Search nodes before giving up with a timeout.
    pub node_budget: u64,
    /// Largest variable (or vertex) count the assignment enumerators accept.
    pub var_cap: u32,
    /// Largest dominating-set budget the subset search accepts.
    pub budget_cap: usize,
    /// Polled every few thousand nodes; returning true stops the search.
    pub interrupt: Option<&'a (dyn Fn() -> bool + Sync)>,
}

impl Default for Limits<'_> {
    fn default() -> Self {
        Limits {
            node_budget: 100_000_000,
            var_cap: 24,
            budget_cap: 6,
            interrupt: None,
        }
    }
}

impl fmt::Debug for Limits<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Limits")
            .field("node_budget", &self.node_budget)
            .field("var_cap", &self.var_cap)
            .field("budget_cap", &self.budget_cap)
            .field("interrupt", &self.interrupt.is_some())
            .finish()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleAnswer {
    pub verdict: Verdict,
    pub certificate: Option<Certificate>,
    pub nodes: u64,
}

/// The instance is outside what the oracle agrees to search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleError {
    TooManyVariables { count: u32, cap: u32 },
    BudgetTooLarge { budget: usize, cap: usize },
}

impl fmt::Display for OracleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OracleError::TooManyVariables { count, cap } => {
                write!(f, "{count} variables exceed the enumeration cap {cap}")
            }
            OracleError::BudgetTooLarge { budget, cap } => {
                write!(f, "budget {budget} exceeds the subset-search cap {cap}")
            }
        }
    }
}

/// Node counter shared by the searches.
pub(crate) struct Meter<'a> {
    limits: &'a Limits<'a>,
    pub(crate) nodes: u64,
    pub(crate) exhausted: bool,
}

impl<'a> Meter<'a> {
    pub(crate) fn new(limits: &'a Limits<'a>) -> Self {
        Meter {
            limits,
            nodes: 0,
            exhausted: false,
        }
    }

    /// Counts one node; false once the budget or the interrupt says stop.
    pub(crate) fn tick(&mut self) -> bool {
        if self.exhausted {
            return false;
        }
        self.nodes += 1;
        if self.nodes > self.limits.node_budget {
            self.exhausted = true;
        } else if self.nodes.is_multiple_of(4096) {
            if let Some(stop) = self.limits.interrupt {
                self.exhausted = stop();
            }
        }
        !self.exhausted
    }

    /// Packages a search outcome, validating any certificate.
    pub(crate) fn finish(
        self,
        instance: impl FnOnce() -> DecisionInstance,
        found: Option<Certificate>,
    ) -> OracleAnswer {
        let verdict = match (&found, self.exhausted) {
            (Some(_), _) => Verdict::Yes,
            (None, true) => Verdict::Timeout,
            (None, false) => Verdict::No,
        };
        if let Some(cert) = &found {
            let inst = instance();
            assert_eq!(
                check_certificate(&inst, cert),
                Ok(true),
                "oracle produced an invalid {} certificate",
                inst.problem_name()
            );
        }
        OracleAnswer {
            verdict,
            certificate: found,
            nodes: self.nodes,
        }
    }
}

/// Decides any [`DecisionInstance`] with the matching oracle.
pub fn solve(instance: &DecisionInstance, limits: &Limits) -> Result<OracleAnswer, OracleError> {
    use DecisionInstance as D;
    Ok(match instance {
        D::Sat(f) => solve_sat(f, limits)?,
        D::Nae(f) => solve_nae(f, limits)?,
        D::TwoColor(h) => solve_hypergraph_2col(h, limits)?,
        D::FourColor(g) => solve_graph_coloring(g, 4, limits),
        D::HamCycle(g) => solve_ham_cycle(g, limits),
        D::DirectedHamCycle(g) => solve_directed_ham_cycle(g, limits),
        D::DomSet { graph, budget } => solve_dom_set(graph, *budget, false, limits)?,
        D::ConnectedDomSet { graph, budget } => solve_dom_set(graph, *budget, true, limits)?,
        D::Tsd(t) => solve_tsd(t, limits),
        D::BipartiteHam(b) => solve_ham_path_st(b, limits),
        D::ColRbds(r) => solve_col_rbds(r, limits),
        D::ListColoring(l) => solve_list_coloring(l, limits),
    })
}
