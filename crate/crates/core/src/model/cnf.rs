use alloc::vec::Vec;
use core::fmt;

use super::error::ModelError;

/// A variable together with a polarity. Orders by variable, then positive
/// before negative.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Literal {
    var: u32,
    negated: bool,
}

impl Literal {
    pub fn new(var: u32, negated: bool) -> Result<Self, ModelError> {
        if var == 0 {
            return Err(ModelError::ZeroVariable);
        }
        Ok(Literal { var, negated })
    }

    pub fn positive(var: u32) -> Self {
        Self::new(var, false).expect("variable index must be >= 1")
    }

    pub fn negative(var: u32) -> Self {
        Self::new(var, true).expect("variable index must be >= 1")
    }

    /// Parses the DIMACS integer form (`-3` is the negation of `x3`).
    pub fn from_dimacs(value: i64) -> Result<Self, ModelError> {
        let var = u32::try_from(value.unsigned_abs()).map_err(|_| ModelError::OutOfRange {
            index: u32::MAX,
            bound: u32::MAX,
        })?;
        Self::new(var, value < 0)
    }

    pub fn to_dimacs(self) -> i64 {
        if self.negated {
            -i64::from(self.var)
        } else {
            i64::from(self.var)
        }
    }

    pub fn var(self) -> u32 {
        self.var
    }

    pub fn is_negated(self) -> bool {
        self.negated
    }

    pub fn negate(self) -> Self {
        Literal {
            var: self.var,
            negated: !self.negated,
        }
    }

    /// Truth value under `assignment`, where `assignment[i]` is the value of
    /// variable `i + 1`.
    pub fn eval(self, assignment: &[bool]) -> bool {
        assignment[self.var as usize - 1] != self.negated
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.negated {
            write!(f, "~x{}", self.var)
        } else {
            write!(f, "x{}", self.var)
        }
    }
}

/// A clause: literals sorted by (variable, polarity) with duplicates removed.
/// A clause containing both `x` and `~x` is kept as is.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Clause(Vec<Literal>);

impl Clause {
    pub fn new(mut literals: Vec<Literal>) -> Self {
        literals.sort_unstable();
        literals.dedup();
        Clause(literals)
    }

    pub fn literals(&self) -> &[Literal] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// True if some variable occurs with both polarities.
    pub fn is_tautological(&self) -> bool {
        self.0.windows(2).any(|w| w[0].var == w[1].var)
    }

    pub fn max_var(&self) -> u32 {
        self.0.iter().map(|l| l.var).max().unwrap_or(0)
    }

    pub fn is_satisfied(&self, assignment: &[bool]) -> bool {
        self.0.iter().any(|l| l.eval(assignment))
    }

    /// Contains a true and a false literal.
    pub fn is_nae_satisfied(&self, assignment: &[bool]) -> bool {
        let mut seen_true = false;
        let mut seen_false = false;
        for l in &self.0 {
            if l.eval(assignment) {
                seen_true = true;
            } else {
                seen_false = true;
            }
        }
        seen_true && seen_false
    }
}

impl FromIterator<Literal> for Clause {
    fn from_iter<I: IntoIterator<Item = Literal>>(iter: I) -> Self {
        Clause::new(iter.into_iter().collect())
    }
}

/// A CNF formula over variables `1..=num_vars`. Clause order is preserved.
///
/// Empty clauses are representable (a bare `0` line in DIMACS); they make the
/// formula unsatisfiable under both SAT and NAE semantics.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CnfFormula {
    num_vars: u32,
    clauses: Vec<Clause>,
}

impl CnfFormula {
    pub fn new(num_vars: u32, clauses: Vec<Clause>) -> Result<Self, ModelError> {
        for clause in &clauses {
            let max = clause.max_var();
            if max > num_vars {
                return Err(ModelError::OutOfRange {
                    index: max,
                    bound: num_vars,
                });
            }
        }
        Ok(CnfFormula { num_vars, clauses })
    }

    /// Builds a formula from DIMACS-style signed integers, one slice per clause.
    pub fn from_dimacs(num_vars: u32, clauses: &[&[i64]]) -> Result<Self, ModelError> {
        let clauses = clauses
            .iter()
            .map(|c| c.iter().map(|&v| Literal::from_dimacs(v)).collect())
            .collect::<Result<Vec<Vec<_>>, _>>()?
            .into_iter()
            .map(Clause::new)
            .collect();
        Self::new(num_vars, clauses)
    }

    pub fn num_vars(&self) -> u32 {
        self.num_vars
    }

    pub fn clauses(&self) -> &[Clause] {
        &self.clauses
    }

    pub fn num_clauses(&self) -> usize {
        self.clauses.len()
    }

    /// The clause-size bound `d`; 0 for a formula without clauses.
    pub fn max_clause_size(&self) -> usize {
        self.clauses.iter().map(Clause::len).max().unwrap_or(0)
    }

    pub fn has_empty_clause(&self) -> bool {
        self.clauses.iter().any(Clause::is_empty)
    }

    pub fn is_satisfied_by(&self, assignment: &[bool]) -> bool {
        assignment.len() == self.num_vars as usize
            && self.clauses.iter().all(|c| c.is_satisfied(assignment))
    }

    pub fn is_nae_satisfied_by(&self, assignment: &[bool]) -> bool {
        assignment.len() == self.num_vars as usize
            && self.clauses.iter().all(|c| c.is_nae_satisfied(assignment))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn clause_sorts_and_dedups() {
        let c = Clause::new(vec![
            Literal::negative(2),
            Literal::positive(1),
            Literal::negative(2),
            Literal::positive(2),
        ]);
        assert_eq!(
            c.literals(),
            &[Literal::positive(1), Literal::positive(2), Literal::negative(2)]
        );
        assert!(c.is_tautological());
    }

    #[test]
    fn complementary_clause_always_nae_satisfied() {
        let c = Clause::new(vec![Literal::positive(1), Literal::negative(1)]);
        assert!(c.is_nae_satisfied(&[true]));
        assert!(c.is_nae_satisfied(&[false]));
    }

    #[test]
    fn literal_out_of_range_rejected() {
        let err = CnfFormula::from_dimacs(2, &[&[1, -3]]).unwrap_err();
        assert_eq!(err, ModelError::OutOfRange { index: 3, bound: 2 });
        assert_eq!(Literal::from_dimacs(0), Err(ModelError::ZeroVariable));
    }

    #[test]
    fn max_clause_size_of_empty_formula_is_zero() {
        let f = CnfFormula::new(3, vec![]).unwrap();
        assert_eq!(f.max_clause_size(), 0);
        assert!(f.is_nae_satisfied_by(&[true, true, false]));
    }
}
