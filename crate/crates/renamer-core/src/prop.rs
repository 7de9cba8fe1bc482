//! Propositional clause sets over named variables, and models thereof.
//!
//! Propositional variables are predicate names: a variable being true in a
//! model means the predicate gets renamed.  Clause sets keep canonical
//! order (clauses by length then lexicographically, literals by variable
//! name), never store tautologies and collapse duplicates, so downstream
//! output is deterministic.

use alloc::collections::BTreeSet;
use alloc::string::String;
use core::cmp::Ordering;
use core::fmt;

use crate::clause::{Renaming, Sign};

/// A signed propositional variable.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PropLiteral {
    pub sign: Sign,
    pub var: String,
}

impl PropLiteral {
    pub fn new(sign: Sign, var: impl Into<String>) -> PropLiteral {
        PropLiteral { sign, var: var.into() }
    }

    pub fn positive(var: impl Into<String>) -> PropLiteral {
        PropLiteral::new(Sign::Positive, var)
    }

    pub fn negative(var: impl Into<String>) -> PropLiteral {
        PropLiteral::new(Sign::Negative, var)
    }

    pub fn dual(&self) -> PropLiteral {
        PropLiteral { sign: self.sign.flip(), var: self.var.clone() }
    }
}

// Literals order by variable name first so complementary literals are
// adjacent and clause output groups by variable.
impl Ord for PropLiteral {
    fn cmp(&self, other: &Self) -> Ordering {
        self.var.cmp(&other.var).then(self.sign.cmp(&other.sign))
    }
}

impl PartialOrd for PropLiteral {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for PropLiteral {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.sign == Sign::Negative {
            write!(f, "~")?;
        }
        write!(f, "{}", self.var)
    }
}

/// A duplicate-free set of propositional literals.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PropClause {
    literals: BTreeSet<PropLiteral>,
}

impl PropClause {
    pub fn new(literals: impl IntoIterator<Item = PropLiteral>) -> PropClause {
        PropClause { literals: literals.into_iter().collect() }
    }

    pub fn unit(literal: PropLiteral) -> PropClause {
        PropClause::new([literal])
    }

    pub fn literals(&self) -> impl Iterator<Item = &PropLiteral> + Clone {
        self.literals.iter()
    }

    pub fn len(&self) -> usize {
        self.literals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.literals.is_empty()
    }

    /// Contains both a variable and its negation.
    pub fn is_tautology(&self) -> bool {
        self.literals
            .iter()
            .any(|l| l.sign == Sign::Positive && self.literals.contains(&l.dual()))
    }

    pub fn vars(&self) -> impl Iterator<Item = &String> {
        // Adjacent duplicates arise from complementary pairs only, which
        // tautology filtering keeps out of stored clauses.
        self.literals.iter().map(|l| &l.var)
    }
}

// Clauses order by length first, then lexicographically, pinning the
// canonical clause order used by saturation and DIMACS output.
impl Ord for PropClause {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| self.literals.cmp(&other.literals))
    }
}

impl PartialOrd for PropClause {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for PropClause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, l) in self.literals.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{l}")?;
        }
        write!(f, "}}")
    }
}

/// A set of propositional clauses plus the variable universe they are
/// interpreted over.  The universe may exceed the variables occurring in
/// clauses (unconstrained predicates still participate in renamings).
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PropClauseSet {
    clauses: BTreeSet<PropClause>,
    universe: BTreeSet<String>,
}

impl PropClauseSet {
    pub fn new(clauses: impl IntoIterator<Item = PropClause>) -> PropClauseSet {
        let mut set = PropClauseSet::default();
        for c in clauses {
            set.insert(c);
        }
        set
    }

    /// Insert a clause; tautologies are dropped, duplicates collapse.
    /// The universe picks up the clause's variables.
    pub fn insert(&mut self, clause: PropClause) {
        if clause.is_tautology() {
            return;
        }
        self.universe.extend(clause.vars().cloned());
        self.clauses.insert(clause);
    }

    /// Declare a variable without constraining it.
    pub fn declare_var(&mut self, var: impl Into<String>) {
        self.universe.insert(var.into());
    }

    /// Clauses in canonical order (length, then lexicographic).
    pub fn clauses(&self) -> impl Iterator<Item = &PropClause> + Clone {
        self.clauses.iter()
    }

    pub fn len(&self) -> usize {
        self.clauses.len()
    }

    pub fn is_empty(&self) -> bool {
        self.clauses.is_empty()
    }

    pub fn universe(&self) -> &BTreeSet<String> {
        &self.universe
    }

    pub fn contains_empty_clause(&self) -> bool {
        self.clauses.iter().next().is_some_and(PropClause::is_empty)
    }

    /// Every clause has at most two literals.
    pub fn is_krom(&self) -> bool {
        self.clauses.iter().all(|c| c.len() <= 2)
    }

    /// Clause sets are equal as clause collections, ignoring universes.
    pub fn same_clauses(&self, other: &PropClauseSet) -> bool {
        self.clauses == other.clauses
    }
}

/// A total assignment over a variable universe, given by the set of true
/// variables.  Read as a renaming, the true variables are the renamed
/// predicates.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Model {
    true_vars: BTreeSet<String>,
    universe: BTreeSet<String>,
}

impl Model {
    /// `true_vars` must be contained in `universe`.
    pub fn new(true_vars: BTreeSet<String>, universe: BTreeSet<String>) -> Model {
        debug_assert!(true_vars.is_subset(&universe));
        Model { true_vars, universe }
    }

    pub fn is_true(&self, var: &str) -> bool {
        self.true_vars.contains(var)
    }

    pub fn true_vars(&self) -> &BTreeSet<String> {
        &self.true_vars
    }

    pub fn universe(&self) -> &BTreeSet<String> {
        &self.universe
    }

    pub fn satisfies_literal(&self, literal: &PropLiteral) -> bool {
        self.is_true(&literal.var) == literal.sign.is_positive()
    }

    pub fn to_renaming(&self) -> Renaming {
        Renaming::new(self.true_vars.iter().cloned())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use alloc::vec::Vec;

    #[test]
    fn tautologies_are_never_stored() {
        let mut s = PropClauseSet::default();
        s.insert(PropClause::new(vec![PropLiteral::positive("p"), PropLiteral::negative("p")]));
        assert!(s.is_empty());
        // But the universe still records nothing for a dropped clause.
        s.insert(PropClause::unit(PropLiteral::positive("q")));
        assert_eq!(s.len(), 1);
    }

    #[test]
    fn duplicate_clauses_collapse() {
        let c = PropClause::new(vec![PropLiteral::positive("p"), PropLiteral::negative("q")]);
        let s = PropClauseSet::new(vec![c.clone(), c]);
        assert_eq!(s.len(), 1);
        assert_eq!(s.universe().len(), 2);
    }

    #[test]
    fn canonical_order_is_length_then_lexicographic() {
        let unit = PropClause::unit(PropLiteral::positive("z"));
        let pq = PropClause::new(vec![PropLiteral::positive("p"), PropLiteral::positive("q")]);
        let np_q = PropClause::new(vec![PropLiteral::negative("p"), PropLiteral::positive("q")]);
        let s = PropClauseSet::new(vec![np_q.clone(), pq.clone(), unit.clone()]);
        let order: Vec<&PropClause> = s.clauses().collect();
        assert_eq!(order, vec![&unit, &pq, &np_q]);
    }

    #[test]
    fn model_evaluates_literals() {
        let universe: BTreeSet<String> = ["p", "q"].iter().map(|s| String::from(*s)).collect();
        let m = Model::new([String::from("p")].into_iter().collect(), universe);
        assert!(m.satisfies_literal(&PropLiteral::positive("p")));
        assert!(!m.satisfies_literal(&PropLiteral::negative("p")));
        assert!(m.satisfies_literal(&PropLiteral::negative("q")));
    }
}
