//! Encoders turning a first-order clause set into a propositional clause
//! set whose models are exactly the renamings moving the set into the
//! target class.
//!
//! Reading of a propositional literal under a model: `skel(L)` is true iff
//! `L` is negative after applying the renaming (a positive literal becomes
//! negative when its predicate is renamed; a negative one stays negative
//! when it is not).

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::clause::{ClassTag, Clause, ClauseSet, Literal};
use crate::prop::{PropClause, PropClauseSet};

/// The variable `v` does not occur in the clause.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbsentVariable {
    pub variable: String,
}

impl fmt::Display for AbsentVariable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "variable {} does not occur in the clause", self.variable)
    }
}

impl core::error::Error for AbsentVariable {}

fn with_universe(set: &ClauseSet, mut prop: PropClauseSet) -> PropClauseSet {
    // Every predicate of the input is a propositional variable, even when
    // no condition constrains it, so model enumeration covers full
    // renamings.
    for p in set.predicates().keys() {
        prop.declare_var(p.clone());
    }
    prop
}

/// Horn renamability: for every pair of distinct literals of a clause, at
/// least one must be negative after renaming.
pub fn encode_horn(set: &ClauseSet) -> PropClauseSet {
    let mut out = PropClauseSet::default();
    for clause in set.clauses() {
        let lits: Vec<&Literal> = clause.literals().collect();
        for (i, l) in lits.iter().enumerate() {
            for l2 in &lits[i + 1..] {
                out.insert(PropClause::new([l.skeleton(), l2.skeleton()]));
            }
        }
    }
    with_universe(set, out)
}

/// OCC1N renamability, as three clause families per input clause:
/// non-linear literals must end up negative; literals sharing a variable
/// cannot both end up positive; and a literal holding a variable deeper
/// than another literal's shallowest occurrence cannot be positive while
/// the other is negative.
pub fn encode_occ1n(set: &ClauseSet) -> PropClauseSet {
    let mut out = PropClauseSet::default();
    for clause in set.clauses() {
        let lits: Vec<&Literal> = clause.literals().collect();
        let vars: Vec<_> = lits.iter().map(|l| l.vars()).collect();
        for (i, l) in lits.iter().enumerate() {
            if vars[i].iter().any(|v| l.occ(v) > 1) {
                out.insert(PropClause::unit(l.skeleton()));
            }
            for (j, l2) in lits.iter().enumerate() {
                if i == j {
                    continue;
                }
                let shared = vars[i].intersection(&vars[j]);
                let mut shares = false;
                let mut deeper = false;
                for v in shared {
                    shares = true;
                    if l.tmax(v) > l2.tmin(v) {
                        deeper = true;
                        break;
                    }
                }
                if shares && i < j {
                    out.insert(PropClause::new([l.skeleton(), l2.skeleton()]));
                }
                if deeper {
                    out.insert(PropClause::new([l.skeleton(), l2.skeleton().dual()]));
                }
            }
        }
    }
    with_universe(set, out)
}

/// The literals of `clause` containing an occurrence of `v` of maximal
/// depth within the clause.
pub fn max_depth_literals<'a>(
    clause: &'a Clause,
    v: &str,
) -> Result<Vec<&'a Literal>, AbsentVariable> {
    let max = clause
        .literals()
        .filter_map(|l| l.tmax(v))
        .max()
        .ok_or_else(|| AbsentVariable { variable: String::from(v) })?;
    Ok(clause.literals().filter(|l| l.tmax(v) == Some(max)).collect())
}

/// PVD renamability: per clause and per variable, some literal holding the
/// variable at maximal depth must be negative after renaming.  Output is
/// general CNF, not necessarily Krom.
pub fn encode_pvd(set: &ClauseSet) -> PropClauseSet {
    let mut out = PropClauseSet::default();
    for clause in set.clauses() {
        for v in clause.vars() {
            let lits = max_depth_literals(clause, &v).expect("v drawn from the clause");
            out.insert(PropClause::new(lits.iter().map(|l| l.skeleton())));
        }
    }
    with_universe(set, out)
}

pub fn encode(set: &ClauseSet, class: ClassTag) -> PropClauseSet {
    match class {
        ClassTag::Horn => encode_horn(set),
        ClassTag::Occ1n => encode_occ1n(set),
        ClassTag::Pvd => encode_pvd(set),
    }
}
