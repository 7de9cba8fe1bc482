//! Ground-truth brute-force renamability oracle, the CNF-to-PVD
//! reduction, and seeded random instance generators used by the property
//! suites.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use rand::{Rng, RngExt};

use crate::clause::{
    apply_renaming, check_membership, ClassTag, Clause, ClauseSet, Literal, Renaming, Sign, Term,
};
use crate::prop::{PropClause, PropClauseSet, PropLiteral};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TooManyPredicates {
    pub count: usize,
    pub max: usize,
}

impl fmt::Display for TooManyPredicates {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "too many predicates for brute force ({} > {})", self.count, self.max)
    }
}

impl core::error::Error for TooManyPredicates {}

/// Every renaming (subset of the set's predicates) under which the set
/// passes the direct membership check, ordered by size then
/// lexicographically.  Exponential in the predicate count; refuses more
/// than 20 predicates.
pub fn brute_force_renamings(
    set: &ClauseSet,
    class: ClassTag,
) -> Result<Vec<Renaming>, TooManyPredicates> {
    let predicates: Vec<String> = set.predicates().keys().cloned().collect();
    if predicates.len() > 20 {
        return Err(TooManyPredicates { count: predicates.len(), max: 20 });
    }
    let mut out = Vec::new();
    for bits in 0u32..(1u32 << predicates.len()) {
        let renaming = Renaming::new(
            predicates
                .iter()
                .enumerate()
                .filter(|(i, _)| (bits >> i) & 1 == 1)
                .map(|(_, p)| p.clone()),
        );
        let renamed = apply_renaming(&renaming, set).expect("subset of the set's predicates");
        if check_membership(&renamed, class).member {
            out.push(renaming);
        }
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(out)
}

/// Interpret each propositional variable as a unary predicate and give
/// every clause one shared dummy variable, so the CNF is satisfiable iff
/// the image is renamable to PVD.
pub fn reduce_cnf_to_pvd(cnf: &PropClauseSet) -> ClauseSet {
    let clauses = cnf.clauses().map(|c| {
        Clause::new(
            c.literals()
                .map(|l| Literal::new(l.sign, l.var.clone(), [Term::var("X")].into())),
        )
    });
    // All predicates are unary and no function symbols occur.
    ClauseSet::new(clauses).expect("uniform unary signature")
}

/// Shape of randomly generated first-order clause sets.
#[derive(Debug, Clone)]
pub struct GeneratorConfig {
    pub max_predicates: usize,
    pub max_clauses: usize,
    pub max_literals: usize,
    pub max_term_depth: u32,
    pub max_functions: usize,
    pub max_variables: usize,
}

impl Default for GeneratorConfig {
    fn default() -> GeneratorConfig {
        GeneratorConfig {
            max_predicates: 8,
            max_clauses: 6,
            max_literals: 3,
            max_term_depth: 3,
            max_functions: 3,
            max_variables: 3,
        }
    }
}

fn random_term<R: Rng>(
    rng: &mut R,
    functions: &[(String, usize)],
    variables: &[String],
    depth_budget: u32,
) -> Term {
    // Geometric depth: descend into a function application with
    // probability 1/2 until the budget runs out.
    if depth_budget > 0 && !functions.is_empty() && rng.random_bool(0.5) {
        let (name, arity) = &functions[rng.random_range(0..functions.len())];
        let args = (0..*arity)
            .map(|_| random_term(rng, functions, variables, depth_budget - 1))
            .collect();
        return Term::app(name.clone(), args);
    }
    let constants: Vec<&(String, usize)> = functions.iter().filter(|(_, a)| *a == 0).collect();
    if !constants.is_empty() && rng.random_bool(0.25) {
        Term::constant(constants[rng.random_range(0..constants.len())].0.clone())
    } else {
        Term::var(variables[rng.random_range(0..variables.len())].clone())
    }
}

/// A random clause set with fixed per-symbol arities (predicates 0–3,
/// functions 0–2), reproducible from the RNG seed.
pub fn random_clause_set<R: Rng>(rng: &mut R, cfg: &GeneratorConfig) -> ClauseSet {
    let predicates: Vec<(String, usize)> = (0..rng.random_range(1..=cfg.max_predicates))
        .map(|i| (format!("p{i}"), rng.random_range(0..=3)))
        .collect();
    let functions: Vec<(String, usize)> = (0..rng.random_range(0..=cfg.max_functions))
        .map(|i| (format!("f{i}"), rng.random_range(0..=2)))
        .collect();
    let variables: Vec<String> =
        (0..cfg.max_variables.max(1)).map(|i| format!("X{i}")).collect();

    let mut set = ClauseSet::default();
    for _ in 0..rng.random_range(1..=cfg.max_clauses) {
        let literals = (0..rng.random_range(1..=cfg.max_literals)).map(|_| {
            let (name, arity) = &predicates[rng.random_range(0..predicates.len())];
            let sign = if rng.random_bool(0.5) { Sign::Positive } else { Sign::Negative };
            let args = (0..*arity)
                .map(|_| random_term(rng, &functions, &variables, cfg.max_term_depth))
                .collect();
            Literal::new(sign, name.clone(), args)
        });
        set.push(Clause::new(literals)).expect("arities are fixed per symbol");
    }
    set
}

/// A random propositional CNF over `v1..vN`, reproducible from the seed.
/// The full variable range is declared in the universe even when unused.
pub fn random_cnf<R: Rng>(
    rng: &mut R,
    max_vars: usize,
    max_clauses: usize,
    max_literals: usize,
) -> PropClauseSet {
    let n = rng.random_range(1..=max_vars);
    let mut out = PropClauseSet::default();
    for i in 1..=n {
        out.declare_var(format!("v{i}"));
    }
    for _ in 0..rng.random_range(1..=max_clauses) {
        let lits = (0..rng.random_range(1..=max_literals)).map(|_| {
            let var = format!("v{}", rng.random_range(1..=n));
            let sign = if rng.random_bool(0.5) { Sign::Positive } else { Sign::Negative };
            PropLiteral::new(sign, var)
        });
        out.insert(PropClause::new(lits));
    }
    out
}
