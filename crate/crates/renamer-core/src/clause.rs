//! First-order clause representation: terms, literals, clauses and clause
//! sets, together with the syntactic metrics (depth, occurrence counts,
//! occurrence depths) that the class definitions and encoders are built on.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::prop::PropLiteral;

/// Polarity of a literal (first-order or propositional).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }

    pub fn is_positive(self) -> bool {
        matches!(self, Sign::Positive)
    }
}

/// A first-order term.  A constant is an application with no arguments.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Term {
    Var(String),
    App { name: String, args: Vec<Term> },
}

impl Term {
    pub fn var(name: impl Into<String>) -> Term {
        Term::Var(name.into())
    }

    pub fn app(name: impl Into<String>, args: Vec<Term>) -> Term {
        Term::App { name: name.into(), args }
    }

    pub fn constant(name: impl Into<String>) -> Term {
        Term::app(name, Vec::new())
    }

    /// Term depth: 0 for variables and constants, otherwise one more than
    /// the deepest argument.
    pub fn depth(&self) -> u32 {
        match self {
            Term::Var(_) => 0,
            Term::App { args, .. } => match args.iter().map(Term::depth).max() {
                Some(d) => 1 + d,
                None => 0,
            },
        }
    }

    /// Number of occurrences of variable `v`.
    pub fn occ(&self, v: &str) -> u32 {
        match self {
            Term::Var(name) => u32::from(name == v),
            Term::App { args, .. } => args.iter().map(|t| t.occ(v)).sum(),
        }
    }

    /// Maximal occurrence depth of `v`, or `None` if `v` does not occur.
    pub fn tmax(&self, v: &str) -> Option<u32> {
        match self {
            Term::Var(name) => (name == v).then_some(0),
            Term::App { args, .. } => args.iter().filter_map(|t| t.tmax(v)).max().map(|d| 1 + d),
        }
    }

    /// Minimal occurrence depth of `v`, or `None` if `v` does not occur.
    pub fn tmin(&self, v: &str) -> Option<u32> {
        match self {
            Term::Var(name) => (name == v).then_some(0),
            Term::App { args, .. } => args.iter().filter_map(|t| t.tmin(v)).min().map(|d| 1 + d),
        }
    }

    pub fn collect_vars(&self, out: &mut BTreeSet<String>) {
        match self {
            Term::Var(name) => {
                out.insert(name.clone());
            }
            Term::App { args, .. } => {
                for t in args {
                    t.collect_vars(out);
                }
            }
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Var(name) => write!(f, "{name}"),
            Term::App { name, args } => {
                write!(f, "{name}")?;
                if !args.is_empty() {
                    write!(f, "(")?;
                    for (i, t) in args.iter().enumerate() {
                        if i > 0 {
                            write!(f, ",")?;
                        }
                        write!(f, "{t}")?;
                    }
                    write!(f, ")")?;
                }
                Ok(())
            }
        }
    }
}

/// A signed atom.  The predicate arity is the argument count; arity
/// consistency across a clause set is checked by [`ClauseSet::new`].
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Literal {
    pub sign: Sign,
    pub predicate: String,
    pub args: Vec<Term>,
}

impl Literal {
    pub fn new(sign: Sign, predicate: impl Into<String>, args: Vec<Term>) -> Literal {
        Literal { sign, predicate: predicate.into(), args }
    }

    pub fn positive(predicate: impl Into<String>, args: Vec<Term>) -> Literal {
        Literal::new(Sign::Positive, predicate, args)
    }

    pub fn negative(predicate: impl Into<String>, args: Vec<Term>) -> Literal {
        Literal::new(Sign::Negative, predicate, args)
    }

    /// The same atom with the opposite sign.  `dual` is an involution.
    pub fn dual(&self) -> Literal {
        Literal { sign: self.sign.flip(), ..self.clone() }
    }

    /// Erase the arguments, reading the predicate as a propositional
    /// variable with this literal's sign.
    pub fn skeleton(&self) -> PropLiteral {
        PropLiteral::new(self.sign, self.predicate.clone())
    }

    /// Depth of a literal: maximum over its argument depths (0 if none).
    pub fn depth(&self) -> u32 {
        self.args.iter().map(Term::depth).max().unwrap_or(0)
    }

    pub fn occ(&self, v: &str) -> u32 {
        self.args.iter().map(|t| t.occ(v)).sum()
    }

    /// Maximal occurrence depth of `v` over the arguments containing it.
    pub fn tmax(&self, v: &str) -> Option<u32> {
        self.args.iter().filter_map(|t| t.tmax(v)).max()
    }

    pub fn tmin(&self, v: &str) -> Option<u32> {
        self.args.iter().filter_map(|t| t.tmin(v)).min()
    }

    pub fn vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        for t in &self.args {
            t.collect_vars(&mut out);
        }
        out
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.sign == Sign::Negative {
            write!(f, "~")?;
        }
        write!(f, "{}", self.predicate)?;
        if !self.args.is_empty() {
            write!(f, "(")?;
            for (i, t) in self.args.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{t}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

/// A duplicate-free set of literals, read as their disjunction.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Clause {
    literals: BTreeSet<Literal>,
}

impl Clause {
    pub fn new(literals: impl IntoIterator<Item = Literal>) -> Clause {
        Clause { literals: literals.into_iter().collect() }
    }

    pub fn literals(&self) -> impl Iterator<Item = &Literal> + Clone {
        self.literals.iter()
    }

    pub fn len(&self) -> usize {
        self.literals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.literals.is_empty()
    }

    /// Inserting a duplicate literal is a no-op.
    pub fn insert(&mut self, literal: Literal) {
        self.literals.insert(literal);
    }

    pub fn positive_part(&self) -> impl Iterator<Item = &Literal> + Clone {
        self.literals.iter().filter(|l| l.sign == Sign::Positive)
    }

    pub fn negative_part(&self) -> impl Iterator<Item = &Literal> + Clone {
        self.literals.iter().filter(|l| l.sign == Sign::Negative)
    }

    pub fn depth(&self) -> u32 {
        self.literals.iter().map(Literal::depth).max().unwrap_or(0)
    }

    pub fn vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        for l in &self.literals {
            for t in &l.args {
                t.collect_vars(&mut out);
            }
        }
        out
    }
}

/// Occurrence count of `v` summed over a collection of literals.
pub fn occ_over<'a>(v: &str, literals: impl IntoIterator<Item = &'a Literal>) -> u32 {
    literals.into_iter().map(|l| l.occ(v)).sum()
}

/// Maximal occurrence depth of `v` over the literals containing it.
pub fn tmax_over<'a>(v: &str, literals: impl IntoIterator<Item = &'a Literal>) -> Option<u32> {
    literals.into_iter().filter_map(|l| l.tmax(v)).max()
}

/// Minimal occurrence depth of `v` over the literals containing it.
pub fn tmin_over<'a>(v: &str, literals: impl IntoIterator<Item = &'a Literal>) -> Option<u32> {
    literals.into_iter().filter_map(|l| l.tmin(v)).min()
}

/// Arity clash detected while building a [`ClauseSet`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SignatureError {
    PredicateArityConflict { name: String, first: usize, second: usize },
    FunctionArityConflict { name: String, first: usize, second: usize },
}

impl fmt::Display for SignatureError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SignatureError::PredicateArityConflict { name, first, second } => write!(
                f,
                "predicate '{name}' used with conflicting arities {first} and {second}"
            ),
            SignatureError::FunctionArityConflict { name, first, second } => write!(
                f,
                "function '{name}' used with conflicting arities {first} and {second}"
            ),
        }
    }
}

impl core::error::Error for SignatureError {}

/// A duplicate-free collection of clauses in insertion order, with a
/// consistent signature.  Predicate and function identifiers live in
/// separate namespaces.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ClauseSet {
    clauses: Vec<Clause>,
    predicates: BTreeMap<String, usize>,
    functions: BTreeMap<String, usize>,
}

impl ClauseSet {
    pub fn new(clauses: impl IntoIterator<Item = Clause>) -> Result<ClauseSet, SignatureError> {
        let mut set = ClauseSet::default();
        for c in clauses {
            set.push(c)?;
        }
        Ok(set)
    }

    /// Add a clause, rejecting arity clashes.  Duplicate clauses collapse.
    pub fn push(&mut self, clause: Clause) -> Result<(), SignatureError> {
        for l in clause.literals() {
            record_arity(&mut self.predicates, &l.predicate, l.args.len(), true)?;
            for t in &l.args {
                record_function_arities(&mut self.functions, t)?;
            }
        }
        if !self.clauses.contains(&clause) {
            self.clauses.push(clause);
        }
        Ok(())
    }

    pub fn clauses(&self) -> &[Clause] {
        &self.clauses
    }

    pub fn len(&self) -> usize {
        self.clauses.len()
    }

    pub fn is_empty(&self) -> bool {
        self.clauses.is_empty()
    }

    /// Predicate name → arity.
    pub fn predicates(&self) -> &BTreeMap<String, usize> {
        &self.predicates
    }

    /// Function name → arity (constants have arity 0).
    pub fn functions(&self) -> &BTreeMap<String, usize> {
        &self.functions
    }

    pub fn predicate_names(&self) -> BTreeSet<String> {
        self.predicates.keys().cloned().collect()
    }
}

fn record_arity(
    map: &mut BTreeMap<String, usize>,
    name: &str,
    arity: usize,
    predicate: bool,
) -> Result<(), SignatureError> {
    match map.get(name) {
        Some(&known) if known != arity => {
            let name = String::from(name);
            Err(if predicate {
                SignatureError::PredicateArityConflict { name, first: known, second: arity }
            } else {
                SignatureError::FunctionArityConflict { name, first: known, second: arity }
            })
        }
        Some(_) => Ok(()),
        None => {
            map.insert(String::from(name), arity);
            Ok(())
        }
    }
}

fn record_function_arities(
    map: &mut BTreeMap<String, usize>,
    term: &Term,
) -> Result<(), SignatureError> {
    if let Term::App { name, args } = term {
        record_arity(map, name, args.len(), false)?;
        for t in args {
            record_function_arities(map, t)?;
        }
    }
    Ok(())
}

/// A set of predicate symbols whose polarity gets flipped everywhere.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord)]
pub struct Renaming {
    renamed: BTreeSet<String>,
}

impl Renaming {
    pub fn new(renamed: impl IntoIterator<Item = String>) -> Renaming {
        Renaming { renamed: renamed.into_iter().collect() }
    }

    pub fn contains(&self, predicate: &str) -> bool {
        self.renamed.contains(predicate)
    }

    pub fn predicates(&self) -> impl Iterator<Item = &String> {
        self.renamed.iter()
    }

    pub fn len(&self) -> usize {
        self.renamed.len()
    }

    pub fn is_empty(&self) -> bool {
        self.renamed.is_empty()
    }
}

impl fmt::Display for Renaming {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, p) in self.renamed.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "}}")
    }
}

/// Renaming mentions a predicate absent from the clause set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnknownPredicate {
    pub name: String,
}

impl fmt::Display for UnknownPredicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "renaming mentions unknown predicate '{}'", self.name)
    }
}

impl core::error::Error for UnknownPredicate {}

pub(crate) fn apply_renaming_clause(renaming: &Renaming, clause: &Clause) -> Clause {
    Clause::new(clause.literals().map(|l| {
        if renaming.contains(&l.predicate) {
            l.dual()
        } else {
            l.clone()
        }
    }))
}

/// Dualize every literal whose predicate is in the renaming.  Applying the
/// same renaming twice is the identity.  Renamings must only mention
/// predicates of the set.
pub fn apply_renaming(renaming: &Renaming, set: &ClauseSet) -> Result<ClauseSet, UnknownPredicate> {
    for p in renaming.predicates() {
        if !set.predicates().contains_key(p) {
            return Err(UnknownPredicate { name: p.clone() });
        }
    }
    let renamed = ClauseSet::new(set.clauses().iter().map(|c| apply_renaming_clause(renaming, c)));
    // Renaming only flips signs; it cannot introduce arity clashes.
    Ok(renamed.expect("renaming preserves the signature"))
}

/// The three clause-set classes with a renamability test.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ClassTag {
    Horn,
    Occ1n,
    Pvd,
}

impl ClassTag {
    pub fn name(self) -> &'static str {
        match self {
            ClassTag::Horn => "horn",
            ClassTag::Occ1n => "occ1n",
            ClassTag::Pvd => "pvd",
        }
    }
}

/// Why a clause fails a membership check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ViolationKind {
    /// More than one positive literal (Horn).
    TooManyPositive { count: usize },
    /// A variable occurs more than once in the positive part (OCC1N (a)).
    NonLinearPositive { variable: String },
    /// Maximal positive depth exceeds minimal negative depth (OCC1N (b)).
    PositiveDeeperThanNegativeMin { variable: String },
    /// A positive-part variable is missing from the negative part (PVD).
    MissingFromNegative { variable: String },
    /// Maximal positive depth exceeds maximal negative depth (PVD).
    PositiveDeeperThanNegativeMax { variable: String },
}

impl fmt::Display for ViolationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ViolationKind::TooManyPositive { count } => {
                write!(f, "{count} positive literals (at most one allowed)")
            }
            ViolationKind::NonLinearPositive { variable } => {
                write!(f, "variable {variable} occurs more than once in the positive part")
            }
            ViolationKind::PositiveDeeperThanNegativeMin { variable } => write!(
                f,
                "variable {variable} occurs deeper in the positive part than its shallowest negative occurrence"
            ),
            ViolationKind::MissingFromNegative { variable } => {
                write!(f, "variable {variable} of the positive part is missing from the negative part")
            }
            ViolationKind::PositiveDeeperThanNegativeMax { variable } => write!(
                f,
                "variable {variable} occurs deeper in the positive part than in the negative part"
            ),
        }
    }
}

/// One failed condition, pointing at the offending clause (0-based index).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub clause_index: usize,
    pub kind: ViolationKind,
}

/// Result of a direct membership check, with diagnostics on failure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub member: bool,
    pub violations: Vec<Violation>,
}

impl Verdict {
    fn from_violations(violations: Vec<Violation>) -> Verdict {
        Verdict { member: violations.is_empty(), violations }
    }
}

/// A clause set is Horn iff every clause has at most one positive literal.
pub fn is_horn(set: &ClauseSet) -> Verdict {
    let mut violations = Vec::new();
    for (i, c) in set.clauses().iter().enumerate() {
        let count = c.positive_part().count();
        if count > 1 {
            violations.push(Violation {
                clause_index: i,
                kind: ViolationKind::TooManyPositive { count },
            });
        }
    }
    Verdict::from_violations(violations)
}

/// OCC1N: every positive-part variable occurs exactly once there, and every
/// variable shared between the parts occurs at most as deep positively as
/// its shallowest negative occurrence.
pub fn is_occ1n(set: &ClauseSet) -> Verdict {
    let mut violations = Vec::new();
    for (i, c) in set.clauses().iter().enumerate() {
        let pos: Vec<&Literal> = c.positive_part().collect();
        let neg: Vec<&Literal> = c.negative_part().collect();
        let mut pos_vars = BTreeSet::new();
        for l in &pos {
            pos_vars.append(&mut l.vars());
        }
        for v in &pos_vars {
            if occ_over(v, pos.iter().copied()) != 1 {
                violations.push(Violation {
                    clause_index: i,
                    kind: ViolationKind::NonLinearPositive { variable: v.clone() },
                });
            }
        }
        for v in &pos_vars {
            let (Some(pmax), Some(nmin)) =
                (tmax_over(v, pos.iter().copied()), tmin_over(v, neg.iter().copied()))
            else {
                continue;
            };
            if pmax > nmin {
                violations.push(Violation {
                    clause_index: i,
                    kind: ViolationKind::PositiveDeeperThanNegativeMin { variable: v.clone() },
                });
            }
        }
    }
    Verdict::from_violations(violations)
}

/// PVD: every positive-part variable also occurs in the negative part, at
/// depth at least its maximal positive depth.
pub fn is_pvd(set: &ClauseSet) -> Verdict {
    let mut violations = Vec::new();
    for (i, c) in set.clauses().iter().enumerate() {
        let pos: Vec<&Literal> = c.positive_part().collect();
        let neg: Vec<&Literal> = c.negative_part().collect();
        let mut pos_vars = BTreeSet::new();
        for l in &pos {
            pos_vars.append(&mut l.vars());
        }
        for v in &pos_vars {
            let pmax = tmax_over(v, pos.iter().copied()).expect("v drawn from positive part");
            match tmax_over(v, neg.iter().copied()) {
                None => violations.push(Violation {
                    clause_index: i,
                    kind: ViolationKind::MissingFromNegative { variable: v.clone() },
                }),
                Some(nmax) if pmax > nmax => violations.push(Violation {
                    clause_index: i,
                    kind: ViolationKind::PositiveDeeperThanNegativeMax { variable: v.clone() },
                }),
                Some(_) => {}
            }
        }
    }
    Verdict::from_violations(violations)
}

pub fn check_membership(set: &ClauseSet, class: ClassTag) -> Verdict {
    match class {
        ClassTag::Horn => is_horn(set),
        ClassTag::Occ1n => is_occ1n(set),
        ClassTag::Pvd => is_pvd(set),
    }
}
