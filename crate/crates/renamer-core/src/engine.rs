//! Propositional satisfiability by positive hyper-resolution saturation,
//! model extraction via splitting, and independent checking paths
//! (exhaustive branching enumeration, truth tables) used to cross-check
//! the saturation route.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::clause::Sign;
use crate::prop::{Model, PropClause, PropClauseSet, PropLiteral};

/// Default ceiling on stored positive clauses during saturation.
pub const DEFAULT_CLAUSE_LIMIT: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EngineError {
    /// Saturation exceeded the configured clause ceiling.
    ResourceLimit { stored: usize },
    /// Truth-table oracle refused an oversized input.
    TooManyVariables { count: usize, max: usize },
    /// Enumeration universe misses a variable occurring in the clauses.
    IncompleteUniverse { variable: String },
}

impl fmt::Display for EngineError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EngineError::ResourceLimit { stored } => {
                write!(f, "clause limit exceeded ({stored} clauses stored)")
            }
            EngineError::TooManyVariables { count, max } => {
                write!(f, "too many variables for the truth-table oracle ({count} > {max})")
            }
            EngineError::IncompleteUniverse { variable } => {
                write!(f, "enumeration universe misses variable '{variable}'")
            }
        }
    }
}

impl core::error::Error for EngineError {}

/// The clause store produced by saturating a clause set under positive
/// hyper-resolution.
#[derive(Debug, Clone)]
pub struct Saturation {
    /// Positive hyper-resolvents surviving subsumption, canonical order.
    pub derived: Vec<PropClause>,
    /// All surviving positive clauses (input and derived), canonical order.
    pub positives: Vec<PropClause>,
    /// The empty clause was derived (or present): the input is unsatisfiable.
    pub contains_empty: bool,
    /// Peak number of simultaneously stored positive clauses.
    pub peak_positive_clauses: usize,
}

/// Result of model extraction: the model (if any) and the splits taken on
/// the successful branch.
#[derive(Debug, Clone)]
pub struct Extraction {
    pub model: Option<Model>,
    pub split_trail: Vec<(PropClause, PropLiteral)>,
}

// Internal interned form: positive clauses are sorted atom-index vectors.
type Atoms = Vec<u32>;

struct Nucleus {
    neg: Atoms,
    pos: Atoms,
}

struct ClauseRec {
    atoms: Atoms,
    alive: bool,
    derived: bool,
}

struct Saturator {
    names: Vec<String>,
    nuclei: Vec<Nucleus>,
    clauses: Vec<ClauseRec>,
    passive: VecDeque<usize>,
    /// Occurrence lists over *active* clauses, indexed by atom.
    by_atom: Vec<Vec<usize>>,
    alive: usize,
    peak: usize,
    limit: usize,
    contains_empty: bool,
}

fn is_subset(a: &Atoms, b: &Atoms) -> bool {
    // Both sorted.
    let mut it = b.iter();
    'outer: for x in a {
        for y in it.by_ref() {
            match y.cmp(x) {
                core::cmp::Ordering::Less => continue,
                core::cmp::Ordering::Equal => continue 'outer,
                core::cmp::Ordering::Greater => return false,
            }
        }
        return false;
    }
    true
}

fn union_without(acc: &Atoms, sat: &Atoms, skip: u32) -> Atoms {
    let mut out = Vec::with_capacity(acc.len() + sat.len());
    let (mut i, mut j) = (0, 0);
    while i < acc.len() || j < sat.len() {
        if j < sat.len() && sat[j] == skip {
            j += 1;
            continue;
        }
        match (acc.get(i), sat.get(j)) {
            (Some(&a), Some(&b)) if a == b => {
                out.push(a);
                i += 1;
                j += 1;
            }
            (Some(&a), Some(&b)) if a < b => {
                out.push(a);
                i += 1;
            }
            (Some(_), Some(&b)) => {
                out.push(b);
                j += 1;
            }
            (Some(&a), None) => {
                out.push(a);
                i += 1;
            }
            (None, Some(&b)) => {
                out.push(b);
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    out
}

impl Saturator {
    fn new(input: &PropClauseSet, limit: usize) -> Result<Saturator, EngineError> {
        let names: Vec<String> = {
            let mut vars = BTreeSet::new();
            for c in input.clauses() {
                vars.extend(c.vars().cloned());
            }
            vars.into_iter().collect()
        };
        let index: BTreeMap<String, u32> =
            names.iter().enumerate().map(|(i, n)| (n.clone(), i as u32)).collect();

        let mut sat = Saturator {
            by_atom: names.iter().map(|_| Vec::new()).collect(),
            names,
            nuclei: Vec::new(),
            clauses: Vec::new(),
            passive: VecDeque::new(),
            alive: 0,
            peak: 0,
            limit,
            contains_empty: false,
        };

        for c in input.clauses() {
            let mut neg = Vec::new();
            let mut pos = Vec::new();
            for l in c.literals() {
                let a = index[&l.var];
                match l.sign {
                    Sign::Positive => pos.push(a),
                    Sign::Negative => neg.push(a),
                }
            }
            neg.sort_unstable();
            pos.sort_unstable();
            if neg.is_empty() {
                sat.insert(pos, false)?;
            } else {
                sat.nuclei.push(Nucleus { neg, pos });
            }
        }
        Ok(sat)
    }

    /// Add a positive clause under forward and backward subsumption.
    fn insert(&mut self, atoms: Atoms, derived: bool) -> Result<(), EngineError> {
        if self.contains_empty {
            return Ok(());
        }
        for rec in &self.clauses {
            if rec.alive && is_subset(&rec.atoms, &atoms) {
                return Ok(());
            }
        }
        for rec in &mut self.clauses {
            if rec.alive && is_subset(&atoms, &rec.atoms) {
                rec.alive = false;
                self.alive -= 1;
            }
        }
        if atoms.is_empty() {
            self.contains_empty = true;
        }
        self.alive += 1;
        self.peak = self.peak.max(self.alive);
        if self.alive > self.limit {
            return Err(EngineError::ResourceLimit { stored: self.alive });
        }
        self.passive.push_back(self.clauses.len());
        self.clauses.push(ClauseRec { atoms, alive: true, derived });
        Ok(())
    }

    /// Resolve all negative literals of `nucleus` against satellites drawn
    /// from the active clauses, requiring satellite `given` in at least one
    /// slot.
    fn combine(
        &mut self,
        nucleus: usize,
        slot: usize,
        given: usize,
        used_given: bool,
        acc: Atoms,
    ) -> Result<(), EngineError> {
        if self.contains_empty {
            return Ok(());
        }
        if slot == self.nuclei[nucleus].neg.len() {
            if used_given {
                self.insert(acc, true)?;
            }
            return Ok(());
        }
        let atom = self.nuclei[nucleus].neg[slot];
        for k in 0..self.by_atom[atom as usize].len() {
            let ci = self.by_atom[atom as usize][k];
            if !self.clauses[ci].alive {
                continue;
            }
            let next = union_without(&acc, &self.clauses[ci].atoms, atom);
            self.combine(nucleus, slot + 1, given, used_given || ci == given, next)?;
        }
        Ok(())
    }

    fn run(&mut self) -> Result<(), EngineError> {
        while let Some(given) = self.passive.pop_front() {
            if self.contains_empty {
                break;
            }
            if !self.clauses[given].alive {
                continue;
            }
            // Activate: register in the occurrence lists.
            let atoms = self.clauses[given].atoms.clone();
            for &a in &atoms {
                self.by_atom[a as usize].push(given);
            }
            for n in 0..self.nuclei.len() {
                if !self.nuclei[n].neg.iter().any(|a| atoms.binary_search(a).is_ok()) {
                    continue;
                }
                let pos = self.nuclei[n].pos.clone();
                self.combine(n, 0, given, false, pos)?;
                if !self.clauses[given].alive {
                    break;
                }
            }
        }
        Ok(())
    }

    fn to_clause(&self, atoms: &Atoms) -> PropClause {
        PropClause::new(
            atoms.iter().map(|&a| PropLiteral::positive(self.names[a as usize].clone())),
        )
    }

    fn finish(self) -> Saturation {
        let mut derived = Vec::new();
        let mut positives = Vec::new();
        for rec in &self.clauses {
            if !rec.alive {
                continue;
            }
            let c = self.to_clause(&rec.atoms);
            if rec.derived {
                derived.push(c.clone());
            }
            positives.push(c);
        }
        derived.sort();
        positives.sort();
        Saturation {
            derived,
            positives,
            contains_empty: self.contains_empty,
            peak_positive_clauses: self.peak,
        }
    }
}

/// Saturate under positive hyper-resolution: repeatedly resolve every
/// negative literal of a nucleus simultaneously against positive
/// satellites, keeping the store minimal by forward and backward
/// subsumption, until fixpoint or the empty clause.
pub fn saturate(input: &PropClauseSet, limit: usize) -> Result<Saturation, EngineError> {
    let mut sat = Saturator::new(input, limit)?;
    sat.run()?;
    Ok(sat.finish())
}

/// Satisfiable iff saturation does not derive the empty clause.
pub fn is_satisfiable(input: &PropClauseSet, limit: usize) -> Result<bool, EngineError> {
    Ok(!saturate(input, limit)?.contains_empty)
}

/// True iff every clause contains a literal true under `model`.
pub fn evaluate(model: &Model, input: &PropClauseSet) -> bool {
    input.clauses().all(|c| c.literals().any(|l| model.satisfies_literal(l)))
}

fn extract_rec(
    input: &PropClauseSet,
    limit: usize,
    trail: &mut Vec<(PropClause, PropLiteral)>,
) -> Result<Option<Model>, EngineError> {
    let sat = saturate(input, limit)?;
    if sat.contains_empty {
        return Ok(None);
    }
    match sat.positives.iter().find(|c| c.len() > 1) {
        None => {
            // Atomic representation: the surviving positive units are the
            // true atoms, everything else is false.
            let true_vars: BTreeSet<String> = sat
                .positives
                .iter()
                .flat_map(|c| c.vars().cloned())
                .collect();
            let model = Model::new(true_vars, input.universe().clone());
            Ok(evaluate(&model, input).then_some(model))
        }
        Some(split) => {
            for lit in split.literals() {
                let mut narrowed = input.clone();
                narrowed.insert(PropClause::unit(lit.clone()));
                trail.push((split.clone(), lit.clone()));
                if let Some(model) = extract_rec(&narrowed, limit, trail)? {
                    return Ok(Some(model));
                }
                trail.pop();
            }
            Ok(None)
        }
    }
}

/// Extract a model by splitting: while the saturation holds a non-unit
/// positive clause, assert one of its literals (first clause and first
/// literal in canonical order) and re-saturate, backtracking when the
/// empty clause appears.  A returned model always satisfies the input.
pub fn extract_model(input: &PropClauseSet, limit: usize) -> Result<Extraction, EngineError> {
    let mut trail = Vec::new();
    let model = extract_rec(input, limit, &mut trail)?;
    Ok(Extraction { model, split_trail: trail })
}

struct Enumerator<'a> {
    vars: Vec<&'a String>,
    clauses: Vec<Vec<(usize, Sign)>>,
    models: Vec<BTreeSet<String>>,
}

impl<'a> Enumerator<'a> {
    // assignment: per-variable Option<bool>.
    fn search(&mut self, assignment: &mut Vec<Option<bool>>) {
        // Unit propagation to fixpoint.
        let mut forced: Vec<(usize, bool)> = Vec::new();
        loop {
            let mut changed = false;
            for clause in &self.clauses {
                let mut unassigned = None;
                let mut unassigned_count = 0;
                let mut satisfied = false;
                for &(v, sign) in clause {
                    match assignment[v] {
                        Some(val) if val == sign.is_positive() => {
                            satisfied = true;
                            break;
                        }
                        Some(_) => {}
                        None => {
                            unassigned = Some((v, sign.is_positive()));
                            unassigned_count += 1;
                        }
                    }
                }
                if satisfied {
                    continue;
                }
                match (unassigned_count, unassigned) {
                    (0, _) => {
                        // Conflict: undo and fail this branch.
                        for (v, _) in forced {
                            assignment[v] = None;
                        }
                        return;
                    }
                    (1, Some((v, val))) => {
                        assignment[v] = Some(val);
                        forced.push((v, val));
                        changed = true;
                    }
                    _ => {}
                }
            }
            if !changed {
                break;
            }
        }
        match assignment.iter().position(Option::is_none) {
            None => {
                let trues: BTreeSet<String> = assignment
                    .iter()
                    .enumerate()
                    .filter(|(_, a)| **a == Some(true))
                    .map(|(i, _)| self.vars[i].clone())
                    .collect();
                self.models.push(trues);
            }
            Some(v) => {
                for val in [false, true] {
                    assignment[v] = Some(val);
                    self.search(assignment);
                }
                assignment[v] = None;
            }
        }
        for (v, _) in forced {
            assignment[v] = None;
        }
    }
}

/// All total assignments over `universe` satisfying the input, ordered by
/// number of true variables then lexicographically, truncated at `limit`
/// (`None` = unbounded).  Returns the models and a truncation flag.
/// Implemented by exhaustive branching with unit propagation, independent
/// of the hyper-resolution path.
pub fn enumerate_models(
    input: &PropClauseSet,
    universe: &BTreeSet<String>,
    limit: Option<usize>,
) -> Result<(Vec<Model>, bool), EngineError> {
    let vars: Vec<&String> = universe.iter().collect();
    let index: BTreeMap<&String, usize> =
        vars.iter().enumerate().map(|(i, v)| (*v, i)).collect();
    let mut clauses = Vec::new();
    for c in input.clauses() {
        let mut lits = Vec::new();
        for l in c.literals() {
            let v = *index
                .get(&l.var)
                .ok_or_else(|| EngineError::IncompleteUniverse { variable: l.var.clone() })?;
            lits.push((v, l.sign));
        }
        clauses.push(lits);
    }
    let mut e = Enumerator { vars, clauses, models: Vec::new() };
    let mut assignment = vec_none(e.vars.len());
    e.search(&mut assignment);
    e.models.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    let truncated = limit.is_some_and(|n| e.models.len() > n);
    if let Some(n) = limit {
        e.models.truncate(n);
    }
    let models = e
        .models
        .into_iter()
        .map(|trues| Model::new(trues, universe.clone()))
        .collect();
    Ok((models, truncated))
}

fn vec_none(n: usize) -> Vec<Option<bool>> {
    let mut v = Vec::with_capacity(n);
    v.resize(n, None);
    v
}

/// Exhaustive satisfiability check; reference oracle for `is_satisfiable`.
/// Limited to 20 distinct variables.
pub fn truth_table_sat(input: &PropClauseSet) -> Result<bool, EngineError> {
    let mut vars = BTreeSet::new();
    for c in input.clauses() {
        vars.extend(c.vars());
    }
    let vars: Vec<&String> = vars.into_iter().collect();
    if vars.len() > 20 {
        return Err(EngineError::TooManyVariables { count: vars.len(), max: 20 });
    }
    let index: BTreeMap<&String, usize> =
        vars.iter().enumerate().map(|(i, v)| (*v, i)).collect();
    let clauses: Vec<Vec<(usize, bool)>> = input
        .clauses()
        .map(|c| c.literals().map(|l| (index[&l.var], l.sign.is_positive())).collect())
        .collect();
    for bits in 0u32..(1u32 << vars.len()) {
        let ok = clauses
            .iter()
            .all(|c| c.iter().any(|&(v, pos)| ((bits >> v) & 1 == 1) == pos));
        if ok {
            return Ok(true);
        }
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    fn pl(s: &str) -> PropLiteral {
        PropLiteral::positive(s)
    }

    fn nl(s: &str) -> PropLiteral {
        PropLiteral::negative(s)
    }

    fn clauses(cs: Vec<Vec<PropLiteral>>) -> PropClauseSet {
        PropClauseSet::new(cs.into_iter().map(PropClause::new))
    }

    /// ren of the four-clause Horn sample:
    /// {p,q},{p,r},{q,r},{~p,q},{~p,~q}.
    fn sample_encoding() -> PropClauseSet {
        clauses(vec![
            vec![pl("p"), pl("q")],
            vec![pl("p"), pl("r")],
            vec![pl("q"), pl("r")],
            vec![nl("p"), pl("q")],
            vec![nl("p"), nl("q")],
        ])
    }

    #[test]
    fn saturating_sample_derives_q_and_r_units() {
        let sat = saturate(&sample_encoding(), DEFAULT_CLAUSE_LIMIT).unwrap();
        assert!(!sat.contains_empty);
        let derived: BTreeSet<&PropClause> = sat.derived.iter().collect();
        assert!(derived.contains(&PropClause::unit(pl("q"))));
        assert!(derived.contains(&PropClause::unit(pl("r"))));
        // Units subsume every surviving positive clause containing them.
        for c in &sat.positives {
            assert!(c.len() == 1, "non-unit positive survived: {c}");
        }
    }

    #[test]
    fn unit_clash_derives_empty_clause() {
        let p = clauses(vec![vec![pl("p")], vec![nl("p")]]);
        let sat = saturate(&p, DEFAULT_CLAUSE_LIMIT).unwrap();
        assert!(sat.contains_empty);
        assert!(!is_satisfiable(&p, DEFAULT_CLAUSE_LIMIT).unwrap());
    }

    #[test]
    fn all_positive_input_has_no_resolvents() {
        let p = clauses(vec![vec![pl("p"), pl("q")], vec![pl("r")]]);
        let sat = saturate(&p, DEFAULT_CLAUSE_LIMIT).unwrap();
        assert!(sat.derived.is_empty());
        assert!(!sat.contains_empty);
    }

    #[test]
    fn satisfiability_examples() {
        assert!(is_satisfiable(&sample_encoding(), DEFAULT_CLAUSE_LIMIT).unwrap());
        let unsat = clauses(vec![vec![pl("p"), pl("q")], vec![nl("p")], vec![nl("q")]]);
        assert!(!is_satisfiable(&unsat, DEFAULT_CLAUSE_LIMIT).unwrap());
        assert!(is_satisfiable(&PropClauseSet::default(), DEFAULT_CLAUSE_LIMIT).unwrap());
    }

    #[test]
    fn extract_model_of_sample_is_q_r() {
        let e = extract_model(&sample_encoding(), DEFAULT_CLAUSE_LIMIT).unwrap();
        let m = e.model.unwrap();
        let trues: Vec<&str> = m.true_vars().iter().map(String::as_str).collect();
        assert_eq!(trues, vec!["q", "r"]);
        // Horn-like behaviour: derived clauses were all units, no splits.
        assert!(e.split_trail.is_empty());
    }

    #[test]
    fn extract_model_splits_deterministically() {
        let p = clauses(vec![vec![pl("p"), pl("q")]]);
        let e = extract_model(&p, DEFAULT_CLAUSE_LIMIT).unwrap();
        let m = e.model.unwrap();
        assert_eq!(m.true_vars().iter().next().unwrap(), "p");
        assert_eq!(m.true_vars().len(), 1);
        assert_eq!(e.split_trail.len(), 1);
    }

    #[test]
    fn extract_model_reports_unsatisfiable() {
        let p = clauses(vec![vec![pl("p")], vec![nl("p")]]);
        let e = extract_model(&p, DEFAULT_CLAUSE_LIMIT).unwrap();
        assert!(e.model.is_none());
    }

    #[test]
    fn splitting_backtracks_to_a_real_model() {
        // {p,q}, {~p}: the canonical first split choice p fails and must
        // backtrack to q.
        let p = clauses(vec![vec![pl("p"), pl("q")], vec![nl("p")]]);
        let e = extract_model(&p, DEFAULT_CLAUSE_LIMIT).unwrap();
        let m = e.model.unwrap();
        assert!(m.is_true("q"));
        assert!(!m.is_true("p"));
    }

    #[test]
    fn enumerate_models_of_pvd_sample() {
        // {{p,q},{q,~r}} over {p,q,r}: models {p},{q},{p,q},{q,r},{p,q,r}.
        let p = clauses(vec![vec![pl("p"), pl("q")], vec![pl("q"), nl("r")]]);
        let universe: BTreeSet<String> =
            ["p", "q", "r"].iter().map(|s| s.to_string()).collect();
        let (models, truncated) = enumerate_models(&p, &universe, None).unwrap();
        assert!(!truncated);
        let got: Vec<Vec<&str>> = models
            .iter()
            .map(|m| m.true_vars().iter().map(String::as_str).collect())
            .collect();
        assert_eq!(
            got,
            vec![
                vec!["p"],
                vec!["q"],
                vec!["p", "q"],
                vec!["q", "r"],
                vec!["p", "q", "r"],
            ]
        );
    }

    #[test]
    fn enumerate_models_edge_cases() {
        let unsat = clauses(vec![vec![pl("p")], vec![nl("p")]]);
        let universe: BTreeSet<String> = ["p"].iter().map(|s| s.to_string()).collect();
        let (models, _) = enumerate_models(&unsat, &universe, None).unwrap();
        assert!(models.is_empty());

        let empty = PropClauseSet::default();
        let (models, _) = enumerate_models(&empty, &universe, None).unwrap();
        assert_eq!(models.len(), 2);
        assert!(models[0].true_vars().is_empty());
        assert!(models[1].is_true("p"));

        let (models, truncated) = enumerate_models(&empty, &universe, Some(1)).unwrap();
        assert_eq!(models.len(), 1);
        assert!(truncated);

        let missing = clauses(vec![vec![pl("zz")]]);
        assert!(matches!(
            enumerate_models(&missing, &universe, None),
            Err(EngineError::IncompleteUniverse { .. })
        ));
    }

    #[test]
    fn evaluate_examples() {
        let enc = sample_encoding();
        let universe = enc.universe().clone();
        let qr = Model::new(["q", "r"].iter().map(|s| s.to_string()).collect(), universe.clone());
        assert!(evaluate(&qr, &enc));
        let p_only = Model::new(["p"].iter().map(|s| s.to_string()).collect(), universe);
        assert!(!evaluate(&p_only, &enc));
        assert!(evaluate(&Model::default(), &PropClauseSet::default()));
    }

    #[test]
    fn truth_table_examples() {
        assert!(truth_table_sat(&sample_encoding()).unwrap());
        assert!(!truth_table_sat(&clauses(vec![vec![pl("p")], vec![nl("p")]])).unwrap());
        assert!(truth_table_sat(&clauses(vec![vec![pl("p")]])).unwrap());
    }

    #[test]
    fn resource_limit_is_reported() {
        let p = sample_encoding();
        match saturate(&p, 1) {
            Err(EngineError::ResourceLimit { stored }) => assert!(stored > 1),
            other => panic!("expected resource limit, got {other:?}"),
        }
    }
}
