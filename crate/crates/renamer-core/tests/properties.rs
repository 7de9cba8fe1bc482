//! Property tests for the clause metrics, renaming application and the
//! encoders' structural guarantees.

use proptest::prelude::*;
use renamer_core::clause::{self, Clause, ClauseSet, Literal, Renaming, Sign, Term};
use renamer_core::encode::{encode, encode_horn, encode_occ1n, encode_pvd};
use renamer_core::engine::evaluate;
use renamer_core::prop::{Model, PropClause, PropClauseSet};
use renamer_core::ClassTag;
use std::collections::BTreeSet;

fn term_strategy() -> impl Strategy<Value = Term> {
    let leaf = prop_oneof![
        prop_oneof![Just("X"), Just("Y"), Just("Z")].prop_map(Term::var),
        Just(Term::constant("a")),
    ];
    // Fixed arities: f/1 and g/2, so any combination keeps the signature
    // consistent.
    leaf.prop_recursive(3, 12, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(|t| Term::app("f", vec![t])),
            (inner.clone(), inner).prop_map(|(s, t)| Term::app("g", vec![s, t])),
        ]
    })
}

fn literal_strategy() -> impl Strategy<Value = Literal> {
    // Fixed arities: p/1, q/2, r/0.
    let sign = any::<bool>().prop_map(|b| if b { Sign::Positive } else { Sign::Negative });
    (sign, prop_oneof![Just("p"), Just("q"), Just("r")], proptest::collection::vec(term_strategy(), 2))
        .prop_map(|(sign, pred, mut args)| match pred {
            "p" => Literal::new(sign, "p", vec![args.pop().unwrap()]),
            "q" => Literal::new(sign, "q", args),
            _ => Literal::new(sign, "r", vec![]),
        })
}

fn clause_set_strategy() -> impl Strategy<Value = ClauseSet> {
    proptest::collection::vec(proptest::collection::vec(literal_strategy(), 1..4), 1..5)
        .prop_map(|clauses| {
            ClauseSet::new(clauses.into_iter().map(Clause::new)).expect("fixed arities")
        })
}

fn subrenaming_strategy() -> impl Strategy<Value = Vec<&'static str>> {
    proptest::sample::subsequence(vec!["p", "q", "r"], 0..=3)
}

proptest! {
    #[test]
    fn dual_is_an_involution(l in literal_strategy()) {
        prop_assert_eq!(l.dual().dual(), l);
    }

    #[test]
    fn renaming_twice_is_the_identity(s in clause_set_strategy(), r in subrenaming_strategy()) {
        let r = Renaming::new(
            r.into_iter().filter(|p| s.predicates().contains_key(*p)).map(String::from),
        );
        let once = clause::apply_renaming(&r, &s).unwrap();
        let twice = clause::apply_renaming(&r, &once).unwrap();
        prop_assert_eq!(twice, s);
    }

    #[test]
    fn skeleton_commutes_with_renaming(s in clause_set_strategy(), r in subrenaming_strategy()) {
        let r = Renaming::new(
            r.into_iter().filter(|p| s.predicates().contains_key(*p)).map(String::from),
        );
        let renamed = clause::apply_renaming(&r, &s).unwrap();
        for (before, after) in s.clauses().iter().zip(renamed.clauses()) {
            let skel_after = PropClause::new(after.literals().map(Literal::skeleton));
            let flipped = PropClause::new(before.literals().map(|l| {
                let sk = l.skeleton();
                if r.contains(&sk.var) { sk.dual() } else { sk }
            }));
            prop_assert_eq!(skel_after, flipped);
        }
    }

    #[test]
    fn occurrence_depths_are_bounded_by_term_depth(t in term_strategy()) {
        let mut vars = BTreeSet::new();
        t.collect_vars(&mut vars);
        for v in &vars {
            let tmin = t.tmin(v).unwrap();
            let tmax = t.tmax(v).unwrap();
            prop_assert!(tmin <= tmax);
            prop_assert!(tmax <= t.depth());
        }
        // occ >= 1 exactly for the occurring variables.
        for v in ["X", "Y", "Z"] {
            prop_assert_eq!(t.occ(v) >= 1, vars.contains(v));
            prop_assert_eq!(t.tmax(v).is_some(), vars.contains(v));
        }
    }

    #[test]
    fn clause_depth_matches_position_enumeration(c in proptest::collection::vec(literal_strategy(), 1..4)) {
        // Independent route: flatten every term position and take the
        // deepest one.
        fn positions(t: &Term, depth: u32, out: &mut Vec<u32>) {
            out.push(depth);
            if let Term::App { args, .. } = t {
                for a in args {
                    positions(a, depth + 1, out);
                }
            }
        }
        let clause = Clause::new(c);
        let mut depths = vec![0];
        for l in clause.literals() {
            for t in &l.args {
                positions(t, 0, &mut depths);
            }
        }
        prop_assert_eq!(clause.depth(), depths.into_iter().max().unwrap());
    }

    #[test]
    fn horn_and_occ1n_encodings_are_krom(s in clause_set_strategy()) {
        prop_assert!(encode_horn(&s).is_krom());
        prop_assert!(encode_occ1n(&s).is_krom());
    }

    #[test]
    fn encoding_sizes_are_bounded(s in clause_set_strategy()) {
        let pair_bound: usize = s.clauses().iter().map(|c| c.len() * c.len()).sum();
        prop_assert!(encode_horn(&s).len() <= pair_bound);
        let var_bound: usize = s.clauses().iter().map(|c| c.vars().len()).sum();
        prop_assert!(encode_pvd(&s).len() <= var_bound);
    }

    #[test]
    fn members_satisfy_their_encoding_with_the_empty_renaming(s in clause_set_strategy()) {
        for class in [ClassTag::Horn, ClassTag::Occ1n, ClassTag::Pvd] {
            if clause::check_membership(&s, class).member {
                let enc = encode(&s, class);
                let all_false = Model::new(BTreeSet::new(), enc.universe().clone());
                prop_assert!(evaluate(&all_false, &enc), "class {:?}", class);
            }
        }
    }

    #[test]
    fn occ_over_a_clause_sums_over_literals(c in proptest::collection::vec(literal_strategy(), 1..4)) {
        let clause = Clause::new(c);
        for v in ["X", "Y", "Z"] {
            let total: u32 = clause.literals().map(|l| l.occ(v)).sum();
            prop_assert_eq!(clause::occ_over(v, clause.literals()), total);
            prop_assert_eq!(total >= 1, clause.vars().contains(v));
        }
    }
}

#[test]
fn empty_clause_set_is_in_every_class() {
    let s = ClauseSet::default();
    for class in [ClassTag::Horn, ClassTag::Occ1n, ClassTag::Pvd] {
        assert!(clause::check_membership(&s, class).member);
        assert!(encode(&s, class).is_empty());
    }
}

#[test]
fn encoding_never_stores_tautologies_or_duplicates() {
    // p(X) and ~p(Y) in one clause give the skeleton pair {p, ~p}.
    let s = ClauseSet::new(vec![Clause::new(vec![
        Literal::positive("p", vec![Term::var("X")]),
        Literal::negative("p", vec![Term::var("Y")]),
    ])])
    .unwrap();
    let enc = encode_horn(&s);
    assert!(enc.is_empty());
    assert!(!PropClauseSet::default().contains_empty_clause());
}
