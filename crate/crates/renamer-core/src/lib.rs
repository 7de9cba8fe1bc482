//! Decides whether a first-order clause set is — or can be renamed into —
//! one of the classes Horn, OCC1N or PVD.
//!
//! Renaming a predicate symbol flips the polarity of all its literals
//! throughout the clause set.  Whether some renaming moves a set into a
//! target class is reduced to propositional satisfiability: each class has
//! an encoder producing a clause set over the predicate symbols, whose
//! models are exactly the admissible renamings.  The propositional side is
//! solved by positive hyper-resolution saturation with splitting; models
//! double as renamings.
//!
//! The crate is `no_std` (with `alloc`); parsing, file formats and the CLI
//! live in the companion `renamer` crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod clause;
pub mod encode;
pub mod engine;
pub mod oracle;
pub mod prop;

pub use clause::{
    apply_renaming, check_membership, ClassTag, Clause, ClauseSet, Literal, Renaming, Sign,
    SignatureError, Term, Verdict, Violation, ViolationKind,
};
pub use encode::{encode, encode_horn, encode_occ1n, encode_pvd, max_depth_literals};
pub use engine::{
    enumerate_models, evaluate, extract_model, is_satisfiable, saturate, truth_table_sat,
    EngineError, Extraction, Saturation, DEFAULT_CLAUSE_LIMIT,
};
pub use prop::{Model, PropClause, PropClauseSet, PropLiteral};
