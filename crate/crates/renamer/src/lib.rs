//! IO companion to `renamer-core`: the clause-set surface syntax, the
//! DIMACS CNF dialect and the `renamer` command-line interface.

pub mod cli;
pub mod dimacs;
pub mod syntax;

pub use dimacs::{emit_dimacs, parse_dimacs, DimacsDocument, DimacsError};
pub use syntax::{parse_clause_set, serialize_clause_set, ParseError, SourceLocation};
