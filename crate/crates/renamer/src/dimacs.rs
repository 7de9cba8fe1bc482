//! DIMACS CNF reading and writing, with `c map <int> <name>` comments
//! carrying the integer-to-name bijection so encodings stay tied to their
//! predicate symbols across the file boundary.

use renamer_core::clause::Sign;
use renamer_core::prop::{PropClause, PropClauseSet, PropLiteral};
use std::collections::BTreeMap;
use std::fmt::Write as _;
use thiserror::Error;

/// An integer-coded CNF plus the name map, as written to disk.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DimacsDocument {
    pub variable_count: usize,
    /// Clauses as signed variable indices (no terminating 0).
    pub clauses: Vec<Vec<i64>>,
    pub name_map: BTreeMap<usize, String>,
}

impl DimacsDocument {
    pub fn render(&self) -> String {
        let mut out = String::new();
        for (i, name) in &self.name_map {
            let _ = writeln!(out, "c map {i} {name}");
        }
        let _ = writeln!(out, "p cnf {} {}", self.variable_count, self.clauses.len());
        for clause in &self.clauses {
            for lit in clause {
                let _ = write!(out, "{lit} ");
            }
            out.push_str("0\n");
        }
        out
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DimacsError {
    #[error("line {line}: malformed header (expected 'p cnf <vars> <clauses>')")]
    MalformedHeader { line: usize },
    #[error("line {line}: literal {literal} out of range 1..={max}")]
    LiteralOutOfRange { line: usize, literal: i64, max: usize },
    #[error("missing terminating 0 in the last clause")]
    MissingTerminator,
    #[error("line {line}: malformed token '{token}'")]
    MalformedToken { line: usize, token: String },
    #[error("line {line}: duplicate map entry for {entry}")]
    DuplicateMapEntry { line: usize, entry: String },
}

/// Number variables by first occurrence over the canonical clause order,
/// producing a byte-deterministic document.
pub fn emit_dimacs(input: &PropClauseSet) -> (DimacsDocument, String) {
    let mut index: BTreeMap<&str, usize> = BTreeMap::new();
    let mut name_map = BTreeMap::new();
    let mut clauses = Vec::new();
    for clause in input.clauses() {
        let mut lits = Vec::new();
        for l in clause.literals() {
            let next = index.len() + 1;
            let i = *index.entry(l.var.as_str()).or_insert_with(|| {
                name_map.insert(next, l.var.clone());
                next
            });
            lits.push(match l.sign {
                Sign::Positive => i as i64,
                Sign::Negative => -(i as i64),
            });
        }
        clauses.push(lits);
    }
    let doc = DimacsDocument { variable_count: index.len(), clauses, name_map };
    let text = doc.render();
    (doc, text)
}

/// Parse DIMACS CNF.  `c map` comments restore variable names; variables
/// without a mapping get the synthetic name `v<int>`.  All declared
/// variables enter the universe, mapped or not.
pub fn parse_dimacs(text: &str) -> Result<PropClauseSet, DimacsError> {
    let mut name_map: BTreeMap<usize, String> = BTreeMap::new();
    let mut header: Option<(usize, usize)> = None;
    let mut out = PropClauseSet::default();
    let mut current: Vec<PropLiteral> = Vec::new();

    for (lineno, line) in text.lines().enumerate() {
        let lineno = lineno + 1;
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(comment) = line.strip_prefix('c') {
            let fields: Vec<&str> = comment.split_whitespace().collect();
            if fields.len() == 3 && fields[0] == "map" {
                let index: usize = fields[1]
                    .parse()
                    .map_err(|_| DimacsError::MalformedToken {
                        line: lineno,
                        token: fields[1].to_string(),
                    })?;
                let name = fields[2].to_string();
                let fresh_index = name_map.insert(index, name.clone()).is_none();
                let fresh_name = name_map.values().filter(|n| **n == name).count() == 1;
                if !fresh_index || !fresh_name {
                    return Err(DimacsError::DuplicateMapEntry {
                        line: lineno,
                        entry: format!("{index} {name}"),
                    });
                }
            }
            continue;
        }
        if header.is_none() {
            let fields: Vec<&str> = line.split_whitespace().collect();
            if fields.len() != 4 || fields[0] != "p" || fields[1] != "cnf" {
                return Err(DimacsError::MalformedHeader { line: lineno });
            }
            let vars = fields[2].parse();
            let clauses = fields[3].parse();
            match (vars, clauses) {
                (Ok(v), Ok(c)) => header = Some((v, c)),
                _ => return Err(DimacsError::MalformedHeader { line: lineno }),
            }
            continue;
        }
        let (max, _) = header.expect("checked above");
        for token in line.split_whitespace() {
            let lit: i64 = token.parse().map_err(|_| DimacsError::MalformedToken {
                line: lineno,
                token: token.to_string(),
            })?;
            if lit == 0 {
                out.insert(PropClause::new(current.drain(..)));
                continue;
            }
            let var = lit.unsigned_abs() as usize;
            if var > max {
                return Err(DimacsError::LiteralOutOfRange { line: lineno, literal: lit, max });
            }
            let name = name_map.get(&var).cloned().unwrap_or_else(|| format!("v{var}"));
            let sign = if lit > 0 { Sign::Positive } else { Sign::Negative };
            current.push(PropLiteral::new(sign, name));
        }
    }
    if header.is_none() && !text.trim().is_empty() {
        return Err(DimacsError::MalformedHeader { line: 1 });
    }
    if !current.is_empty() {
        return Err(DimacsError::MissingTerminator);
    }
    if let Some((max, _)) = header {
        for v in 1..=max {
            let name = name_map.get(&v).cloned().unwrap_or_else(|| format!("v{v}"));
            out.declare_var(name);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pl(s: &str) -> PropLiteral {
        PropLiteral::positive(s)
    }

    fn nl(s: &str) -> PropLiteral {
        PropLiteral::negative(s)
    }

    #[test]
    fn emits_map_header_and_clauses() {
        let p = PropClauseSet::new(vec![PropClause::new(vec![pl("p"), pl("q")])]);
        let (doc, text) = emit_dimacs(&p);
        assert_eq!(text, "c map 1 p\nc map 2 q\np cnf 2 1\n1 2 0\n");
        assert_eq!(doc.variable_count, 2);
    }

    #[test]
    fn emits_empty_set_as_zero_zero() {
        let (_, text) = emit_dimacs(&PropClauseSet::default());
        assert_eq!(text, "p cnf 0 0\n");
    }

    #[test]
    fn horn_sample_encoding_has_three_vars_five_clauses() {
        let p = PropClauseSet::new(vec![
            PropClause::new(vec![pl("p"), pl("q")]),
            PropClause::new(vec![pl("p"), pl("r")]),
            PropClause::new(vec![pl("q"), pl("r")]),
            PropClause::new(vec![nl("p"), pl("q")]),
            PropClause::new(vec![nl("p"), nl("q")]),
        ]);
        let (doc, text) = emit_dimacs(&p);
        assert_eq!(doc.variable_count, 3);
        assert_eq!(doc.clauses.len(), 5);
        assert_eq!(
            text,
            "c map 1 p\nc map 2 q\nc map 3 r\np cnf 3 5\n1 2 0\n1 3 0\n-1 2 0\n-1 -2 0\n2 3 0\n"
        );
    }

    #[test]
    fn parses_plain_dimacs_with_synthetic_names() {
        let p = parse_dimacs("p cnf 2 1\n1 -2 0\n").unwrap();
        let expected = PropClauseSet::new(vec![PropClause::new(vec![pl("v1"), nl("v2")])]);
        assert!(p.same_clauses(&expected));
        assert_eq!(p.universe().len(), 2);
    }

    #[test]
    fn round_trips_through_emit_and_parse() {
        let p = PropClauseSet::new(vec![
            PropClause::new(vec![pl("p"), pl("q")]),
            PropClause::new(vec![nl("p"), nl("q")]),
            PropClause::unit(pl("r")),
        ]);
        let (_, text) = emit_dimacs(&p);
        let back = parse_dimacs(&text).unwrap();
        assert!(back.same_clauses(&p));
    }

    #[test]
    fn reports_errors() {
        assert_eq!(
            parse_dimacs("p cnf 1 1\n2 0\n").unwrap_err(),
            DimacsError::LiteralOutOfRange { line: 2, literal: 2, max: 1 }
        );
        assert!(matches!(
            parse_dimacs("hello\n"),
            Err(DimacsError::MalformedHeader { .. })
        ));
        assert_eq!(
            parse_dimacs("p cnf 1 1\n1\n").unwrap_err(),
            DimacsError::MissingTerminator
        );
        assert!(matches!(
            parse_dimacs("c map 1 p\nc map 1 q\np cnf 1 0\n"),
            Err(DimacsError::DuplicateMapEntry { .. })
        ));
    }

    #[test]
    fn multiple_clauses_per_line_are_accepted() {
        let p = parse_dimacs("p cnf 2 2\n1 0 -2 0\n").unwrap();
        assert_eq!(p.len(), 2);
    }
}
