//! Surface syntax for first-order clause sets.
//!
//! ```text
//! p(X) | q(f(X),a) | ~r(Y).   % a clause per line, '.'-terminated
//! ~r(X).
//! ```
//!
//! `%` starts a comment running to the end of the line.  Identifiers
//! (predicates, functions, constants) start with a lowercase letter;
//! variables start with an uppercase letter or `_`.  0-ary predicates are
//! written without parentheses.

use renamer_core::clause::{Clause, ClauseSet, Literal, Sign, SignatureError, Term};
use std::fmt::Write as _;
use thiserror::Error;

/// 1-based position of a parse error.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SourceLocation {
    pub line: usize,
    pub column: usize,
}

impl std::fmt::Display for SourceLocation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}:{}", self.line, self.column)
    }
}

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("{location}: {message}")]
    Syntax { location: SourceLocation, message: String },
    #[error(transparent)]
    Signature(#[from] SignatureError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Ident(String),
    Variable(String),
    Tilde,
    Pipe,
    Dot,
    Comma,
    LParen,
    RParen,
}

struct Lexer<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    line: usize,
    column: usize,
}

impl<'a> Lexer<'a> {
    fn new(text: &'a str) -> Lexer<'a> {
        Lexer { chars: text.chars().peekable(), line: 1, column: 1 }
    }

    fn location(&self) -> SourceLocation {
        SourceLocation { line: self.line, column: self.column }
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.chars.next()?;
        if c == '\n' {
            self.line += 1;
            self.column = 1;
        } else {
            self.column += 1;
        }
        Some(c)
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError::Syntax { location: self.location(), message: message.into() })
    }

    /// Next token with its starting location, or `None` at end of input.
    fn next_token(&mut self) -> Result<Option<(SourceLocation, Token)>, ParseError> {
        loop {
            match self.chars.peek() {
                None => return Ok(None),
                Some(c) if c.is_whitespace() => {
                    self.bump();
                }
                Some('%') => {
                    while let Some(c) = self.bump() {
                        if c == '\n' {
                            break;
                        }
                    }
                }
                Some(_) => break,
            }
        }
        let location = self.location();
        let c = self.bump().expect("peeked");
        let token = match c {
            '~' => Token::Tilde,
            '|' => Token::Pipe,
            '.' => Token::Dot,
            ',' => Token::Comma,
            '(' => Token::LParen,
            ')' => Token::RParen,
            c if c.is_ascii_lowercase() => Token::Ident(self.word(c)),
            c if c.is_ascii_uppercase() || c == '_' => Token::Variable(self.word(c)),
            c => return self.error(format!("unexpected character '{c}'")),
        };
        Ok(Some((location, token)))
    }

    fn word(&mut self, first: char) -> String {
        let mut s = String::from(first);
        while let Some(&c) = self.chars.peek() {
            if c.is_ascii_alphanumeric() || c == '_' {
                s.push(c);
                self.bump();
            } else {
                break;
            }
        }
        s
    }
}

struct Parser<'a> {
    lexer: Lexer<'a>,
    lookahead: Option<(SourceLocation, Token)>,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Result<Parser<'a>, ParseError> {
        let mut lexer = Lexer::new(text);
        let lookahead = lexer.next_token()?;
        Ok(Parser { lexer, lookahead })
    }

    fn peek(&self) -> Option<&Token> {
        self.lookahead.as_ref().map(|(_, t)| t)
    }

    fn advance(&mut self) -> Result<Option<(SourceLocation, Token)>, ParseError> {
        let current = self.lookahead.take();
        self.lookahead = self.lexer.next_token()?;
        Ok(current)
    }

    fn error_at<T>(
        &self,
        consumed: Option<(SourceLocation, Token)>,
        message: impl Into<String>,
    ) -> Result<T, ParseError> {
        let location = consumed.map(|(loc, _)| loc).unwrap_or_else(|| self.lexer.location());
        Err(ParseError::Syntax { location, message: message.into() })
    }

    fn clause_set(&mut self) -> Result<ClauseSet, ParseError> {
        let mut set = ClauseSet::default();
        while self.peek().is_some() {
            let clause = self.clause()?;
            set.push(clause)?;
        }
        Ok(set)
    }

    fn clause(&mut self) -> Result<Clause, ParseError> {
        let mut clause = Clause::default();
        loop {
            clause.insert(self.literal()?);
            match self.advance()? {
                Some((_, Token::Pipe)) => continue,
                Some((_, Token::Dot)) => return Ok(clause),
                other => return self.error_at(other, "expected '|' or '.'"),
            }
        }
    }

    fn literal(&mut self) -> Result<Literal, ParseError> {
        let sign = if self.peek() == Some(&Token::Tilde) {
            self.advance()?;
            Sign::Negative
        } else {
            Sign::Positive
        };
        let name = match self.advance()? {
            Some((_, Token::Ident(name))) => name,
            other => return self.error_at(other, "expected a predicate identifier"),
        };
        let args = self.arguments()?;
        Ok(Literal::new(sign, name, args))
    }

    /// A parenthesized argument list, or empty when no '(' follows.
    fn arguments(&mut self) -> Result<Vec<Term>, ParseError> {
        if self.peek() != Some(&Token::LParen) {
            return Ok(Vec::new());
        }
        self.advance()?;
        let mut args = vec![self.term()?];
        loop {
            match self.advance()? {
                Some((_, Token::Comma)) => args.push(self.term()?),
                Some((_, Token::RParen)) => return Ok(args),
                other => return self.error_at(other, "expected ',' or ')'"),
            }
        }
    }

    fn term(&mut self) -> Result<Term, ParseError> {
        match self.advance()? {
            Some((_, Token::Variable(name))) => Ok(Term::Var(name)),
            Some((_, Token::Ident(name))) => Ok(Term::App { name, args: self.arguments()? }),
            other => self.error_at(other, "expected a term"),
        }
    }
}

/// Parse the clause-set surface syntax.  Duplicate literals within a
/// clause and duplicate clauses collapse; arity clashes are errors.
pub fn parse_clause_set(text: &str) -> Result<ClauseSet, ParseError> {
    Parser::new(text)?.clause_set()
}

/// Deterministic serialization: clauses in insertion order, literals in
/// their canonical order.  `parse_clause_set` inverts it.
pub fn serialize_clause_set(set: &ClauseSet) -> String {
    let mut out = String::new();
    for clause in set.clauses() {
        for (i, l) in clause.literals().enumerate() {
            if i > 0 {
                out.push_str(" | ");
            }
            let _ = write!(out, "{l}");
        }
        out.push_str(".\n");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use renamer_core::clause::Literal;

    fn x() -> Term {
        Term::var("X")
    }

    #[test]
    fn parses_clauses_and_literals() {
        let s = parse_clause_set("p(X) | q(X) | r(X).").unwrap();
        assert_eq!(s.len(), 1);
        assert_eq!(s.clauses()[0].len(), 3);

        let s = parse_clause_set("~r(X).").unwrap();
        let expected = Clause::new(vec![Literal::negative("r", vec![x()])]);
        assert_eq!(s.clauses(), &[expected]);
    }

    #[test]
    fn parses_nested_terms_constants_and_zero_ary_predicates() {
        let s = parse_clause_set("p(f(g(X), a), _tmp) | q.").unwrap();
        let c = &s.clauses()[0];
        assert_eq!(c.len(), 2);
        assert_eq!(s.predicates()["q"], 0);
        assert_eq!(s.functions()["a"], 0);
        assert_eq!(s.functions()["g"], 1);
    }

    #[test]
    fn comments_and_whitespace_are_insignificant() {
        let text = "% leading comment\n\n  p ( X )|~q(X) . % trailing\n~q(Y).\n";
        let s = parse_clause_set(text).unwrap();
        assert_eq!(s.len(), 2);
        assert_eq!(s, parse_clause_set("p(X)|~q(X).~q(Y).").unwrap());
    }

    #[test]
    fn arity_conflict_is_reported_with_both_arities() {
        let err = parse_clause_set("p(X,X,X).\np(X).").unwrap_err();
        match err {
            ParseError::Signature(SignatureError::PredicateArityConflict {
                name,
                first,
                second,
            }) => {
                assert_eq!(name, "p");
                assert_eq!((first, second), (3, 1));
            }
            other => panic!("unexpected error: {other:?}"),
        }
    }

    #[test]
    fn syntax_errors_carry_locations() {
        let err = parse_clause_set("p(X)\nq(X).").unwrap_err();
        match err {
            ParseError::Syntax { location, .. } => {
                assert_eq!((location.line, location.column), (2, 1));
            }
            other => panic!("unexpected error: {other:?}"),
        }
        // Empty argument lists have one canonical spelling: no parentheses.
        assert!(parse_clause_set("p().").is_err());
        assert!(parse_clause_set("p(X)").is_err());
    }

    #[test]
    fn serialization_round_trips() {
        let text = "~r(X).\np(X,f(Y)) | ~q(a).\n";
        let s = parse_clause_set(text).unwrap();
        assert_eq!(serialize_clause_set(&s), text);
        assert_eq!(parse_clause_set(&serialize_clause_set(&s)).unwrap(), s);
        assert_eq!(serialize_clause_set(&ClauseSet::default()), "");
    }
}
