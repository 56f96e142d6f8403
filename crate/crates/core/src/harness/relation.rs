//! Parser, printer and checker for displayed square relations such as
//!
//! ```text
//! (3,3,2,1) = Sq^1[(3,3,1,1)] + (4,3,1,1) + (3,4,1,1) + (3,3,1,2)
//! (7,7,8,7) = Sq^1[(7,7,7,7)] + (7,8,7,7) mod L(3;3;3;1)
//! ```
//!
//! Grammar:
//!
//! ```text
//! relation := mono WS? "=" WS? term (WS? "+" WS? term)* (WS "mod" WS "L(" tau ")")?
//! term     := mono | "Sq^" uint "[" poly "]"
//! poly     := mono (WS? "+" WS? mono)*
//! mono     := "(" uint ("," uint)* ")"
//! tau      := uint (";" uint)*
//! ```
//!
//! Spaces are tolerated inside tuples and brackets. In files, blank lines and
//! lines starting with `#` are skipped.

use std::fmt;

use crate::error::{Error, Result};
use crate::monomial::{Monomial, Polynomial, TauSequence};
use crate::steenrod::sq;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub lhs: Monomial,
    pub rhs_squares: Vec<(u32, Polynomial)>,
    pub rhs_monomials: Polynomial,
    pub modulus: Option<TauSequence>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RelationOutcome {
    Exact,
    HoldsModL,
    Fails(Polynomial),
}

impl RelationOutcome {
    pub fn is_success(&self) -> bool {
        !matches!(self, RelationOutcome::Fails(_))
    }
}

impl Relation {
    /// `lhs + Σ Sq^i(arg) + rhs_monomials`, which is zero for an exact relation.
    pub fn residual(&self) -> Polynomial {
        let mut r = Polynomial::from(self.lhs.clone());
        for (i, arg) in &self.rhs_squares {
            r += sq(*i, arg);
        }
        r += &self.rhs_monomials;
        r
    }
}

pub fn verify_relation(r: &Relation) -> RelationOutcome {
    let residual = r.residual();
    if residual.is_zero() {
        return RelationOutcome::Exact;
    }
    if let Some(t) = &r.modulus {
        // The parser guarantees the modulus has the relation's degree.
        if residual.in_lower_tau_span(t).unwrap_or(false) {
            return RelationOutcome::HoldsModL;
        }
    }
    RelationOutcome::Fails(residual)
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} =", self.lhs)?;
        let mut first = true;
        let mut sep = |f: &mut fmt::Formatter<'_>| {
            let s = if first { " " } else { " + " };
            first = false;
            write!(f, "{s}")
        };
        for (i, arg) in &self.rhs_squares {
            sep(f)?;
            write!(f, "Sq^{i}[{arg}]")?;
        }
        for m in self.rhs_monomials.terms() {
            sep(f)?;
            write!(f, "{m}")?;
        }
        if let Some(t) = &self.modulus {
            write!(f, " mod L{t}")?;
        }
        Ok(())
    }
}

/// A relation read from a file, with its 1-based line number.
#[derive(Clone, Debug)]
pub struct RelationEntry {
    pub line: usize,
    pub relation: Relation,
    pub warnings: Vec<String>,
}

pub fn parse_relation(text: &str) -> Result<Relation> {
    parse_relation_at(text, 1).map(|(r, _)| r)
}

/// Parses one relation, also returning warnings about terms that cancelled.
pub fn parse_relation_at(text: &str, line: usize) -> Result<(Relation, Vec<String>)> {
    Parser { chars: text.chars().collect(), pos: 0, line }.relation()
}

pub fn parse_relation_file(text: &str) -> Result<Vec<RelationEntry>> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let l = raw.trim_end_matches('\r');
        let trimmed = l.trim_start();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let (relation, warnings) = parse_relation_at(l, i + 1)?;
        out.push(RelationEntry { line: i + 1, relation, warnings });
    }
    Ok(out)
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
    line: usize,
}

enum Term {
    Mono(Monomial, usize),
    Square(u32, Vec<(Monomial, usize)>, usize),
}

impl Parser {
    fn error<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Syntax { line: self.line, column: self.pos + 1, message: message.into() })
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn ws(&mut self) -> bool {
        let start = self.pos;
        while matches!(self.peek(), Some(' ' | '\t')) {
            self.pos += 1;
        }
        self.pos > start
    }

    fn expect(&mut self, lit: &str) -> Result<()> {
        for c in lit.chars() {
            if self.peek() != Some(c) {
                return self.error(format!("expected `{lit}`"));
            }
            self.pos += 1;
        }
        Ok(())
    }

    fn uint(&mut self) -> Result<u32> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.error("expected an unsigned integer");
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        s.parse().or_else(|_| {
            self.pos = start;
            self.error("integer out of range")
        })
    }

    fn mono(&mut self) -> Result<Monomial> {
        self.expect("(")?;
        let mut exps = Vec::new();
        loop {
            self.ws();
            exps.push(self.uint()?);
            self.ws();
            match self.peek() {
                Some(',') => self.pos += 1,
                Some(')') => {
                    self.pos += 1;
                    return Ok(Monomial::new(&exps));
                }
                _ => return self.error("expected `,` or `)`"),
            }
        }
    }

    fn term(&mut self) -> Result<Term> {
        let at = self.pos;
        match self.peek() {
            Some('(') => Ok(Term::Mono(self.mono()?, at)),
            Some('S') => {
                self.expect("Sq^")?;
                let i = self.uint()?;
                self.expect("[")?;
                let mut args = Vec::new();
                loop {
                    self.ws();
                    let a = self.pos;
                    args.push((self.mono()?, a));
                    self.ws();
                    match self.peek() {
                        Some('+') => self.pos += 1,
                        Some(']') => {
                            self.pos += 1;
                            return Ok(Term::Square(i, args, at));
                        }
                        _ => return self.error("expected `+` or `]`"),
                    }
                }
            }
            _ => self.error("expected a monomial or `Sq^`"),
        }
    }

    fn check(&self, m: &Monomial, k: usize, degree: i64, at: usize, shown: &str) -> Result<()> {
        if m.arity() != k {
            return Err(Error::Syntax {
                line: self.line,
                column: at + 1,
                message: format!("`{shown}` has {} variables, expected {k}", m.arity()),
            });
        }
        if m.degree() as i64 != degree {
            return Err(Error::Inhomogeneous {
                term: shown.to_string(),
                expected: degree.max(0) as u64,
                found: m.degree(),
            });
        }
        Ok(())
    }

    fn relation(&mut self) -> Result<(Relation, Vec<String>)> {
        self.ws();
        let lhs = self.mono()?;
        let (k, d) = (lhs.arity(), lhs.degree() as i64);
        self.ws();
        self.expect("=")?;
        self.ws();
        let mut terms = vec![self.term()?];
        let mut modulus = None;
        loop {
            let had_ws = self.ws();
            match self.peek() {
                None => break,
                Some('+') => {
                    self.pos += 1;
                    self.ws();
                    terms.push(self.term()?);
                }
                Some('m') if had_ws => {
                    self.expect("mod")?;
                    if !self.ws() {
                        return self.error("expected whitespace after `mod`");
                    }
                    self.expect("L(")?;
                    let mut entries = vec![self.uint()?];
                    while self.peek() == Some(';') {
                        self.pos += 1;
                        entries.push(self.uint()?);
                    }
                    self.expect(")")?;
                    self.ws();
                    if self.peek().is_some() {
                        return self.error("unexpected text after the modulus");
                    }
                    modulus = Some(TauSequence::new(entries));
                    break;
                }
                Some(_) => return self.error("expected `+`, `mod` or end of line"),
            }
        }

        let mut warnings = Vec::new();
        let mut rhs_squares = Vec::new();
        let mut rhs_monomials = Polynomial::zero();
        let mut seen_monomials = Vec::new();
        for t in terms {
            match t {
                Term::Mono(m, at) => {
                    let shown = m.to_string();
                    self.check(&m, k, d, at, &shown)?;
                    if seen_monomials.contains(&m) {
                        warnings.push(format!("line {}: {m} repeated, reduced mod 2", self.line));
                    }
                    seen_monomials.push(m.clone());
                    rhs_monomials.toggle(m);
                }
                Term::Square(i, args, at) => {
                    let mut arg = Polynomial::zero();
                    let mut seen = Vec::new();
                    for (m, mat) in args {
                        let shown = format!("Sq^{i}[{m}]");
                        self.check(&m, k, d - i as i64, mat, &shown)?;
                        if seen.contains(&m) {
                            warnings.push(format!("line {}: {m} repeated inside Sq^{i}, reduced mod 2", self.line));
                        }
                        seen.push(m.clone());
                        arg.toggle(m);
                    }
                    if arg.is_zero() {
                        warnings.push(format!(
                            "line {}: argument of Sq^{i} at column {} cancels to zero",
                            self.line,
                            at + 1
                        ));
                    } else {
                        rhs_squares.push((i, arg));
                    }
                }
            }
        }
        if rhs_squares.is_empty() && rhs_monomials.is_zero() {
            return Err(Error::Syntax {
                line: self.line,
                column: 1,
                message: "right-hand side cancels to zero".into(),
            });
        }
        if let Some(t) = &modulus {
            if t.degree() as i64 != d {
                return Err(Error::Inhomogeneous { term: format!("L{t}"), expected: d as u64, found: t.degree() });
            }
        }
        Ok((Relation { lhs, rhs_squares, rhs_monomials, modulus }, warnings))
    }
}
