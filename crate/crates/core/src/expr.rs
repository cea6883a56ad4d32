//! Recursive-descent parser for scalar entry expressions.
//!
//! The grammar, fixed by the input-file contract (whitespace insignificant,
//! `z` denotes `zeta_N` for the file-level conductor `N`):
//!
//! ```text
//! expr     := term (('+'|'-') term)* ;
//! term     := rational ('*' zpow)? | zpow ;
//! zpow     := 'z' '^' integer | 'z' ;
//! rational := integer ('/' positive-integer)? ;
//! ```
//!
//! `integer` carries an optional leading `-`, so `1/2*z^3 + -1/2*z` is a
//! valid expression. Parsing is total: every input yields either a value or
//! a diagnostic with line and column, never a panic.

use crate::cyclotomic::{canonicalize, Cyclotomic};
use crate::rat::Rat;
use num::bigint::BigInt;
use num::{Integer, One, Zero};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExprError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

impl fmt::Display for ExprError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.col, self.message)
    }
}

impl std::error::Error for ExprError {}

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    line: usize,
    col: usize,
    text: &'a str,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Parser {
            chars: text.chars().collect(),
            pos: 0,
            line: 1,
            col: 1,
            text,
        }
    }

    fn error(&self, message: impl Into<String>) -> ExprError {
        ExprError {
            line: self.line,
            col: self.col,
            message: message.into(),
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += 1;
        if c == '\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(c)
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_whitespace()) {
            self.bump();
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ExprError> {
        match self.peek() {
            Some(got) if got == c => {
                self.bump();
                Ok(())
            }
            Some(got) => Err(self.error(format!("expected '{c}', found '{got}'"))),
            None => Err(self.error(format!("expected '{c}', found end of input"))),
        }
    }

    fn digits(&mut self) -> Result<BigInt, ExprError> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.bump();
        }
        if self.pos == start {
            return match self.peek() {
                Some(c) => Err(self.error(format!("expected digits, found '{c}'"))),
                None => Err(self.error("expected digits, found end of input")),
            };
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        Ok(s.parse().expect("digit run parses as integer"))
    }

    fn integer(&mut self) -> Result<BigInt, ExprError> {
        let negative = if self.peek() == Some('-') {
            self.bump();
            true
        } else {
            false
        };
        let mag = self.digits()?;
        Ok(if negative { -mag } else { mag })
    }

    // zpow := 'z' ('^' integer)?  -- caller has seen 'z'.
    fn zpow(&mut self) -> Result<BigInt, ExprError> {
        self.expect('z')?;
        self.skip_ws();
        if self.peek() == Some('^') {
            self.bump();
            self.skip_ws();
            self.integer()
        } else {
            Ok(BigInt::one())
        }
    }

    fn rational(&mut self) -> Result<Rat, ExprError> {
        let numerator = self.integer()?;
        self.skip_ws();
        if self.peek() == Some('/') {
            self.bump();
            self.skip_ws();
            let before = (self.line, self.col);
            let denominator = self.digits()?;
            if denominator.is_zero() {
                return Err(ExprError {
                    line: before.0,
                    col: before.1,
                    message: "denominator must be positive".to_string(),
                });
            }
            Ok(Rat::new(numerator, denominator))
        } else {
            Ok(Rat::from_integer(numerator))
        }
    }

    // term := rational ('*' zpow)? | zpow
    fn term(&mut self) -> Result<(Rat, BigInt), ExprError> {
        self.skip_ws();
        match self.peek() {
            Some('z') => Ok((Rat::one(), self.zpow()?)),
            Some(c) if c == '-' || c.is_ascii_digit() => {
                let coeff = self.rational()?;
                self.skip_ws();
                if self.peek() == Some('*') {
                    self.bump();
                    self.skip_ws();
                    let e = self.zpow()?;
                    Ok((coeff, e))
                } else {
                    Ok((coeff, BigInt::zero()))
                }
            }
            Some(c) => Err(self.error(format!("expected a term, found '{c}'"))),
            None => Err(self.error("expected a term, found end of input")),
        }
    }

    fn expr(&mut self, conductor: u64) -> Result<Cyclotomic, ExprError> {
        let mut terms: Vec<(Rat, i64)> = Vec::new();
        let n = BigInt::from(conductor);
        let mut push = |coeff: Rat, exponent: BigInt| {
            let e = exponent.mod_floor(&n);
            let e: i64 = i64::try_from(e).expect("reduced exponent fits in i64");
            terms.push((coeff, e));
        };
        let (c, e) = self.term()?;
        push(c, e);
        loop {
            self.skip_ws();
            match self.peek() {
                Some('+') => {
                    self.bump();
                    let (c, e) = self.term()?;
                    push(c, e);
                }
                Some('-') => {
                    self.bump();
                    let (c, e) = self.term()?;
                    push(-c, e);
                }
                Some(c) => return Err(self.error(format!("unexpected '{c}'"))),
                None => break,
            }
        }
        debug_assert!(self.pos == self.text.chars().count());
        Ok(canonicalize(conductor, &terms))
    }
}

/// Parse one entry expression at the given conductor.
pub fn parse_entry(text: &str, conductor: u64) -> Result<Cyclotomic, ExprError> {
    assert!(conductor >= 1, "conductor must be positive");
    let mut p = Parser::new(text);
    p.expr(conductor)
}
