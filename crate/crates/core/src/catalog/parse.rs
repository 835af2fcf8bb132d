//! Recursive-descent parser for the identity DSL:
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor (('*' | '/') factor)*
//! factor := atom ('^' integer)?
//! atom   := 'Pi' '(' qarg ')' | 'psi' '(' qarg ')' | 'phi' '(' qarg ')'
//!         | 'sqrt' '(' expr ')' | 'q' ('^' rational)? | rational | '(' expr ')'
//! qarg   := 'q' ('^' posint)?
//! ```
//!
//! Exponents may be wrapped in braces (`q^{1/2}`, `x^{-2}`); a fractional
//! power of `q` must be braced. Integers may carry a leading `-`. A literal
//! `n/d` binds tighter than division.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use thiserror::Error;

use super::expr::Expr;
use crate::series::Coef;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("at byte {offset}: expected one of {expected:?}, found {found}")]
    Syntax {
        offset: usize,
        expected: Vec<String>,
        found: String,
    },
    #[error("at byte {offset}: {name} takes {expected} argument(s), got {found}")]
    Arity {
        offset: usize,
        name: String,
        expected: usize,
        found: usize,
    },
    #[error("at byte {offset}: q^{{{exponent}}} is not an integer power of q^(1/4)")]
    QPowNotQuarterIntegral { offset: usize, exponent: String },
}

impl ParseError {
    pub fn offset(&self) -> usize {
        match self {
            ParseError::Syntax { offset, .. }
            | ParseError::Arity { offset, .. }
            | ParseError::QPowNotQuarterIntegral { offset, .. } => *offset,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(BigInt),
    Sym(char),
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("identifier {s:?}"),
            Tok::Int(n) => format!("integer {n}"),
            Tok::Sym(c) => format!("'{c}'"),
            Tok::End => "end of input".to_string(),
        }
    }
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        if c.is_ascii_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let n: BigInt = src[start..i].parse().expect("digits");
            out.push((start, Tok::Int(n)));
        } else if c.is_ascii_alphabetic() || c == b'_' {
            let start = i;
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            out.push((start, Tok::Ident(src[start..i].to_string())));
        } else if b"+-*/^(){},".contains(&c) {
            out.push((i, Tok::Sym(c as char)));
            i += 1;
        } else {
            let ch = src[i..].chars().next().expect("non-empty");
            return Err(ParseError::Syntax {
                offset: i,
                expected: vec!["expression".into()],
                found: format!("{ch:?}"),
            });
        }
    }
    out.push((src.len(), Tok::End));
    Ok(out)
}

const ATOM_START: &[&str] = &["Pi", "psi", "phi", "sqrt", "q", "integer", "'('"];

/// Deepest accepted nesting of parentheses and function calls.
pub const MAX_DEPTH: usize = 64;

/// Bound on `|4r|` for `q^r` and on integer exponents.
const MAX_EXPONENT: i64 = 1 << 24;

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    depth: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].1
    }

    fn peek_at(&self, ahead: usize) -> &Tok {
        let i = (self.pos + ahead).min(self.toks.len() - 1);
        &self.toks[i].1
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].0
    }

    fn bump(&mut self) -> (usize, Tok) {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn fail<T>(&self, expected: &[&str]) -> Result<T, ParseError> {
        Err(ParseError::Syntax {
            offset: self.offset(),
            expected: expected.iter().map(|s| s.to_string()).collect(),
            found: self.peek().describe(),
        })
    }

    fn eat(&mut self, c: char) -> bool {
        if *self.peek() == Tok::Sym(c) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            self.fail(&[&format!("'{c}'")])
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            if self.eat('+') {
                lhs = Expr::add(lhs, self.term()?);
            } else if self.eat('-') {
                lhs = Expr::sub(lhs, self.term()?);
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.factor()?;
        loop {
            if self.eat('*') {
                lhs = Expr::mul(lhs, self.factor()?);
            } else if self.eat('/') {
                lhs = Expr::div(lhs, self.factor()?);
            } else {
                return Ok(lhs);
            }
        }
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        let base = self.atom()?;
        if self.eat('^') {
            let e = self.exponent_int()?;
            return Ok(Expr::pow(base, e));
        }
        Ok(base)
    }

    fn signed_int(&mut self) -> Result<BigInt, ParseError> {
        let neg = *self.peek() == Tok::Sym('-') && matches!(self.peek_at(1), Tok::Int(_));
        if neg {
            self.bump();
        }
        match self.peek().clone() {
            Tok::Int(n) => {
                self.bump();
                Ok(if neg { -n } else { n })
            }
            _ => self.fail(&["integer"]),
        }
    }

    fn exponent_int(&mut self) -> Result<i64, ParseError> {
        let braced = self.eat('{');
        let at = self.offset();
        let n = self.signed_int()?;
        if braced {
            self.expect('}')?;
        }
        match n.to_i64() {
            Some(e) if e.abs() <= MAX_EXPONENT => Ok(e),
            _ => Err(ParseError::Syntax {
                offset: at,
                expected: vec![format!("exponent of size at most {MAX_EXPONENT}")],
                found: format!("integer {n}"),
            }),
        }
    }

    fn enter(&mut self) -> Result<(), ParseError> {
        self.depth += 1;
        if self.depth > MAX_DEPTH {
            return self.fail(&["shallower nesting"]);
        }
        Ok(())
    }

    /// `n` or `n/d` with `d` a positive integer literal.
    fn rational(&mut self) -> Result<Coef, ParseError> {
        let n = self.signed_int()?;
        if *self.peek() == Tok::Sym('/') {
            if let Tok::Int(d) = self.peek_at(1).clone() {
                self.bump();
                if d.is_zero() {
                    return self.fail(&["nonzero integer"]);
                }
                self.bump();
                return Ok(Coef::new(n, d));
            }
        }
        Ok(Coef::from_integer(n))
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        let start = self.offset();
        match self.peek().clone() {
            Tok::Ident(name) => match name.as_str() {
                "Pi" | "psi" | "phi" => {
                    self.bump();
                    let args = self.arguments(&name, start, |p| p.qarg())?;
                    let k = args[0];
                    Ok(match name.as_str() {
                        "Pi" => Expr::Pi(k),
                        "psi" => Expr::Psi(k),
                        _ => Expr::Phi(k),
                    })
                }
                "sqrt" => {
                    self.bump();
                    let mut args = self.arguments(&name, start, |p| p.expr())?;
                    Ok(Expr::sqrt(args.remove(0)))
                }
                "q" => {
                    self.bump();
                    if !self.eat('^') {
                        return Ok(Expr::QPow(Coef::from_integer(1.into())));
                    }
                    let at = self.offset();
                    let r = if self.eat('{') {
                        let r = self.rational()?;
                        self.expect('}')?;
                        r
                    } else {
                        Coef::from_integer(self.signed_int()?)
                    };
                    let four = r.clone() * Coef::from_integer(4.into());
                    if !four.is_integer() {
                        return Err(ParseError::QPowNotQuarterIntegral {
                            offset: start,
                            exponent: r.to_string(),
                        });
                    }
                    if four.to_integer().abs() > MAX_EXPONENT.into() {
                        return Err(ParseError::Syntax {
                            offset: at,
                            expected: vec![format!("q-exponent of size at most {}", MAX_EXPONENT / 4)],
                            found: r.to_string(),
                        });
                    }
                    Ok(Expr::QPow(r))
                }
                _ => self.fail(ATOM_START),
            },
            Tok::Int(_) => Ok(Expr::Const(self.rational()?)),
            Tok::Sym('-') if matches!(self.peek_at(1), Tok::Int(_)) => Ok(Expr::Const(self.rational()?)),
            Tok::Sym('(') => {
                self.bump();
                self.enter()?;
                let e = self.expr()?;
                self.expect(')')?;
                self.depth -= 1;
                Ok(e)
            }
            _ => self.fail(ATOM_START),
        }
    }

    /// `'(' arg (',' arg)* ')'`, requiring exactly one argument.
    fn arguments<T>(
        &mut self,
        name: &str,
        start: usize,
        mut item: impl FnMut(&mut Self) -> Result<T, ParseError>,
    ) -> Result<Vec<T>, ParseError> {
        self.expect('(')?;
        self.enter()?;
        let mut args = Vec::new();
        if !self.eat(')') {
            loop {
                args.push(item(self)?);
                if self.eat(')') {
                    break;
                }
                if !self.eat(',') {
                    return self.fail(&["','", "')'"]);
                }
            }
        }
        self.depth -= 1;
        if args.len() != 1 {
            return Err(ParseError::Arity {
                offset: start,
                name: name.to_string(),
                expected: 1,
                found: args.len(),
            });
        }
        Ok(args)
    }

    fn qarg(&mut self) -> Result<u32, ParseError> {
        match self.peek() {
            Tok::Ident(s) if s == "q" => {
                self.bump();
            }
            _ => return self.fail(&["q"]),
        }
        if !self.eat('^') {
            return Ok(1);
        }
        let braced = self.eat('{');
        let k = match self.peek().clone() {
            Tok::Int(n) if n.is_positive() => n.to_u32(),
            _ => None,
        };
        let Some(k) = k else {
            return self.fail(&["positive integer"]);
        };
        self.bump();
        if braced {
            self.expect('}')?;
        }
        Ok(k)
    }
}

/// Parses one DSL expression.
pub fn parse(src: &str) -> Result<Expr, ParseError> {
    let mut p = Parser {
        toks: lex(src)?,
        pos: 0,
        depth: 0,
    };
    let e = p.expr()?;
    if *p.peek() != Tok::End {
        return p.fail(&["'+'", "'-'", "'*'", "'/'", "'^'", "end of input"]);
    }
    Ok(e)
}
