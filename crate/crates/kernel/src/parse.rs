//! Parser for polynomial expressions over a named ring.
//!
//! Grammar (whitespace ignored, multiplication always explicit):
//!
//! ```text
//! expr   := ['+' | '-'] term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := atom ['^' integer]
//! atom   := integer ['/' integer] | variable | '(' expr ')'
//! ```

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{KernelError, Result};
use crate::poly::{Coeff, Polynomial};
use crate::ring::{Monomial, RingContext};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Sym(char),
}

struct Lexer<'a> {
    chars: std::iter::Peekable<std::str::CharIndices<'a>>,
    src: &'a str,
}

fn position(src: &str, offset: usize) -> (usize, usize) {
    let before = &src[..offset];
    let line = before.matches('\n').count() + 1;
    let column = before.rsplit('\n').next().unwrap().chars().count() + 1;
    (line, column)
}

fn error_at(src: &str, offset: usize, message: impl Into<String>) -> KernelError {
    let (line, column) = position(src, offset);
    KernelError::Parse {
        line,
        column,
        message: message.into(),
    }
}

impl<'a> Lexer<'a> {
    fn tokens(src: &'a str) -> Result<Vec<(usize, Tok)>> {
        let mut lx = Lexer {
            chars: src.char_indices().peekable(),
            src,
        };
        let mut out = Vec::new();
        while let Some(&(off, c)) = lx.chars.peek() {
            if c.is_whitespace() {
                lx.chars.next();
            } else if c.is_ascii_digit() {
                let mut end = off;
                while let Some(&(o, d)) = lx.chars.peek() {
                    if !d.is_ascii_digit() {
                        break;
                    }
                    end = o + d.len_utf8();
                    lx.chars.next();
                }
                let n: BigInt = src[off..end].parse().expect("digits");
                out.push((off, Tok::Int(n)));
            } else if c.is_alphabetic() || c == '_' {
                let mut end = off;
                while let Some(&(o, d)) = lx.chars.peek() {
                    if !(d.is_alphanumeric() || d == '_') {
                        break;
                    }
                    end = o + d.len_utf8();
                    lx.chars.next();
                }
                out.push((off, Tok::Ident(src[off..end].to_string())));
            } else if "+-*/^()".contains(c) {
                lx.chars.next();
                out.push((off, Tok::Sym(c)));
            } else {
                return Err(error_at(lx.src, off, format!("unexpected character {c:?}")));
            }
        }
        Ok(out)
    }
}

struct Parser<'a> {
    src: &'a str,
    toks: Vec<(usize, Tok)>,
    pos: usize,
    ring: &'a RingContext,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.1)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.src.len(), |t| t.0)
    }

    fn fail<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(error_at(self.src, self.offset(), msg))
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut neg = false;
        if self.eat('-') {
            neg = true;
        } else {
            self.eat('+');
        }
        let first = self.term()?;
        let mut acc = if neg { -&first } else { first };
        loop {
            if self.eat('+') {
                acc = &acc + &self.term()?;
            } else if self.eat('-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        while self.eat('*') {
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if self.eat('^') {
            match self.peek().cloned() {
                Some(Tok::Int(n)) => {
                    let Ok(k) = u32::try_from(&n) else {
                        return self.fail("exponent too large");
                    };
                    self.pos += 1;
                    Ok(base.pow(k))
                }
                _ => self.fail("expected a nonnegative integer exponent"),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Polynomial> {
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                if self.eat('/') {
                    match self.peek().cloned() {
                        Some(Tok::Int(d)) if !d.is_zero() => {
                            self.pos += 1;
                            Ok(Polynomial::constant(Coeff::new(n, d)))
                        }
                        Some(Tok::Int(_)) => self.fail("division by zero"),
                        _ => self.fail("expected an integer denominator"),
                    }
                } else {
                    Ok(Polynomial::constant(Coeff::from_integer(n)))
                }
            }
            Some(Tok::Ident(name)) => match self.ring.var_index(&name) {
                Some(i) => {
                    self.pos += 1;
                    Ok(Polynomial::monomial(
                        Monomial::var(i),
                        Coeff::from_integer(1.into()),
                    ))
                }
                None => self.fail(format!("unknown variable {name}")),
            },
            Some(Tok::Sym('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return self.fail("expected ')'");
                }
                Ok(e)
            }
            Some(t) => self.fail(format!("unexpected token {}", describe(&t))),
            None => self.fail("unexpected end of input"),
        }
    }
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Int(n) => n.to_string(),
        Tok::Ident(s) => s.clone(),
        Tok::Sym(c) => format!("'{c}'"),
    }
}

/// Parse a polynomial in the variables of `ring`.
pub fn parse_polynomial(src: &str, ring: &RingContext) -> Result<Polynomial> {
    let toks = Lexer::tokens(src)?;
    let mut p = Parser {
        src,
        toks,
        pos: 0,
        ring,
    };
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        let t = describe(&p.toks[p.pos].1);
        return p.fail(format!("unexpected token {t}"));
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring() -> crate::ring::Ring {
        RingContext::standard(&["x", "y", "z"]).unwrap()
    }

    #[test]
    fn parses_and_normalizes() {
        let r = ring();
        let p = parse_polynomial(" -(x + y)^2 + 2*x*y + 1/2*z ", &r).unwrap();
        assert_eq!(p.display(&r), "-x^2 - y^2 + 1/2*z");
    }

    #[test]
    fn rejects_implicit_multiplication() {
        let err = parse_polynomial("2x", &ring()).unwrap_err();
        assert!(matches!(err, KernelError::Parse { column: 2, .. }));
    }

    #[test]
    fn reports_line_and_column() {
        let err = parse_polynomial("x +\n  w", &ring()).unwrap_err();
        assert_eq!(
            err,
            KernelError::Parse {
                line: 2,
                column: 3,
                message: "unknown variable w".into()
            }
        );
    }

    #[test]
    fn rejects_zero_denominator_and_dangling_operator() {
        assert!(parse_polynomial("1/0", &ring()).is_err());
        assert!(parse_polynomial("x +", &ring()).is_err());
        assert!(parse_polynomial("x)", &ring()).is_err());
    }
}
