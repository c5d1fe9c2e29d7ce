//! Text grammar for polynomials and fractions.
//!
//! ```text
//! fraction := sum | '(' sum ')' '/' '(' sum ')'
//! sum      := ['-'] term (('+' | '-') term)*
//! term     := factor ('*' factor)*
//! factor   := integer | variable ['^' integer]
//! variable := 'A' | 'X_e' digits | 'L' digits
//! ```
//!
//! Printing produces terms in ascending monomial order ("3*A^-2 + A^4");
//! parse ∘ print is the identity on canonical forms.

use num_bigint::BigInt;
use num_traits::One;

use super::frac::Frac;
use super::poly::{Mono, Var, XPoly};
use crate::error::RingError;

struct Lexer<'a> {
    input: &'a [u8],
    pos: usize,
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Var(Var),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    Slash,
    End,
}

impl<'a> Lexer<'a> {
    fn new(s: &'a str) -> Self {
        Lexer {
            input: s.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.input.len() && self.input[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn next(&mut self) -> Result<Tok, RingError> {
        self.skip_ws();
        if self.pos >= self.input.len() {
            return Ok(Tok::End);
        }
        let c = self.input[self.pos];
        self.pos += 1;
        match c {
            b'+' => Ok(Tok::Plus),
            b'-' => Ok(Tok::Minus),
            b'*' => Ok(Tok::Star),
            b'^' => Ok(Tok::Caret),
            b'(' => Ok(Tok::LParen),
            b')' => Ok(Tok::RParen),
            b'/' => Ok(Tok::Slash),
            b'0'..=b'9' => {
                let start = self.pos - 1;
                while self.pos < self.input.len() && self.input[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let s = std::str::from_utf8(&self.input[start..self.pos]).unwrap();
                Ok(Tok::Int(s.parse().unwrap()))
            }
            b'A' => Ok(Tok::Var(Var::A)),
            b'X' => {
                if self.input.get(self.pos) == Some(&b'_') && self.input.get(self.pos + 1) == Some(&b'e')
                {
                    self.pos += 2;
                    let start = self.pos;
                    while self.pos < self.input.len() && self.input[self.pos].is_ascii_digit() {
                        self.pos += 1;
                    }
                    if start == self.pos {
                        return Err(RingError::Parse(format!(
                            "expected edge id after X_e at byte {}",
                            self.pos
                        )));
                    }
                    let s = std::str::from_utf8(&self.input[start..self.pos]).unwrap();
                    Ok(Tok::Var(Var::X(s.parse().map_err(|_| {
                        RingError::Parse("edge id overflow".into())
                    })?)))
                } else {
                    Err(RingError::Parse(format!(
                        "expected X_e<id> at byte {}",
                        self.pos
                    )))
                }
            }
            b'L' => {
                let start = self.pos;
                while self.pos < self.input.len() && self.input[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                if start == self.pos {
                    return Err(RingError::Parse(format!(
                        "expected symbol index after L at byte {}",
                        self.pos
                    )));
                }
                let s = std::str::from_utf8(&self.input[start..self.pos]).unwrap();
                Ok(Tok::Var(Var::Lam(s.parse().map_err(|_| {
                    RingError::Parse("lambda index overflow".into())
                })?)))
            }
            _ => Err(RingError::Parse(format!(
                "unexpected byte '{}' at {}",
                c as char,
                self.pos - 1
            ))),
        }
    }

    fn peek(&mut self) -> Result<Tok, RingError> {
        let save = self.pos;
        let t = self.next();
        self.pos = save;
        t
    }
}

struct Parser<'a> {
    lex: Lexer<'a>,
}

impl<'a> Parser<'a> {
    fn parse_signed_int(&mut self) -> Result<BigInt, RingError> {
        match self.lex.next()? {
            Tok::Int(n) => Ok(n),
            Tok::Minus => match self.lex.next()? {
                Tok::Int(n) => Ok(-n),
                t => Err(RingError::Parse(format!("expected integer, got {:?}", t))),
            },
            t => Err(RingError::Parse(format!("expected integer, got {:?}", t))),
        }
    }

    fn parse_factor(&mut self) -> Result<XPoly, RingError> {
        match self.lex.next()? {
            Tok::Int(n) => Ok(XPoly::constant(n)),
            Tok::Var(v) => {
                let exp = if self.lex.peek()? == Tok::Caret {
                    self.lex.next()?;
                    let e = self.parse_signed_int()?;
                    i64::try_from(e).map_err(|_| RingError::Parse("exponent overflow".into()))?
                } else {
                    1
                };
                Ok(XPoly::monomial(BigInt::one(), Mono::var(v, exp)))
            }
            Tok::LParen => {
                let p = self.parse_sum()?;
                match self.lex.next()? {
                    Tok::RParen => Ok(p),
                    t => Err(RingError::Parse(format!("expected ')', got {:?}", t))),
                }
            }
            t => Err(RingError::Parse(format!("unexpected token {:?}", t))),
        }
    }

    fn parse_term(&mut self) -> Result<XPoly, RingError> {
        let mut p = self.parse_factor()?;
        while self.lex.peek()? == Tok::Star {
            self.lex.next()?;
            p = p.mul(&self.parse_factor()?);
        }
        Ok(p)
    }

    fn parse_sum(&mut self) -> Result<XPoly, RingError> {
        let mut neg = false;
        if self.lex.peek()? == Tok::Minus {
            self.lex.next()?;
            neg = true;
        }
        let mut p = self.parse_term()?;
        if neg {
            p = p.neg();
        }
        loop {
            match self.lex.peek()? {
                Tok::Plus => {
                    self.lex.next()?;
                    p = p.add(&self.parse_term()?);
                }
                Tok::Minus => {
                    self.lex.next()?;
                    p = p.sub(&self.parse_term()?);
                }
                _ => return Ok(p),
            }
        }
    }
}

/// Parse a Laurent polynomial.
pub fn parse_poly(s: &str) -> Result<XPoly, RingError> {
    let mut p = Parser { lex: Lexer::new(s) };
    let out = p.parse_sum()?;
    match p.lex.next()? {
        Tok::End => Ok(out),
        t => Err(RingError::Parse(format!("trailing input: {:?}", t))),
    }
}

/// Parse a fraction: either a bare sum or `(num)/(den)`.
pub fn parse_frac(s: &str) -> Result<Frac, RingError> {
    let mut p = Parser { lex: Lexer::new(s) };
    let num = p.parse_sum()?;
    match p.lex.next()? {
        Tok::End => Frac::new(num, XPoly::one()),
        Tok::Slash => {
            let den = match p.lex.next()? {
                Tok::LParen => {
                    let d = p.parse_sum()?;
                    match p.lex.next()? {
                        Tok::RParen => d,
                        t => return Err(RingError::Parse(format!("expected ')', got {:?}", t))),
                    }
                }
                Tok::Int(n) => XPoly::constant(n),
                Tok::Var(v) => XPoly::monomial(BigInt::one(), Mono::var(v, 1)),
                t => return Err(RingError::Parse(format!("expected denominator, got {:?}", t))),
            };
            match p.lex.next()? {
                Tok::End => Frac::new(num, den),
                t => Err(RingError::Parse(format!("trailing input: {:?}", t))),
            }
        }
        t => Err(RingError::Parse(format!("trailing input: {:?}", t))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::frac::quantum_poly;

    #[test]
    fn parse_examples() {
        let p = parse_poly("3*A^-2 + A^4").unwrap();
        assert_eq!(format!("{}", p), "3*A^-2 + A^4");
        let f = parse_frac("(X_e1^2 - A^2)/(X_e2 - X_e2^-1)").unwrap();
        let txt = format!("{}", f);
        let f2 = parse_frac(&txt).unwrap();
        assert_eq!(f, f2);
    }

    #[test]
    fn print_parse_roundtrip_on_canonical_forms() {
        let cases = [
            Frac::from_poly(quantum_poly(3)),
            Frac::new(quantum_poly(2), quantum_poly(1)).unwrap(),
            Frac::new(
                XPoly::x_pow(1, 2).sub(&XPoly::a_pow(2)),
                XPoly::x_pow(2, 1).sub(&XPoly::x_pow(2, -1)),
            )
            .unwrap(),
            Frac::zero(),
            Frac::int(-7),
        ];
        for f in &cases {
            let s = format!("{}", f);
            let g = parse_frac(&s).unwrap();
            assert_eq!(f, &g, "roundtrip failed on {}", s);
        }
    }
}
