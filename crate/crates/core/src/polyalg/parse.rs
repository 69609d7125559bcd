//! Recursive-descent parser for polynomial text.
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := '-' factor | atom ('^' INT)?
//! atom   := INT ['/' INT] | IDENT | '(' expr ')'
//! ```

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;

use super::poly::{Polynomial, Rational, Ring};
use crate::error::{Error, ParseError, Result};

pub fn parse_poly(src: &str, ring: &Arc<Ring>) -> Result<Polynomial> {
    let mut p = Parser { src, pos: 0, ring };
    let out = p.expr()?;
    p.skip_ws();
    if p.pos < src.len() {
        return Err(p.err("unexpected trailing input").into());
    }
    Ok(out)
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
    ring: &'a Arc<Ring>,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> ParseError {
        ParseError::new(self.pos, msg)
    }

    fn skip_ws(&mut self) {
        while self.src[self.pos..].starts_with(|c: char| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.as_bytes().get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                -&self.term()?
            }
            Some(b'+') => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial> {
        if self.peek() == Some(b'-') {
            self.pos += 1;
            return Ok(-&self.factor()?);
        }
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let at = self.pos;
            let e = self.integer()?;
            let e: u32 = e.try_into().map_err(|_| ParseError::new(at, "exponent too large"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<BigInt, ParseError> {
        self.skip_ws();
        let start = self.pos;
        let len = self.src[start..].bytes().take_while(u8::is_ascii_digit).count();
        if len == 0 {
            return Err(self.err("expected an integer"));
        }
        self.pos += len;
        Ok(self.src[start..self.pos].parse().expect("digits"))
    }

    fn atom(&mut self) -> Result<Polynomial> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'").into());
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.integer()?;
                let mut value = Rational::from_integer(num);
                if self.peek() == Some(b'/') {
                    self.pos += 1;
                    self.skip_ws();
                    let at = self.pos;
                    let den = self.integer()?;
                    if den.is_zero() {
                        return Err(ParseError::new(at, "zero denominator").into());
                    }
                    value /= Rational::from_integer(den);
                }
                Ok(Polynomial::constant(self.ring, value))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                let len = self.src[start..]
                    .bytes()
                    .take_while(|b| b.is_ascii_alphanumeric() || *b == b'_')
                    .count();
                self.pos += len;
                let name = &self.src[start..self.pos];
                Polynomial::var_named(self.ring, name).ok_or_else(|| Error::UnknownVariable {
                    name: name.to_string(),
                    position: start,
                })
            }
            Some(_) => Err(self.err("expected a number, variable or '('").into()),
            None => Err(self.err("unexpected end of input").into()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_worked_example_forms() {
        let r = Ring::new(["x", "y", "f", "g", "h"]);
        let p = parse_poly("f*g - h^2", &r).unwrap();
        assert_eq!(p.to_string(), "f*g - h^2");
        assert!(parse_poly("0", &r).unwrap().is_zero());
        let q = parse_poly("x^2*g + y^2*f - 2*x*y*h", &r).unwrap();
        let back = parse_poly(&q.to_string(), &r).unwrap();
        assert_eq!(q, back);
        assert_eq!(q.len(), 3);
    }

    #[test]
    fn rationals_and_unary_minus() {
        let r = Ring::new(["x", "y"]);
        let p = parse_poly("-1/2*x + (x - y)^2 - -y", &r).unwrap();
        assert_eq!(p.to_string(), "x^2 - 2*x*y + y^2 - 1/2*x + y");
        assert_eq!(parse_poly(&p.to_string(), &r).unwrap(), p);
        assert_eq!(parse_poly("3/6", &r).unwrap().to_string(), "1/2");
    }

    #[test]
    fn errors_are_positioned() {
        let r = Ring::new(["x", "y"]);
        match parse_poly("x + z", &r) {
            Err(Error::UnknownVariable { name, position }) => {
                assert_eq!(name, "z");
                assert_eq!(position, 4);
            }
            other => panic!("{other:?}"),
        }
        match parse_poly("x * (y + 1", &r) {
            Err(Error::Parse(e)) => assert_eq!(e.position, 10),
            other => panic!("{other:?}"),
        }
        assert!(parse_poly("x +", &r).is_err());
        assert!(parse_poly("1/0", &r).is_err());
        assert!(parse_poly("x y", &r).is_err());
    }
}
