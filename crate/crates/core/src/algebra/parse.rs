//! Polynomial expressions such as `x^2*y - 3/2*z + (x+y)^2`.

use num_bigint::BigInt;

use super::poly::Polynomial;
use super::ring::GradedRing;
use crate::error::{Error, Result};

/// A syntax error at a byte offset of the input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyParseError {
    pub offset: usize,
    pub message: String,
}

impl std::fmt::Display for PolyParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "at offset {}: {}", self.offset, self.message)
    }
}

struct Parser<'a> {
    ring: &'a GradedRing,
    src: &'a [u8],
    pos: usize,
}

type PResult<T> = std::result::Result<T, PolyParseError>;

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> PResult<T> {
        Err(PolyParseError { offset: self.pos, message: msg.into() })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> PResult<Polynomial> {
        let order = self.ring.order().clone();
        let mut acc = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                self.term()?.neg()
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
                    acc = acc.add(&self.term()?, &order);
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?, &order);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> PResult<Polynomial> {
        let mut acc = self.power()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            let rhs = self.power()?;
            acc = acc.mul(&rhs, self.ring.order());
        }
        Ok(acc)
    }

    fn power(&mut self) -> PResult<Polynomial> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let start = self.pos;
            let n = self.integer()?;
            let e: u32 =
                n.try_into().map_err(|_| PolyParseError { offset: start, message: "exponent out of range".into() })?;
            let mut acc = self.ring.one();
            for _ in 0..e {
                acc = acc.mul(&base, self.ring.order());
            }
            return Ok(acc);
        }
        Ok(base)
    }

    fn integer(&mut self) -> PResult<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected an integer");
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(s.parse().unwrap())
    }

    fn atom(&mut self) -> PResult<Polynomial> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return self.err("expected ')'");
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                let num = self.integer()?;
                let mut den = BigInt::from(1);
                if self.peek() == Some(b'/') {
                    self.pos += 1;
                    den = self.integer()?;
                }
                let s = self
                    .ring
                    .field()
                    .fraction(&num, &den)
                    .map_err(|e| PolyParseError { offset: start, message: e.to_string() })?;
                Ok(self.ring.constant(s))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                match self.ring.var_index(name) {
                    Some(i) => Ok(self.ring.var(i)),
                    None => Err(PolyParseError { offset: start, message: format!("unknown variable '{name}'") }),
                }
            }
            Some(_) => self.err("unexpected character"),
            None => self.err("unexpected end of input"),
        }
    }
}

/// Parses a polynomial over the variables of `ring`; the result is not reduced.
pub fn parse_polynomial(ring: &GradedRing, src: &str) -> std::result::Result<Polynomial, PolyParseError> {
    let mut p = Parser { ring, src: src.as_bytes(), pos: 0 };
    let e = p.expr()?;
    if p.peek().is_some() {
        return p.err("trailing input");
    }
    Ok(e)
}

impl GradedRing {
    /// Parses and reduces a polynomial; see [`parse_polynomial`].
    pub fn parse(&self, src: &str) -> Result<Polynomial> {
        let f = parse_polynomial(self, src).map_err(|e| Error::InvalidArgument(e.to_string()))?;
        Ok(self.nf(&f))
    }
}
