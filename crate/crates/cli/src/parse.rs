//! Integer polynomials in `x` written as sums of `c`, `x^k` and `c*x^k`.
//!
//! ```text
//! poly := sign? term (sign term)*
//! term := int | int '*' mono | mono
//! mono := 'x' ('^' int)?
//! ```
//!
//! Whitespace may appear between any two tokens. Repeated powers add up.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use ore_engine::IntPolynomial;
use thiserror::Error;

/// Positions are 0-based character offsets into the input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("{message} at position {position}")]
    Syntax { position: usize, message: String },
    #[error("non-integer coefficient at position {position}")]
    NonIntegerCoefficient { position: usize },
}

/// Exponents above this are rejected rather than allocated.
const MAX_DEGREE: usize = 100_000;

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    source: &'a str,
}

pub fn parse_poly(text: &str) -> Result<IntPolynomial, ParseError> {
    let mut parser = Parser {
        chars: text.chars().collect(),
        pos: 0,
        source: text,
    };
    parser.poly()
}

impl Parser<'_> {
    fn syntax<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError::Syntax {
            position: self.pos,
            message: message.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn poly(&mut self) -> Result<IntPolynomial, ParseError> {
        if self.peek().is_none() {
            return self.syntax(if self.source.is_empty() {
                "empty input"
            } else {
                "no terms"
            });
        }
        let mut coeffs: Vec<BigInt> = Vec::new();
        let mut first = true;
        loop {
            let negative = match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    false
                }
                Some('-') => {
                    self.pos += 1;
                    true
                }
                None => break,
                Some(_) if first => false,
                Some(c) => return self.syntax(format!("expected '+' or '-', found '{c}'")),
            };
            first = false;
            let (mut c, k) = self.term()?;
            if negative {
                c = -c;
            }
            if coeffs.len() <= k {
                coeffs.resize(k + 1, BigInt::zero());
            }
            coeffs[k] += c;
        }
        Ok(IntPolynomial::new(coeffs))
    }

    fn term(&mut self) -> Result<(BigInt, usize), ParseError> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let c = self.integer()?;
                if self.eat('*') {
                    Ok((c, self.mono()?))
                } else if self.peek() == Some('x') {
                    self.syntax("expected '*' between coefficient and x")
                } else {
                    Ok((c, 0))
                }
            }
            Some('x') => Ok((BigInt::one(), self.mono()?)),
            Some('.') => Err(ParseError::NonIntegerCoefficient { position: self.pos }),
            Some(c) => self.syntax(format!("expected a term, found '{c}'")),
            None => self.syntax("expected a term, found end of input"),
        }
    }

    fn integer(&mut self) -> Result<BigInt, ParseError> {
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if matches!(self.chars.get(self.pos), Some('.' | '/' | 'e' | 'E')) {
            return Err(ParseError::NonIntegerCoefficient { position: start });
        }
        let digits: String = self.chars[start..self.pos].iter().collect();
        Ok(digits.parse().unwrap())
    }

    fn mono(&mut self) -> Result<usize, ParseError> {
        if !self.eat('x') {
            return match self.peek() {
                Some(c) => self.syntax(format!("expected 'x', found '{c}'")),
                None => self.syntax("expected 'x', found end of input"),
            };
        }
        if !self.eat('^') {
            return Ok(1);
        }
        if !self.peek().is_some_and(|c| c.is_ascii_digit()) {
            return self.syntax("expected a non-negative integer exponent");
        }
        let start = self.pos;
        let k = self.integer()?;
        match usize::try_from(k) {
            Ok(k) if k <= MAX_DEGREE => Ok(k),
            _ => Err(ParseError::Syntax {
                position: start,
                message: format!("exponent exceeds {MAX_DEGREE}"),
            }),
        }
    }
}
