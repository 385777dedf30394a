//! Scalar literal parser.
//!
//! Accepts integers, fractions `a/b`, and expressions in `t` built from
//! `+ - * / ^` and parentheses, e.g. `3 - 2*t^2` or `(1 + t)/(2*t)`.
//! Exponents are non-negative integer literals. Decimals are rejected.

use num_bigint::BigInt;
use num_rational::BigRational;

use super::ValuedScalar;

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("unexpected character {0:?} at offset {1}")]
    UnexpectedChar(char, usize),
    #[error("unexpected end of input")]
    UnexpectedEnd,
    #[error("trailing input at offset {0}")]
    Trailing(usize),
    #[error("decimal literals are not exact; write a fraction instead")]
    Decimal,
    #[error("the variable t is only allowed over the t-adic field")]
    VariableNotAllowed,
    #[error("division by zero")]
    DivisionByZero,
    #[error("exponent too large")]
    ExponentTooLarge,
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    allow_t: bool,
}

pub(super) fn parse_scalar(s: &str, allow_t: bool) -> Result<ValuedScalar, ParseError> {
    let mut p = Parser {
        src: s.as_bytes(),
        pos: 0,
        allow_t,
    };
    let v = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(ParseError::Trailing(p.pos));
    }
    Ok(v.simplify())
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<ValuedScalar, ParseError> {
        let mut acc = self.term()?;
        while let Some(c @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = if c == b'+' { acc + rhs } else { acc - rhs };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<ValuedScalar, ParseError> {
        let mut acc = self.unary()?;
        while let Some(c @ (b'*' | b'/')) = self.peek() {
            self.pos += 1;
            let rhs = self.unary()?;
            acc = if c == b'*' {
                acc * rhs
            } else {
                acc.checked_div(&rhs).ok_or(ParseError::DivisionByZero)?
            };
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<ValuedScalar, ParseError> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(-self.unary()?)
            }
            Some(b'+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<ValuedScalar, ParseError> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let start = self.pos;
            let digits = self.digits();
            if digits.is_empty() {
                return match self.src.get(start) {
                    Some(&c) => Err(ParseError::UnexpectedChar(c as char, start)),
                    None => Err(ParseError::UnexpectedEnd),
                };
            }
            let k: u32 = digits.parse().map_err(|_| ParseError::ExponentTooLarge)?;
            if k > 1000 {
                return Err(ParseError::ExponentTooLarge);
            }
            return Ok(base.pow(k));
        }
        Ok(base)
    }

    fn digits(&mut self) -> String {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()
    }

    fn atom(&mut self) -> Result<ValuedScalar, ParseError> {
        match self.peek() {
            None => Err(ParseError::UnexpectedEnd),
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                match self.peek() {
                    Some(b')') => {
                        self.pos += 1;
                        Ok(v)
                    }
                    Some(c) => Err(ParseError::UnexpectedChar(c as char, self.pos)),
                    None => Err(ParseError::UnexpectedEnd),
                }
            }
            Some(b't') => {
                if !self.allow_t {
                    return Err(ParseError::VariableNotAllowed);
                }
                self.pos += 1;
                Ok(ValuedScalar::t())
            }
            Some(c) if c.is_ascii_digit() => {
                let digits = self.digits();
                if self.src.get(self.pos) == Some(&b'.') {
                    return Err(ParseError::Decimal);
                }
                let n: BigInt = digits.parse().expect("ascii digits");
                Ok(ValuedScalar::Rational(BigRational::from_integer(n)))
            }
            Some(c) => Err(ParseError::UnexpectedChar(c as char, self.pos)),
        }
    }
}
