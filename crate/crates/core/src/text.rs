//! Parser for the polynomial text format.
//!
//! ```text
//! poly   := ['-'] term (('+' | '-') term)*
//! term   := coef ['*' mono] | mono
//! coef   := digits ['/' digits]
//! mono   := factor ('*' factor)*
//! factor := ('x' | 'y') digits ['^' digits]
//! ```
//!
//! Whitespace between tokens is ignored. The printer lives on
//! `Polynomial`'s `Display` impl.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::polynomial::Polynomial;
use crate::rational::Rational;

pub(crate) struct RawFactor {
    pub is_y: bool,
    pub index: usize,
    pub exp: u32,
    pub position: usize,
}

pub(crate) struct RawTerm {
    pub coef: Rational,
    pub factors: Vec<RawFactor>,
}

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse { position: self.pos, message: message.into() })
    }

    fn digits(&mut self) -> Result<&'a str> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected digits");
        }
        // ASCII digits only, so this slice is valid UTF-8.
        Ok(std::str::from_utf8(&self.bytes[start..self.pos]).unwrap())
    }

    fn small_number(&mut self) -> Result<u64> {
        let start = self.pos;
        let s = self.digits()?;
        s.parse::<u64>()
            .map_err(|_| Error::Parse { position: start, message: format!("number {s} too large") })
    }

    fn coefficient(&mut self) -> Result<Rational> {
        let num: BigInt = self.digits()?.parse().expect("digits parse as an integer");
        if self.eat(b'/') {
            let at = self.pos;
            let den: BigInt = self.digits()?.parse().expect("digits parse as an integer");
            if den.is_zero() {
                return Err(Error::Parse { position: at, message: "zero denominator".into() });
            }
            Ok(Rational::new(num, den))
        } else {
            Ok(Rational::from_integer(num))
        }
    }

    fn factor(&mut self) -> Result<RawFactor> {
        let position = self.pos;
        let is_y = match self.peek() {
            Some(b'x') => false,
            Some(b'y') => true,
            _ => return self.err("expected variable x<i> or y<i>"),
        };
        self.pos += 1;
        let index = self.small_number()? as usize;
        let exp = if self.eat(b'^') { self.small_number()? as u32 } else { 1 };
        Ok(RawFactor { is_y, index, exp, position })
    }

    fn term(&mut self) -> Result<RawTerm> {
        let mut coef = Rational::one();
        let mut factors = Vec::new();
        match self.peek() {
            Some(b) if b.is_ascii_digit() => {
                coef = self.coefficient()?;
                if !self.eat(b'*') {
                    return Ok(RawTerm { coef, factors });
                }
                factors.push(self.factor()?);
            }
            Some(b'x') | Some(b'y') => factors.push(self.factor()?),
            Some(_) => return self.err("expected a term"),
            None => return self.err("unexpected end of input"),
        }
        while self.eat(b'*') {
            factors.push(self.factor()?);
        }
        Ok(RawTerm { coef, factors })
    }
}

pub(crate) fn parse_terms(s: &str) -> Result<Vec<RawTerm>> {
    let mut cur = Cursor { bytes: s.as_bytes(), pos: 0 };
    let mut terms = Vec::new();
    let mut negative = cur.eat(b'-');
    loop {
        let mut t = cur.term()?;
        if negative {
            t.coef = -t.coef;
        }
        terms.push(t);
        negative = match cur.peek() {
            None => break,
            Some(b'+') => false,
            Some(b'-') => true,
            Some(_) => return cur.err("expected '+' or '-'"),
        };
        cur.pos += 1;
    }
    Ok(terms)
}

pub(crate) fn assemble(raw: Vec<RawTerm>, d: usize) -> Result<Polynomial> {
    let mut terms = Vec::with_capacity(raw.len());
    for t in raw {
        let mut m = Monomial::one(d);
        for f in t.factors {
            if f.index == 0 || f.index > d {
                return Err(Error::Parse {
                    position: f.position,
                    message: Error::IndexOutOfRange { index: f.index, d }.to_string(),
                });
            }
            let slot = if f.is_y { &mut m.b_mut()[f.index - 1] } else { &mut m.a_mut()[f.index - 1] };
            *slot += f.exp;
        }
        terms.push((m, t.coef));
    }
    Ok(Polynomial::from_terms(d, terms))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_examples() {
        let u = Polynomial::parse("x1*y2 - x2*y1").unwrap();
        assert_eq!(u.d(), 2);
        assert_eq!(u.len(), 2);
        let f = Polynomial::parse("-5/2*x1^2*y3 + 3").unwrap();
        assert_eq!(f.d(), 3);
        assert_eq!(f.to_string(), "-5/2*x1^2*y3 + 3");
        assert_eq!(Polynomial::parse("0").unwrap(), Polynomial::zero(1));
        assert_eq!(Polynomial::parse("x1*x1").unwrap(), Polynomial::parse("x1^2").unwrap());
        assert_eq!(Polynomial::parse("2/4*y1").unwrap().to_string(), "1/2*y1");
    }

    #[test]
    fn rejects_malformed_input() {
        for bad in ["", "x", "x1 +", "3/0*x1", "x1 y1", "z1", "x1^", "*x1", "x1 + + y1"] {
            assert!(Polynomial::parse(bad).is_err(), "accepted {bad:?}");
        }
        assert!(Polynomial::parse_with_dim("x3", 2).is_err());
        assert!(Polynomial::parse_with_dim("x0", 2).is_err());
    }
}
