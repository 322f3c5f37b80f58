use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{ExponentVector, MultiPoly, PolyError};
use crate::arith::Rational;

/// Parses the polynomial text grammar:
///
/// ```text
/// poly  := ['-'] term (('+' | '-') term)*
/// term  := coef | coef '*' mono | mono
/// mono  := var ('*' var)*
/// var   := 'x' <index> ['^' <exponent>]
/// coef  := <int> ['/' <int>]
/// ```
///
/// Whitespace between tokens is ignored.
pub fn parse_poly(text: &str) -> Result<MultiPoly, PolyError> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
    };
    let poly = p.poly()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(poly)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: &str) -> PolyError {
        PolyError::Syntax {
            position: self.pos,
            message: message.to_string(),
        }
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

    fn poly(&mut self) -> Result<MultiPoly, PolyError> {
        let mut out = MultiPoly::zero();
        let mut negative = false;
        if self.peek() == Some(b'-') {
            negative = true;
            self.pos += 1;
        }
        loop {
            let (e, mut c) = self.term()?;
            if negative {
                c = -c;
            }
            out.add_term(e, c);
            match self.peek() {
                Some(b'+') => negative = false,
                Some(b'-') => negative = true,
                _ => break,
            }
            self.pos += 1;
        }
        Ok(out)
    }

    fn term(&mut self) -> Result<(ExponentVector, Rational), PolyError> {
        match self.peek() {
            Some(b'0'..=b'9') => {
                let c = self.coefficient()?;
                if self.peek() == Some(b'*') {
                    self.pos += 1;
                    Ok((self.monomial()?, c))
                } else {
                    Ok((ExponentVector::one(), c))
                }
            }
            Some(b'x') => Ok((self.monomial()?, Rational::one())),
            Some(_) => Err(self.error("expected a coefficient or a variable")),
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn coefficient(&mut self) -> Result<Rational, PolyError> {
        let num = self.integer()?;
        if self.peek() == Some(b'/') {
            self.pos += 1;
            self.skip_ws();
            let den = self.integer()?;
            if den.is_zero() {
                return Err(self.error("zero denominator"));
            }
            Ok(Rational::new(num, den))
        } else {
            Ok(Rational::from_integer(num))
        }
    }

    fn integer(&mut self) -> Result<BigInt, PolyError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected digits"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(digits.parse().expect("digits parse"))
    }

    fn small(&mut self) -> Result<u64, PolyError> {
        let start = self.pos;
        let n = self.integer()?;
        u64::try_from(n).map_err(|_| PolyError::Syntax {
            position: start,
            message: "number too large".into(),
        })
    }

    fn monomial(&mut self) -> Result<ExponentVector, PolyError> {
        let mut pairs = Vec::new();
        loop {
            if self.peek() != Some(b'x') {
                return Err(self.error("expected a variable x<i>"));
            }
            self.pos += 1;
            if !self.src.get(self.pos).is_some_and(|b| b.is_ascii_digit()) {
                return Err(self.error("expected a variable index after 'x'"));
            }
            let index = self.small()? as usize;
            let mut exp = 1u64;
            if self.peek() == Some(b'^') {
                self.pos += 1;
                self.skip_ws();
                exp = self.small()?;
                if exp > u32::MAX as u64 {
                    return Err(self.error("exponent too large"));
                }
            }
            pairs.push((index, exp as u32));
            // a '*' followed by another variable continues the monomial
            let save = self.pos;
            if self.peek() == Some(b'*') {
                self.pos += 1;
                if self.peek() == Some(b'x') {
                    continue;
                }
                self.pos = save;
                return Err(self.error("expected a variable after '*'"));
            }
            break;
        }
        Ok(ExponentVector::from_pairs(pairs))
    }
}
