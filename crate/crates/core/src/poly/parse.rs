//! Recursive-descent parser for the polynomial text grammar:
//!
//! ```text
//! expr  := term (('+' | '-') term)*
//! term  := unary (('*' | '/') unary)*
//! unary := ('+' | '-') unary | power
//! power := atom ('^' INT)?
//! atom  := INT | VAR | '(' expr ')'
//! VAR   := 'z' INT | 'z'          (bare 'z' only when n = 1)
//! ```
//!
//! Division is only allowed by nonzero constants, which covers rational
//! literals `p/q`.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::{PolyError, Polynomial, Rational};

pub fn parse_polynomial(text: &str, nvars: usize) -> Result<Polynomial, PolyError> {
    let mut parser = Parser {
        src: text.as_bytes(),
        pos: 0,
        nvars,
    };
    let p = parser.expr()?;
    parser.skip_ws();
    if parser.pos < parser.src.len() {
        return Err(parser.error("unexpected trailing input"));
    }
    Ok(p)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    nvars: usize,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> PolyError {
        PolyError::Syntax {
            pos: self.pos,
            msg: msg.to_string(),
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

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Polynomial, PolyError> {
        let mut acc = self.term()?;
        loop {
            if self.eat(b'+') {
                acc = &acc + &self.term()?;
            } else if self.eat(b'-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, PolyError> {
        let mut acc = self.unary()?;
        loop {
            if self.eat(b'*') {
                acc = &acc * &self.unary()?;
            } else if self.peek() == Some(b'/') {
                let at = self.pos;
                self.pos += 1;
                let d = self.unary()?;
                if !d.is_constant() {
                    return Err(PolyError::NonConstantDivisor { pos: at });
                }
                let c = d.constant_term();
                if c.is_zero() {
                    return Err(PolyError::ZeroDenominator { pos: at });
                }
                acc = acc.scale(&c.recip());
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<Polynomial, PolyError> {
        if self.eat(b'-') {
            return Ok(-self.unary()?);
        }
        if self.eat(b'+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<Polynomial, PolyError> {
        let base = self.atom()?;
        if self.eat(b'^') {
            self.skip_ws();
            let at = self.pos;
            let e = self
                .integer()
                .ok_or_else(|| self.error("expected a non-negative integer exponent"))?;
            let e = u32::try_from(&e).map_err(|_| PolyError::Syntax {
                pos: at,
                msg: "exponent too large".into(),
            })?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn integer(&mut self) -> Option<BigInt> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return None;
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).ok()?;
        digits.parse().ok()
    }

    fn atom(&mut self) -> Result<Polynomial, PolyError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.error("expected ')'"));
                }
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer().expect("digit present");
                Ok(Polynomial::constant(self.nvars, Rational::from_integer(n)))
            }
            Some(b'z') => {
                let at = self.pos;
                self.pos += 1;
                let index = if self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
                    let n = self.integer().expect("digit present");
                    if n.is_negative() || n > BigInt::from(usize::MAX >> 1) {
                        return Err(self.error("bad variable index"));
                    }
                    usize::try_from(&n).map_err(|_| self.error("bad variable index"))?
                } else if self.nvars == 1 {
                    1
                } else {
                    return Err(PolyError::Syntax {
                        pos: at,
                        msg: "bare 'z' is only allowed with one variable".into(),
                    });
                };
                if index == 0 || index > self.nvars {
                    return Err(PolyError::VariableOutOfRange {
                        pos: at,
                        index,
                        nvars: self.nvars,
                    });
                }
                Ok(Polynomial::var(self.nvars, index - 1))
            }
            Some(_) => Err(self.error("unexpected character")),
            None => Err(self.error("unexpected end of input")),
        }
    }
}
