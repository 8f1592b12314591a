//! Recursive-descent parser for map expressions over `Q(sqrt(d))`.
//!
//! Grammar (offsets in errors are 1-based):
//!
//! ```text
//! EXPR     := ['-'] TERM (('+'|'-') TERM)*
//! TERM     := FACTOR (('*'|'/') FACTOR)*
//! FACTOR   := BASE ('^' UINT)?
//! BASE     := 'x' | RATIONAL | 'sqrt' '(' UINT ')' | '(' EXPR ')'
//! RATIONAL := UINT ('/' UINT)?
//! ```
//!
//! The radicand of every `sqrt` must equal the declared field discriminant
//! (no `sqrt` at all is fine for `d = 1`).
//!
//! A `/` directly after an integer literal binds into the rational literal
//! (maximal munch): `x/2/2` is `x/(2/2)`, while `x/2*3` is `(x/2)*3`.

use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

use super::map::{MapError, RationalMap};
use super::poly::QuadPoly;
use super::quad::{is_valid_discriminant, QuadRational};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("syntax error at offset {offset}: {msg}")]
    Syntax { offset: usize, msg: String },
    #[error("coefficient outside Q(sqrt({field})): sqrt({radicand}) at offset {offset}")]
    OutsideField {
        offset: usize,
        radicand: i64,
        field: i64,
    },
    #[error("division by zero at offset {offset}")]
    DivisionByZero { offset: usize },
    #[error("field discriminant {0} is not squarefree")]
    BadField(i64),
    #[error("expression is not a map: {0}")]
    NotAMap(MapError),
}

/// Parses `text` as a rational map over `Q(sqrt(d))`; the map is reduced
/// and its denominator normalized monic.
pub fn parse_map(text: &str, d: i64) -> Result<RationalMap, ParseError> {
    if !is_valid_discriminant(d) {
        return Err(ParseError::BadField(d));
    }
    let mut p = Parser {
        bytes: text.as_bytes(),
        pos: 0,
        d,
    };
    let expr = p.expr()?;
    p.skip_ws();
    if p.pos < p.bytes.len() {
        return Err(p.syntax("unexpected trailing input"));
    }
    RationalMap::new(expr.num, expr.den).map_err(ParseError::NotAMap)
}

/// Unreduced fraction of polynomials used while folding the parse tree.
struct Frac {
    num: QuadPoly,
    den: QuadPoly,
}

impl Frac {
    fn constant(c: QuadRational, d: i64) -> Frac {
        Frac {
            num: QuadPoly::constant(c.in_field(d).expect("parser keeps one field")),
            den: QuadPoly::one(d),
        }
    }

    fn add(&self, o: &Frac) -> Frac {
        Frac {
            num: self.num.mul(&o.den).add(&o.num.mul(&self.den)),
            den: self.den.mul(&o.den),
        }
    }

    fn sub(&self, o: &Frac) -> Frac {
        Frac {
            num: self.num.mul(&o.den).sub(&o.num.mul(&self.den)),
            den: self.den.mul(&o.den),
        }
    }

    fn neg(&self) -> Frac {
        Frac {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    fn mul(&self, o: &Frac) -> Frac {
        Frac {
            num: self.num.mul(&o.num),
            den: self.den.mul(&o.den),
        }
    }

    /// Division; the caller has checked the divisor is nonzero.
    fn div(&self, o: &Frac) -> Frac {
        Frac {
            num: self.num.mul(&o.den),
            den: self.den.mul(&o.num),
        }
    }

    fn pow(&self, e: u32) -> Frac {
        Frac {
            num: self.num.pow(e),
            den: self.den.pow(e),
        }
    }
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
    d: i64,
}

impl<'a> Parser<'a> {
    fn syntax(&self, msg: &str) -> ParseError {
        ParseError::Syntax {
            offset: self.pos + 1,
            msg: msg.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self
            .bytes
            .get(self.pos)
            .is_some_and(|b| b.is_ascii_whitespace())
        {
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

    fn expect(&mut self, b: u8, what: &str) -> Result<(), ParseError> {
        if self.eat(b) {
            Ok(())
        } else {
            Err(self.syntax(what))
        }
    }

    fn uint(&mut self) -> Result<u64, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.bytes.get(self.pos).is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.syntax("expected a number"));
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| ParseError::Syntax {
                offset: start + 1,
                msg: "number out of range".to_string(),
            })
    }

    fn expr(&mut self) -> Result<Frac, ParseError> {
        let mut acc = if self.eat(b'-') {
            self.term()?.neg()
        } else {
            self.term()?
        };
        loop {
            if self.eat(b'+') {
                acc = acc.add(&self.term()?);
            } else if self.eat(b'-') {
                acc = acc.sub(&self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Frac, ParseError> {
        let mut acc = self.factor()?;
        loop {
            if self.eat(b'*') {
                acc = acc.mul(&self.factor()?);
            } else if self.eat(b'/') {
                let at = self.pos;
                let rhs = self.factor()?;
                if rhs.num.is_zero() {
                    return Err(ParseError::DivisionByZero { offset: at + 1 });
                }
                acc = acc.div(&rhs);
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<Frac, ParseError> {
        let base = self.base()?;
        if self.eat(b'^') {
            let e = self.uint()?;
            // keep degrees in a range where exact arithmetic stays sane
            if e > 4096 {
                return Err(self.syntax("exponent too large"));
            }
            Ok(base.pow(e as u32))
        } else {
            Ok(base)
        }
    }

    fn base(&mut self) -> Result<Frac, ParseError> {
        match self.peek() {
            Some(b'x') => {
                self.pos += 1;
                Ok(Frac {
                    num: QuadPoly::x(self.d),
                    den: QuadPoly::one(self.d),
                })
            }
            Some(b's') => self.sqrt(),
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                self.expect(b')', "expected ')'")?;
                Ok(inner)
            }
            Some(b) if b.is_ascii_digit() => {
                let numer = self.uint()?;
                let denom = if self.eat(b'/') {
                    let at = self.pos;
                    let v = self.uint()?;
                    if v == 0 {
                        return Err(ParseError::DivisionByZero { offset: at + 1 });
                    }
                    v
                } else {
                    1
                };
                let value = BigRational::new(BigInt::from(numer), BigInt::from(denom));
                Ok(Frac::constant(QuadRational::from_rational(value), self.d))
            }
            _ => Err(self.syntax("expected 'x', a number, 'sqrt' or '('")),
        }
    }

    fn sqrt(&mut self) -> Result<Frac, ParseError> {
        let at = self.pos;
        if self.bytes[self.pos..].starts_with(b"sqrt") {
            self.pos += 4;
        } else {
            return Err(self.syntax("expected 'sqrt'"));
        }
        self.expect(b'(', "expected '(' after sqrt")?;
        let radicand = self.uint()? as i64;
        self.expect(b')', "expected ')'")?;
        if radicand != self.d {
            return Err(ParseError::OutsideField {
                offset: at + 1,
                radicand,
                field: self.d,
            });
        }
        let root = QuadRational::new(
            BigRational::new(BigInt::from(0), BigInt::from(1)),
            BigRational::new(BigInt::from(1), BigInt::from(1)),
            self.d,
        )
        .expect("validated discriminant");
        Ok(Frac::constant(root, self.d))
    }
}
