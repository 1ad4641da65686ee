//! Polynomial text syntax: `3*t^-1 + 1 + 2*t^2`.
//!
//! Integer coefficients, monomials `t`, `t^k` or `t^(k)` with `k` possibly
//! negative, optional `*` between coefficient and monomial, whitespace
//! ignored. Repeated exponents are summed.

use super::{FieldError, IntLaurent, LaurentPoly, PrimeModulus};
use crate::scalar::IntScalar;

struct Cursor<'a> {
    chars: Vec<(usize, char)>,
    pos: usize,
    src: &'a str,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str) -> Self {
        let chars = src.char_indices().filter(|(_, c)| !c.is_whitespace()).collect();
        Cursor { chars, pos: 0, src }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn column(&self) -> usize {
        self.chars.get(self.pos).map(|&(i, _)| i + 1).unwrap_or(self.src.len() + 1)
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek();
        self.pos += 1;
        c
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn error(&self, message: impl Into<String>) -> FieldError {
        FieldError::Parse { column: self.column(), message: message.into() }
    }

    fn digits(&mut self) -> Option<String> {
        let mut s = String::new();
        while let Some(c) = self.peek().filter(|c| c.is_ascii_digit()) {
            s.push(c);
            self.pos += 1;
        }
        (!s.is_empty()).then_some(s)
    }

    fn exponent(&mut self) -> Result<i64, FieldError> {
        let paren = self.eat('(');
        let neg = if self.eat('-') {
            true
        } else {
            self.eat('+');
            false
        };
        let digits = self.digits().ok_or_else(|| self.error("expected exponent"))?;
        let mag: i64 = digits.parse().map_err(|_| self.error("exponent out of range"))?;
        if paren && !self.eat(')') {
            return Err(self.error("expected ')'"));
        }
        Ok(if neg { -mag } else { mag })
    }
}

/// Parse an integer Laurent polynomial.
pub fn parse_int_laurent<T: IntScalar>(src: &str) -> Result<IntLaurent<T>, FieldError> {
    let mut cur = Cursor::new(src);
    if cur.peek().is_none() {
        return Err(cur.error("empty polynomial"));
    }
    let mut terms: Vec<(i64, T)> = Vec::new();
    let mut first = true;
    while cur.peek().is_some() {
        let neg = match cur.peek() {
            Some('+') => {
                cur.bump();
                false
            }
            Some('-') => {
                cur.bump();
                true
            }
            _ if first => false,
            _ => return Err(cur.error("expected '+' or '-'")),
        };
        first = false;
        let coeff = match cur.digits() {
            Some(d) => Some(T::from_str_radix(&d, 10).map_err(|_| cur.error("bad coefficient"))?),
            None => None,
        };
        let has_star = coeff.is_some() && cur.eat('*');
        let exp = if cur.eat('t') {
            if cur.eat('^') {
                cur.exponent()?
            } else {
                1
            }
        } else if has_star {
            return Err(cur.error("expected 't' after '*'"));
        } else if coeff.is_none() {
            return Err(cur.error("expected a term"));
        } else {
            0
        };
        let c = coeff.unwrap_or_else(T::one);
        terms.push((exp, if neg { -c } else { c }));
    }
    Ok(IntLaurent::from_terms(terms))
}

/// Parse a polynomial and reduce it modulo `p`.
pub fn parse_laurent_mod(src: &str, p: PrimeModulus) -> Result<LaurentPoly, FieldError> {
    Ok(parse_int_laurent::<i64>(src)?.reduce(p))
}
