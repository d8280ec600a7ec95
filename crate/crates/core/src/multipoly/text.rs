//! Textual polynomial grammar.
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := base ('^' uint)?
//! base   := uint ['/' uint] | 'e' | 'x' uint | '(' expr ')'
//! ```
//!
//! `e` denotes the field's primitive root of unity. The printer emits
//! terms in grevlex-descending order; printer output always re-parses to
//! the same polynomial.

use super::{Poly, Ring};
use crate::coeff::Field;
use crate::error::{Error, Result};
use num_bigint::BigInt;

pub fn format_poly<F: Field>(p: &Poly<F>) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let field = &p.ring().field;
    let mut out = String::new();
    let mut first = true;
    for (m, c) in p.terms().collect::<Vec<_>>().into_iter().rev() {
        let d = field.coeff_display(c);
        if first {
            if d.negative {
                out.push('-');
            }
            first = false;
        } else {
            out.push_str(if d.negative { " - " } else { " + " });
        }
        if m.is_one() {
            if d.parenthesize {
                out.push('(');
                out.push_str(&d.body);
                out.push(')');
            } else {
                out.push_str(&d.body);
            }
        } else if d.is_unit_one {
            out.push_str(&m.to_string());
        } else if d.parenthesize {
            out.push('(');
            out.push_str(&d.body);
            out.push_str(")*");
            out.push_str(&m.to_string());
        } else {
            out.push_str(&d.body);
            out.push('*');
            out.push_str(&m.to_string());
        }
    }
    out
}

/// Standalone scalar formatting; see [`Field::format_elem`].
pub fn format_scalar<F: Field>(field: &F, a: &F::Elem) -> String {
    field.format_elem(a)
}

pub fn parse_poly<F: Field>(s: &str, ring: &Ring<F>) -> Result<Poly<F>> {
    let mut p = Parser { bytes: s.as_bytes(), pos: 0, ring };
    let poly = p.expr()?;
    p.skip_ws();
    if p.pos != p.bytes.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(poly)
}

/// Parses a scalar in the coefficient grammar (integers, fractions a/b,
/// powers of e, and sums/products of those).
pub fn parse_scalar<F: Field>(s: &str, field: &F) -> Result<F::Elem> {
    let ring = Ring::new(field.clone(), 0);
    let p = parse_poly(s, &ring)?;
    Ok(p.constant_term())
}

struct Parser<'a, F: Field> {
    bytes: &'a [u8],
    pos: usize,
    ring: &'a Ring<F>,
}

impl<'a, F: Field> Parser<'a, F> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse { pos: self.pos, msg: msg.into() }
    }

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

    fn uint(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected a number"));
        }
        let digits = std::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii digits");
        Ok(digits.parse().expect("digits parse as BigInt"))
    }

    fn small_uint(&mut self) -> Result<u32> {
        let v = self.uint()?;
        u32::try_from(&v).map_err(|_| self.err("exponent too large"))
    }

    fn expr(&mut self) -> Result<Poly<F>> {
        let mut acc = self.ring.zero();
        let mut negate = false;
        if self.eat(b'-') {
            negate = true;
        } else {
            let _ = self.eat(b'+');
        }
        loop {
            let t = self.term()?;
            acc = if negate { acc.sub(&t) } else { acc.add(&t) };
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    negate = false;
                }
                Some(b'-') => {
                    self.pos += 1;
                    negate = true;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Poly<F>> {
        let mut acc = self.factor()?;
        while self.eat(b'*') {
            let f = self.factor()?;
            acc = acc.mul(&f);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Poly<F>> {
        let base = self.base()?;
        if self.eat(b'^') {
            let e = self.small_uint()?;
            Ok(base.pow(e))
        } else {
            Ok(base)
        }
    }

    fn base(&mut self) -> Result<Poly<F>> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.err("expected ')'"));
                }
                Ok(inner)
            }
            Some(b'e') => {
                self.pos += 1;
                Ok(self.ring.constant(self.ring.field.root_of_unity()))
            }
            Some(b'x') => {
                self.pos += 1;
                let idx = self.small_uint()? as usize;
                if idx >= self.ring.nvars {
                    return Err(self.err(&format!(
                        "variable x{idx} out of range (ring has {} variables)",
                        self.ring.nvars
                    )));
                }
                Ok(self.ring.var(idx))
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.uint()?;
                if self.eat(b'/') {
                    let den = self.uint()?;
                    let d = self.ring.field.from_bigint(&den);
                    let inv = self
                        .ring
                        .field
                        .inv(&d)
                        .map_err(|_| self.err("fraction denominator is zero in this field"))?;
                    let n = self.ring.field.from_bigint(&num);
                    Ok(self.ring.constant(self.ring.field.mul(&n, &inv)))
                } else {
                    Ok(self.ring.constant(self.ring.field.from_bigint(&num)))
                }
            }
            _ => Err(self.err("expected a number, e, a variable, or '('")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{CyclotomicField, PrimeField};

    #[test]
    fn parse_and_print_round_trip() {
        let f = CyclotomicField::new(3).unwrap();
        let ring = Ring::new(f, 3);
        for s in [
            "0",
            "1",
            "-1/2",
            "x0",
            "x0^2*x1 - x2^3 + 1",
            "(1 + e)*x0 - e^2*x1",
            "x0^3 - 3*x0^2*x1 + 3*x0*x1^2 - x1^3",
        ] {
            let p = ring.parse(s).unwrap();
            let printed = format_poly(&p);
            let q = ring.parse(&printed).unwrap();
            assert_eq!(p, q, "round trip through {printed:?}");
        }
    }

    #[test]
    fn canonical_output_is_grevlex_descending() {
        let f = PrimeField::new(7, 3).unwrap();
        let ring = Ring::new(f, 3);
        let p = ring.parse("1 + x2 + x1^2 + x0*x2").unwrap();
        // grevlex: x1^2 > x0*x2 > x2 > 1
        assert_eq!(format_poly(&p), "x1^2 + x0*x2 + x2 + 1");
    }

    #[test]
    fn scalar_format_round_trip() {
        let f = CyclotomicField::new(5).unwrap();
        let e = f.root_of_unity();
        let half = parse_scalar("1/2", &f).unwrap();
        let x = f.add(&f.mul(&half, &e), &f.pow(&e, 3));
        let s = f.format_elem(&x);
        let back = parse_scalar(&s, &f).unwrap();
        assert_eq!(x, back, "through {s:?}");
        assert_eq!(parse_scalar("e^0", &f).unwrap(), f.one());
    }

    #[test]
    fn parse_rejects_bad_input() {
        let f = PrimeField::new(7, 3).unwrap();
        let ring = Ring::new(f, 2);
        assert!(matches!(ring.parse("x5"), Err(Error::Parse { .. })));
        assert!(matches!(ring.parse("x0 +"), Err(Error::Parse { .. })));
        assert!(matches!(ring.parse("(x0"), Err(Error::Parse { .. })));
        assert!(matches!(ring.parse("1/7"), Err(Error::Parse { .. })));
        assert!(matches!(ring.parse("x0 x1"), Err(Error::Parse { .. })));
    }
}
