//! Recursive-descent parser for polynomial expressions.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := ('+' | '-') unary | power
//! power  := atom ('^' digits)?
//! atom   := digits | 'x' | 'y' | '(' expr ')'
//! ```
//!
//! Division is only allowed by a nonzero constant, which is how `p/q`
//! literals arise. Decimal points are rejected.

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;
use vroots_core::poly::{Poly, Rational};

use crate::bipoly::BiPoly;

/// Exponents above this are rejected rather than expanded.
pub const MAX_EXPONENT: u32 = 1000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{msg} at column {}", .pos + 1)]
pub struct ParseError {
    pub pos: usize,
    pub msg: String,
}

pub fn parse_bivariate(src: &str) -> Result<BiPoly, ParseError> {
    let mut p = Parser {
        chars: src.chars().collect(),
        pos: 0,
    };
    p.skip_ws();
    if p.peek().is_none() {
        return Err(p.error("empty expression"));
    }
    let e = p.expr()?;
    p.skip_ws();
    match p.peek() {
        None => Ok(e),
        Some(c) => Err(p.error(format!("unexpected '{c}'"))),
    }
}

/// A polynomial in `x` alone.
pub fn parse_poly(src: &str) -> Result<Poly, ParseError> {
    let b = parse_bivariate(src)?;
    b.as_univariate().ok_or_else(|| ParseError {
        pos: src.find('y').unwrap_or(0),
        msg: "expected a polynomial in x only".into(),
    })
}

/// A constant expression such as `-3`, `1/100` or `1/2^3`.
pub fn parse_rational(src: &str) -> Result<Rational, ParseError> {
    let b = parse_bivariate(src)?;
    b.as_constant().ok_or_else(|| ParseError {
        pos: 0,
        msg: "expected a constant".into(),
    })
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn error(&self, msg: impl Into<String>) -> ParseError {
        ParseError {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    /// Next non-blank character, normalising the Unicode minus sign.
    fn next_op(&mut self) -> Option<char> {
        self.skip_ws();
        self.peek().map(|c| if c == '\u{2212}' { '-' } else { c })
    }

    fn expr(&mut self) -> Result<BiPoly, ParseError> {
        let mut acc = self.term()?;
        while let Some(c @ ('+' | '-')) = self.next_op() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = if c == '+' { &acc + &rhs } else { &acc - &rhs };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<BiPoly, ParseError> {
        let mut acc = self.unary()?;
        while let Some(c @ ('*' | '/')) = self.next_op() {
            self.pos += 1;
            let at = self.pos;
            let rhs = self.unary()?;
            if c == '*' {
                acc = &acc * &rhs;
                continue;
            }
            let d = rhs.as_constant().ok_or_else(|| ParseError {
                pos: at,
                msg: "division by a non-constant".into(),
            })?;
            if d.is_zero() {
                return Err(ParseError {
                    pos: at,
                    msg: "division by zero".into(),
                });
            }
            acc = acc.scale(&(Rational::from_integer(1.into()) / d));
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<BiPoly, ParseError> {
        match self.next_op() {
            Some('-') => {
                self.pos += 1;
                Ok(-&self.unary()?)
            }
            Some('+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<BiPoly, ParseError> {
        let base = self.atom()?;
        if self.next_op() != Some('^') {
            return Ok(base);
        }
        self.pos += 1;
        self.skip_ws();
        let at = self.pos;
        let digits = self.digits();
        if digits.is_empty() {
            return Err(self.error("expected a nonnegative integer exponent"));
        }
        let e: u32 = digits
            .parse()
            .ok()
            .filter(|e| *e <= MAX_EXPONENT)
            .ok_or_else(|| ParseError {
                pos: at,
                msg: format!("exponent larger than {MAX_EXPONENT}"),
            })?;
        self.reject_decimal_point()?;
        Ok(base.pow(e))
    }

    fn atom(&mut self) -> Result<BiPoly, ParseError> {
        match self.next_op() {
            Some('x') => {
                self.pos += 1;
                Ok(BiPoly::x())
            }
            Some('y') => {
                self.pos += 1;
                Ok(BiPoly::y())
            }
            Some('(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.next_op() != Some(')') {
                    return Err(self.error("expected ')'"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let n: BigInt = self.digits().parse().expect("ascii digits");
                self.reject_decimal_point()?;
                Ok(BiPoly::constant(Rational::from_integer(n)))
            }
            Some('.') => Err(self.error("floating-point literals are not allowed")),
            Some(c) => Err(self.error(format!("unexpected '{c}'"))),
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn digits(&mut self) -> String {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        self.chars[start..self.pos].iter().collect()
    }

    fn reject_decimal_point(&self) -> Result<(), ParseError> {
        match self.peek() {
            Some('.') | Some('e') | Some('E') => {
                Err(self.error("floating-point literals are not allowed"))
            }
            _ => Ok(()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use vroots_core::poly::{int, rat};

    #[test]
    fn literals_and_precedence() {
        assert_eq!(parse_poly("x^2+1").unwrap(), Poly::from_ints(&[1, 0, 1]));
        assert_eq!(parse_poly("(x-1)*(x-2)").unwrap(), Poly::from_ints(&[2, -3, 1]));
        assert_eq!(parse_poly("-x^2").unwrap(), Poly::from_ints(&[0, 0, -1]));
        assert_eq!(parse_poly("2^3*x").unwrap(), Poly::from_ints(&[0, 8]));
        assert_eq!(parse_poly("x - 3/2").unwrap(), Poly::new(vec![rat(-3, 2), int(1)]));
        assert_eq!(parse_poly("x/4").unwrap(), Poly::new(vec![int(0), rat(1, 4)]));
        assert_eq!(parse_poly("x \u{2212} 1").unwrap(), Poly::from_ints(&[-1, 1]));
        assert_eq!(parse_poly("(x)^0").unwrap(), Poly::one());
        assert_eq!(parse_rational("1/100").unwrap(), rat(1, 100));
        assert_eq!(parse_rational("-3").unwrap(), int(-3));
    }

    #[test]
    fn rejects_bad_input() {
        for bad in [
            "", "1.5", "x^2.0", ".5", "1e3", "x^", "x^-1", "x/(x+1)", "x/0", "(x", "x)",
            "z", "x y", "2x", "x^1001", "x +",
        ] {
            assert!(parse_bivariate(bad).is_err(), "{bad:?}");
        }
        assert!(parse_poly("x*y").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn error_position() {
        let e = parse_bivariate("x + 1.5").unwrap_err();
        assert_eq!(e.pos, 5);
        assert_eq!(e.to_string(), "floating-point literals are not allowed at column 6");
    }

    #[test]
    fn display_round_trips() {
        for src in ["x^3 - 6*x^2 + 11*x - 6", "-3/2*x + 7/5", "0", "x", "-1"] {
            let p = parse_poly(src).unwrap();
            assert_eq!(parse_poly(&p.to_string()).unwrap(), p);
        }
        let b = parse_bivariate("((x-1)^2+(y+1)^2-2)*((x+1)^2+(y-1)^2-2)").unwrap();
        assert_eq!(parse_bivariate(&b.to_string()).unwrap(), b);
    }
}
