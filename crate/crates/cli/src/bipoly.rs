//! Polynomials in `x` and `y` with rational coefficients, stored as a
//! polynomial in `y` whose coefficients are polynomials in `x`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};
use vroots_core::poly::{Poly, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiPoly {
    /// `ys[k]` is the coefficient of `y^k`; no trailing zeros.
    ys: Vec<Poly>,
}

impl BiPoly {
    pub fn new(mut ys: Vec<Poly>) -> Self {
        while ys.last().is_some_and(Poly::is_zero) {
            ys.pop();
        }
        BiPoly { ys }
    }

    pub fn zero() -> Self {
        BiPoly { ys: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        BiPoly::new(vec![Poly::constant(c)])
    }

    pub fn x() -> Self {
        BiPoly::new(vec![Poly::x()])
    }

    pub fn y() -> Self {
        BiPoly::new(vec![Poly::zero(), Poly::one()])
    }

    pub fn from_x(p: Poly) -> Self {
        BiPoly::new(vec![p])
    }

    pub fn is_zero(&self) -> bool {
        self.ys.is_empty()
    }

    /// Degree in `y`; zero for the zero polynomial.
    pub fn y_degree(&self) -> usize {
        self.ys.len().saturating_sub(1)
    }

    pub fn y_coeffs(&self) -> &[Poly] {
        &self.ys
    }

    /// The constant value, if the polynomial involves neither variable.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.ys.as_slice() {
            [] => Some(Rational::zero()),
            [c] if c.deg() == 0 => Some(c.coeff(0)),
            _ => None,
        }
    }

    /// The polynomial in `x`, if `y` does not occur.
    pub fn as_univariate(&self) -> Option<Poly> {
        match self.ys.as_slice() {
            [] => Some(Poly::zero()),
            [c] => Some(c.clone()),
            _ => None,
        }
    }

    /// Leading coefficient in `y` is the constant `1` and `y` occurs.
    pub fn is_y_monic(&self) -> bool {
        self.ys.len() >= 2 && self.ys.last().is_some_and(|c| *c == Poly::one())
    }

    /// `P(x0, y)` as a polynomial in `y`.
    pub fn at_x(&self, x0: &Rational) -> Poly {
        Poly::new(self.ys.iter().map(|c| c.eval(x0)).collect())
    }

    pub fn scale(&self, c: &Rational) -> BiPoly {
        BiPoly::new(self.ys.iter().map(|p| p.scale(c)).collect())
    }

    pub fn pow(&self, e: u32) -> BiPoly {
        let mut acc = BiPoly::constant(Rational::one());
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }
}

impl Add for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let n = self.ys.len().max(rhs.ys.len());
        let zero = Poly::zero();
        BiPoly::new(
            (0..n)
                .map(|k| {
                    let a = self.ys.get(k).unwrap_or(&zero);
                    let b = rhs.ys.get(k).unwrap_or(&zero);
                    a + b
                })
                .collect(),
        )
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        self + &(-rhs)
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        if self.is_zero() || rhs.is_zero() {
            return BiPoly::zero();
        }
        let mut ys = vec![Poly::zero(); self.ys.len() + rhs.ys.len() - 1];
        for (i, a) in self.ys.iter().enumerate() {
            for (j, b) in rhs.ys.iter().enumerate() {
                ys[i + j] = &ys[i + j] + &(a * b);
            }
        }
        BiPoly::new(ys)
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        BiPoly::new(self.ys.iter().map(|p| -p).collect())
    }
}

/// Terms ordered by `y` degree, then `x` degree, both descending. Parses
/// back to the same polynomial.
impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, cx) in self.ys.iter().enumerate().rev() {
            for (i, c) in cx.coeffs().iter().enumerate().rev() {
                if c.is_zero() {
                    continue;
                }
                let neg = c.is_negative();
                if first {
                    if neg {
                        f.write_str("-")?;
                    }
                } else {
                    f.write_str(if neg { " - " } else { " + " })?;
                }
                first = false;
                let a = c.abs();
                let mut parts = Vec::new();
                if !a.is_one() || (i == 0 && k == 0) {
                    parts.push(a.to_string());
                }
                for (var, e) in [('x', i), ('y', k)] {
                    match e {
                        0 => {}
                        1 => parts.push(var.to_string()),
                        _ => parts.push(format!("{var}^{e}")),
                    }
                }
                f.write_str(&parts.join("*"))?;
            }
        }
        Ok(())
    }
}
