//! Dense univariate polynomials with exact rational coefficients.
//!
//! Coefficients are stored lowest degree first with the leading entry
//! nonzero, so structural equality is polynomial equality. Sign
//! evaluation at rationals and Sturm counting go through primitive integer
//! forms, which keeps the hot paths free of repeated rational
//! normalization.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// `n/d` as a rational. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub(crate) fn sign_of(q: &Rational) -> Ordering {
    q.numer().sign().cmp_zero()
}

trait CmpZero {
    fn cmp_zero(self) -> Ordering;
}

impl CmpZero for num_bigint::Sign {
    fn cmp_zero(self) -> Ordering {
        match self {
            num_bigint::Sign::Minus => Ordering::Less,
            num_bigint::Sign::NoSign => Ordering::Equal,
            num_bigint::Sign::Plus => Ordering::Greater,
        }
    }
}

fn bigint_sign(n: &BigInt) -> Ordering {
    n.sign().cmp_zero()
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    /// Integer coefficients, constant term first.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Poly::new(vec![c])
    }

    pub fn x() -> Self {
        Poly::from_ints(&[0, 1])
    }

    /// `x - r`
    pub fn linear(r: &Rational) -> Self {
        Poly::new(vec![-r.clone(), Rational::one()])
    }

    /// `x^n`
    pub fn monomial(n: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); n + 1];
        coeffs[n] = Rational::one();
        Poly { coeffs }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `x^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to 0.
    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().is_some_and(|c| c.is_one())
    }

    /// Divides by the leading coefficient; the zero polynomial is returned unchanged.
    pub fn monic(&self) -> Poly {
        match self.leading_coeff() {
            None => Poly::zero(),
            Some(lc) if lc.is_one() => self.clone(),
            Some(lc) => {
                let inv = lc.recip();
                self.scale(&inv)
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * int(i as i64))
                .collect(),
        )
    }

    /// The monic polynomial of degree `i` obtained from the `(deg - i)`-th
    /// derivative.
    pub fn normalized_derivative(&self, i: usize) -> Result<Poly> {
        let d = self.degree().ok_or(Error::ZeroPolynomial)?;
        if i > d {
            return Err(Error::IndexOutOfRange { index: i, degree: d });
        }
        let mut q = self.clone();
        for _ in 0..(d - i) {
            q = q.derivative();
        }
        Ok(q.monic())
    }

    /// All normalized derivatives, indexed by degree: entry `k` is monic of
    /// degree `k`, entry `0` is the constant `1` and the last entry is the
    /// polynomial made monic.
    pub fn normalized_derivatives(&self) -> Result<Vec<Poly>> {
        let d = self.degree().ok_or(Error::ZeroPolynomial)?;
        let mut levels = vec![Poly::zero(); d + 1];
        let mut q = self.clone();
        for k in (0..=d).rev() {
            levels[k] = q.monic();
            q = q.derivative();
        }
        Ok(levels)
    }

    /// Product of all normalized derivatives of degree `1..=d`.
    pub fn pstar(&self) -> Result<Poly> {
        if !self.is_monic() {
            return Err(Error::NotMonic);
        }
        if self.deg() == 0 {
            return Err(Error::BadDegree(0));
        }
        let levels = self.normalized_derivatives()?;
        Ok(levels.iter().skip(1).fold(Poly::one(), |acc, f| &acc * f))
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn sign_at(&self, x: &Rational) -> Ordering {
        int_sign_at(&self.primitive_integer(), x)
    }

    pub fn sign_at_pos_infinity(&self) -> Ordering {
        self.leading_coeff().map_or(Ordering::Equal, sign_of)
    }

    pub fn sign_at_neg_infinity(&self) -> Ordering {
        let s = self.sign_at_pos_infinity();
        if self.deg() % 2 == 1 {
            s.reverse()
        } else {
            s
        }
    }

    /// `1 + max |a_i|` over the non-leading coefficients of a monic polynomial.
    /// Every real root lies strictly inside `(-B, B)`.
    pub fn root_bound(&self) -> Result<Rational> {
        if !self.is_monic() {
            return Err(Error::NotMonic);
        }
        let d = self.deg();
        let max = self.coeffs[..d]
            .iter()
            .map(|c| c.abs())
            .max()
            .unwrap_or_else(Rational::zero);
        Ok(max + Rational::one())
    }

    /// Euclidean division. Panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lc_inv = divisor.coeffs[dd].recip();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Poly::zero(), self.clone());
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] * &lc_inv;
            if !c.is_zero() {
                for (i, dc) in divisor.coeffs.iter().enumerate() {
                    rem[k + i] -= &c * dc;
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (Poly::new(quot), Poly::new(rem))
    }

    pub fn rem(&self, divisor: &Poly) -> Poly {
        self.div_rem(divisor).1
    }

    /// Exact division; the remainder is assumed zero.
    pub fn exact_div(&self, divisor: &Poly) -> Poly {
        let (q, r) = self.div_rem(divisor);
        debug_assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Monic gcd. `gcd(0, 0)` is the zero polynomial.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.primitive_integer();
        let mut b = other.primitive_integer();
        while !b.is_empty() {
            let r = primitive_prem(&a, &b);
            a = b;
            b = r;
        }
        from_integers(&a).monic()
    }

    /// `P / gcd(P, P')`, monic. Constants map to `1`.
    pub fn squarefree_part(&self) -> Poly {
        if self.deg() == 0 {
            return if self.is_zero() { Poly::zero() } else { Poly::one() };
        }
        let g = self.gcd(&self.derivative());
        self.exact_div(&g).monic()
    }

    /// Positive rational multiple with coprime integer coefficients.
    pub fn primitive(&self) -> Poly {
        Poly {
            coeffs: self
                .primitive_integer()
                .into_iter()
                .map(Rational::from_integer)
                .collect(),
        }
    }

    /// Coefficients of [`Poly::primitive`] as integers.
    pub fn primitive_integer(&self) -> Vec<BigInt> {
        if self.is_zero() {
            return Vec::new();
        }
        let lcm = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        ints.into_iter().map(|c| c / &g).collect()
    }

    /// Number of distinct real roots in `(a, b]`. `None` stands for `-∞` as
    /// the lower end and `+∞` as the upper end. Panics on the zero
    /// polynomial.
    pub fn count_roots(&self, a: Option<&Rational>, b: Option<&Rational>) -> usize {
        SturmSequence::new(self).count(a, b)
    }

    /// Number of distinct real roots in the closed interval `[a, b]`.
    pub fn count_roots_closed(&self, a: &Rational, b: &Rational) -> usize {
        SturmSequence::new(self).count_closed(a, b)
    }

    /// Render with `var` as the indeterminate.
    pub fn display_var(&self, var: char) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let a = c.abs();
            if i == 0 {
                out.push_str(&a.to_string());
                continue;
            }
            if !a.is_one() {
                out.push_str(&a.to_string());
                out.push('*');
            }
            out.push(var);
            if i > 1 {
                out.push('^');
                out.push_str(&i.to_string());
            }
        }
        out
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_var('x'))
    }
}

fn from_integers(c: &[BigInt]) -> Poly {
    Poly::new(c.iter().cloned().map(Rational::from_integer).collect())
}

/// Primitive positive multiple of `a mod b` for integer coefficient
/// vectors (constant term first, no trailing zeros); empty when zero.
/// Pseudo-division keeps everything in integers, and dividing out the
/// content after every step keeps the coefficients small.
fn primitive_prem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    let lc = &b[db];
    let mut r = a.to_vec();
    let mut flipped = false;
    while r.len() > db {
        let lr = r.pop().expect("nonempty");
        let shift = r.len() - db;
        for c in r.iter_mut() {
            *c *= lc;
        }
        for (i, bc) in b[..db].iter().enumerate() {
            r[shift + i] -= &lr * bc;
        }
        if lc.is_negative() {
            flipped = !flipped;
        }
        while r.last().is_some_and(|c| c.is_zero()) {
            r.pop();
        }
        let g = r.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if !g.is_zero() && !g.is_one() {
            for c in r.iter_mut() {
                *c /= &g;
            }
        }
    }
    if flipped {
        for c in r.iter_mut() {
            *c = -&*c;
        }
    }
    r
}

/// Sign of an integer-coefficient polynomial at a rational, by homogeneous
/// integer Horner evaluation (`sum c_i n^i m^(k-i)` with `q = n/m`, `m > 0`).
pub(crate) fn int_sign_at(coeffs: &[BigInt], q: &Rational) -> Ordering {
    let Some((lead, rest)) = coeffs.split_last() else {
        return Ordering::Equal;
    };
    let n = q.numer();
    let m = q.denom();
    if m.is_one() {
        let mut acc = lead.clone();
        for c in rest.iter().rev() {
            acc = acc * n + c;
        }
        return bigint_sign(&acc);
    }
    let mut acc = lead.clone();
    let mut mpow = BigInt::one();
    for c in rest.iter().rev() {
        mpow *= m;
        acc = acc * n + c * &mpow;
    }
    bigint_sign(&acc)
}

/// Sturm sequence of the square-free part, in primitive integer form.
///
/// Because the base polynomial is square-free, `V(a) - V(b)` counts the
/// distinct roots in `(a, b]` even when `a` or `b` is itself a root.
#[derive(Clone, Debug)]
pub struct SturmSequence {
    seq: Vec<Vec<BigInt>>,
    base_degree: usize,
}

impl SturmSequence {
    pub fn new(p: &Poly) -> Self {
        assert!(!p.is_zero(), "Sturm sequence of the zero polynomial");
        let s = p.squarefree_part();
        let mut seq = vec![s.primitive_integer()];
        let mut next = s.derivative().primitive_integer();
        while !next.is_empty() {
            let prev = seq.last().unwrap();
            let r: Vec<BigInt> = primitive_prem(prev, &next).into_iter().map(|c| -c).collect();
            seq.push(next);
            next = r;
        }
        SturmSequence {
            base_degree: s.deg(),
            seq,
        }
    }

    pub fn degree(&self) -> usize {
        self.base_degree
    }

    fn variations<I: Iterator<Item = Ordering>>(signs: I) -> usize {
        let mut last = Ordering::Equal;
        let mut count = 0;
        for s in signs {
            if s == Ordering::Equal {
                continue;
            }
            if last != Ordering::Equal && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    fn variations_at(&self, x: &Rational) -> usize {
        Self::variations(self.seq.iter().map(|c| int_sign_at(c, x)))
    }

    fn variations_at_infinity(&self, positive: bool) -> usize {
        Self::variations(self.seq.iter().map(|c| {
            let lead = bigint_sign(c.last().unwrap());
            if !positive && (c.len() - 1) % 2 == 1 {
                lead.reverse()
            } else {
                lead
            }
        }))
    }

    /// Distinct roots in `(a, b]`; `None` means `-∞` for `a` and `+∞` for `b`.
    pub fn count(&self, a: Option<&Rational>, b: Option<&Rational>) -> usize {
        if self.base_degree == 0 {
            return 0;
        }
        let va = match a {
            Some(a) => self.variations_at(a),
            None => self.variations_at_infinity(false),
        };
        let vb = match b {
            Some(b) => self.variations_at(b),
            None => self.variations_at_infinity(true),
        };
        va.saturating_sub(vb)
    }

    /// Distinct roots in `[a, b]`.
    pub fn count_closed(&self, a: &Rational, b: &Rational) -> usize {
        if a > b {
            return 0;
        }
        let at_a = usize::from(self.vanishes_at(a));
        self.count(Some(a), Some(b)) + at_a
    }

    pub fn vanishes_at(&self, x: &Rational) -> bool {
        int_sign_at(&self.seq[0], x) == Ordering::Equal
    }

    /// Sign of the square-free base polynomial (a positive multiple of the
    /// square-free part of the input) at `x`.
    pub fn base_sign_at(&self, x: &Rational) -> Ordering {
        int_sign_at(&self.seq[0], x)
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new(
            (0..n)
                .map(|i| self.coeff(i) + rhs.coeff(i))
                .collect(),
        )
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new(
            (0..n)
                .map(|i| self.coeff(i) - rhs.coeff(i))
                .collect(),
        )
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Poly> for Poly {
            type Output = Poly;
            fn $m(self, rhs: &Poly) -> Poly {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
