//! Real algebraic numbers given by a square-free defining polynomial and an
//! isolating rational interval, plus the two points at infinity.
//!
//! No field arithmetic is provided. Everything downstream only needs exact
//! comparisons and exact signs of rational polynomials at these numbers,
//! which reduce to gcd computations, Sturm counts and bisection.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::{int, int_sign_at, Poly, Rational, SturmSequence};

/// A real root of `defining` isolated by `[lo, hi]`.
///
/// Invariants: `defining` is monic and square-free; it has exactly one root
/// in `[lo, hi]`; when `lo < hi` it is nonzero at both ends, and when
/// `lo == hi` the number is that rational and `defining` is linear.
#[derive(Clone, Debug)]
pub struct RealAlgebraic {
    defining: Poly,
    defining_int: Vec<BigInt>,
    lo: Rational,
    hi: Rational,
}

impl RealAlgebraic {
    pub fn from_rational(q: Rational) -> Self {
        let defining = Poly::linear(&q);
        RealAlgebraic {
            defining_int: defining.primitive_integer(),
            defining,
            lo: q.clone(),
            hi: q,
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(int(n))
    }

    /// The unique root of `p` in `[lo, hi]`. Fails unless `p` has exactly
    /// one distinct root there.
    pub fn new(p: &Poly, lo: Rational, hi: Rational) -> Result<Self> {
        if p.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if lo > hi {
            return Err(Error::NotIsolating);
        }
        let s = p.squarefree_part();
        if s.deg() == 0 || s.count_roots_closed(&lo, &hi) != 1 {
            return Err(Error::NotIsolating);
        }
        Ok(Self::from_isolating(s, lo, hi))
    }

    /// `s` must be monic square-free with exactly one root in `[lo, hi]`.
    pub(crate) fn from_isolating(s: Poly, lo: Rational, hi: Rational) -> Self {
        debug_assert!(s.is_monic());
        if s.deg() == 1 {
            return Self::from_rational(-s.coeff(0));
        }
        let defining_int = s.primitive_integer();
        if lo == hi || int_sign_at(&defining_int, &lo).is_eq() {
            return Self::from_rational(lo);
        }
        if int_sign_at(&defining_int, &hi).is_eq() {
            return Self::from_rational(hi);
        }
        RealAlgebraic {
            defining: s,
            defining_int,
            lo,
            hi,
        }
    }

    pub fn defining(&self) -> &Poly {
        &self.defining
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    /// The exact value when the number is known to be rational.
    pub fn as_rational(&self) -> Option<&Rational> {
        (self.lo == self.hi).then_some(&self.lo)
    }

    fn sign_of_defining(&self, x: &Rational) -> Ordering {
        int_sign_at(&self.defining_int, x)
    }

    fn collapse_to(&mut self, q: Rational) {
        *self = Self::from_rational(q);
    }

    /// One bisection step; collapses if the midpoint is the root.
    fn bisect(&mut self) {
        if self.lo == self.hi {
            return;
        }
        let mid = (&self.lo + &self.hi) / int(2);
        let s_mid = self.sign_of_defining(&mid);
        if s_mid.is_eq() {
            self.collapse_to(mid);
        } else if s_mid == self.sign_of_defining(&self.lo) {
            self.lo = mid;
        } else {
            self.hi = mid;
        }
    }

    /// Same number with an isolating interval narrower than `width`.
    /// If the simplest rational of the final interval is the root, the
    /// result collapses to it.
    pub fn refine(&self, width: &Rational) -> Self {
        assert!(width.is_positive(), "refinement width must be positive");
        let mut out = self.clone();
        while out.lo != out.hi && out.width() >= *width {
            out.bisect();
        }
        if out.lo != out.hi {
            let q = simplest_between(&out.lo, &out.hi);
            if out.sign_of_defining(&q).is_eq() {
                out.collapse_to(q);
            }
        }
        out
    }

    /// Order against a rational.
    pub fn cmp_rational(&self, q: &Rational) -> Ordering {
        let mut a = self.clone();
        loop {
            if let Some(x) = a.as_rational() {
                return x.cmp(q);
            }
            if *q < a.lo {
                return Ordering::Greater;
            }
            if *q > a.hi {
                return Ordering::Less;
            }
            if a.sign_of_defining(q).is_eq() {
                return Ordering::Equal;
            }
            a.bisect();
        }
    }

    /// Exact order. Equality is decided by the gcd of the defining
    /// polynomials having a root in the overlap of the intervals; otherwise
    /// both intervals are bisected until they separate.
    pub fn compare(&self, other: &RealAlgebraic) -> Ordering {
        let mut a = self.clone();
        let mut b = other.clone();
        let mut gcd_checked = false;
        loop {
            match (a.as_rational(), b.as_rational()) {
                (Some(x), Some(y)) => return x.cmp(y),
                (Some(x), None) => return b.cmp_rational(x).reverse(),
                (None, Some(y)) => return a.cmp_rational(y),
                (None, None) => {}
            }
            if a.hi < b.lo {
                return Ordering::Less;
            }
            if b.hi < a.lo {
                return Ordering::Greater;
            }
            if !gcd_checked {
                gcd_checked = true;
                let g = a.defining.gcd(&b.defining);
                if g.deg() >= 1 {
                    let lo = (&a.lo).max(&b.lo);
                    let hi = (&a.hi).min(&b.hi);
                    if g.count_roots_closed(lo, hi) > 0 {
                        return Ordering::Equal;
                    }
                }
            }
            a.bisect();
            b.bisect();
        }
    }

    /// A rational strictly between `self` and `other`: the dyadic of
    /// smallest denominator in the gap between the separated intervals
    /// (closest to zero among equals).
    pub fn midpoint_rational(&self, other: &RealAlgebraic) -> Result<Rational> {
        if self.compare(other) != Ordering::Less {
            return Err(Error::Domain(
                "midpoint_rational needs strictly increasing arguments".into(),
            ));
        }
        let (l, r) = separated_gap(self, other);
        Ok(dyadic_between(&l, &r))
    }

    /// Rational enclosure `[lo, hi]` narrower than `width` (or a point).
    pub fn enclosure(&self, width: &Rational) -> (Rational, Rational) {
        let r = self.refine(width);
        (r.lo, r.hi)
    }

    /// Decimal rendering rounded to `digits` places. Presentation only.
    pub fn to_decimal(&self, digits: u32) -> String {
        if let Some(q) = self.as_rational() {
            return decimal_string(q, digits);
        }
        let width = Rational::new(BigInt::one(), BigInt::from(10).pow(digits + 2));
        let r = self.refine(&width);
        let mid = (&r.lo + &r.hi) / int(2);
        decimal_string(&mid, digits)
    }
}

/// Refine two numbers with `a < b` until `a.hi < b.lo`; returns that gap.
fn separated_gap(a: &RealAlgebraic, b: &RealAlgebraic) -> (Rational, Rational) {
    let mut a = a.clone();
    let mut b = b.clone();
    while a.hi >= b.lo {
        a.bisect();
        b.bisect();
    }
    (a.hi, b.lo)
}

/// Dyadic rational in the open interval `(l, r)` with the smallest
/// denominator; among integers, the one closest to zero.
pub fn dyadic_between(l: &Rational, r: &Rational) -> Rational {
    assert!(l < r, "empty interval");
    let mut scale = BigInt::one();
    loop {
        let s = Rational::from_integer(scale.clone());
        let lo_n: BigInt = (l * &s).floor().to_integer() + 1;
        let hi_n: BigInt = (r * &s).ceil().to_integer() - 1;
        if lo_n <= hi_n {
            let n = if lo_n.is_positive() {
                lo_n
            } else if hi_n.is_negative() {
                hi_n
            } else {
                BigInt::zero()
            };
            return Rational::new(n, scale);
        }
        scale *= 2;
    }
}

/// The rational with smallest denominator in the closed interval `[a, b]`.
pub fn simplest_between(a: &Rational, b: &Rational) -> Rational {
    debug_assert!(a <= b);
    if !a.is_positive() && !b.is_negative() {
        return Rational::zero();
    }
    if b.is_negative() {
        return -simplest_between(&-b, &-a);
    }
    let fl = a.floor();
    if fl == *a {
        return fl;
    }
    let next = &fl + Rational::one();
    if next <= *b {
        return next;
    }
    let inner = simplest_between(&(b - &fl).recip(), &(a - &fl).recip());
    fl + inner.recip()
}

/// `q` rounded half away from zero to `digits` decimal places.
pub fn decimal_string(q: &Rational, digits: u32) -> String {
    let scale = BigInt::from(10).pow(digits);
    let scaled = q * Rational::from_integer(scale.clone());
    let rounded = scaled.round().to_integer();
    let neg = rounded.is_negative();
    let (whole, frac) = rounded.abs().div_rem(&scale);
    let mut out = String::new();
    if neg {
        out.push('-');
    }
    out.push_str(&whole.to_string());
    if digits > 0 {
        out.push('.');
        out.push_str(&format!("{:0>width$}", frac.to_string(), width = digits as usize));
    }
    out
}

/// Exact sign of `q` at `alpha`: zero iff `g = gcd(q, defining)` has a root
/// in the isolating interval; otherwise the interval is bisected until `q`
/// has no root in it.
pub fn sign_at(q: &Poly, alpha: &RealAlgebraic) -> Ordering {
    if q.is_zero() {
        return Ordering::Equal;
    }
    if let Some(x) = alpha.as_rational() {
        return q.sign_at(x);
    }
    // `g` divides the square-free defining polynomial, so its roots are
    // simple and it has one in the interval iff it changes sign there.
    let g = q.gcd(&alpha.defining);
    if g.deg() >= 1 && g.sign_at(&alpha.lo) != g.sign_at(&alpha.hi) {
        return Ordering::Equal;
    }
    let sturm = SturmSequence::new(q);
    let mut a = alpha.clone();
    loop {
        if let Some(x) = a.as_rational() {
            return q.sign_at(x);
        }
        if sturm.count_closed(&a.lo, &a.hi) == 0 {
            return q.sign_at(&a.lo);
        }
        a.bisect();
    }
}

/// All distinct real roots of `p`, ascending. Panics on the zero polynomial.
pub fn real_roots(p: &Poly) -> Vec<RealAlgebraic> {
    assert!(!p.is_zero(), "real roots of the zero polynomial");
    let s = p.squarefree_part();
    if s.deg() == 0 {
        return Vec::new();
    }
    let sturm = SturmSequence::new(&s);
    let bound = s.root_bound().expect("square-free part is monic");
    let lo = -bound.clone();
    let total = sturm.count(Some(&lo), Some(&bound));
    let mut out = Vec::with_capacity(total);
    isolate(&s, &sturm, lo, bound, total, &mut out);
    out
}

fn isolate(
    s: &Poly,
    sturm: &SturmSequence,
    l: Rational,
    r: Rational,
    count: usize,
    out: &mut Vec<RealAlgebraic>,
) {
    if count == 0 {
        return;
    }
    if count == 1 && !sturm.vanishes_at(&l) {
        out.push(RealAlgebraic::from_isolating(s.clone(), l, r));
        return;
    }
    let mid = (&l + &r) / int(2);
    let left = sturm.count(Some(&l), Some(&mid));
    isolate(s, sturm, l, mid.clone(), left, out);
    isolate(s, sturm, mid, r, count - left, out);
}

impl PartialEq for RealAlgebraic {
    fn eq(&self, other: &Self) -> bool {
        self.compare(other).is_eq()
    }
}

impl Eq for RealAlgebraic {}

impl PartialOrd for RealAlgebraic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for RealAlgebraic {
    fn cmp(&self, other: &Self) -> Ordering {
        self.compare(other)
    }
}

impl fmt::Display for RealAlgebraic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_rational() {
            Some(q) => write!(f, "{q}"),
            None => write!(f, "root of {} in [{}, {}]", self.defining, self.lo, self.hi),
        }
    }
}

/// A real algebraic number or one of the two infinities.
#[derive(Clone, Debug)]
pub enum ExtendedPoint {
    NegInfinity,
    Finite(RealAlgebraic),
    PosInfinity,
}

impl ExtendedPoint {
    pub fn rational(q: Rational) -> Self {
        ExtendedPoint::Finite(RealAlgebraic::from_rational(q))
    }

    pub fn finite(&self) -> Option<&RealAlgebraic> {
        match self {
            ExtendedPoint::Finite(a) => Some(a),
            _ => None,
        }
    }

    pub fn into_finite(self) -> Option<RealAlgebraic> {
        match self {
            ExtendedPoint::Finite(a) => Some(a),
            _ => None,
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, ExtendedPoint::Finite(_))
    }

    fn rank(&self) -> i8 {
        match self {
            ExtendedPoint::NegInfinity => -1,
            ExtendedPoint::Finite(_) => 0,
            ExtendedPoint::PosInfinity => 1,
        }
    }

    pub fn compare(&self, other: &ExtendedPoint) -> Ordering {
        match (self, other) {
            (ExtendedPoint::Finite(a), ExtendedPoint::Finite(b)) => a.compare(b),
            _ => self.rank().cmp(&other.rank()),
        }
    }
}

pub fn compare_ext(a: &ExtendedPoint, b: &ExtendedPoint) -> Ordering {
    a.compare(b)
}

/// Rational strictly between two extended points, `a < b`. Finite pairs use
/// [`RealAlgebraic::midpoint_rational`].
pub fn midpoint_rational(a: &ExtendedPoint, b: &ExtendedPoint) -> Result<Rational> {
    use ExtendedPoint::*;
    match (a, b) {
        (Finite(x), Finite(y)) => x.midpoint_rational(y),
        _ => rationals_between(a, b, 1).map(|mut v| v.remove(0)),
    }
}

/// `n` distinct rationals, ascending, strictly between `a < b`.
pub fn rationals_between(a: &ExtendedPoint, b: &ExtendedPoint, n: usize) -> Result<Vec<Rational>> {
    use ExtendedPoint::*;
    if a.compare(b) != Ordering::Less {
        return Err(Error::Domain("empty open interval".into()));
    }
    let (l, r) = match (a, b) {
        (Finite(x), Finite(y)) => separated_gap(x, y),
        (NegInfinity, Finite(y)) => (&y.lo - int(1), y.lo.clone()),
        (Finite(x), PosInfinity) => (x.hi.clone(), &x.hi + int(1)),
        (NegInfinity, PosInfinity) => (int(-1), int(1)),
        _ => unreachable!("ordered pair of extended points"),
    };
    let step = (&r - &l) / int(n as i64 + 1);
    Ok((1..=n).map(|k| &l + &step * int(k as i64)).collect())
}

impl From<RealAlgebraic> for ExtendedPoint {
    fn from(a: RealAlgebraic) -> Self {
        ExtendedPoint::Finite(a)
    }
}

impl PartialEq for ExtendedPoint {
    fn eq(&self, other: &Self) -> bool {
        self.compare(other).is_eq()
    }
}

impl Eq for ExtendedPoint {}

impl PartialOrd for ExtendedPoint {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExtendedPoint {
    fn cmp(&self, other: &Self) -> Ordering {
        self.compare(other)
    }
}

impl fmt::Display for ExtendedPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedPoint::NegInfinity => f.write_str("-inf"),
            ExtendedPoint::Finite(a) => a.fmt(f),
            ExtendedPoint::PosInfinity => f.write_str("+inf"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> Poly {
        Poly::from_ints(c)
    }

    fn sqrt2() -> RealAlgebraic {
        RealAlgebraic::new(&p(&[-2, 0, 1]), int(1), int(2)).unwrap()
    }

    #[test]
    fn from_rational_examples() {
        let z = RealAlgebraic::from_rational(int(0));
        assert_eq!(z.defining(), &Poly::x());
        assert_eq!((z.lo(), z.hi()), (&int(0), &int(0)));
        let h = RealAlgebraic::from_rational(rat(3, 2));
        assert_eq!(h.defining(), &Poly::linear(&rat(3, 2)));
        let m = RealAlgebraic::from_int(-2);
        assert_eq!(m.defining(), &p(&[2, 1]));
        assert_eq!(m.as_rational(), Some(&int(-2)));
    }

    #[test]
    fn new_rejects_non_isolating() {
        assert_eq!(
            RealAlgebraic::new(&p(&[-2, 0, 1]), int(-2), int(2)).unwrap_err(),
            Error::NotIsolating
        );
        assert_eq!(
            RealAlgebraic::new(&p(&[1, 0, 1]), int(-2), int(2)).unwrap_err(),
            Error::NotIsolating
        );
        // repeated factors are reduced away
        let a = RealAlgebraic::new(&p(&[-2, 0, 1]).pow(3), int(1), int(2)).unwrap();
        assert_eq!(a.defining(), &p(&[-2, 0, 1]));
    }

    #[test]
    fn refine_examples() {
        let r = sqrt2().refine(&rat(1, 8));
        assert!(r.width() <= rat(1, 8));
        assert!(*r.lo() >= rat(11, 8) && *r.hi() <= rat(23, 16));
        assert!(r.lo() * r.lo() < int(2) && r.hi() * r.hi() > int(2));

        let q = RealAlgebraic::from_rational(rat(5, 7));
        let rq = q.refine(&rat(1, 100));
        assert_eq!(rq.as_rational(), Some(&rat(5, 7)));

        let neg = RealAlgebraic::new(&p(&[-2, 0, 1]), int(-2), int(-1)).unwrap();
        let rn = neg.refine(&rat(1, 4));
        assert!(rn.width() <= rat(1, 4));
        assert!(rn.lo() * rn.lo() > int(2) && rn.hi() * rn.hi() < int(2));
    }

    #[test]
    fn refine_snaps_to_rational_roots() {
        // (x - 1/3)(x^2 - 2) seen through an interval around 1/3
        let f = &Poly::linear(&rat(1, 3)) * &p(&[-2, 0, 1]);
        let a = RealAlgebraic::new(&f, int(0), int(1)).unwrap();
        assert_eq!(a.refine(&rat(1, 10)).as_rational(), Some(&rat(1, 3)));
    }

    #[test]
    fn compare_examples() {
        assert_eq!(sqrt2().compare(&RealAlgebraic::from_rational(rat(3, 2))), Ordering::Less);
        let other = RealAlgebraic::new(&p(&[-4, 0, 0, 0, 1]), int(1), int(2)).unwrap();
        assert_eq!(sqrt2().compare(&other), Ordering::Equal);
        let neg = RealAlgebraic::new(&p(&[-2, 0, 1]), int(-2), int(-1)).unwrap();
        assert_eq!(neg.compare(&sqrt2()), Ordering::Less);
        assert_eq!(sqrt2().compare(&neg), Ordering::Greater);
    }

    #[test]
    fn sign_at_examples() {
        assert_eq!(sign_at(&p(&[-2, 0, 1]), &sqrt2()), Ordering::Equal);
        assert_eq!(sign_at(&Poly::x(), &sqrt2()), Ordering::Greater);
        assert_eq!(sign_at(&p(&[0, -1, 0, 1]), &sqrt2()), Ordering::Greater);
        // x^2 - 2 - 1/10^12 is tiny and negative at sqrt 2
        let tiny = &p(&[-2, 0, 1]) - &Poly::constant(rat(1, 1_000_000_000_000));
        assert_eq!(sign_at(&tiny, &sqrt2()), Ordering::Less);
    }

    #[test]
    fn midpoint_examples() {
        let one = RealAlgebraic::from_int(1);
        let two = RealAlgebraic::from_int(2);
        assert_eq!(one.midpoint_rational(&two).unwrap(), rat(3, 2));
        let neg = RealAlgebraic::new(&p(&[-2, 0, 1]), int(-2), int(-1)).unwrap();
        assert_eq!(neg.midpoint_rational(&sqrt2()).unwrap(), int(0));
        assert!(two.midpoint_rational(&one).is_err());
        let m = midpoint_rational(&ExtendedPoint::NegInfinity, &ExtendedPoint::Finite(one)).unwrap();
        assert!(m < int(1));
    }

    #[test]
    fn compare_ext_examples() {
        let a = ExtendedPoint::Finite(sqrt2());
        assert_eq!(compare_ext(&ExtendedPoint::NegInfinity, &a), Ordering::Less);
        assert_eq!(compare_ext(&ExtendedPoint::PosInfinity, &a), Ordering::Greater);
        assert_eq!(
            compare_ext(&ExtendedPoint::PosInfinity, &ExtendedPoint::PosInfinity),
            Ordering::Equal
        );
    }

    #[test]
    fn rationals_between_are_strict() {
        let a = ExtendedPoint::Finite(RealAlgebraic::new(&p(&[-2, 0, 1]), int(-2), int(-1)).unwrap());
        let b = ExtendedPoint::Finite(sqrt2());
        for q in rationals_between(&a, &b, 10).unwrap() {
            assert!(q.clone() * q < int(2));
        }
        let qs = rationals_between(&ExtendedPoint::NegInfinity, &a, 3).unwrap();
        assert!(qs.windows(2).all(|w| w[0] < w[1]));
        assert!(qs.iter().all(|q| q.clone() * q.clone() > int(2) && q.is_negative()));
    }

    #[test]
    fn real_roots_of_mixed_polynomial() {
        // (x - 1)^2 (x^2 - 2) x
        let f = &(&p(&[-1, 1]).pow(2) * &p(&[-2, 0, 1])) * &Poly::x();
        let roots = real_roots(&f);
        assert_eq!(roots.len(), 4);
        assert!(roots.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(roots[1], RealAlgebraic::from_int(0));
        assert_eq!(roots[2], RealAlgebraic::from_int(1));
        assert_eq!(roots[3], sqrt2());
        assert!(real_roots(&p(&[1, 0, 1])).is_empty());
    }

    #[test]
    fn decimal_rendering() {
        assert_eq!(sqrt2().to_decimal(5), "1.41421");
        assert_eq!(decimal_string(&rat(-1, 8), 2), "-0.13");
        assert_eq!(decimal_string(&int(3), 0), "3");
    }

    #[test]
    fn simplest_rationals() {
        assert_eq!(simplest_between(&rat(1, 3), &rat(1, 2)), rat(1, 2));
        assert_eq!(simplest_between(&rat(3, 10), &rat(2, 5)), rat(1, 3));
        assert_eq!(simplest_between(&rat(-5, 2), &rat(-9, 4)), rat(-5, 2));
        assert_eq!(simplest_between(&rat(-12, 5), &rat(-9, 4)), rat(-7, 3));
        assert_eq!(dyadic_between(&rat(1, 3), &rat(2, 5)), rat(3, 8));
        assert_eq!(dyadic_between(&int(-3), &int(-1)), int(-2));
    }

    /// A planted algebraic number: root of `x^2 - c` (positive or negative
    /// branch) or a rational.
    fn planted() -> impl Strategy<Value = RealAlgebraic> {
        prop_oneof![
            (-9i64..9, 1i64..4).prop_map(|(n, d)| RealAlgebraic::from_rational(rat(n, d))),
            (2i64..30, any::<bool>()).prop_map(|(c, pos)| {
                let f = p(&[-c, 0, 1]);
                if pos {
                    RealAlgebraic::new(&f, int(0), int(c)).unwrap()
                } else {
                    RealAlgebraic::new(&f, int(-c), int(0)).unwrap()
                }
            }),
        ]
    }

    fn approx(a: &RealAlgebraic) -> f64 {
        let r = a.refine(&rat(1, 1 << 40));
        let m = (r.lo() + r.hi()) / int(2);
        m.numer().to_string().parse::<f64>().unwrap() / m.denom().to_string().parse::<f64>().unwrap()
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn compare_is_a_total_order(a in planted(), b in planted(), c in planted()) {
            prop_assert_eq!(a.compare(&b), b.compare(&a).reverse());
            prop_assert_eq!(a.compare(&a), Ordering::Equal);
            if a <= b && b <= c {
                prop_assert!(a <= c);
            }
            let fa = approx(&a);
            let fb = approx(&b);
            if (fa - fb).abs() > 1e-9 {
                prop_assert_eq!(a.compare(&b), fa.partial_cmp(&fb).unwrap());
            }
        }

        #[test]
        fn refine_preserves_order(a in planted(), b in planted(), k in 1u32..30) {
            let w = Rational::new(BigInt::one(), BigInt::from(2).pow(k));
            prop_assert_eq!(a.refine(&w).compare(&b), a.compare(&b));
        }

        #[test]
        fn rational_order_is_preserved(n1 in -50i64..50, n2 in -50i64..50, d in 1i64..7) {
            let (q1, q2) = (rat(n1, d), rat(n2, 7));
            let a = RealAlgebraic::from_rational(q1.clone());
            let b = RealAlgebraic::from_rational(q2.clone());
            prop_assert_eq!(a.compare(&b), q1.cmp(&q2));
        }

        #[test]
        fn sign_at_matches_numeric(a in planted(), cs in prop::collection::vec(-5i64..5, 1..6)) {
            let q = p(&cs);
            prop_assume!(!q.is_zero());
            prop_assert_eq!(sign_at(a.defining(), &a), Ordering::Equal);
            // numeric reference: evaluate at the midpoint of a 10^-30 enclosure
            let width = Rational::new(BigInt::one(), BigInt::from(10).pow(30));
            let r = a.refine(&width);
            let v = q.eval(&((r.lo() + r.hi()) / int(2)));
            let threshold = Rational::new(BigInt::one(), BigInt::from(10).pow(20));
            if v.abs() > threshold {
                prop_assert_eq!(sign_at(&q, &a), v.cmp(&Rational::zero()));
            }
        }
    }
}
