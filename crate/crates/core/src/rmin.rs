//! The minimizer `R_d(a, b, P)`: the point of `[a, b]` where `|P|` is
//! smallest, for windows on which `P'` keeps a constant sign.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::poly::{int, Poly};
use crate::realalg::{
    midpoint_rational, rationals_between, real_roots, sign_at, simplest_between, ExtendedPoint,
    RealAlgebraic,
};

/// A triple `(a, b, P)` with `a <= b`, `P` monic of degree at least one and
/// `P'` of constant (weak) sign on `[a, b]`.
#[derive(Clone, Debug)]
pub struct MonotoneWindow {
    a: ExtendedPoint,
    b: ExtendedPoint,
    poly: Poly,
}

impl MonotoneWindow {
    /// Builds a window after checking every invariant.
    pub fn new(a: ExtendedPoint, b: ExtendedPoint, poly: Poly) -> Result<Self> {
        check_shape(&a, &b, &poly)?;
        if !derivative_keeps_sign(&a, &b, &poly) {
            return Err(Error::InvalidWindow(format!(
                "derivative of {poly} changes sign on [{a}, {b}]"
            )));
        }
        Ok(MonotoneWindow { a, b, poly })
    }

    /// Skips the derivative sign check. Use only when the monotonicity
    /// holds by construction.
    pub fn new_unchecked(a: ExtendedPoint, b: ExtendedPoint, poly: Poly) -> Self {
        MonotoneWindow { a, b, poly }
    }

    pub fn a(&self) -> &ExtendedPoint {
        &self.a
    }

    pub fn b(&self) -> &ExtendedPoint {
        &self.b
    }

    pub fn poly(&self) -> &Poly {
        &self.poly
    }
}

fn check_shape(a: &ExtendedPoint, b: &ExtendedPoint, poly: &Poly) -> Result<()> {
    if poly.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if poly.deg() == 0 {
        return Err(Error::BadDegree(0));
    }
    if !poly.is_monic() {
        return Err(Error::NotMonic);
    }
    if matches!(a, ExtendedPoint::PosInfinity) || matches!(b, ExtendedPoint::NegInfinity) {
        return Err(Error::InvalidWindow(format!("bad endpoints [{a}, {b}]")));
    }
    if a.compare(b) == Ordering::Greater {
        return Err(Error::InvalidWindow(format!("{a} > {b}")));
    }
    Ok(())
}

/// True if `P'` has no sign change on `[a, b]`. Roots of `P'` inside the
/// window split it into gaps; one sample per gap must give the same sign.
pub fn derivative_keeps_sign(a: &ExtendedPoint, b: &ExtendedPoint, poly: &Poly) -> bool {
    if a.compare(b) != Ordering::Less {
        return true;
    }
    let dp = poly.derivative();
    if dp.deg() == 0 {
        return true;
    }
    let mut cuts = vec![a.clone()];
    for r in real_roots(&dp) {
        let r = ExtendedPoint::Finite(r);
        if a.compare(&r) == Ordering::Less && r.compare(b) == Ordering::Less {
            cuts.push(r);
        }
    }
    cuts.push(b.clone());
    let mut seen = Ordering::Equal;
    for w in cuts.windows(2) {
        let q = midpoint_rational(&w[0], &w[1]).expect("cuts are strictly increasing");
        let s = dp.sign_at(&q);
        if s.is_eq() {
            continue;
        }
        if seen.is_ne() && s != seen {
            return false;
        }
        seen = s;
    }
    true
}

/// `R_d` on a window.
pub fn rd(w: &MonotoneWindow) -> Result<RealAlgebraic> {
    rd_unchecked(&w.a, &w.b, &w.poly)
}

/// `R_d(a, b, P)` with the window shape checked but not the monotonicity.
pub(crate) fn rd_unchecked(
    a: &ExtendedPoint,
    b: &ExtendedPoint,
    p: &Poly,
) -> Result<RealAlgebraic> {
    check_shape(a, b, p)?;
    let bound = p.root_bound()?;
    let a = match a {
        ExtendedPoint::NegInfinity => {
            let lo = RealAlgebraic::from_rational(-bound.clone());
            match b {
                ExtendedPoint::Finite(y) if y.cmp_rational(lo.lo()).is_le() => y.clone(),
                _ => lo,
            }
        }
        ExtendedPoint::Finite(x) => x.clone(),
        ExtendedPoint::PosInfinity => unreachable!(),
    };
    let b = match b {
        ExtendedPoint::PosInfinity => {
            if a.cmp_rational(&bound).is_ge() {
                a.clone()
            } else {
                RealAlgebraic::from_rational(bound)
            }
        }
        ExtendedPoint::Finite(y) => y.clone(),
        ExtendedPoint::NegInfinity => unreachable!(),
    };
    minimize_on(&a, &b, p)
}

/// Formula (⋆) on a finite window, cases taken in order.
fn minimize_on(a: &RealAlgebraic, b: &RealAlgebraic, p: &Poly) -> Result<RealAlgebraic> {
    match a.compare(b) {
        Ordering::Equal => return Ok(a.clone()),
        Ordering::Greater => return Err(Error::InvalidWindow(format!("{a} > {b}"))),
        Ordering::Less => {}
    }
    let s = derivative_sign(a, b, p);
    let pa = sign_at(p, a);
    if product(s, pa).is_ge() {
        return Ok(a.clone());
    }
    let pb = sign_at(p, b);
    if product(s, pb).is_le() {
        return Ok(b.clone());
    }
    inner_root(a, b, p, pa, pb)
}

fn product(x: Ordering, y: Ordering) -> Ordering {
    match (x, y) {
        (Ordering::Equal, _) | (_, Ordering::Equal) => Ordering::Equal,
        _ if x == y => Ordering::Greater,
        _ => Ordering::Less,
    }
}

/// Sign of `P'` at some rational of `(a, b)` where it does not vanish.
fn derivative_sign(a: &RealAlgebraic, b: &RealAlgebraic, p: &Poly) -> Ordering {
    let dp = p.derivative();
    let ea = ExtendedPoint::Finite(a.clone());
    let eb = ExtendedPoint::Finite(b.clone());
    // P' has at most deg P - 1 roots, so deg P samples always hit a nonzero.
    rationals_between(&ea, &eb, p.deg())
        .expect("a < b")
        .iter()
        .map(|q| dp.sign_at(q))
        .find(|s| s.is_ne())
        .expect("nonzero derivative vanishes at every sample")
}

/// The unique root of `P` strictly between `a` and `b`, where `P(a)` and
/// `P(b)` are nonzero of opposite signs.
fn inner_root(
    a: &RealAlgebraic,
    b: &RealAlgebraic,
    p: &Poly,
    pa: Ordering,
    pb: Ordering,
) -> Result<RealAlgebraic> {
    let mut a = a.clone();
    let mut b = b.clone();
    let (lo, hi) = loop {
        let lo = a.hi().clone();
        let hi = b.lo().clone();
        if lo <= hi && p.sign_at(&lo) == pa && p.sign_at(&hi) == pb {
            break (lo, hi);
        }
        if a.as_rational().is_none() {
            a = a.refine(&(a.width() / int(2)));
        }
        if b.as_rational().is_none() {
            b = b.refine(&(b.width() / int(2)));
        }
    };
    let q = simplest_between(&lo, &hi);
    if p.sign_at(&q).is_eq() {
        return Ok(RealAlgebraic::from_rational(q));
    }
    let s = p.squarefree_part();
    if s.count_roots_closed(&lo, &hi) != 1 {
        return Err(Error::Invariant(format!(
            "{p} is not monotone on [{lo}, {hi}]"
        )));
    }
    Ok(RealAlgebraic::from_isolating(s, lo, hi))
}

/// Checks the characterizing inequalities of the minimizer for a candidate
/// `x` in a finite window. Used by tests and the invariant suite.
pub fn satisfies_characterization(
    a: &RealAlgebraic,
    b: &RealAlgebraic,
    p: &Poly,
    x: &RealAlgebraic,
) -> bool {
    if a.compare(x).is_gt() || x.compare(b).is_gt() {
        return false;
    }
    let delta = match a.compare(b) {
        Ordering::Equal => Ordering::Equal,
        _ => derivative_sign(a, b, p),
    };
    let xa = x.compare(a);
    let bx = b.compare(x);
    let pa = sign_at(p, a);
    let pb = sign_at(p, b);
    let px = sign_at(p, x);
    product(product(xa, pa), delta).is_le()
        && product(product(xa, px), delta).is_le()
        && product(product(bx, pb), delta).is_ge()
        && product(product(bx, px), delta).is_ge()
}
