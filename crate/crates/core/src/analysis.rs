//! Links between the two families, Thom tables and counts, the cubic
//! classifier, the uniform-continuity modulus and `W_σ`/`V_σ` membership.

use std::cmp::Ordering;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::{int, Poly, Rational};
use crate::realalg::{midpoint_rational, real_roots, ExtendedPoint, RealAlgebraic};
use crate::vroots::{
    all_thom_roots, f_nonempty, g_interval, rth_root, thom_tau, u_nonempty, RootKey, Sign,
    SignList, VirtualRoot,
};

/// One plus the number of adjacent equal pairs in `σ`.
pub fn j_of_sigma(sigma: &SignList) -> usize {
    1 + sigma.signs().windows(2).filter(|w| w[0] == w[1]).count()
}

/// `max{τ^-_σ(P'), min{τ^+_σ(P'), ρ_{d,j(σ)}(P)}}` for `lg(σ) = d - 1`.
pub fn infsup_rho(p: &Poly, sigma: &SignList) -> Result<RealAlgebraic> {
    if p.deg() == 0 {
        return Err(Error::BadDegree(0));
    }
    let d = p.deg();
    if sigma.lg() != d - 1 {
        return Err(Error::SignListLength {
            expected: d - 1,
            got: sigma.lg(),
        });
    }
    let dp = p.normalized_derivative(d - 1)?;
    let lo = thom_tau(&dp, sigma, Sign::Minus)?;
    let hi = thom_tau(&dp, sigma, Sign::Plus)?;
    let rho = rth_root(p, j_of_sigma(sigma) as i64)?;
    let clamped = std::cmp::min(hi, rho);
    std::cmp::max(lo, clamped)
        .into_finite()
        .ok_or_else(|| Error::Invariant("inf-sup expression is infinite".into()))
}

/// `1 + d(d-1)/2`, the largest possible number of distinct Thom virtual
/// roots in degree `d`.
pub fn s_of(d: usize) -> usize {
    1 + d * d.saturating_sub(1) / 2
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThomRow {
    pub code: SignList,
    pub root: VirtualRoot,
    /// `F_σ(P^{[d-1]})` is nonempty, i.e. `G_σ(P^{[d-1]})` is a genuine
    /// sign-condition interval.
    pub f_nonempty: bool,
    /// `U_σ(P^{[d-1]})` is nonempty.
    pub u_nonempty: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThomTable {
    pub degree: usize,
    pub rows: Vec<ThomRow>,
    pub distinct_count: usize,
}

impl ThomTable {
    pub fn s_d(&self) -> usize {
        s_of(self.degree)
    }
}

/// Number of distinct values, compared exactly.
pub fn distinct_count<'a>(values: impl IntoIterator<Item = &'a RealAlgebraic>) -> usize {
    let mut v: Vec<&RealAlgebraic> = values.into_iter().collect();
    v.sort();
    v.dedup_by(|a, b| a == b);
    v.len()
}

/// Every `ρ_σ(P)` in table order with the nonemptiness of the interval it
/// was taken from.
pub fn thom_table(p: &Poly) -> Result<ThomTable> {
    let roots = all_thom_roots(p)?;
    let d = p.deg();
    let dp = p.normalized_derivative(d - 1)?;
    let rows = roots
        .into_iter()
        .map(|root| {
            let RootKey::Code(code) = root.key.clone() else {
                unreachable!("Thom roots carry codes")
            };
            Ok(ThomRow {
                f_nonempty: f_nonempty(&dp, &code)?,
                u_nonempty: u_nonempty(&dp, &code)?,
                code,
                root,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let distinct_count = distinct_count(rows.iter().map(|r| &r.root.value));
    Ok(ThomTable {
        degree: d,
        rows,
        distinct_count,
    })
}

/// Strict sign pattern of `(p, q, p^3 + q^2)` for `x^3 + 3px + 2q`, with
/// this crate's labels:
/// `A1`: p > 0, q < 0; `A2`: p > 0, q > 0;
/// `A3`: p < 0, q < 0, D > 0; `A4`: p < 0, q > 0, D > 0;
/// `A5`: D < 0, q < 0; `A6`: D < 0, q > 0.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CubicRegion {
    A1,
    A2,
    A3,
    A4,
    A5,
    A6,
}

impl fmt::Display for CubicRegion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// What a Thom virtual root of a cubic turns out to be.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CubicObject {
    /// The `rank`-th smallest real root of `P` (of `count` real roots).
    RootOfP { rank: usize, count: usize },
    /// The positive (`Plus`) or negative root of `P'`, i.e. `±sqrt(-p)`.
    RootOfDerivative(Sign),
    /// The root `0` of `P''`.
    ZeroOfSecond,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CubicEntry {
    pub code: SignList,
    pub value: RealAlgebraic,
    pub object: CubicObject,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CubicClassification {
    pub region: CubicRegion,
    pub entries: Vec<CubicEntry>,
}

/// `x^3 + 3px + 2q`.
pub fn cubic(p: &Rational, q: &Rational) -> Poly {
    Poly::new(vec![q * int(2), p * int(3), Rational::zero(), Rational::one()])
}

/// Classifies the four Thom virtual roots of `x^3 + 3px + 2q` by provenance.
/// Points with `pq(p^3 + q^2) = 0` are rejected.
pub fn classify_cubic(p: &Rational, q: &Rational) -> Result<CubicClassification> {
    let disc = p * p * p + q * q;
    if p.is_zero() || q.is_zero() || disc.is_zero() {
        return Err(Error::Domain(format!(
            "({p}, {q}) lies on the locus pq(p^3+q^2) = 0"
        )));
    }
    let region = match (p.is_positive(), q.is_positive(), disc.is_positive()) {
        (true, false, _) => CubicRegion::A1,
        (true, true, _) => CubicRegion::A2,
        (false, false, true) => CubicRegion::A3,
        (false, true, true) => CubicRegion::A4,
        (false, false, false) => CubicRegion::A5,
        (false, true, false) => CubicRegion::A6,
    };
    let poly = cubic(p, q);
    let roots = real_roots(&poly);
    let entries = all_thom_roots(&poly)?
        .into_iter()
        .map(|v| {
            let RootKey::Code(code) = v.key else {
                unreachable!("Thom roots carry codes")
            };
            let object = match v.level {
                3 => CubicObject::RootOfP {
                    rank: 1 + roots.iter().filter(|r| **r < v.value).count(),
                    count: roots.len(),
                },
                2 => CubicObject::RootOfDerivative(if v.value.cmp_rational(&Rational::zero()).is_gt() {
                    Sign::Plus
                } else {
                    Sign::Minus
                }),
                _ => CubicObject::ZeroOfSecond,
            };
            Ok(CubicEntry {
                code,
                value: v.value,
                object,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CubicClassification { region, entries })
}

/// `ω(M, ε) = 2M (ε / (d(d+1)(2d-1) M))^d`.
pub fn modulus(m: &Rational, eps: &Rational, d: usize) -> Result<Rational> {
    if *m < Rational::one() {
        return Err(Error::Domain(format!("M = {m} must be at least 1")));
    }
    if !eps.is_positive() {
        return Err(Error::Domain(format!("epsilon = {eps} must be positive")));
    }
    if d == 0 {
        return Err(Error::Domain("degree must be at least 1".into()));
    }
    let k = int((d * (d + 1) * (2 * d - 1)) as i64);
    let base = eps / (k * m);
    Ok(m * int(2) * num_traits::pow(base, d))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Membership {
    pub in_w: bool,
    pub in_v: bool,
}

/// `P ∈ W_σ` (`F_σ(P)` nonempty) and `P ∈ V_σ` (`U_σ(P)` nonempty).
pub fn w_v_membership(p: &Poly, sigma: &SignList) -> Result<Membership> {
    Ok(Membership {
        in_w: f_nonempty(p, sigma)?,
        in_v: u_nonempty(p, sigma)?,
    })
}

/// A rational inside `U_σ(P)`, when that set is nonempty.
pub fn sample_in_u(p: &Poly, sigma: &SignList) -> Result<Option<Rational>> {
    let (lo, hi) = g_interval(p, sigma)?;
    if lo.compare(&hi) != Ordering::Less {
        return Ok(None);
    }
    midpoint_rational(&lo, &hi).map(Some)
}

/// Whether `x` satisfies every strict condition `P^{[i]}(x) σ̃_i 0`.
pub fn in_u(p: &Poly, sigma: &SignList, x: &Rational) -> Result<bool> {
    let derivs = p.normalized_derivatives()?;
    Ok((1..derivs.len()).all(|i| sigma.get(i).strictly_matches(derivs[i].sign_at(x))))
}

/// Whether `x` lies strictly between `ρ_{d,j-1}(P)` and `ρ_{d,j}(P)`.
pub fn in_rth_gap(p: &Poly, j: usize, x: &Rational) -> Result<bool> {
    let xe = ExtendedPoint::rational(x.clone());
    let lo = rth_root(p, j as i64 - 1)?;
    let hi = rth_root(p, j as i64)?;
    Ok(lo < xe && xe < hi)
}
