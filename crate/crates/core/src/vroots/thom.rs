use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::realalg::{sign_at, ExtendedPoint, RealAlgebraic};
use crate::rmin::rd_unchecked;

use super::{check_lg, tower, RootKey, Sign, SignList, VirtualRoot};

type Interval = (ExtendedPoint, ExtendedPoint);

/// The walk down the derivative tower that defines every Thom object coded
/// by prefixes of `σ`. With `G_0 = [-∞, +∞]`, level `k` computes
/// `ρ_k = R_k(G_{k-1}, P^{[k]})` and then keeps the right part
/// `[ρ_k, hi]` of `G_{k-1}` when `σ_k = σ_{k-1}`, the left part otherwise.
#[derive(Clone, Debug)]
pub struct ThomPath {
    derivs: Vec<Poly>,
    sigma: SignList,
    rhos: Vec<RealAlgebraic>,
    gs: Vec<Interval>,
}

impl ThomPath {
    fn new(derivs: Vec<Poly>, sigma: SignList) -> Result<Self> {
        let d = derivs.len() - 1;
        if sigma.lg() > d {
            return Err(Error::SignListLength {
                expected: d,
                got: sigma.lg(),
            });
        }
        let mut rhos = Vec::new();
        let mut gs = vec![(ExtendedPoint::NegInfinity, ExtendedPoint::PosInfinity)];
        for k in 1..=(sigma.lg() + 1).min(d) {
            let (lo, hi) = gs[k - 1].clone();
            let rho = rd_unchecked(&lo, &hi, &derivs[k])?;
            if k <= sigma.lg() {
                gs.push(split(lo, hi, &rho, sigma.get(k - 1), sigma.get(k)));
            }
            rhos.push(rho);
        }
        Ok(ThomPath {
            derivs,
            sigma,
            rhos,
            gs,
        })
    }

    pub fn sigma(&self) -> &SignList {
        &self.sigma
    }

    /// `ρ_{σ^{[k-1]}}(P^{[k]})` for `k >= 1`.
    pub fn rho(&self, k: usize) -> &RealAlgebraic {
        &self.rhos[k - 1]
    }

    pub fn rho_count(&self) -> usize {
        self.rhos.len()
    }

    /// `G_{σ^{[k]}}(P^{[k]})`.
    pub fn g(&self, k: usize) -> &Interval {
        &self.gs[k]
    }

    /// Smallest `k` with `v = ρ_k` and `P^{[k]}(v) = 0`.
    pub fn provenance(&self, v: &RealAlgebraic) -> Result<usize> {
        provenance_on(&self.derivs, &self.rhos, v)
    }
}

fn split(
    lo: ExtendedPoint,
    hi: ExtendedPoint,
    rho: &RealAlgebraic,
    prev: Sign,
    next: Sign,
) -> Interval {
    if prev == next {
        (ExtendedPoint::Finite(rho.clone()), hi)
    } else {
        (lo, ExtendedPoint::Finite(rho.clone()))
    }
}

fn provenance_on(derivs: &[Poly], rhos: &[RealAlgebraic], v: &RealAlgebraic) -> Result<usize> {
    rhos.iter()
        .enumerate()
        .find(|(i, r)| *r == v && sign_at(&derivs[i + 1], v).is_eq())
        .map(|(i, _)| i + 1)
        .ok_or_else(|| Error::Invariant(format!("{v} is not an actual Thom root of a derivative")))
}

/// The path of `σ` for `P`; `lg(σ)` may be anything up to `deg P`.
pub fn thom_path(p: &Poly, sigma: &SignList) -> Result<ThomPath> {
    ThomPath::new(tower(p, 0)?, sigma.clone())
}

/// `ρ_σ(P)` for `lg(σ) = d - 1`.
pub fn thom_rho(p: &Poly, sigma: &SignList) -> Result<VirtualRoot> {
    let derivs = tower(p, 1)?;
    let d = derivs.len() - 1;
    check_lg(sigma, d - 1)?;
    let path = ThomPath::new(derivs, sigma.clone())?;
    let value = path.rho(d).clone();
    let level = path.provenance(&value)?;
    Ok(VirtualRoot {
        value,
        level,
        key: RootKey::Code(sigma.clone()),
    })
}

/// `G_σ(P) = [τ^-_σ(P), τ^+_σ(P)]` for `lg(σ) = d`.
pub fn g_interval(p: &Poly, sigma: &SignList) -> Result<Interval> {
    let derivs = tower(p, 0)?;
    let d = derivs.len() - 1;
    check_lg(sigma, d)?;
    let path = ThomPath::new(derivs, sigma.clone())?;
    Ok(path.g(d).clone())
}

/// `τ^ε_σ(P)` for `lg(σ) = d`.
pub fn thom_tau(p: &Poly, sigma: &SignList, eps: Sign) -> Result<ExtendedPoint> {
    let (lo, hi) = g_interval(p, sigma)?;
    Ok(match eps {
        Sign::Minus => lo,
        Sign::Plus => hi,
    })
}

/// Every `ρ_σ(P)`, `lg(σ) = d - 1`, in table order. Shared prefixes are
/// computed once.
pub fn all_thom_roots(p: &Poly) -> Result<Vec<VirtualRoot>> {
    let derivs = tower(p, 1)?;
    let mut out = Vec::with_capacity(1 << (derivs.len() - 2));
    let full = (ExtendedPoint::NegInfinity, ExtendedPoint::PosInfinity);
    descend(&derivs, SignList::root(), full, &mut Vec::new(), &mut out)?;
    Ok(out)
}

fn descend(
    derivs: &[Poly],
    prefix: SignList,
    g: Interval,
    rhos: &mut Vec<RealAlgebraic>,
    out: &mut Vec<VirtualRoot>,
) -> Result<()> {
    let d = derivs.len() - 1;
    let k = prefix.lg() + 1;
    let rho = rd_unchecked(&g.0, &g.1, &derivs[k])?;
    rhos.push(rho.clone());
    if k == d {
        let level = provenance_on(derivs, rhos, &rho)?;
        out.push(VirtualRoot {
            value: rho,
            level,
            key: RootKey::Code(prefix),
        });
    } else {
        let last = prefix.last();
        for next in [-last, last] {
            let child = split(g.0.clone(), g.1.clone(), &rho, last, next);
            descend(derivs, prefix.pushed(next), child, rhos, out)?;
        }
    }
    rhos.pop();
    Ok(())
}

/// Whether `F_σ(P)` is nonempty, decided by testing the weak sign
/// conditions at `τ^+_σ(P)`.
pub fn f_nonempty(p: &Poly, sigma: &SignList) -> Result<bool> {
    let derivs = tower(p, 0)?;
    let d = derivs.len() - 1;
    check_lg(sigma, d)?;
    let path = ThomPath::new(derivs.clone(), sigma.clone())?;
    let top = match &path.g(d).1 {
        ExtendedPoint::PosInfinity => return Ok(true),
        ExtendedPoint::Finite(x) => x.clone(),
        ExtendedPoint::NegInfinity => unreachable!("τ^+ is never -∞"),
    };
    Ok((1..=d).all(|i| sigma.get(i).weakly_matches(sign_at(&derivs[i], &top))))
}

/// Whether `U_σ(P)` is nonempty, i.e. `τ^-_σ(P) < τ^+_σ(P)`.
pub fn u_nonempty(p: &Poly, sigma: &SignList) -> Result<bool> {
    let (lo, hi) = g_interval(p, sigma)?;
    Ok(lo < hi)
}
