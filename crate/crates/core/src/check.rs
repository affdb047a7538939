//! Per-polynomial invariant suite. Each check returns the list of
//! violations it found; an empty list means the invariant holds.

use std::cmp::Ordering;

use num_traits::ToPrimitive;

use crate::analysis::{in_rth_gap, in_u, infsup_rho, j_of_sigma, s_of, sample_in_u, distinct_count};
use crate::error::Result;
use crate::oracle::{random_rational, rng};
use crate::poly::{Poly, Rational};
use crate::realalg::{rationals_between, sign_at, ExtendedPoint};
use crate::vroots::{
    all_thom_roots, g_interval, thom_path, RootKey, RthTower, Sign, SignList, VirtualRoot,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckItem {
    pub name: &'static str,
    pub violations: Vec<String>,
}

impl CheckItem {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub items: Vec<CheckItem>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.items.iter().all(CheckItem::passed)
    }
}

/// Everything the checks share, computed once.
pub struct Suite {
    pub poly: Poly,
    pub derivs: Vec<Poly>,
    pub rth: RthTower,
    /// `thom[k]` holds every `ρ_μ(P^{[k]})`, `lg(μ) = k - 1`; `thom[0]` is empty.
    pub thom: Vec<Vec<VirtualRoot>>,
}

impl Suite {
    pub fn new(p: &Poly) -> Result<Self> {
        let rth = RthTower::new(p)?;
        let derivs = rth.derivatives().to_vec();
        let mut thom = vec![Vec::new()];
        for q in &derivs[1..] {
            thom.push(all_thom_roots(q)?);
        }
        Ok(Suite {
            poly: p.clone(),
            derivs,
            rth,
            thom,
        })
    }

    pub fn degree(&self) -> usize {
        self.derivs.len() - 1
    }

    pub fn rth_roots(&self) -> Result<Vec<VirtualRoot>> {
        self.rth.roots()
    }

    pub fn thom_roots(&self) -> &[VirtualRoot] {
        &self.thom[self.degree()]
    }

    /// `ρ_{d,r}(P) <= ρ_{d-1,r}(P') <= ρ_{d,r+1}(P)` for every `r`.
    pub fn interlacing(&self) -> Vec<String> {
        let d = self.degree();
        let mut out = Vec::new();
        for r in 0..=d as i64 {
            let a = self.rth.root_at(d, r);
            let m = self.rth.root_at(d - 1, r);
            let b = self.rth.root_at(d, r + 1);
            if a > m || m > b {
                out.push(format!("r = {r}: {a} <= {m} <= {b} fails"));
            }
        }
        out
    }

    /// `(-1)^{d+r} P > 0` at `samples` rationals of each nonempty gap
    /// `(ρ_{d,r}, ρ_{d,r+1})`.
    pub fn sign_property(&self, samples: usize) -> Vec<String> {
        let d = self.degree();
        let mut out = Vec::new();
        for r in 0..=d as i64 {
            let a = self.rth.root_at(d, r);
            let b = self.rth.root_at(d, r + 1);
            if a.compare(&b) != Ordering::Less {
                continue;
            }
            let want = if (d as i64 + r) % 2 == 0 {
                Ordering::Greater
            } else {
                Ordering::Less
            };
            for x in rationals_between(&a, &b, samples).expect("nonempty gap") {
                if self.poly.sign_at(&x) != want {
                    out.push(format!("r = {r}: wrong sign of P at {x}"));
                }
            }
        }
        out
    }

    /// Every virtual root of both families is a root of `P*`.
    pub fn pstar_membership(&self) -> Result<Vec<String>> {
        let pstar = self.poly.pstar()?;
        let mut out = Vec::new();
        for v in self.rth_roots()?.iter().chain(self.thom_roots()) {
            if !sign_at(&pstar, &v.value).is_eq() {
                out.push(format!("{} = {} is not a root of P*", v.key, v.value));
            }
        }
        Ok(out)
    }

    /// The inf-sup formula reproduces every `ρ_σ(P)`.
    pub fn bridge(&self) -> Result<Vec<String>> {
        let mut out = Vec::new();
        for v in self.thom_roots() {
            let RootKey::Code(s) = &v.key else { continue };
            let w = infsup_rho(&self.poly, s)?;
            if w != v.value {
                out.push(format!("{s}: inf-sup gives {w}, ρ_σ is {}", v.value));
            }
        }
        Ok(out)
    }

    /// At most `s(d)` distinct Thom virtual roots.
    pub fn thom_count(&self) -> Vec<String> {
        let n = distinct_count(self.thom_roots().iter().map(|v| &v.value));
        let bound = s_of(self.degree());
        if n > bound {
            vec![format!("{n} distinct Thom roots exceed s(d) = {bound}")]
        } else {
            Vec::new()
        }
    }

    /// Ordering rule between `ρ_σ(P)` and `ρ_μ(P^{[k]})`: the sign of the
    /// difference is `σ_{i-1} σ_i` at the first index `i` where the codes
    /// differ, or zero.
    pub fn thom_ordering(&self) -> Vec<String> {
        let d = self.degree();
        let mut out = Vec::new();
        for v in self.thom_roots() {
            let RootKey::Code(sigma) = &v.key else { continue };
            for k in 1..=d {
                for w in &self.thom[k] {
                    let RootKey::Code(mu) = &w.key else { continue };
                    if k == d && mu == sigma {
                        continue;
                    }
                    let i = (1..=mu.lg())
                        .find(|&i| sigma.get(i) != mu.get(i))
                        .unwrap_or(mu.lg() + 1);
                    let predicted = (sigma.get(i - 1) * sigma.get(i)).as_ordering();
                    let actual = v.value.compare(&w.value);
                    if actual.is_ne() && actual != predicted {
                        out.push(format!(
                            "ρ_{sigma}(P) vs ρ_{mu}(P^[{k}]): expected {predicted:?}, got {actual:?}"
                        ));
                    }
                }
            }
        }
        out
    }

    /// Sign of `ρ_σ(P) - u` for rationals `u` from the derivative signs at
    /// `u`. Points where some `P^{[i]}`, `i >= 1`, vanishes are skipped.
    pub fn point_rule(&self, us: &[Rational]) -> Vec<String> {
        let d = self.degree();
        let mut out = Vec::new();
        for u in us {
            let signs: Vec<Ordering> = self.derivs.iter().map(|q| q.sign_at(u)).collect();
            if signs[1..].iter().any(|s| s.is_eq()) {
                continue;
            }
            for v in self.thom_roots() {
                let RootKey::Code(sigma) = &v.key else { continue };
                let predicted = match (1..d).find(|&i| !sigma.get(i).strictly_matches(signs[i])) {
                    Some(i) => (sigma.get(i - 1) * sigma.get(i)).as_ordering(),
                    None => {
                        let pu = Sign::from_ordering(signs[d]).expect("nonzero");
                        (-(sigma.get(d - 1) * pu)).as_ordering()
                    }
                };
                let actual = v.value.cmp_rational(u);
                if actual != predicted {
                    out.push(format!(
                        "ρ_{sigma}(P) - {u}: expected {predicted:?}, got {actual:?}"
                    ));
                }
            }
        }
        out
    }

    /// For every `σ` of length `d`: infinite ends of `G_σ` only for the
    /// all-plus and alternating codes, `U` nonempty implies `F` nonempty,
    /// and a sample of a nonempty `U_σ` meets every strict condition and
    /// lies in the r-th gap `j(σ)`.
    pub fn membership(&self) -> Result<Vec<String>> {
        let d = self.degree();
        let mut out = Vec::new();
        for sigma in SignList::enumerate(d) {
            let path = thom_path(&self.poly, &sigma)?;
            let (lo, hi) = path.g(d).clone();
            let lo_inf = matches!(lo, ExtendedPoint::NegInfinity);
            let hi_inf = matches!(hi, ExtendedPoint::PosInfinity);
            if lo_inf != sigma.is_alternating() || hi_inf != sigma.is_all_plus() {
                out.push(format!("{sigma}: unexpected endpoints [{lo}, {hi}]"));
            }
            let f = crate::vroots::f_nonempty(&self.poly, &sigma)?;
            let u = lo < hi;
            if u && !f {
                out.push(format!("{sigma}: U nonempty but F empty"));
            }
            if let Some(x) = sample_in_u(&self.poly, &sigma)? {
                if !in_u(&self.poly, &sigma, &x)? {
                    out.push(format!("{sigma}: sample {x} violates a strict sign"));
                }
                if !in_rth_gap(&self.poly, j_of_sigma(&sigma), &x)? {
                    out.push(format!("{sigma}: sample {x} outside U_(d,j(σ))"));
                }
            }
        }
        Ok(out)
    }

    /// Each `ρ_σ(P)` lies in `G_σ(P^{[d-1]})` and each `ρ_{d,j}(P)` in its
    /// defining window.
    pub fn recursion(&self) -> Result<Vec<String>> {
        let d = self.degree();
        let mut out = Vec::new();
        for v in self.thom_roots() {
            let RootKey::Code(sigma) = &v.key else { continue };
            let (lo, hi) = g_interval(&self.derivs[d - 1], sigma)?;
            let x = ExtendedPoint::Finite(v.value.clone());
            if x < lo || x > hi {
                out.push(format!("ρ_{sigma} = {} outside [{lo}, {hi}]", v.value));
            }
        }
        for j in 1..=d as i64 {
            let (lo, hi) = self.rth.window(j);
            let x = self.rth.root(j);
            if x < lo || x > hi {
                out.push(format!("ρ_(d,{j}) = {x} outside [{lo}, {hi}]"));
            }
        }
        Ok(out)
    }
}

/// Runs every check on `P`. `seed` drives the random points of the point
/// rule.
pub fn check_polynomial(p: &Poly, seed: u64) -> Result<CheckReport> {
    let suite = Suite::new(p)?;
    let mut g = rng(seed);
    let bound = p.root_bound()?;
    // Points spread over a little more than the root bound.
    let scale = bound.ceil().to_integer().to_i64().unwrap_or(1000).clamp(1, 1000);
    let us: Vec<Rational> = (0..24)
        .map(|_| random_rational(&mut g, 5 * scale, 4))
        .collect();
    let items = vec![
        CheckItem {
            name: "interlacing",
            violations: suite.interlacing(),
        },
        CheckItem {
            name: "sign-property",
            violations: suite.sign_property(10),
        },
        CheckItem {
            name: "pstar-membership",
            violations: suite.pstar_membership()?,
        },
        CheckItem {
            name: "bridge-identity",
            violations: suite.bridge()?,
        },
        CheckItem {
            name: "thom-count",
            violations: suite.thom_count(),
        },
        CheckItem {
            name: "thom-ordering",
            violations: suite.thom_ordering(),
        },
        CheckItem {
            name: "point-comparison",
            violations: suite.point_rule(&us),
        },
        CheckItem {
            name: "sign-condition-sets",
            violations: suite.membership()?,
        },
        CheckItem {
            name: "recursion",
            violations: suite.recursion()?,
        },
    ];
    Ok(CheckReport { items })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples_pass() {
        for c in [&[-6, 11, -6, 1][..], &[1, 0, 0, 0, 1], &[1, 0, 1], &[-5, 1], &[0, 0, 0, 0, 0, 1]] {
            let report = check_polynomial(&Poly::from_ints(c), 1).unwrap();
            for item in &report.items {
                assert!(item.passed(), "{:?} {}: {:?}", c, item.name, item.violations);
            }
        }
    }

    #[test]
    fn seed_is_deterministic() {
        let p = Poly::from_ints(&[3, -1, -5, 0, 1]);
        assert_eq!(check_polynomial(&p, 9).unwrap(), check_polynomial(&p, 9).unwrap());
    }
}
