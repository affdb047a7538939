use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::realalg::{sign_at, ExtendedPoint, RealAlgebraic};
use crate::rmin::rd_unchecked;

use super::{tower, RootKey, VirtualRoot};

/// All r-th virtual roots of every normalized derivative of `P`, built
/// bottom-up so that each level reuses the one below it.
#[derive(Clone, Debug)]
pub struct RthTower {
    derivs: Vec<Poly>,
    levels: Vec<Vec<RealAlgebraic>>,
}

impl RthTower {
    pub fn new(p: &Poly) -> Result<Self> {
        let derivs = tower(p, 0)?;
        let d = p.deg();
        let mut out = RthTower {
            derivs,
            levels: vec![Vec::new()],
        };
        for k in 1..=d {
            let mut level = Vec::with_capacity(k);
            for j in 1..=k as i64 {
                let a = out.root_at(k - 1, j - 1);
                let b = out.root_at(k - 1, j);
                level.push(rd_unchecked(&a, &b, &out.derivs[k])?);
            }
            out.levels.push(level);
        }
        Ok(out)
    }

    pub fn degree(&self) -> usize {
        self.derivs.len() - 1
    }

    /// `[P^{[0]}, ..., P^{[d]}]`.
    pub fn derivatives(&self) -> &[Poly] {
        &self.derivs
    }

    /// `[ρ_{k,1}, ..., ρ_{k,k}]` of `P^{[k]}`.
    pub fn level(&self, k: usize) -> &[RealAlgebraic] {
        &self.levels[k]
    }

    /// `ρ_{k,j}(P^{[k]})` for any integer `j`.
    pub fn root_at(&self, k: usize, j: i64) -> ExtendedPoint {
        if j <= 0 {
            ExtendedPoint::NegInfinity
        } else if j as usize > k {
            ExtendedPoint::PosInfinity
        } else {
            ExtendedPoint::Finite(self.levels[k][j as usize - 1].clone())
        }
    }

    /// `ρ_{d,j}(P)`.
    pub fn root(&self, j: i64) -> ExtendedPoint {
        self.root_at(self.degree(), j)
    }

    /// The window `[ρ_{d-1,j-1}(P^{[d-1]}), ρ_{d-1,j}(P^{[d-1]})]` on which
    /// `ρ_{d,j}(P)` minimizes `|P|`.
    pub fn window(&self, j: i64) -> (ExtendedPoint, ExtendedPoint) {
        let d = self.degree();
        assert!(d >= 1, "no window in degree zero");
        (self.root_at(d - 1, j - 1), self.root_at(d - 1, j))
    }

    pub fn roots(&self) -> Result<Vec<VirtualRoot>> {
        let d = self.degree();
        self.levels[d]
            .iter()
            .enumerate()
            .map(|(i, v)| {
                Ok(VirtualRoot {
                    value: v.clone(),
                    level: rank_provenance(&self.derivs, v)?,
                    key: RootKey::Rank(i + 1),
                })
            })
            .collect()
    }
}

pub fn rth_tower(p: &Poly) -> Result<RthTower> {
    RthTower::new(p)
}

/// `ρ_{d,j}(P)`: `-∞` for `j <= 0`, `+∞` for `j > d`.
pub fn rth_root(p: &Poly, j: i64) -> Result<ExtendedPoint> {
    let d = tower(p, 0)?.len() as i64 - 1;
    if j <= 0 {
        return Ok(ExtendedPoint::NegInfinity);
    }
    if j > d {
        return Ok(ExtendedPoint::PosInfinity);
    }
    Ok(RthTower::new(p)?.root(j))
}

/// `[ρ_{d,1}(P), ..., ρ_{d,d}(P)]`, nondecreasing.
pub fn all_rth_roots(p: &Poly) -> Result<Vec<VirtualRoot>> {
    if p.deg() == 0 && !p.is_zero() {
        return Err(Error::BadDegree(0));
    }
    RthTower::new(p)?.roots()
}

/// Smallest `r >= 1` with `P^{[r]}(v) = 0`.
pub(crate) fn rank_provenance(derivs: &[Poly], v: &RealAlgebraic) -> Result<usize> {
    (1..derivs.len())
        .find(|&r| sign_at(&derivs[r], v).is_eq())
        .ok_or_else(|| Error::Invariant(format!("{v} is not a root of any derivative")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{int, rat};
    use crate::realalg::real_roots;

    fn p(c: &[i64]) -> Poly {
        Poly::from_ints(c)
    }

    fn values(p: &Poly) -> Vec<RealAlgebraic> {
        all_rth_roots(p).unwrap().into_iter().map(|v| v.value).collect()
    }

    fn ints(xs: &[i64]) -> Vec<RealAlgebraic> {
        xs.iter().map(|&x| RealAlgebraic::from_int(x)).collect()
    }

    #[test]
    fn spec_examples() {
        let cubic = p(&[-6, 11, -6, 1]);
        assert_eq!(rth_root(&cubic, 2).unwrap(), ExtendedPoint::rational(int(2)));
        let q = p(&[1, 0, 1]);
        assert_eq!(rth_root(&q, 1).unwrap(), ExtendedPoint::rational(int(0)));
        assert_eq!(rth_root(&q, 2).unwrap(), ExtendedPoint::rational(int(0)));
        assert_eq!(rth_root(&cubic, 0).unwrap(), ExtendedPoint::NegInfinity);
        assert_eq!(rth_root(&cubic, -3).unwrap(), ExtendedPoint::NegInfinity);
        assert_eq!(rth_root(&cubic, 4).unwrap(), ExtendedPoint::PosInfinity);

        // x^2 - a has ρ_{2,2} = sqrt(a).
        let sqrt3 = real_roots(&p(&[-3, 0, 1])).pop().unwrap();
        assert_eq!(rth_root(&p(&[-3, 0, 1]), 2).unwrap(), ExtendedPoint::Finite(sqrt3));
        assert_eq!(rth_root(&p(&[-9, 0, 1]), 2).unwrap(), ExtendedPoint::rational(int(3)));

        assert_eq!(values(&p(&[-5, 1])), ints(&[5]));
        assert_eq!(values(&p(&[0, 0, -4, 0, 1])), ints(&[-2, 0, 0, 2]));
        assert_eq!(values(&q), ints(&[0, 0]));
    }

    #[test]
    fn provenance_levels() {
        let roots = all_rth_roots(&p(&[1, 0, 1])).unwrap();
        assert!(roots.iter().all(|v| v.level == 1));
        let roots = all_rth_roots(&p(&[-8, 14, -7, 1])).unwrap();
        assert!(roots.iter().all(|v| v.level == 3));
        assert_eq!(roots[1].key, RootKey::Rank(2));
    }

    #[test]
    fn errors() {
        assert_eq!(rth_root(&p(&[1, 2]), 1).unwrap_err(), Error::NotMonic);
        assert_eq!(all_rth_roots(&Poly::one()).unwrap_err(), Error::BadDegree(0));
        assert_eq!(rth_root(&Poly::one(), 1).unwrap(), ExtendedPoint::PosInfinity);
    }

    #[test]
    fn windows_contain_roots() {
        let poly = Poly::new(vec![rat(1, 3), int(-2), int(0), int(1), int(1)]);
        let t = rth_tower(&poly).unwrap();
        for j in 1..=4 {
            let (a, b) = t.window(j);
            let v = t.root(j);
            assert!(a <= v && v <= b);
        }
    }
}
