//! The two virtual-root families of a monic polynomial: the r-th virtual
//! roots `ρ_{d,j}` and the Thom virtual roots `ρ_σ` with their intervals
//! `G_σ = [τ^-_σ, τ^+_σ]`.

mod rth;
mod sign_list;
mod thom;

use std::fmt;

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::realalg::RealAlgebraic;

pub use rth::{all_rth_roots, rth_root, rth_tower, RthTower};
pub use thom::{
    all_thom_roots, f_nonempty, g_interval, thom_path, thom_rho, thom_tau, u_nonempty, ThomPath,
};
pub use sign_list::{Sign, SignList};

/// Which member of a family a virtual root is.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum RootKey {
    /// `ρ_{d,j}`.
    Rank(usize),
    /// `ρ_σ` with `lg(σ) = d - 1`.
    Code(SignList),
}

impl fmt::Display for RootKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RootKey::Rank(j) => write!(f, "{j}"),
            RootKey::Code(s) => write!(f, "{}", s.compact()),
        }
    }
}

/// A finite virtual root together with its provenance level: `value` is a
/// root of `P^{[level]}`, and `level` is the smallest such derivative level
/// at which it arises as an actual root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VirtualRoot {
    pub value: RealAlgebraic,
    pub level: usize,
    pub key: RootKey,
}

/// Monic input of degree at least `min_degree`, with its derivative tower
/// `[P^{[0]}, ..., P^{[d]}]`.
pub(crate) fn tower(p: &Poly, min_degree: usize) -> Result<Vec<Poly>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !p.is_monic() {
        return Err(Error::NotMonic);
    }
    if p.deg() < min_degree {
        return Err(Error::BadDegree(p.deg()));
    }
    p.normalized_derivatives()
}

pub(crate) fn check_lg(sigma: &SignList, expected: usize) -> Result<()> {
    if sigma.lg() != expected {
        return Err(Error::SignListLength {
            expected,
            got: sigma.lg(),
        });
    }
    Ok(())
}

/// Provenance of a virtual root of `P`, recomputed from its key.
pub fn provenance(p: &Poly, v: &VirtualRoot) -> Result<usize> {
    match &v.key {
        RootKey::Rank(_) => rth::rank_provenance(&tower(p, 1)?, &v.value),
        RootKey::Code(sigma) => {
            let path = thom_path(p, sigma)?;
            path.provenance(&v.value)
        }
    }
}
