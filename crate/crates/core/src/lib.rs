//! Virtual roots of real univariate polynomials, computed exactly.
//!
//! Every monic polynomial gets `d` r-th virtual roots `ρ_{d,j}` and
//! `2^{d-1}` Thom virtual roots `ρ_σ`, continuous in the coefficients and
//! equal to actual roots whenever those exist. Values are real algebraic
//! numbers represented by a square-free defining polynomial and an
//! isolating interval with rational endpoints.

pub mod analysis;
pub mod check;
pub mod error;
pub mod fixtures;
pub mod oracle;
pub mod poly;
pub mod realalg;
pub mod rmin;
pub mod vroots;

pub use error::{Error, Result};
pub use poly::{Poly, Rational};
pub use realalg::{ExtendedPoint, RealAlgebraic};
pub use rmin::{rd, MonotoneWindow};
pub use vroots::{RootKey, Sign, SignList, VirtualRoot};

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_send_sync<T: Send + Sync>() {}

    #[test]
    fn shareable_between_threads() {
        assert_send_sync::<Poly>();
        assert_send_sync::<RealAlgebraic>();
        assert_send_sync::<ExtendedPoint>();
        assert_send_sync::<MonotoneWindow>();
        assert_send_sync::<VirtualRoot>();
        assert_send_sync::<vroots::RthTower>();
        assert_send_sync::<vroots::ThomPath>();
        assert_send_sync::<analysis::ThomTable>();
        assert_send_sync::<check::Suite>();
    }
}
