//! Brute-force references and seeded instance generators for tests. Nothing
//! here calls the minimizer or the virtual-root code.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::poly::{int, Poly, Rational, SturmSequence};
use crate::realalg::RealAlgebraic;

/// The seeded generator used everywhere in tests: ChaCha8 seeded with
/// `seed_from_u64`.
pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `samples` equally spaced points from `lo` to `hi`, both included.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GridSpec {
    lo: Rational,
    hi: Rational,
    samples: usize,
}

impl GridSpec {
    pub fn new(lo: Rational, hi: Rational, samples: usize) -> Result<Self> {
        if lo >= hi {
            return Err(Error::Domain(format!("empty grid [{lo}, {hi}]")));
        }
        if samples < 2 {
            return Err(Error::Domain("a grid needs at least two samples".into()));
        }
        Ok(GridSpec { lo, hi, samples })
    }

    pub fn step(&self) -> Rational {
        (&self.hi - &self.lo) / int(self.samples as i64 - 1)
    }

    pub fn points(&self) -> impl Iterator<Item = Rational> + '_ {
        let step = self.step();
        (0..self.samples).map(move |i| &self.lo + &step * int(i as i64))
    }
}

/// The first grid point where `|P|` is smallest, compared exactly.
///
/// With a common denominator `D`, the grid points are `(A + kS) / D` and
/// `D^deg P(x_k)` is an integer polynomial in `A + kS`, so the comparison
/// runs on integers.
pub fn grid_argmin_abs(p: &Poly, g: &GridSpec) -> Rational {
    let step = g.step();
    let den = g.lo.denom().lcm(step.denom());
    let a = (&g.lo * Rational::from_integer(den.clone())).to_integer();
    let s = (&step * Rational::from_integer(den.clone())).to_integer();
    let c = p.primitive_integer();
    if c.is_empty() {
        return g.lo.clone();
    }
    let deg = c.len() - 1;
    // e_i = c_i D^(deg - i)
    let mut e = c.clone();
    let mut pow = BigInt::one();
    for i in (0..deg).rev() {
        pow *= &den;
        e[i] *= &pow;
    }
    let mut best: Option<(usize, BigInt)> = None;
    for k in 0..g.samples {
        let t = &a + &s * BigInt::from(k);
        let mut acc = e[deg].clone();
        for ei in e[..deg].iter().rev() {
            acc = acc * &t + ei;
        }
        let v = acc.abs();
        if best.as_ref().is_none_or(|(_, b)| v < *b) {
            best = Some((k, v));
        }
    }
    let k = best.expect("grid has points").0;
    &g.lo + step * int(k as i64)
}

/// `∏ (x - r)`.
pub fn hyperbolic(roots: &[Rational]) -> Poly {
    roots
        .iter()
        .fold(Poly::one(), |acc, r| &acc * &Poly::linear(r))
}

/// Monic polynomial of degree `d` with integer coefficients drawn
/// uniformly from `[-bound, bound]`.
pub fn random_monic(d: usize, bound: i64, seed: u64) -> Poly {
    random_monic_with(&mut rng(seed), d, bound)
}

pub fn random_monic_with<R: Rng>(rng: &mut R, d: usize, bound: i64) -> Poly {
    let mut c: Vec<i64> = (0..d).map(|_| rng.gen_range(-bound..=bound)).collect();
    c.push(1);
    Poly::from_ints(&c)
}

/// Monic polynomial whose lower coefficients are rationals `n / den` with
/// `|n| <= num_bound` and `1 <= den <= max_den`.
pub fn random_monic_rational<R: Rng>(rng: &mut R, d: usize, num_bound: i64, max_den: i64) -> Poly {
    let mut c: Vec<Rational> = (0..d)
        .map(|_| random_rational(rng, num_bound, max_den))
        .collect();
    c.push(int(1));
    Poly::new(c)
}

pub fn random_rational<R: Rng>(rng: &mut R, num_bound: i64, max_den: i64) -> Rational {
    let n = rng.gen_range(-num_bound..=num_bound);
    let d = rng.gen_range(1..=max_den);
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// `n` pairwise distinct random rationals.
pub fn random_distinct_rationals<R: Rng>(
    rng: &mut R,
    n: usize,
    num_bound: i64,
    max_den: i64,
) -> Vec<Rational> {
    let mut out: Vec<Rational> = Vec::with_capacity(n);
    while out.len() < n {
        let q = random_rational(rng, num_bound, max_den);
        if !out.contains(&q) {
            out.push(q);
        }
    }
    out
}

/// Isolates every real root of the square-free part of `P` by plain Sturm
/// bisection of `[-B, B]`, each interval narrower than `width`.
pub fn numeric_real_roots(p: &Poly, width: &Rational) -> Vec<RealAlgebraic> {
    assert!(!p.is_zero(), "zero polynomial has no isolated roots");
    let s = p.squarefree_part();
    if s.deg() == 0 {
        return Vec::new();
    }
    let sturm = SturmSequence::new(&s);
    let b = cauchy_bound(&s);
    let mut out = Vec::new();
    let lo = -b.clone();
    if s.eval(&lo).is_zero() {
        out.push(RealAlgebraic::from_rational(lo.clone()));
    }
    // Work list of half-open intervals (l, r] with their root counts.
    let mut stack = vec![(lo, b)];
    while let Some((l, r)) = stack.pop() {
        let n = sturm.count(Some(&l), Some(&r));
        if n == 0 {
            continue;
        }
        if n == 1 && &r - &l < *width {
            let root = if s.eval(&r).is_zero() {
                RealAlgebraic::from_rational(r)
            } else {
                RealAlgebraic::new(&s, l, r).expect("one root in the interval")
            };
            out.push(root);
            continue;
        }
        let m = (&l + &r) / int(2);
        stack.push((m.clone(), r));
        stack.push((l, m));
    }
    out.sort();
    out
}

/// `1 + max |c_i / c_d|`, a bound on the absolute value of every root.
fn cauchy_bound(p: &Poly) -> Rational {
    let lc = p.leading_coeff().expect("nonzero polynomial");
    p.coeffs()[..p.deg()]
        .iter()
        .map(|c| (c / lc).abs())
        .fold(Rational::zero(), |a, b| if b > a { b } else { a })
        + int(1)
}
