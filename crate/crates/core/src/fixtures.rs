//! Frozen polynomials with `P*` hyperbolic and square-free, found by
//! `examples/witness_search.rs` (seed 20240601). Each has exactly
//! `1 + d(d-1)/2` distinct Thom virtual roots.

use crate::poly::Poly;

const WITNESSES: [&[i64]; 4] = [
    &[-5, -12, 1],
    &[3, 9, -7, 1],
    &[0, 7, -8, -12, 1],
    &[9, 12, -12, -8, 3, 1],
];

/// The witness of degree `d`, for `2 <= d <= 5`.
pub fn witness(d: usize) -> Option<Poly> {
    (2..=5)
        .contains(&d)
        .then(|| Poly::from_ints(WITNESSES[d - 2]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::{s_of, thom_table};

    #[test]
    fn witnesses_reach_the_bound() {
        for d in 2..=5 {
            let p = witness(d).unwrap();
            assert_eq!(p.deg(), d);
            assert_eq!(thom_table(&p).unwrap().distinct_count, s_of(d));
        }
        assert!(witness(1).is_none());
        assert!(witness(6).is_none());
    }
}
