//! Seeded search for monic polynomials reaching the maximal number of
//! distinct Thom virtual roots. Candidates must have `P*` hyperbolic and
//! square-free. The printed polynomials are frozen in `vroots_core::fixtures`.
//!
//! cargo run --release -p vroots-core --example witness_search

use vroots_core::analysis::{s_of, thom_table};
use vroots_core::oracle::{random_monic_with, rng};
use vroots_core::poly::Poly;
use vroots_core::realalg::real_roots;

fn pstar_hyperbolic_squarefree(p: &Poly) -> bool {
    let ps = p.pstar().expect("monic");
    ps.squarefree_part().deg() == ps.deg() && real_roots(&ps).len() == ps.deg()
}

fn main() {
    let mut g = rng(20240601);
    for d in 2..=5 {
        let mut tries = 0u64;
        loop {
            tries += 1;
            let p = random_monic_with(&mut g, d, 12);
            if !pstar_hyperbolic_squarefree(&p) {
                continue;
            }
            let t = thom_table(&p).expect("monic");
            println!(
                "d = {d}: {p}  distinct = {} / s(d) = {}  after {tries} tries",
                t.distinct_count,
                s_of(d)
            );
            break;
        }
    }
}
