//! Builds the three-five coloring of `K_2n`, verifies it and prints each
//! vertex's spectrum in canonical order.
//!
//!     cargo run --example construct_and_verify -- 6

use interval_kn::coloring::{ordering_and_shift, spectrum, verify_interval};
use interval_kn::constructions::construct_three_five;
use interval_kn::equivalence::factorization_to_coloring;

fn main() {
    let n: usize = std::env::args().nth(1).map_or(6, |s| s.parse().expect("n"));
    let f = construct_three_five(n).expect("n >= 2");
    let c = factorization_to_coloring(&f);
    let report = verify_interval(&c);
    assert!(report.valid, "{:?}", report.failure);

    let (ord, shift) = ordering_and_shift(&c).expect("valid coloring");
    println!("K_{}: interval {}-coloring, {} splitted matchings", 2 * n, c.t(), f.labeled_count());
    println!("shift vector ({shift})");
    for p in 1..=n {
        for v in [ord.u(p), ord.v(p)] {
            let s = spectrum(&c, v);
            println!("  pair {p:>2} vertex {v:>3}: [{}, {}]", s.lo, s.hi);
        }
    }
}
