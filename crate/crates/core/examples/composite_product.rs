//! Combines colorings of `K_2m` and `K_2k` into one of `K_2mk` and reports
//! the sizes of the pieces each product matching is made of.
//!
//!     cargo run --example composite_product -- 3 5

use interval_kn::bounds::composite_bound;
use interval_kn::coloring::verify_interval;
use interval_kn::constructions::{construct_composite_with_report, Method};
use interval_kn::equivalence::factorization_to_coloring;

fn main() {
    let mut args = std::env::args().skip(1).map(|s| s.parse::<usize>().expect("factor"));
    let m = args.next().unwrap_or(3);
    let k = args.next().unwrap_or(5);
    let fm = Method::ThreeFive.build(m).unwrap();
    let fk = Method::ThreeFive.build(k).unwrap();
    let (wm, wk) = (factorization_to_coloring(&fm).t(), factorization_to_coloring(&fk).t());

    let (product, report) = construct_composite_with_report(&fm, &fk).unwrap();
    let c = factorization_to_coloring(&product);
    assert!(verify_interval(&c).valid);
    println!("K_{} ({wm} colors) x K_{} ({wk} colors) -> K_{}: {} colors", 2 * m, 2 * k, 2 * m * k, c.t());
    println!("expected {}", composite_bound(m, wm, k, wk));
    for p in &report.pieces {
        println!("  F{} i={:<2} j={:<2} pieces {:?} total {}", p.family, p.i, p.j, p.pieces, p.total);
    }
}
