//! Smallest total shift with no filter-feasible vector, for each n, next to
//! the closed-form upper bound.
//!
//!     cargo run --release --example certify_upper_bounds -- 12

use std::time::Instant;

use interval_kn::bounds::{certified_upper_bound, upper_bound};

fn main() {
    let max_n: usize = std::env::args().nth(1).map_or(12, |s| s.parse().expect("max n"));
    println!("{:>3} {:>6} {:>10} {:>10} {:>12} {:>9}", "n", "total", "certified", "closed", "examined", "seconds");
    for n in 1..=max_n {
        let start = Instant::now();
        let cert = certified_upper_bound(n);
        println!(
            "{:>3} {:>6} {:>10} {:>10} {:>12} {:>9.3}",
            n,
            cert.total,
            cert.claimed_bound.expect("first empty total"),
            upper_bound(n),
            cert.examined,
            start.elapsed().as_secs_f64()
        );
    }
}
