//! Finds an interval coloring with a given shift vector.
//!
//!     cargo run --release --example realize_shift -- 6 1,1,3,0,0
//!     cargo run --release --example realize_shift -- 11 1,2,1,3,1,1,3,1,2,1 --seconds 600 --seed 7

use std::time::{Duration, Instant};

use interval_kn::coloring::{verify_interval, ShiftVector};
use interval_kn::search::{realize_shift, Realization, SearchBudget};

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let n: usize = args.first().map_or(6, |s| s.parse().expect("n"));
    let target: ShiftVector = args.get(1).map_or("1,1,3,0,0", String::as_str).parse().expect("shift vector");
    let mut budget = SearchBudget::unlimited().with_time(Duration::from_secs(60));
    let mut rest = args.iter().skip(2);
    while let Some(flag) = rest.next() {
        let value = rest.next().expect("flag value");
        match flag.as_str() {
            "--seconds" => budget.time_limit = Some(Duration::from_secs(value.parse().expect("seconds"))),
            "--seed" => budget.seed = Some(value.parse().expect("seed")),
            "--nodes" => budget.node_limit = Some(value.parse().expect("nodes")),
            other => panic!("unknown flag {other}"),
        }
    }

    let start = Instant::now();
    match realize_shift(n, &target, &budget).expect("target passes the filters") {
        Realization::Found(c) => {
            let report = verify_interval(&c);
            println!("K_{}: interval {}-coloring with shift ({target}), verified: {}", 2 * n, c.t(), report.valid);
            for v in 0..2 * n {
                let s = &report.spectra[v];
                println!("  vertex {v:>2}: colors {}..={}", s.lo, s.hi);
            }
        }
        Realization::Infeasible { nodes } => println!("no coloring has shift ({target}); {nodes} nodes"),
        Realization::NotFound { nodes } => println!("budget exhausted after {nodes} nodes"),
    }
    println!("{:.2}s", start.elapsed().as_secs_f64());
}
