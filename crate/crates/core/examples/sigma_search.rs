//! Maximum number of splitted matchings over the 1-factorizations of K_2n,
//! which gives W(K_2n) = 2n - 1 + σ.
//!
//!     cargo run --release --example sigma_search -- 4
//!     INTERVAL_KN_THREADS=8 cargo run --release --example sigma_search -- 5 --seconds 60

use std::sync::Arc;
use std::time::{Duration, Instant};

use interval_kn::search::{sigma_search_with, Progress, SearchBudget, SigmaOptions};

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let n: usize = args.first().map_or(4, |s| s.parse().expect("n"));
    let mut budget = SearchBudget::unlimited()
        .with_progress(Arc::new(|p: &Progress| {
            eprintln!("  {} nodes, best {:?}, {:.1}s", p.nodes, p.best, p.elapsed.as_secs_f64())
        }));
    budget.progress_every = Some(1 << 20);
    let mut opts = SigmaOptions::default();
    let mut rest = args.iter().skip(1);
    while let Some(flag) = rest.next() {
        match flag.as_str() {
            "--seconds" => {
                let s = rest.next().expect("seconds").parse().expect("seconds");
                budget.time_limit = Some(Duration::from_secs(s));
            }
            "--seed" => budget.seed = Some(rest.next().expect("seed").parse().expect("seed")),
            "--no-pruning" => opts = SigmaOptions::exhaustive(),
            other => panic!("unknown flag {other}"),
        }
    }

    let start = Instant::now();
    let r = sigma_search_with(n, &budget, opts).expect("valid budget");
    println!(
        "n={n}: sigma {} ({}), W(K_{}) {} {}",
        r.sigma,
        if r.exhaustive { "optimal" } else { "best found" },
        2 * n,
        if r.exhaustive { "=" } else { ">=" },
        2 * n - 1 + r.sigma
    );
    println!("{} nodes, {} complete factorizations, {:.2}s", r.nodes, r.leaves, start.elapsed().as_secs_f64());
    for m in r.witness.matchings() {
        let edges: Vec<String> = m.matching.edges().iter().map(|e| e.to_string()).collect();
        println!("  {:<9} {}", m.label.to_string(), edges.join(" "));
    }
}
