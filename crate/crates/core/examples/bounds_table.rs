//! Lower, exact and upper values of `W(K_2n)` and the `m(k, r)` table.
//!
//!     cargo run --release --example bounds_table -- 18

use interval_kn::bounds::reference_formulas;
use interval_kn::table::{bounds_table, render_bounds_table, render_m_table};

fn main() {
    let max_n: usize = std::env::args().nth(1).map_or(18, |s| s.parse().expect("max n"));
    let columns = bounds_table(max_n);
    println!("{}", render_bounds_table(&columns));
    println!("{}", render_m_table(4, 7));

    for col in &columns {
        let r = reference_formulas(col.n);
        if r.conjecture_log < col.lower {
            println!("n={}: conjectured {} is below the constructed {}", col.n, r.conjecture_log, col.lower);
        }
    }
}
