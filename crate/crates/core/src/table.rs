//! The bounds table for `W(K_2n)` and the `m(k, r)` table.

use std::fmt::Write;

use crate::bounds::{certified_upper_bound, lower_bound, m_filter, upper_bound};

/// Largest `n` whose filter certificate is computed for the table.
pub const CERTIFIED_MAX_N: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundsColumn {
    pub n: usize,
    pub lower: u32,
    /// Set when the lower bound meets the best upper bound.
    pub exact: Option<u32>,
    pub upper: u32,
}

pub fn bounds_table(max_n: usize) -> Vec<BoundsColumn> {
    (1..=max_n)
        .map(|n| {
            let lower = lower_bound(n);
            let upper = upper_bound(n);
            let mut best = upper;
            if n <= CERTIFIED_MAX_N {
                if let Some(c) = certified_upper_bound(n).claimed_bound {
                    best = best.min(c);
                }
            }
            BoundsColumn {
                n,
                lower,
                exact: (lower == best).then_some(lower),
                upper,
            }
        })
        .collect()
}

pub fn render_bounds_table(cols: &[BoundsColumn]) -> String {
    let width = 4;
    let mut out = String::new();
    let row = |out: &mut String, label: &str, cells: &mut dyn Iterator<Item = String>| {
        write!(out, "{label:<8}|").unwrap();
        for c in cells {
            write!(out, "{c:>width$}").unwrap();
        }
        out.push('\n');
    };
    row(&mut out, "n", &mut cols.iter().map(|c| c.n.to_string()));
    out.push_str(&"-".repeat(9 + width * cols.len()));
    out.push('\n');
    row(&mut out, "W >=", &mut cols.iter().map(|c| c.lower.to_string()));
    row(&mut out, "W =", &mut cols.iter().map(|c| c.exact.map_or(String::new(), |x| x.to_string())));
    row(&mut out, "W <=", &mut cols.iter().map(|c| c.upper.to_string()));
    out
}

/// `m(k, r)` for `k <= max_k`, `r <= max_r`; rows are `r`, columns `k`.
pub fn render_m_table(max_k: usize, max_r: u32) -> String {
    let width = 14;
    let mut out = String::new();
    write!(out, "{:>4} |", "r\\k").unwrap();
    for k in 1..=max_k {
        write!(out, "{k:>width$}").unwrap();
    }
    out.push('\n');
    for r in 0..=max_r {
        write!(out, "{r:>4} |").unwrap();
        for k in 1..=max_k {
            let cell = m_filter(k, r).map_or(String::new(), |m| {
                let v: Vec<String> = m.vector.iter().map(u32::to_string).collect();
                format!("{} ({})", m.value, v.join(","))
            });
            write!(out, "{cell:>width$}").unwrap();
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_cells() {
        let t = bounds_table(18);
        let exact: Vec<usize> = t.iter().filter(|c| c.exact.is_some()).map(|c| c.n).collect();
        assert_eq!(exact, [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 16]);
        assert_eq!(t[6].exact, Some(21));
        assert_eq!(t[6].upper, 22);
    }

    #[test]
    fn single_column() {
        let s = render_bounds_table(&bounds_table(1));
        let cells: Vec<&str> = s.lines().filter_map(|l| l.split('|').nth(1)).map(str::trim).collect();
        assert_eq!(cells, ["1", "1", "1", "1"]);
    }

    #[test]
    fn m_table_has_table_one_cells() {
        let s = render_m_table(4, 7);
        assert!(s.contains("20 (1,2,1,3)"));
        assert!(s.contains("12 (1,1,3)"));
    }
}
