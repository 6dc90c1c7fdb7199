use crate::graph::{split_indices, u_of, v_of, Edge, PairedOrdering, PerfectMatching};

/// The 1-factorization `P_0, ..., P_{n-1}` of `K_2 □ K_n` (identity ordering)
/// in which `P_i` is `i`-splitted for `1 <= i < n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PnFactorization {
    n: usize,
    matchings: Vec<PerfectMatching>,
}

/// Mirror pairs `lo..=hi` onto themselves: `u_a u_{lo+hi-a}` and
/// `v_a v_{lo+hi-a}`, plus the vertical edge of the middle pair when the range
/// has odd length.
fn reflect(lo: usize, hi: usize, out: &mut Vec<Edge>) {
    let (mut a, mut b) = (lo, hi);
    while a < b {
        out.push(Edge::new(u_of(a), u_of(b)));
        out.push(Edge::new(v_of(a), v_of(b)));
        a += 1;
        b -= 1;
    }
    if a == b {
        out.push(Edge::new(u_of(a), v_of(a)));
    }
}

pub fn pn_factorization(n: usize) -> PnFactorization {
    assert!(n >= 1, "P_n needs n >= 1");
    let mut matchings = Vec::with_capacity(n);
    for i in 0..n {
        let mut edges = Vec::with_capacity(n);
        if i == 0 {
            reflect(1, n, &mut edges);
        } else {
            reflect(1, i, &mut edges);
            reflect(i + 1, n, &mut edges);
        }
        matchings.push(PerfectMatching::from_edges(n, edges).expect("reflections cover every pair once"));
    }
    let pn = PnFactorization { n, matchings };
    debug_assert!(pn.check().is_ok());
    pn
}

impl PnFactorization {
    pub fn n(&self) -> usize {
        self.n
    }

    /// `P_i`, `0 <= i < n`.
    pub fn matching(&self, i: usize) -> &PerfectMatching {
        &self.matchings[i]
    }

    pub fn matchings(&self) -> &[PerfectMatching] {
        &self.matchings
    }

    /// Partition of `E(K_2 □ K_n)` and `P_i` being `i`-splitted.
    pub fn check(&self) -> Result<(), String> {
        let n = self.n;
        let mut all: Vec<Edge> = self.matchings.iter().flat_map(|m| m.edges().iter().copied()).collect();
        all.sort_unstable();
        if all != crate::graph::k2_square_kn(n) {
            return Err("matchings do not partition E(K_2 □ K_n)".into());
        }
        let ord = PairedOrdering::identity(n);
        for i in 1..n {
            if !split_indices(&self.matchings[i], &ord).contains(&i) {
                return Err(format!("P_{i} is not {i}-splitted"));
            }
        }
        Ok(())
    }
}
