use crate::constructions::bipartite::bipartite_one_factorization;
use crate::constructions::pn::pn_factorization;
use crate::equivalence::{Label, LabeledFactorization, LabeledMatching};
use crate::error::{Error, Result};
use crate::graph::{k2_times_kn, u_of, v_of, Edge, PairedOrdering, PerfectMatching, Vertex};

fn pn_part(n: usize) -> Vec<LabeledMatching> {
    pn_factorization(n)
        .matchings()
        .iter()
        .enumerate()
        .map(|(i, m)| LabeledMatching {
            matching: m.clone(),
            label: if i == 0 { Label::Free } else { Label::Split(i) },
        })
        .collect()
}

fn free_matchings(n: usize, parts: Vec<Vec<Edge>>) -> Result<Vec<LabeledMatching>> {
    parts
        .into_iter()
        .map(|edges| {
            Ok(LabeledMatching {
                matching: PerfectMatching::from_edges(n, edges)?,
                label: Label::Free,
            })
        })
        .collect()
}

/// `P_n` together with any 1-factorization of `K_2 × K_n`: `n - 1` tagged
/// matchings, an interval `(3n - 2)`-coloring.
pub fn construct_pn(n: usize) -> Result<LabeledFactorization> {
    if n == 0 {
        return Err(Error::Precondition("n must be at least 1".into()));
    }
    let vertices: Vec<Vertex> = (0..2 * n).collect();
    let mut matchings = pn_part(n);
    matchings.extend(free_matchings(n, bipartite_one_factorization(&vertices, &k2_times_kn(n))?)?);
    LabeledFactorization::new(n, PairedOrdering::identity(n), matchings)
}

fn induced(edges: &[Edge], pairs: std::ops::RangeInclusive<usize>) -> (Vec<Vertex>, Vec<Edge>) {
    let vertices: Vec<Vertex> = pairs.clone().flat_map(|i| [u_of(i), v_of(i)]).collect();
    let inside = |v: Vertex| pairs.contains(&(v / 2 + 1));
    let sub = edges
        .iter()
        .copied()
        .filter(|e| inside(e.a()) && inside(e.b()))
        .collect();
    (vertices, sub)
}

/// A 1-factorization of `K_2n` with `floor(1.5n) - 2` tagged matchings.
///
/// `K_2 × K_n` is cut at pair `h = floor(n/2)`; the two halves are factorized
/// separately and their first `h - 1` matchings joined into `h`-splitted
/// matchings. The rest of `K_2 × K_n` stays regular bipartite and supplies the
/// remaining free matchings, and `P_n` contributes `n - 1` more tagged ones.
/// Matchings are listed as `P_0..P_{n-1}`, then the joined ones, then the
/// residual ones.
pub fn construct_three_five(n: usize) -> Result<LabeledFactorization> {
    if n < 2 {
        return Err(Error::Precondition(format!("three-five construction needs n >= 2, got {n}")));
    }
    let h = n / 2;
    let cross = k2_times_kn(n);
    let (lv, le) = induced(&cross, 1..=h);
    let (rv, re) = induced(&cross, h + 1..=n);
    let left = bipartite_one_factorization(&lv, &le)?;
    let right = bipartite_one_factorization(&rv, &re)?;
    debug_assert_eq!(left.len(), h - 1);
    debug_assert_eq!(right.len(), n - h - 1);

    let mut matchings = pn_part(n);
    let mut used = vec![false; crate::graph::edge_count(n)];
    for (l, r) in left.iter().zip(&right) {
        let edges: Vec<Edge> = l.iter().chain(r).copied().collect();
        for e in &edges {
            used[e.index(n)] = true;
        }
        matchings.push(LabeledMatching {
            matching: PerfectMatching::from_edges(n, edges)?,
            label: Label::Split(h),
        });
    }
    let residual: Vec<Edge> = cross.into_iter().filter(|e| !used[e.index(n)]).collect();
    let vertices: Vec<Vertex> = (0..2 * n).collect();
    // the residual graph is (n - h)-regular; bipartite_one_factorization checks it
    let rest = bipartite_one_factorization(&vertices, &residual)?;
    if rest.len() != n - h {
        return Err(Error::Inconsistency(format!(
            "residual of K_2 x K_{n} is {}-regular, expected {}",
            rest.len(),
            n - h
        )));
    }
    matchings.extend(free_matchings(n, rest)?);
    LabeledFactorization::new(n, PairedOrdering::identity(n), matchings)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::verify_interval;
    use crate::equivalence::factorization_to_coloring;

    #[test]
    fn label_counts() {
        for n in 2..=16 {
            let f = construct_three_five(n).unwrap();
            assert_eq!(f.labeled_count(), 3 * n / 2 - 2, "n={n}");
            let c = factorization_to_coloring(&f);
            assert!(verify_interval(&c).valid, "n={n}");
            assert_eq!(c.t() as usize, 7 * n / 2 - 3, "n={n}");
        }
    }

    #[test]
    fn small_cases() {
        assert_eq!(factorization_to_coloring(&construct_three_five(2).unwrap()).t(), 4);
        let f5 = construct_three_five(5).unwrap();
        assert_eq!(f5.labeled_count(), 5);
        assert_eq!(factorization_to_coloring(&f5).t(), 14);
        assert_eq!(factorization_to_coloring(&construct_three_five(12).unwrap()).t(), 39);
        assert!(construct_three_five(1).is_err());
    }

    #[test]
    fn pn_with_bipartite_gives_3n_minus_2() {
        for n in 1..=10 {
            let f = construct_pn(n).unwrap();
            assert_eq!(f.labeled_count(), n - 1);
            let c = factorization_to_coloring(&f);
            assert!(verify_interval(&c).valid);
            assert_eq!(c.t() as usize, 3 * n - 2);
        }
    }
}
