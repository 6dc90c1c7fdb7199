//! Product construction: from tagged 1-factorizations of `K_2m` and `K_2n`
//! build one of `K_2mn` with `σ_m + σ_n + 2(m-1)(n-1)` tagged matchings.
//!
//! `K_2mn` is laid out as `m` consecutive copies of `K_2n`: vertex `(p, q)`
//! (copy `p` in `1..=m`, position `q` of the `K_2n` ordering) gets id
//! `(p-1)·2n + q`, so the output ordering is the identity. The copies are
//! driven by `P_2m`, the factorization of `K_2 □ K_2m` whose column `c`
//! (vertices `w_c`, `z_c`) belongs to cell `ceil(c/2)`: odd columns are the
//! left side of a cell, even columns the right side.
//!
//! Three families are produced:
//! * F1: per tagged `N_i` of `K_2n` and odd `P_{2j+1}`: vertical edges of
//!   `P_{2j+1}` place `l(N_i)` or `r(N_i)` inside one copy, same-side
//!   horizontal edges place both lifts of `l(N_i)` or `r(N_i)` between two
//!   copies. Tagged `jn + r` when `N_i` is tagged `r`.
//! * F2: per free `N^0_i` (except the first) and even `P_{2j}`: a
//!   left-right edge inside a cell places `N^0_i` in that copy; a left-right
//!   edge from a lower cell's left side to a higher cell's right side places
//!   both lifts between the two copies. Tagged `jn` for `j >= 1`.
//! * F3: the first free `N^0_1` spans `n` disjoint copies of `K_2m`; each
//!   matching of `K_2m` is copied into all of them. Tag `r` becomes `rn`.

use crate::equivalence::{Label, LabeledFactorization, LabeledMatching};
use crate::error::{Error, Result};
use crate::graph::{Edge, PairedOrdering, PerfectMatching};

use super::pn::pn_factorization;

/// Sizes of the pieces of one constructed matching.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PieceCount {
    pub family: u8,
    /// Index of the source matching within its family (1-based).
    pub i: usize,
    /// Index of the `P_2m` matching used (`j`), 0 for F3.
    pub j: usize,
    pub pieces: Vec<usize>,
    pub total: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CompositeReport {
    pub pieces: Vec<PieceCount>,
}

/// Matching edges rewritten in ordering positions, with their tag.
struct Positional {
    edges: Vec<(usize, usize)>,
    label: Label,
}

fn positional(f: &LabeledFactorization) -> Vec<Positional> {
    let ord = f.ordering();
    f.matchings()
        .iter()
        .map(|m| Positional {
            edges: m
                .matching
                .edges()
                .iter()
                .map(|e| {
                    let (x, y) = (ord.position(e.a()), ord.position(e.b()));
                    (x.min(y), x.max(y))
                })
                .collect(),
            label: m.label,
        })
        .collect()
}

/// Column (1-based) and whether the vertex is on the `w` side, for a vertex
/// of `K_2 □ K_2m` under the identity ordering.
fn column(v: usize) -> (usize, bool) {
    (v / 2 + 1, v % 2 == 0)
}

fn cell(col: usize) -> usize {
    col.div_ceil(2)
}

pub fn construct_composite(fm: &LabeledFactorization, fn_: &LabeledFactorization) -> Result<LabeledFactorization> {
    construct_composite_with_report(fm, fn_).map(|(f, _)| f)
}

pub fn construct_composite_with_report(
    fm: &LabeledFactorization,
    fn_: &LabeledFactorization,
) -> Result<(LabeledFactorization, CompositeReport)> {
    let m = fm.n();
    let n = fn_.n();
    let big = m * n;
    let base = positional(fn_);
    let small = positional(fm);

    let tagged: Vec<&Positional> = base.iter().filter(|p| p.label != Label::Free).collect();
    let free: Vec<&Positional> = base.iter().filter(|p| p.label == Label::Free).collect();
    let Some((first_free, other_free)) = free.split_first() else {
        return Err(Error::Precondition(format!(
            "K_{} factorization has no free matching",
            2 * n
        )));
    };

    let vertex = |copy: usize, q: usize| (copy - 1) * 2 * n + q;
    let p2m = pn_factorization(2 * m);
    let mut report = CompositeReport::default();
    let mut out: Vec<LabeledMatching> = Vec::with_capacity(2 * big - 1);

    let finish = |edges: Vec<Edge>, label: Label, what: &str| -> Result<LabeledMatching> {
        if edges.len() != big {
            return Err(Error::Inconsistency(format!(
                "{what} has {} edges, expected mn = {big}",
                edges.len()
            )));
        }
        let matching = PerfectMatching::from_edges(big, edges)
            .map_err(|e| Error::Inconsistency(format!("{what}: {e}")))?;
        Ok(LabeledMatching { matching, label })
    };

    let (m_odd, half) = (m % 2, m / 2);

    // F1
    for (idx, nm) in tagged.iter().enumerate() {
        let Label::Split(r) = nm.label else { unreachable!() };
        let (left, right): (Vec<_>, Vec<_>) = nm.edges.iter().partition(|&&(_, y)| y / 2 < r);
        for j in 0..m {
            let mut pieces = [Vec::new(), Vec::new(), Vec::new(), Vec::new()];
            for e in p2m.matching(2 * j + 1).edges() {
                let ((ca, wa), (cb, wb)) = (column(e.a()), column(e.b()));
                if ca == cb {
                    let k = cell(ca);
                    let (slot, part) = if ca % 2 == 1 { (0, &left) } else { (1, &right) };
                    for &(x, y) in part.iter() {
                        pieces[slot].push(Edge::new(vertex(k, x), vertex(k, y)));
                    }
                } else if wa && wb {
                    if ca % 2 != cb % 2 {
                        return Err(Error::Inconsistency(format!(
                            "P_{} joins a left and a right column",
                            2 * j + 1
                        )));
                    }
                    let (k, l) = (cell(ca.min(cb)), cell(ca.max(cb)));
                    let (slot, part) = if ca % 2 == 1 { (2, &left) } else { (3, &right) };
                    for &(x, y) in part.iter() {
                        pieces[slot].push(Edge::new(vertex(k, x), vertex(l, y)));
                        pieces[slot].push(Edge::new(vertex(k, y), vertex(l, x)));
                    }
                }
            }
            let (lc, rc) = (left.len(), right.len());
            let jm = j % 2;
            let expected = if m_odd == 1 {
                [lc, rc, 2 * lc * ((m - 1) / 2), 2 * rc * ((m - 1) / 2)]
            } else {
                [lc * 2 * (1 - jm), rc * 2 * jm, 2 * lc * (half - (1 - jm)), 2 * rc * (half - jm)]
            };
            let sizes: Vec<usize> = pieces.iter().map(Vec::len).collect();
            if sizes != expected {
                return Err(Error::Inconsistency(format!(
                    "F1[{},{j}] piece sizes {sizes:?}, expected {expected:?}",
                    idx + 1
                )));
            }
            let edges: Vec<Edge> = pieces.into_iter().flatten().collect();
            report.pieces.push(PieceCount {
                family: 1,
                i: idx + 1,
                j,
                pieces: sizes,
                total: edges.len(),
            });
            out.push(finish(edges, Label::Split(j * n + r), "F1")?);
        }
    }

    // F2
    for (idx, nm) in other_free.iter().enumerate() {
        for j in 0..m {
            let mut pieces = [Vec::new(), Vec::new()];
            for e in p2m.matching(2 * j).edges() {
                let ((ca, wa), (cb, wb)) = (column(e.a()), column(e.b()));
                if !(wa && wb) {
                    continue;
                }
                if ca == cb || ca % 2 == cb % 2 {
                    return Err(Error::Inconsistency(format!(
                        "P_{} has an edge that is not left-right",
                        2 * j
                    )));
                }
                let (odd, even) = if ca % 2 == 1 { (ca, cb) } else { (cb, ca) };
                let (ko, ke) = (cell(odd), cell(even));
                if ko == ke {
                    for &(x, y) in &nm.edges {
                        pieces[0].push(Edge::new(vertex(ko, x), vertex(ko, y)));
                    }
                } else if ko < ke {
                    for &(x, y) in &nm.edges {
                        pieces[1].push(Edge::new(vertex(ko, x), vertex(ke, y)));
                        pieces[1].push(Edge::new(vertex(ko, y), vertex(ke, x)));
                    }
                }
            }
            let jm = j % 2;
            let expected = if m_odd == 1 {
                [n, 2 * n * ((m - 1) / 2)]
            } else {
                [n * 2 * jm, 2 * n * (half - jm)]
            };
            let sizes: Vec<usize> = pieces.iter().map(Vec::len).collect();
            if sizes != expected {
                return Err(Error::Inconsistency(format!(
                    "F2[{},{j}] piece sizes {sizes:?}, expected {expected:?}",
                    idx + 2
                )));
            }
            let edges: Vec<Edge> = pieces.into_iter().flatten().collect();
            report.pieces.push(PieceCount {
                family: 2,
                i: idx + 2,
                j,
                pieces: sizes,
                total: edges.len(),
            });
            let label = if j == 0 { Label::Free } else { Label::Split(j * n) };
            out.push(finish(edges, label, "F2")?);
        }
    }

    // F3: K_2m position q maps to copy q/2 + 1, on the x or y end of the N^0_1 edge
    let mut tagged_small: Vec<&Positional> = small.iter().filter(|p| p.label != Label::Free).collect();
    tagged_small.extend(small.iter().filter(|p| p.label == Label::Free));
    for (idx, mm) in tagged_small.into_iter().enumerate() {
        let mut edges = Vec::with_capacity(big);
        for &(xs, yt) in &first_free.edges {
            let lift = |q: usize| vertex(q / 2 + 1, if q % 2 == 0 { xs } else { yt });
            for &(a, b) in &mm.edges {
                edges.push(Edge::new(lift(a), lift(b)));
            }
        }
        let label = match mm.label {
            Label::Split(r) => Label::Split(r * n),
            Label::Free => Label::Free,
        };
        report.pieces.push(PieceCount {
            family: 3,
            i: idx + 1,
            j: 0,
            pieces: vec![edges.len()],
            total: edges.len(),
        });
        out.push(finish(edges, label, "F3")?);
    }

    let f = LabeledFactorization::new(big, PairedOrdering::identity(big), out)
        .map_err(|e| Error::Inconsistency(format!("product is not a valid factorization: {e}")))?;
    let want = fm.labeled_count() + fn_.labeled_count() + 2 * (m - 1) * (n - 1);
    if f.labeled_count() != want {
        return Err(Error::Inconsistency(format!(
            "{} tagged matchings, expected {want}",
            f.labeled_count()
        )));
    }
    Ok((f, report))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::verify_interval;
    use crate::constructions::three_five::construct_three_five;
    use crate::equivalence::factorization_to_coloring;
    use crate::graph::OneFactorization;

    fn k2() -> LabeledFactorization {
        let m = OneFactorization::round_robin(1).into_matchings().remove(0);
        LabeledFactorization::new(
            1,
            PairedOrdering::identity(1),
            vec![LabeledMatching { matching: m, label: Label::Free }],
        )
        .unwrap()
    }

    #[test]
    fn k4_squared_gives_k8_with_11_colors() {
        let f2 = construct_three_five(2).unwrap();
        let f = construct_composite(&f2, &f2).unwrap();
        assert_eq!(f.labeled_count(), 4);
        let c = factorization_to_coloring(&f);
        assert!(verify_interval(&c).valid);
        assert_eq!(c.t(), 11);
    }

    #[test]
    fn k6_squared_gives_k18_with_29_colors() {
        let f3 = construct_three_five(3).unwrap();
        let f = construct_composite(&f3, &f3).unwrap();
        assert_eq!(f.labeled_count(), 12);
        assert_eq!(factorization_to_coloring(&f).t(), 29);
    }

    #[test]
    fn k6_by_k10_gives_52() {
        let f = construct_composite(&construct_three_five(3).unwrap(), &construct_three_five(5).unwrap()).unwrap();
        assert_eq!(f.labeled_count(), 23);
        let c = factorization_to_coloring(&f);
        assert!(verify_interval(&c).valid);
        assert_eq!(c.t(), 52);
    }

    #[test]
    fn unit_factor_is_identity_on_counts() {
        let f3 = construct_three_five(3).unwrap();
        let left = construct_composite(&k2(), &f3).unwrap();
        let right = construct_composite(&f3, &k2()).unwrap();
        assert_eq!(left.labeled_count(), 2);
        assert_eq!(right.labeled_count(), 2);
    }

    #[test]
    fn piece_sizes_are_mn() {
        for m in 2..=4 {
            for n in 2..=4 {
                let (f, report) = construct_composite_with_report(
                    &construct_three_five(m).unwrap(),
                    &construct_three_five(n).unwrap(),
                )
                .unwrap();
                assert!(report.pieces.iter().all(|p| p.total == m * n), "m={m} n={n}");
                assert_eq!(report.pieces.len(), 2 * m * n - 1);
                assert!(verify_interval(&factorization_to_coloring(&f)).valid);
            }
        }
    }
}
