//! Interval colorings of `K_2n` versus 1-factorizations whose matchings are
//! tagged free or `i`-splitted.
//!
//! A labeled factorization with `b_i` matchings tagged `i` turns into an
//! interval `(2n - 1 + sum b_i)`-coloring with shift vector `(b_1, ..., b_{n-1})`,
//! and every interval coloring decomposes back into such a factorization.

use std::fmt;

use crate::coloring::{ordering_and_shift, EdgeColoring, ShiftVector};
use crate::error::{Error, Result};
use crate::graph::{
    check_factorization, edge_count, is_splitted_at, split_indices, OneFactorization,
    PairedOrdering, PerfectMatching,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    Free,
    /// The matching is used as an `i`-splitted matching.
    Split(usize),
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Free => f.write_str("free"),
            Label::Split(i) => write!(f, "split {i}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledMatching {
    pub matching: PerfectMatching,
    pub label: Label,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledFactorization {
    n: usize,
    ordering: PairedOrdering,
    matchings: Vec<LabeledMatching>,
}

impl LabeledFactorization {
    /// Validates that the matchings form a 1-factorization and that every
    /// matching tagged `i` really is `i`-splitted under `ordering`.
    pub fn new(n: usize, ordering: PairedOrdering, matchings: Vec<LabeledMatching>) -> Result<Self> {
        if ordering.n() != n {
            return Err(Error::InvalidLabeledFactorization(format!(
                "ordering is for n={}, factorization for n={n}",
                ordering.n()
            )));
        }
        let plain: Vec<PerfectMatching> = matchings.iter().map(|m| m.matching.clone()).collect();
        check_factorization(n, &plain)
            .map_err(|e| Error::InvalidLabeledFactorization(e.to_string()))?;
        for (k, m) in matchings.iter().enumerate() {
            if let Label::Split(i) = m.label {
                if !is_splitted_at(&m.matching, i, &ordering) {
                    return Err(Error::InvalidLabeledFactorization(format!(
                        "matching {k} is labeled {i}-splitted but is not"
                    )));
                }
            }
        }
        let f = LabeledFactorization {
            n,
            ordering,
            matchings,
        };
        // every tagged matching of index <= k matches u_1 inside H^[1,k]
        let sums = f.implied_shift().partial_sums();
        if let Some(k) = (1..sums.len()).find(|&k| sums[k] as usize > 2 * k - 1) {
            return Err(Error::Inconsistency(format!(
                "{} matchings tagged <= {k} exceed the degree bound {}",
                sums[k],
                2 * k - 1
            )));
        }
        Ok(f)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ordering(&self) -> &PairedOrdering {
        &self.ordering
    }

    pub fn matchings(&self) -> &[LabeledMatching] {
        &self.matchings
    }

    pub fn labels(&self) -> Vec<Label> {
        self.matchings.iter().map(|m| m.label).collect()
    }

    pub fn labeled_count(&self) -> usize {
        self.matchings
            .iter()
            .filter(|m| m.label != Label::Free)
            .count()
    }

    /// `b_i` = number of matchings tagged `i`.
    pub fn implied_shift(&self) -> ShiftVector {
        let mut b = vec![0u32; self.n.saturating_sub(1)];
        for m in &self.matchings {
            if let Label::Split(i) = m.label {
                b[i - 1] += 1;
            }
        }
        ShiftVector::new(b)
    }

    /// Number of colors of the coloring this factorization encodes.
    pub fn color_count(&self) -> u32 {
        (2 * self.n - 1 + self.labeled_count()) as u32
    }

    pub fn unlabeled(&self) -> OneFactorization {
        OneFactorization::new(
            self.n,
            self.matchings.iter().map(|m| m.matching.clone()).collect(),
        )
        .expect("validated on construction")
    }

    /// Same matchings under the reversed ordering; tag `i` becomes `n - i`.
    pub fn reversed(&self) -> Self {
        let n = self.n;
        let matchings = self
            .matchings
            .iter()
            .map(|m| LabeledMatching {
                matching: m.matching.clone(),
                label: match m.label {
                    Label::Free => Label::Free,
                    Label::Split(i) => Label::Split(n - i),
                },
            })
            .collect();
        LabeledFactorization {
            n,
            ordering: self.ordering.reversed(),
            matchings,
        }
    }

    /// Retags the last matching tagged `i` as free and moves it to the end.
    pub fn release_split(&self, i: usize) -> Result<Self> {
        let pos = self
            .matchings
            .iter()
            .rposition(|m| m.label == Label::Split(i))
            .ok_or_else(|| Error::Precondition(format!("no matching is tagged {i}")))?;
        let mut matchings = self.matchings.clone();
        let mut m = matchings.remove(pos);
        m.label = Label::Free;
        matchings.push(m);
        Ok(LabeledFactorization {
            n: self.n,
            ordering: self.ordering.clone(),
            matchings,
        })
    }
}

/// Decomposes an interval coloring into its labeled 1-factorization under the
/// canonical ordering: tagged matchings `C_{B_{i-1}+j} ∪ C_{B_{i-1}+2n-1+j}`
/// (by `i`, then `j`), followed by the free matchings `C_{|sh|+j}`.
pub fn coloring_to_factorization(c: &EdgeColoring) -> Result<LabeledFactorization> {
    let n = c.n();
    let (ord, sh) = ordering_and_shift(c)?;
    let sums = sh.partial_sums();
    let total = sh.total();
    let span = 2 * n as u32 - 1;

    let mut classes: Vec<Vec<_>> = vec![Vec::new(); c.t() as usize + 1];
    for (e, k) in c.entries() {
        classes[k as usize].push(e);
    }

    let mut matchings = Vec::with_capacity(2 * n - 1);
    for i in 1..n {
        for j in 1..=sh.get(i) {
            let low = sums[i - 1] + j;
            let mut edges = classes[low as usize].clone();
            edges.extend_from_slice(&classes[(low + span) as usize]);
            let matching = PerfectMatching::from_edges(n, edges).map_err(|e| {
                Error::Inconsistency(format!("colors {low} and {} do not join into a perfect matching: {e}", low + span))
            })?;
            if !is_splitted_at(&matching, i, &ord) {
                return Err(Error::Inconsistency(format!(
                    "colors {low} and {} do not form an {i}-splitted matching",
                    low + span
                )));
            }
            matchings.push(LabeledMatching {
                matching,
                label: Label::Split(i),
            });
        }
    }
    for j in 1..=span - total {
        let matching = PerfectMatching::from_edges(n, classes[(total + j) as usize].clone())
            .map_err(|e| Error::Inconsistency(format!("color {} is not a perfect matching: {e}", total + j)))?;
        matchings.push(LabeledMatching {
            matching,
            label: Label::Free,
        });
    }
    LabeledFactorization::new(n, ord, matchings)
}

/// Colors a labeled factorization: the `j`-th matching tagged `i` gives color
/// `B_{i-1}+j` to its left part and `B_{i-1}+2n-1+j` to its right part; the
/// `j`-th free matching gets `B_{n-1}+j`.
pub fn factorization_to_coloring(f: &LabeledFactorization) -> EdgeColoring {
    let n = f.n;
    let sums = f.implied_shift().partial_sums();
    let span = 2 * n as u32 - 1;
    let mut next_j = vec![0u32; n];
    let mut next_free = 0u32;
    let mut colors = vec![0u32; edge_count(n)];
    for m in &f.matchings {
        match m.label {
            Label::Split(i) => {
                next_j[i] += 1;
                let low = sums[i - 1] + next_j[i];
                for &e in m.matching.edges() {
                    let (_, hi) = f.ordering.pair_span(e);
                    colors[e.index(n)] = if hi <= i { low } else { low + span };
                }
            }
            Label::Free => {
                next_free += 1;
                for &e in m.matching.edges() {
                    colors[e.index(n)] = sums[n - 1] + next_free;
                }
            }
        }
    }
    EdgeColoring::new(n, colors).expect("labeled factorization colors every edge")
}

/// Tags `want` matchings of `f`: the first splittable matchings in list order,
/// each with its smallest split index; the rest stay free.
pub fn assign_splits(
    f: &OneFactorization,
    ord: &PairedOrdering,
    want: usize,
) -> Result<LabeledFactorization> {
    let mut remaining = want;
    let mut available = 0;
    let matchings = f
        .matchings()
        .iter()
        .map(|m| {
            let splits = split_indices(m, ord);
            let label = match splits.first() {
                Some(&i) => {
                    available += 1;
                    if remaining > 0 {
                        remaining -= 1;
                        Label::Split(i)
                    } else {
                        Label::Free
                    }
                }
                None => Label::Free,
            };
            LabeledMatching {
                matching: m.clone(),
                label,
            }
        })
        .collect();
    if remaining > 0 {
        return Err(Error::InsufficientSplits {
            available,
            wanted: want,
        });
    }
    LabeledFactorization::new(f.n(), ord.clone(), matchings)
}
