//! Edge colorings of `K_2n`, interval verification, spectra, the canonical
//! vertex ordering of an interval coloring and its shift vector.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{all_edges, edge_count, Edge, PairedOrdering, Vertex};

/// A total map from the edges of `K_2n` to colors `1..=t`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EdgeColoring {
    n: usize,
    t: u32,
    colors: Vec<u32>,
}

impl EdgeColoring {
    /// `colors` is indexed by canonical edge index; `t` is the largest color.
    pub fn new(n: usize, colors: Vec<u32>) -> Result<Self> {
        let t = colors.iter().copied().max().unwrap_or(0);
        Self::with_declared_t(n, t, colors)
    }

    pub fn with_declared_t(n: usize, t: u32, colors: Vec<u32>) -> Result<Self> {
        if n == 0 {
            return Err(Error::MalformedColoring("n must be at least 1".into()));
        }
        if colors.len() != edge_count(n) {
            return Err(Error::MalformedColoring(format!(
                "{} colors given, K_{} has {} edges",
                colors.len(),
                2 * n,
                edge_count(n)
            )));
        }
        if let Some(k) = colors.iter().position(|&c| c == 0 || c > t) {
            return Err(Error::ColorOutOfRange {
                color: colors[k],
                t,
            });
        }
        Ok(EdgeColoring { n, t, colors })
    }

    /// Builds a coloring from `(a, b, color)` triples; every edge must appear
    /// exactly once.
    pub fn from_entries<I>(n: usize, t: u32, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex, u32)>,
    {
        if n == 0 {
            return Err(Error::MalformedColoring("n must be at least 1".into()));
        }
        let mut colors = vec![0u32; edge_count(n)];
        for (a, b, color) in entries {
            let e = Edge::try_new(a, b, n)?;
            let slot = &mut colors[e.index(n)];
            if *slot != 0 {
                return Err(Error::MalformedColoring(format!("edge {e} colored twice")));
            }
            if color == 0 {
                return Err(Error::ColorOutOfRange { color, t });
            }
            *slot = color;
        }
        if let Some(k) = colors.iter().position(|&c| c == 0) {
            return Err(Error::MalformedColoring(format!(
                "edge {} has no color",
                Edge::from_index(k, n)
            )));
        }
        Self::with_declared_t(n, t, colors)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn t(&self) -> u32 {
        self.t
    }

    pub fn color(&self, e: Edge) -> u32 {
        self.colors[e.index(self.n)]
    }

    /// Colors in canonical edge order.
    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    pub fn entries(&self) -> impl Iterator<Item = (Edge, u32)> + '_ {
        all_edges(self.n).zip(self.colors.iter().copied())
    }

    /// The same coloring with vertex `v` renamed to `perm[v]`.
    pub fn relabel_vertices(&self, perm: &[Vertex]) -> Result<Self> {
        let ord = PairedOrdering::from_sequence(perm.to_vec())?;
        if ord.n() != self.n {
            return Err(Error::Precondition("permutation size mismatch".into()));
        }
        let mut colors = vec![0; self.colors.len()];
        for (e, c) in self.entries() {
            colors[Edge::new(perm[e.a()], perm[e.b()]).index(self.n)] = c;
        }
        Ok(EdgeColoring {
            n: self.n,
            t: self.t,
            colors,
        })
    }
}

/// The set of colors at a vertex, with its extremes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Spectrum {
    pub lo: u32,
    pub hi: u32,
    /// Sorted, possibly with repeats when the coloring is not proper.
    pub colors: Vec<u32>,
}

impl Spectrum {
    pub fn contains(&self, color: u32) -> bool {
        self.colors.binary_search(&color).is_ok()
    }

    pub fn is_interval(&self) -> bool {
        self.colors.windows(2).all(|w| w[1] == w[0] + 1)
    }
}

pub fn spectrum(c: &EdgeColoring, v: Vertex) -> Spectrum {
    let mut colors: Vec<u32> = (0..2 * c.n)
        .filter(|&w| w != v)
        .map(|w| c.color(Edge::new(v, w)))
        .collect();
    colors.sort_unstable();
    Spectrum {
        lo: colors.first().copied().unwrap_or(0),
        hi: colors.last().copied().unwrap_or(0),
        colors,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// Two edges at `vertex` share `color`.
    Improper {
        vertex: Vertex,
        first: Edge,
        second: Edge,
        color: u32,
    },
    /// Color `color` of `1..=t` appears on no edge.
    UnusedColor { color: u32 },
    /// The spectrum of `vertex` skips `missing`.
    Gap { vertex: Vertex, missing: u32 },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Improper {
                vertex,
                first,
                second,
                color,
            } => write!(
                f,
                "not proper: edges {first} and {second} at vertex {vertex} both have color {color}"
            ),
            Violation::UnusedColor { color } => write!(f, "color {color} is never used"),
            Violation::Gap { vertex, missing } => {
                write!(f, "spectrum of vertex {vertex} is not an interval (misses {missing})")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalReport {
    pub valid: bool,
    pub t: u32,
    pub spectra: Vec<Spectrum>,
    pub failure: Option<Violation>,
}

/// Checks properness, surjectivity onto `1..=t` and contiguity of every
/// vertex spectrum. The reported witness is the first violation found
/// scanning conditions in that order and vertices in ascending id.
pub fn verify_interval(c: &EdgeColoring) -> IntervalReport {
    let spectra: Vec<Spectrum> = (0..2 * c.n).map(|v| spectrum(c, v)).collect();
    let failure = find_violation(c, &spectra);
    IntervalReport {
        valid: failure.is_none(),
        t: c.t,
        spectra,
        failure,
    }
}

fn find_violation(c: &EdgeColoring, spectra: &[Spectrum]) -> Option<Violation> {
    let vc = 2 * c.n;
    let mut at = vec![usize::MAX; c.t as usize + 1];
    for v in 0..vc {
        for w in (0..vc).filter(|&w| w != v) {
            let color = c.color(Edge::new(v, w));
            let slot = &mut at[color as usize];
            if *slot != usize::MAX && *slot / vc == v {
                return Some(Violation::Improper {
                    vertex: v,
                    first: Edge::new(v, *slot % vc),
                    second: Edge::new(v, w),
                    color,
                });
            }
            *slot = v * vc + w;
        }
    }
    let mut used = vec![false; c.t as usize + 1];
    for &color in &c.colors {
        used[color as usize] = true;
    }
    if let Some(color) = (1..=c.t).find(|&k| !used[k as usize]) {
        return Some(Violation::UnusedColor { color });
    }
    for (v, s) in spectra.iter().enumerate() {
        if let Some(w) = s.colors.windows(2).find(|w| w[1] != w[0] + 1) {
            return Some(Violation::Gap {
                vertex: v,
                missing: w[0] + 1,
            });
        }
    }
    None
}

fn require_interval(c: &EdgeColoring) -> Result<Vec<Spectrum>> {
    let report = verify_interval(c);
    match report.failure {
        None => Ok(report.spectra),
        Some(v) => Err(Error::NotInterval(v.to_string())),
    }
}

/// Orders vertices by smallest spectrum color (ties by id) and pairs them
/// consecutively. Paired vertices always share their smallest color; an
/// odd-sized stratum is reported as an inconsistency.
pub fn canonical_ordering(c: &EdgeColoring) -> Result<PairedOrdering> {
    let spectra = require_interval(c)?;
    ordering_from_spectra(&spectra)
}

fn ordering_from_spectra(spectra: &[Spectrum]) -> Result<PairedOrdering> {
    let mut seq: Vec<Vertex> = (0..spectra.len()).collect();
    seq.sort_by_key(|&v| (spectra[v].lo, v));
    for pair in seq.chunks(2) {
        if spectra[pair[0]].lo != spectra[pair[1]].lo {
            return Err(Error::Inconsistency(format!(
                "vertices {} and {} are paired but have smallest colors {} and {}",
                pair[0], pair[1], spectra[pair[0]].lo, spectra[pair[1]].lo
            )));
        }
    }
    PairedOrdering::from_sequence(seq)
}

/// `(b_1, ..., b_{n-1})` with partial sums `B_i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ShiftVector(Vec<u32>);

impl ShiftVector {
    pub fn new(b: Vec<u32>) -> Self {
        ShiftVector(b)
    }

    pub fn zero(n: usize) -> Self {
        ShiftVector(vec![0; n.saturating_sub(1)])
    }

    /// The graph size this vector belongs to (`len + 1`).
    pub fn n(&self) -> usize {
        self.0.len() + 1
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    /// `b_i`, 1-based.
    pub fn get(&self, i: usize) -> u32 {
        self.0[i - 1]
    }

    /// `[B_0, B_1, ..., B_{n-1}]`.
    pub fn partial_sums(&self) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.0.len() + 1);
        out.push(0);
        let mut acc = 0;
        for &b in &self.0 {
            acc += b;
            out.push(acc);
        }
        out
    }

    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn reversed(&self) -> Self {
        ShiftVector(self.0.iter().rev().copied().collect())
    }

    pub fn into_vec(self) -> Vec<u32> {
        self.0
    }
}

impl fmt::Display for ShiftVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|b| b.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

impl std::str::FromStr for ShiftVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        if s.is_empty() {
            return Ok(ShiftVector(Vec::new()));
        }
        s.split(',')
            .map(|p| {
                p.trim()
                    .parse::<u32>()
                    .map_err(|e| Error::Precondition(format!("bad shift entry {p:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()
            .map(ShiftVector)
    }
}

/// Canonical ordering together with the shift vector it induces.
pub fn ordering_and_shift(c: &EdgeColoring) -> Result<(PairedOrdering, ShiftVector)> {
    let spectra = require_interval(c)?;
    let ord = ordering_from_spectra(&spectra)?;
    let lows: Vec<u32> = (1..=c.n).map(|i| spectra[ord.u(i)].lo).collect();
    let b = lows.windows(2).map(|w| w[1] - w[0]).collect();
    Ok((ord, ShiftVector(b)))
}

pub fn shift_vector(c: &EdgeColoring) -> Result<ShiftVector> {
    ordering_and_shift(c).map(|(_, sh)| sh)
}

/// `C_k`: the edges colored `k`.
pub fn color_class(c: &EdgeColoring, k: u32) -> Result<Vec<Edge>> {
    if k == 0 || k > c.t {
        return Err(Error::ColorOutOfRange { color: k, t: c.t });
    }
    Ok(c.entries().filter(|&(_, col)| col == k).map(|(e, _)| e).collect())
}

/// Colors present at every vertex of `vertices`.
pub fn spectrum_meet(c: &EdgeColoring, vertices: &[Vertex]) -> BTreeSet<u32> {
    let mut it = vertices.iter().map(|&v| spectrum(c, v).colors.into_iter().collect::<BTreeSet<_>>());
    let Some(first) = it.next() else {
        return BTreeSet::new();
    };
    it.fold(first, |acc, s| acc.intersection(&s).copied().collect())
}

/// Colors present at some vertex of `vertices`.
pub fn spectrum_join(c: &EdgeColoring, vertices: &[Vertex]) -> BTreeSet<u32> {
    vertices
        .iter()
        .flat_map(|&v| spectrum(c, v).colors)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::OneFactorization;

    /// Colors matching `k` of a factorization with color `k + 1`.
    fn from_factorization(f: &OneFactorization) -> EdgeColoring {
        let n = f.n();
        let mut colors = vec![0; edge_count(n)];
        for (k, m) in f.matchings().iter().enumerate() {
            for e in m.edges() {
                colors[e.index(n)] = k as u32 + 1;
            }
        }
        EdgeColoring::new(n, colors).unwrap()
    }

    #[test]
    fn single_edge() {
        let c = EdgeColoring::new(1, vec![1]).unwrap();
        let r = verify_interval(&c);
        assert!(r.valid);
        assert_eq!(r.t, 1);
        assert_eq!(shift_vector(&c).unwrap().as_slice(), &[] as &[u32]);
    }

    #[test]
    fn round_robin_is_minimum_interval_coloring() {
        for n in 1..=8 {
            let c = from_factorization(&OneFactorization::round_robin(n));
            let r = verify_interval(&c);
            assert!(r.valid, "n={n}: {:?}", r.failure);
            assert_eq!(r.t as usize, 2 * n - 1);
            let sh = shift_vector(&c).unwrap();
            assert_eq!(sh, ShiftVector::zero(n));
            assert!(canonical_ordering(&c).unwrap().is_identity());
            for k in 1..=c.t() {
                let class = color_class(&c, k).unwrap();
                assert_eq!(class.len(), n);
            }
        }
    }

    #[test]
    fn gap_witness() {
        // K_4: recolor 0-1 from 1 to 3 is improper at vertex 0 (0-3 has 3)
        // so instead move the 0-2 edge to a fresh color 4: vertex 0 sees {1,3,4}
        let mut c = from_factorization(&OneFactorization::round_robin(2));
        let mut colors = c.colors().to_vec();
        colors[Edge::new(0, 2).index(2)] = 4;
        colors[Edge::new(1, 3).index(2)] = 2;
        c = EdgeColoring::new(2, colors).unwrap();
        let r = verify_interval(&c);
        assert!(!r.valid);
        assert_eq!(r.failure, Some(Violation::Gap { vertex: 0, missing: 2 }));
        assert!(shift_vector(&c).is_err());
    }

    #[test]
    fn improper_and_unused_witnesses() {
        let mut colors = from_factorization(&OneFactorization::round_robin(2)).colors().to_vec();
        colors[Edge::new(0, 2).index(2)] = 1;
        let c = EdgeColoring::new(2, colors).unwrap();
        assert!(matches!(
            verify_interval(&c).failure,
            Some(Violation::Improper { vertex: 0, color: 1, .. })
        ));

        let colors = from_factorization(&OneFactorization::round_robin(2)).colors().to_vec();
        let c = EdgeColoring::with_declared_t(2, 4, colors).unwrap();
        assert_eq!(verify_interval(&c).failure, Some(Violation::UnusedColor { color: 4 }));
    }

    #[test]
    fn malformed_inputs() {
        assert!(EdgeColoring::new(2, vec![1, 2, 3]).is_err());
        assert!(EdgeColoring::new(2, vec![1, 2, 3, 0, 1, 2]).is_err());
        assert!(matches!(
            EdgeColoring::from_entries(2, 3, [(0, 1, 1), (2, 3, 1)]),
            Err(Error::MalformedColoring(_))
        ));
        assert!(EdgeColoring::from_entries(1, 1, [(0, 1, 1), (1, 0, 1)]).is_err());
    }

    #[test]
    fn color_class_range() {
        let c = from_factorization(&OneFactorization::round_robin(2));
        assert!(matches!(color_class(&c, 0), Err(Error::ColorOutOfRange { .. })));
        assert!(color_class(&c, 4).is_err());
    }

    #[test]
    fn meet_and_join() {
        let c = from_factorization(&OneFactorization::round_robin(3));
        let all: Vec<Vertex> = (0..6).collect();
        assert_eq!(spectrum_meet(&c, &all), (1..=5).collect());
        assert_eq!(spectrum_join(&c, &[0]), (1..=5).collect());
        assert!(spectrum_meet(&c, &[]).is_empty());
    }

    #[test]
    fn shift_vector_parsing() {
        let sh: ShiftVector = "1,1,3,0,0".parse().unwrap();
        assert_eq!(sh.as_slice(), &[1, 1, 3, 0, 0]);
        assert_eq!(sh.partial_sums(), vec![0, 1, 2, 5, 5, 5]);
        assert_eq!(sh.total(), 5);
        assert_eq!(sh.n(), 6);
        assert_eq!(sh.to_string(), "1,1,3,0,0");
        assert_eq!("(1,2)".parse::<ShiftVector>().unwrap().as_slice(), &[1, 2]);
        assert!("1,x".parse::<ShiftVector>().is_err());
    }
}
