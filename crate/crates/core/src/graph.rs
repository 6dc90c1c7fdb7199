//! Vertex and edge indexing for `K_2n`, paired vertex orderings, perfect
//! matchings and splittedness.
//!
//! Vertices are `0..2n`. Pair indices and split indices are 1-based: pair `i`
//! of an ordering holds the vertices at positions `2(i-1)` (the `u` side) and
//! `2(i-1)+1` (the `v` side).

use std::fmt;

use crate::error::{Error, Result};

pub type Vertex = usize;

/// Number of edges of `K_2n`.
pub const fn edge_count(n: usize) -> usize {
    n * (2 * n).saturating_sub(1)
}

/// An undirected edge, stored with `a < b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    a: Vertex,
    b: Vertex,
}

impl Edge {
    /// Builds the edge `{x, y}`. Panics if `x == y`.
    pub fn new(x: Vertex, y: Vertex) -> Self {
        assert_ne!(x, y, "loop edge {x}-{x}");
        if x < y {
            Edge { a: x, b: y }
        } else {
            Edge { a: y, b: x }
        }
    }

    pub fn try_new(x: Vertex, y: Vertex, n: usize) -> Result<Self> {
        if x == y || x >= 2 * n || y >= 2 * n {
            return Err(Error::InvalidEdge { a: x, b: y, n });
        }
        Ok(Edge::new(x, y))
    }

    pub fn a(self) -> Vertex {
        self.a
    }

    pub fn b(self) -> Vertex {
        self.b
    }

    pub fn endpoints(self) -> (Vertex, Vertex) {
        (self.a, self.b)
    }

    pub fn touches(self, v: Vertex) -> bool {
        self.a == v || self.b == v
    }

    /// Canonical index among the edges of `K_2n` (lexicographic on `(a, b)`).
    pub fn index(self, n: usize) -> usize {
        let vc = 2 * n;
        self.a * vc - self.a * (self.a + 1) / 2 + (self.b - self.a - 1)
    }

    pub fn from_index(index: usize, n: usize) -> Self {
        let vc = 2 * n;
        let mut rest = index;
        let mut a = 0;
        while rest >= vc - 1 - a {
            rest -= vc - 1 - a;
            a += 1;
        }
        Edge { a, b: a + 1 + rest }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.a, self.b)
    }
}

/// Canonical index of the edge `{a, b}` of `K_2n`.
pub fn edge_index(a: Vertex, b: Vertex, n: usize) -> Result<usize> {
    Ok(Edge::try_new(a, b, n)?.index(n))
}

/// All edges of `K_2n` in canonical index order.
pub fn all_edges(n: usize) -> impl Iterator<Item = Edge> {
    let vc = 2 * n;
    (0..vc).flat_map(move |a| (a + 1..vc).map(move |b| Edge { a, b }))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    U,
    V,
}

/// An arrangement `(u_1, v_1, ..., u_n, v_n)` of the vertices of `K_2n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PairedOrdering {
    n: usize,
    position: Vec<usize>,
    vertex_at: Vec<Vertex>,
}

impl PairedOrdering {
    /// Vertex `v` sits at position `v`.
    pub fn identity(n: usize) -> Self {
        let ids: Vec<usize> = (0..2 * n).collect();
        PairedOrdering {
            n,
            position: ids.clone(),
            vertex_at: ids,
        }
    }

    /// Builds an ordering from the vertex sequence `(u_1, v_1, ..., u_n, v_n)`.
    pub fn from_sequence(sequence: Vec<Vertex>) -> Result<Self> {
        if sequence.len() % 2 != 0 {
            return Err(Error::InvalidOrdering(format!(
                "odd vertex count {}",
                sequence.len()
            )));
        }
        let vc = sequence.len();
        let mut position = vec![usize::MAX; vc];
        for (p, &v) in sequence.iter().enumerate() {
            if v >= vc {
                return Err(Error::InvalidOrdering(format!("vertex {v} out of range")));
            }
            if position[v] != usize::MAX {
                return Err(Error::InvalidOrdering(format!("vertex {v} repeated")));
            }
            position[v] = p;
        }
        Ok(PairedOrdering {
            n: vc / 2,
            position,
            vertex_at: sequence,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn position(&self, v: Vertex) -> usize {
        self.position[v]
    }

    pub fn vertex_at(&self, position: usize) -> Vertex {
        self.vertex_at[position]
    }

    /// Vertex sequence in position order.
    pub fn sequence(&self) -> &[Vertex] {
        &self.vertex_at
    }

    /// 1-based pair index of `v`.
    pub fn pair(&self, v: Vertex) -> usize {
        self.position[v] / 2 + 1
    }

    pub fn side(&self, v: Vertex) -> Side {
        if self.position[v] % 2 == 0 {
            Side::U
        } else {
            Side::V
        }
    }

    pub fn u(&self, pair: usize) -> Vertex {
        self.vertex_at[2 * (pair - 1)]
    }

    pub fn v(&self, pair: usize) -> Vertex {
        self.vertex_at[2 * (pair - 1) + 1]
    }

    pub fn is_identity(&self) -> bool {
        self.vertex_at.iter().enumerate().all(|(p, &v)| p == v)
    }

    /// The ordering `(u_n, v_n, ..., u_1, v_1)`: an `i`-splitted matching
    /// becomes `(n-i)`-splitted.
    pub fn reversed(&self) -> Self {
        let seq = (1..=self.n)
            .rev()
            .flat_map(|i| [self.u(i), self.v(i)])
            .collect();
        PairedOrdering::from_sequence(seq).expect("reversal of a valid ordering")
    }

    /// `(min, max)` pair index of the endpoints of `e`.
    pub fn pair_span(&self, e: Edge) -> (usize, usize) {
        let (pa, pb) = (self.pair(e.a), self.pair(e.b));
        (pa.min(pb), pa.max(pb))
    }
}

/// Induced subgraph `H^[lo,hi]` on pairs `lo..=hi`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PairRange {
    pub lo: usize,
    pub hi: usize,
}

impl PairRange {
    pub fn new(lo: usize, hi: usize, n: usize) -> Result<Self> {
        if lo == 0 || lo > hi || hi > n {
            return Err(Error::Precondition(format!(
                "pair range [{lo},{hi}] invalid for n={n}"
            )));
        }
        Ok(PairRange { lo, hi })
    }

    pub fn vertex_count(self) -> usize {
        2 * (self.hi - self.lo + 1)
    }

    pub fn vertices(self, ord: &PairedOrdering) -> Vec<Vertex> {
        (self.lo..=self.hi)
            .flat_map(|i| [ord.u(i), ord.v(i)])
            .collect()
    }

    pub fn contains_edge(self, e: Edge, ord: &PairedOrdering) -> bool {
        let (lo, hi) = ord.pair_span(e);
        lo >= self.lo && hi <= self.hi
    }

    /// Edges of the induced subgraph, sorted.
    pub fn edges(self, ord: &PairedOrdering) -> Vec<Edge> {
        let vs = self.vertices(ord);
        let mut out = Vec::with_capacity(vs.len() * (vs.len() - 1) / 2);
        for (k, &x) in vs.iter().enumerate() {
            for &y in &vs[k + 1..] {
                out.push(Edge::new(x, y));
            }
        }
        out.sort_unstable();
        out
    }
}

/// Checks that `edges` is a matching on `0..vertex_count` and returns the
/// partner array (`usize::MAX` for uncovered vertices).
pub fn matching_partners(edges: &[Edge], vertex_count: usize) -> Result<Vec<Vertex>> {
    let mut partner = vec![usize::MAX; vertex_count];
    for &e in edges {
        if e.b >= vertex_count {
            return Err(Error::NotPerfectMatching(format!("edge {e} out of range")));
        }
        for (x, y) in [(e.a, e.b), (e.b, e.a)] {
            if partner[x] != usize::MAX {
                return Err(Error::NotPerfectMatching(format!(
                    "vertex {x} covered twice (edges {x}-{} and {e})",
                    partner[x]
                )));
            }
            partner[x] = y;
        }
    }
    Ok(partner)
}

/// A perfect matching of `K_2n`, kept both as a sorted edge list and as the
/// vertex-to-partner involution.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PerfectMatching {
    edges: Vec<Edge>,
    partner: Vec<Vertex>,
}

impl PerfectMatching {
    pub fn from_edges(n: usize, mut edges: Vec<Edge>) -> Result<Self> {
        edges.sort_unstable();
        let partner = matching_partners(&edges, 2 * n)?;
        if let Some(v) = partner.iter().position(|&p| p == usize::MAX) {
            return Err(Error::NotPerfectMatching(format!("vertex {v} uncovered")));
        }
        Ok(PerfectMatching { edges, partner })
    }

    pub fn from_partners(partner: Vec<Vertex>) -> Result<Self> {
        let vc = partner.len();
        if vc % 2 != 0 {
            return Err(Error::NotPerfectMatching("odd vertex count".into()));
        }
        let mut edges = Vec::with_capacity(vc / 2);
        for (v, &p) in partner.iter().enumerate() {
            if p >= vc || p == v || partner[p] != v {
                return Err(Error::NotPerfectMatching(format!(
                    "partner array is not a fixed-point-free involution at {v}"
                )));
            }
            if v < p {
                edges.push(Edge::new(v, p));
            }
        }
        Ok(PerfectMatching { edges, partner })
    }

    pub fn n(&self) -> usize {
        self.partner.len() / 2
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn partner(&self, v: Vertex) -> Vertex {
        self.partner[v]
    }

    pub fn contains(&self, e: Edge) -> bool {
        self.partner.get(e.a) == Some(&e.b)
    }
}

/// The left part, right part and crossing edges of a matching at split line `i`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SplitParts {
    pub left: Vec<Edge>,
    pub right: Vec<Edge>,
    pub crossing: Vec<Edge>,
}

/// Partitions the edges of `edges` by the line between pair `i` and pair `i+1`.
pub fn split_edges(edges: &[Edge], i: usize, ord: &PairedOrdering) -> Result<SplitParts> {
    let n = ord.n();
    if i == 0 || i >= n {
        return Err(Error::PairIndexOutOfRange {
            index: i,
            max: n.saturating_sub(1),
        });
    }
    let mut parts = SplitParts::default();
    for &e in edges {
        let (lo, hi) = ord.pair_span(e);
        if hi <= i {
            parts.left.push(e);
        } else if lo > i {
            parts.right.push(e);
        } else {
            parts.crossing.push(e);
        }
    }
    Ok(parts)
}

pub fn split_parts(m: &PerfectMatching, i: usize, ord: &PairedOrdering) -> Result<SplitParts> {
    split_edges(m.edges(), i, ord)
}

/// All `i` in `1..n` for which `m` is `i`-splitted, ascending.
pub fn split_indices(m: &PerfectMatching, ord: &PairedOrdering) -> Vec<usize> {
    let n = ord.n();
    if n < 2 {
        return Vec::new();
    }
    // blocked[i] is set when some edge crosses line i
    let mut blocked = vec![false; n];
    for &e in m.edges() {
        let (lo, hi) = ord.pair_span(e);
        for flag in &mut blocked[lo..hi] {
            *flag = true;
        }
    }
    (1..n).filter(|&i| !blocked[i]).collect()
}

pub fn is_splitted_at(m: &PerfectMatching, i: usize, ord: &PairedOrdering) -> bool {
    i >= 1
        && i < ord.n()
        && m.edges().iter().all(|&e| {
            let (lo, hi) = ord.pair_span(e);
            hi <= i || lo > i
        })
}

/// `u_i` under the identity ordering (1-based pair index).
pub const fn u_of(i: usize) -> Vertex {
    2 * (i - 1)
}

/// `v_i` under the identity ordering (1-based pair index).
pub const fn v_of(i: usize) -> Vertex {
    2 * (i - 1) + 1
}

/// `E(K_2 □ K_n)`: `u_iu_j`, `v_iv_j` and the vertical edges `u_iv_i`, under
/// the identity ordering.
pub fn k2_square_kn(n: usize) -> Vec<Edge> {
    let mut out = Vec::with_capacity(n * n);
    for i in 1..=n {
        out.push(Edge::new(u_of(i), v_of(i)));
        for j in i + 1..=n {
            out.push(Edge::new(u_of(i), u_of(j)));
            out.push(Edge::new(v_of(i), v_of(j)));
        }
    }
    out.sort_unstable();
    out
}

/// `E(K_2 × K_n)`: `u_iv_j` for `i != j`, under the identity ordering.
pub fn k2_times_kn(n: usize) -> Vec<Edge> {
    let mut out = Vec::with_capacity(n * n.saturating_sub(1));
    for i in 1..=n {
        for j in 1..=n {
            if i != j {
                out.push(Edge::new(u_of(i), v_of(j)));
            }
        }
    }
    out.sort_unstable();
    out
}

/// A 1-factorization of `K_2n`: `2n-1` pairwise disjoint perfect matchings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OneFactorization {
    n: usize,
    matchings: Vec<PerfectMatching>,
}

impl OneFactorization {
    pub fn new(n: usize, matchings: Vec<PerfectMatching>) -> Result<Self> {
        check_factorization(n, &matchings)?;
        Ok(OneFactorization { n, matchings })
    }

    /// Circle-method factorization, matchings sorted by the partner of vertex 0.
    pub fn round_robin(n: usize) -> Self {
        let vc = 2 * n;
        let fixed = vc - 1;
        let mut matchings: Vec<PerfectMatching> = (0..fixed)
            .map(|k| {
                let mut edges = vec![Edge::new(fixed, k)];
                for j in 1..n {
                    edges.push(Edge::new((k + j) % fixed, (k + fixed - j) % fixed));
                }
                PerfectMatching::from_edges(n, edges).expect("circle method yields a perfect matching")
            })
            .collect();
        matchings.sort_by_key(|m| m.partner(0));
        OneFactorization { n, matchings }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn matchings(&self) -> &[PerfectMatching] {
        &self.matchings
    }

    pub fn into_matchings(self) -> Vec<PerfectMatching> {
        self.matchings
    }
}

pub(crate) fn check_factorization(n: usize, matchings: &[PerfectMatching]) -> Result<()> {
    let expected = (2 * n).saturating_sub(1);
    if matchings.len() != expected {
        return Err(Error::NotFactorization(format!(
            "{} matchings, expected {expected}",
            matchings.len()
        )));
    }
    let mut seen = vec![false; edge_count(n)];
    for (k, m) in matchings.iter().enumerate() {
        if m.n() != n {
            return Err(Error::NotFactorization(format!(
                "matching {k} is on K_{}",
                2 * m.n()
            )));
        }
        for &e in m.edges() {
            let idx = e.index(n);
            if seen[idx] {
                return Err(Error::NotFactorization(format!(
                    "edge {e} appears in more than one matching (again in matching {k})"
                )));
            }
            seen[idx] = true;
        }
    }
    // 2n-1 disjoint perfect matchings of n edges each cover all n(2n-1) edges
    Ok(())
}
