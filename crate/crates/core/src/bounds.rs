//! Necessary conditions on shift vectors and the bounds on `W(K_2n)` they
//! yield, plus closed-form lower and upper bounds.
//!
//! A shift vector `(b_1, ..., b_{n-1})` of an interval coloring of `K_2n`
//! satisfies, for the vector and for its reversal:
//!
//! * prefix-sum: `B_k <= 2k - 1` for every `k`;
//! * after-saturated: if `B_k = 2k - 1` for `k in [2, n-2]` then `b_{k+1} <= 1`;
//! * before-saturated: if `B_k = 2k - 1` for `k in [3, n-1]` then `b_k >= 3`;
//! * edge-count: for `k in [2, n-2]`,
//!   `k(2k-1) >= sum_{i<=k} i b_i + sum_{i=k+1}^{min(2k-1, n-1)} (2k-i) b_i`.
//!
//! If no vector of total `T` survives, no interval coloring has total shift
//! `T`, and since colors can be dropped one at a time, none has a larger one
//! either: `W(K_2n) <= 2n - 2 + T`.

use std::fmt;

use crate::coloring::ShiftVector;

pub type CandidateVector = ShiftVector;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FilterKind {
    PrefixSum,
    AfterSaturated,
    BeforeSaturated,
    EdgeCount,
}

impl FilterKind {
    pub const ALL: [FilterKind; 4] = [
        FilterKind::PrefixSum,
        FilterKind::AfterSaturated,
        FilterKind::BeforeSaturated,
        FilterKind::EdgeCount,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FilterKind::PrefixSum => "prefix-sum",
            FilterKind::AfterSaturated => "after-saturated",
            FilterKind::BeforeSaturated => "before-saturated",
            FilterKind::EdgeCount => "edge-count",
        }
    }
}

impl fmt::Display for FilterKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for FilterKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        FilterKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| format!("unknown filter {s:?}"))
    }
}

/// Which filters to apply.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FilterSet {
    pub prefix_sum: bool,
    pub after_saturated: bool,
    pub before_saturated: bool,
    pub edge_count: bool,
}

impl FilterSet {
    pub fn all() -> Self {
        FilterSet {
            prefix_sum: true,
            after_saturated: true,
            before_saturated: true,
            edge_count: true,
        }
    }

    pub fn only(kind: FilterKind) -> Self {
        let mut s = FilterSet {
            prefix_sum: false,
            after_saturated: false,
            before_saturated: false,
            edge_count: false,
        };
        match kind {
            FilterKind::PrefixSum => s.prefix_sum = true,
            FilterKind::AfterSaturated => s.after_saturated = true,
            FilterKind::BeforeSaturated => s.before_saturated = true,
            FilterKind::EdgeCount => s.edge_count = true,
        }
        s
    }

    pub fn contains(self, kind: FilterKind) -> bool {
        match kind {
            FilterKind::PrefixSum => self.prefix_sum,
            FilterKind::AfterSaturated => self.after_saturated,
            FilterKind::BeforeSaturated => self.before_saturated,
            FilterKind::EdgeCount => self.edge_count,
        }
    }

    pub fn kinds(self) -> Vec<FilterKind> {
        FilterKind::ALL.into_iter().filter(|&k| self.contains(k)).collect()
    }
}

impl Default for FilterSet {
    fn default() -> Self {
        FilterSet::all()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    Forward,
    Reversed,
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::Forward => "forward",
            Direction::Reversed => "reversed",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Rejection {
    pub filter: FilterKind,
    pub direction: Direction,
    /// The `k` of the violated condition, counted in the given direction.
    pub k: usize,
}

/// Outcome of [`filter_feasible`]. Passing means "not refuted", not
/// "realizable".
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FeasibilityVerdict {
    pub rejection: Option<Rejection>,
}

impl FeasibilityVerdict {
    pub fn passed(&self) -> bool {
        self.rejection.is_none()
    }
}

impl fmt::Display for FeasibilityVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.rejection {
            None => f.write_str("passed"),
            Some(r) => write!(f, "rejected by {} ({}) at k={}", r.filter, r.direction, r.k),
        }
    }
}

fn prefix_sums(b: &[u32]) -> Vec<u32> {
    let mut s = Vec::with_capacity(b.len() + 1);
    s.push(0);
    for &x in b {
        s.push(s.last().unwrap() + x);
    }
    s
}

fn saturated(sums: &[u32], k: usize) -> bool {
    sums[k] as usize == 2 * k - 1
}

fn edge_count_rhs(b: &[u32], k: usize, last: usize) -> usize {
    let left: usize = (1..=k).map(|i| i * b[i - 1] as usize).sum();
    let right: usize = (k + 1..=last.min(2 * k - 1)).map(|i| (2 * k - i) * b[i - 1] as usize).sum();
    left + right
}

/// First violation in one direction, for a vector of a `K_2n` with
/// `n = b.len() + 1`.
fn first_violation(b: &[u32], set: FilterSet) -> Option<(FilterKind, usize)> {
    let n = b.len() + 1;
    let sums = prefix_sums(b);
    if set.prefix_sum {
        if let Some(k) = (1..n).find(|&k| sums[k] as usize > 2 * k - 1) {
            return Some((FilterKind::PrefixSum, k));
        }
    }
    if set.after_saturated && n >= 4 {
        if let Some(k) = (2..=n - 2).find(|&k| saturated(&sums, k) && b[k] > 1) {
            return Some((FilterKind::AfterSaturated, k));
        }
    }
    if set.before_saturated && n >= 4 {
        if let Some(k) = (3..n).find(|&k| saturated(&sums, k) && b[k - 1] < 3) {
            return Some((FilterKind::BeforeSaturated, k));
        }
    }
    if set.edge_count && n >= 4 {
        if let Some(k) = (2..=n - 2).find(|&k| edge_count_rhs(b, k, n - 1) > k * (2 * k - 1)) {
            return Some((FilterKind::EdgeCount, k));
        }
    }
    None
}

pub fn filter_feasible(v: &CandidateVector) -> FeasibilityVerdict {
    filter_feasible_with(v, FilterSet::all())
}

pub fn filter_feasible_with(v: &CandidateVector, set: FilterSet) -> FeasibilityVerdict {
    let forward = v.as_slice();
    let rev: Vec<u32> = forward.iter().rev().copied().collect();
    for (dir, b) in [(Direction::Forward, forward), (Direction::Reversed, &rev[..])] {
        if let Some((filter, k)) = first_violation(b, set) {
            return FeasibilityVerdict {
                rejection: Some(Rejection { filter, direction: dir, k }),
            };
        }
    }
    FeasibilityVerdict { rejection: None }
}

/// Whether a partial shift vector is already refuted, where `b` holds lower
/// bounds on the final entries. Every filter stays violated as entries grow:
/// raising any of `b_1..b_k` past a saturated `B_k` breaks the prefix-sum
/// bound at `k`.
pub fn partial_refuted(b: &[u32]) -> bool {
    !filter_feasible(&ShiftVector::new(b.to_vec())).passed()
}

/// Depth-first enumeration in lexicographic order of all vectors of length
/// `n - 1` and sum `total` that satisfy the forward and reversed prefix-sum
/// bounds; `visit` returns `false` to stop.
fn walk(n: usize, total: u32, mut visit: impl FnMut(&[u32]) -> bool) {
    let len = n.saturating_sub(1);
    if len == 0 {
        if total == 0 {
            visit(&[]);
        }
        return;
    }
    let mut b = vec![0u32; len];
    fn rec(b: &mut Vec<u32>, k: usize, used: u32, total: u32, visit: &mut dyn FnMut(&[u32]) -> bool) -> bool {
        let len = b.len();
        let left = total - used;
        if k == len {
            return left > 0 || visit(b);
        }
        // after position k the remaining suffix has len - k - 1 entries
        let rest = len - k - 1;
        let rest_cap = if rest == 0 { 0 } else { 2 * rest as u32 - 1 };
        let cap = (2 * (k as u32 + 1) - 1 - used).min(left);
        let lo = left.saturating_sub(rest_cap);
        // the suffix starting at k must itself respect the reversed bound
        let suffix_cap = 2 * (len - k) as u32 - 1;
        if left > suffix_cap {
            return true;
        }
        for x in lo..=cap {
            b[k] = x;
            if !rec(b, k + 1, used + x, total, visit) {
                return false;
            }
        }
        b[k] = 0;
        true
    }
    rec(&mut b, 0, 0, total, &mut visit);
}

/// Vectors of length `n - 1` summing to `total` and passing all filters,
/// in lexicographic order.
pub fn enumerate_feasible(n: usize, total: u32) -> Vec<CandidateVector> {
    enumerate_feasible_with(n, total, FilterSet::all()).0
}

/// As [`enumerate_feasible`] restricted to `set`; also returns how many
/// vectors survived the prefix-sum pruning and were examined.
pub fn enumerate_feasible_with(n: usize, total: u32, set: FilterSet) -> (Vec<CandidateVector>, u64) {
    let mut out = Vec::new();
    let mut examined = 0u64;
    walk(n, total, |b| {
        examined += 1;
        let v = ShiftVector::new(b.to_vec());
        if filter_feasible_with(&v, set).passed() {
            out.push(v);
        }
        true
    });
    (out, examined)
}

/// The lexicographically first feasible vector of the given total.
pub fn first_feasible(n: usize, total: u32) -> Option<CandidateVector> {
    let mut found = None;
    walk(n, total, |b| {
        let v = ShiftVector::new(b.to_vec());
        if filter_feasible(&v).passed() {
            found = Some(v);
            false
        } else {
            true
        }
    });
    found
}

/// Result of exhausting all vectors of one total.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundCertificate {
    pub n: usize,
    pub total: u32,
    pub filters: Vec<FilterKind>,
    /// Vectors that passed prefix-sum pruning and were run through the filters.
    pub examined: u64,
    pub survivors: Vec<CandidateVector>,
    /// `2n - 2 + total` when no vector survived.
    pub claimed_bound: Option<u32>,
}

impl BoundCertificate {
    pub fn is_empty(&self) -> bool {
        self.survivors.is_empty()
    }
}

pub fn certify(n: usize, total: u32) -> BoundCertificate {
    certify_with(n, total, FilterSet::all())
}

pub fn certify_with(n: usize, total: u32, set: FilterSet) -> BoundCertificate {
    let (survivors, examined) = enumerate_feasible_with(n, total, set);
    let claimed_bound = survivors.is_empty().then(|| (2 * n - 2) as u32 + total);
    BoundCertificate {
        n,
        total,
        filters: set.kinds(),
        examined,
        survivors,
        claimed_bound,
    }
}

/// Smallest total with no feasible vector, and its certificate.
pub fn certified_upper_bound(n: usize) -> BoundCertificate {
    let mut total = 0;
    while first_feasible(n, total).is_some() {
        total += 1;
    }
    certify(n, total)
}

/// `m(k, r)` over filter-feasible prefixes: the least `sum i b_i` and the
/// lexicographically greatest prefix attaining it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MValue {
    pub value: u32,
    pub vector: Vec<u32>,
}

/// Filters that a length-`k` prefix of a longer shift vector must pass.
fn prefix_admissible(b: &[u32]) -> bool {
    let k = b.len();
    let sums = prefix_sums(b);
    (1..=k).all(|j| (sums[j] as usize) < 2 * j)
        && (2..k).all(|j| !saturated(&sums, j) || b[j] <= 1)
        && (3..=k).all(|j| !saturated(&sums, j) || b[j - 1] >= 3)
        && (2..k).all(|j| edge_count_rhs(b, j, k) <= j * (2 * j - 1))
}

pub fn m_filter(k: usize, r: u32) -> Option<MValue> {
    assert!(k >= 1, "m(k, r) needs k >= 1");
    let mut best: Option<MValue> = None;
    let mut b = vec![0u32; k];
    fn rec(b: &mut Vec<u32>, i: usize, left: u32, best: &mut Option<MValue>) {
        if i == b.len() {
            if left == 0 && prefix_admissible(b) {
                let value = b.iter().enumerate().map(|(j, &x)| (j as u32 + 1) * x).sum();
                let better = match best {
                    None => true,
                    Some(m) => value < m.value || (value == m.value && b[..] > m.vector[..]),
                };
                if better {
                    *best = Some(MValue { value, vector: b.clone() });
                }
            }
            return;
        }
        let cap = 2 * (i as u32 + 1) - 1;
        let used: u32 = b[..i].iter().sum();
        for x in 0..=left.min(cap.saturating_sub(used)) {
            b[i] = x;
            rec(b, i + 1, left - x, best);
        }
        b[i] = 0;
    }
    rec(&mut b, 0, r, &mut best);
    best
}

/// Closed-form upper bound on `W(K_2n)`.
pub fn upper_bound(n: usize) -> u32 {
    assert!(n >= 1);
    let n = n as u32;
    match n {
        1 => 1,
        2 => 4,
        3..=4 => 4 * n - 5,
        5..=8 => 4 * n - 6,
        _ => 4 * n - 7,
    }
}

/// `W(K_2p)` for the five smallest primes.
pub const SMALL_PRIME_W: [(usize, u32); 5] = [(2, 4), (3, 7), (5, 14), (7, 21), (11, 37)];

/// Prime factorization as `(p, alpha)` in increasing `p`.
pub fn factorize(mut n: usize) -> Vec<(usize, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        let mut a = 0;
        while n % p == 0 {
            n /= p;
            a += 1;
        }
        if a > 0 {
            out.push((p, a));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Lower bound from the prime factorization of `n`:
/// `4n - 3 - sum alpha_p c_p` with `c_p = 4p - 3 - W(K_2p)` for
/// `p <= 11` and `(p + 1) / 2` above.
pub fn lower_bound(n: usize) -> u32 {
    assert!(n >= 1);
    let deficit: usize = factorize(n)
        .into_iter()
        .map(|(p, a)| {
            let c = match SMALL_PRIME_W.iter().find(|&&(q, _)| q == p) {
                Some(&(_, w)) => 4 * p - 3 - w as usize,
                None => p.div_ceil(2),
            };
            a as usize * c
        })
        .sum();
    (4 * n - 3 - deficit) as u32
}

/// `W(K_2m) + W(K_2k) + 4(m-1)(k-1) - 1`, given the two `W` values.
pub fn composite_bound(m: usize, wm: u32, k: usize, wk: u32) -> u32 {
    wm + wk + (4 * (m - 1) * (k - 1)) as u32 - 1
}

fn floor_log2(x: usize) -> u32 {
    usize::BITS - 1 - x.leading_zeros()
}

/// Earlier bounds and conjectured values for `W(K_2n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReferenceFormulas {
    pub n: usize,
    /// `2n - 1 + floor(log2(2n - 1))`.
    pub log_bound: u32,
    /// `4n - 4`, valid for every graph on `2n` vertices.
    pub vertex_bound: u32,
    /// `3n - 2`.
    pub three_n_bound: u32,
    /// `4n - 2 - p - q` for `n = p·2^q` with `p` odd.
    pub odd_part_bound: u32,
    /// Conjectured to equal `W`: `4n - 2 - p - q`.
    pub conjecture_pq: u32,
    /// Conjectured to equal `W`: `4n - 2 - floor(log2 n) - popcount(n)`.
    pub conjecture_log: u32,
    /// Best product bound over factorizations `n = m·k` with `1 < m <= k`,
    /// taking the lower bounds of the factors.
    pub composite: Option<(usize, usize, u32)>,
}

pub fn reference_formulas(n: usize) -> ReferenceFormulas {
    assert!(n >= 1);
    let q = n.trailing_zeros() as usize;
    let p = n >> q;
    let pq = (4 * n - 2 - p - q) as u32;
    let composite = (2..=n)
        .take_while(|m| m * m <= n)
        .filter(|m| n % m == 0)
        .map(|m| {
            let k = n / m;
            (m, k, composite_bound(m, lower_bound(m), k, lower_bound(k)))
        })
        .max_by_key(|&(_, _, w)| w);
    ReferenceFormulas {
        n,
        log_bound: (2 * n - 1) as u32 + floor_log2(2 * n - 1),
        vertex_bound: if n == 1 { 1 } else { (4 * n - 4) as u32 },
        three_n_bound: (3 * n - 2) as u32,
        odd_part_bound: pq,
        conjecture_pq: pq,
        conjecture_log: (4 * n - 2) as u32 - floor_log2(n) - n.count_ones(),
        composite,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sv(b: &[u32]) -> CandidateVector {
        ShiftVector::new(b.to_vec())
    }

    #[test]
    fn verdict_examples() {
        for n in 5..=9 {
            let mut b = vec![1, 2, 2];
            b.resize(n - 1, 0);
            let r = filter_feasible(&sv(&b)).rejection.unwrap();
            assert_eq!((r.filter, r.direction, r.k), (FilterKind::AfterSaturated, Direction::Forward, 2));
        }
        assert!(filter_feasible(&sv(&[1, 1, 3, 0, 0])).passed());
        let r = filter_feasible(&sv(&[2, 0, 0])).rejection.unwrap();
        assert_eq!((r.filter, r.k), (FilterKind::PrefixSum, 1));
        assert!(filter_feasible(&sv(&[1, 2, 1, 3, 1, 1, 3, 1, 2, 1])).passed());
        assert!(filter_feasible(&sv(&[])).passed());
    }

    #[test]
    fn reversed_direction_is_reported() {
        let r = filter_feasible(&sv(&[0, 0, 2])).rejection.unwrap();
        assert_eq!((r.filter, r.direction, r.k), (FilterKind::PrefixSum, Direction::Reversed, 1));
    }

    fn all_vectors(len: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<CandidateVector>) {
        if cur.len() == len {
            if left == 0 {
                out.push(sv(cur));
            }
            return;
        }
        for x in 0..=left {
            cur.push(x);
            all_vectors(len, left - x, cur, out);
            cur.pop();
        }
    }

    #[test]
    fn enumeration_matches_brute_force() {
        for n in 2..=6 {
            for total in 0..=(2 * n as u32) {
                let mut brute = Vec::new();
                all_vectors(n - 1, total, &mut Vec::new(), &mut brute);
                brute.retain(|v| filter_feasible(v).passed());
                assert_eq!(enumerate_feasible(n, total), brute, "n={n} total={total}");
            }
        }
    }

    #[test]
    fn certificates() {
        assert!(enumerate_feasible(7, 9).is_empty());
        assert!(enumerate_feasible(5, 6).is_empty());
        assert!(enumerate_feasible(9, 13).is_empty());
        assert!(enumerate_feasible(6, 7).contains(&sv(&[1, 1, 3, 1, 1])));
        assert_eq!(certify(7, 9).claimed_bound, Some(21));
    }

    #[test]
    fn certified_agrees_with_closed_form() {
        for n in 1..=9 {
            let c = certified_upper_bound(n);
            let w = c.claimed_bound.unwrap();
            if n == 7 {
                assert_eq!(w, 21);
            } else {
                assert_eq!(w, upper_bound(n), "n={n}");
            }
        }
    }

    #[test]
    fn table_one() {
        let cells: &[(usize, u32, u32, &[u32])] = &[
            (1, 0, 0, &[0]),
            (1, 1, 1, &[1]),
            (2, 2, 3, &[1, 1]),
            (2, 3, 5, &[1, 2]),
            (3, 4, 8, &[1, 2, 1]),
            (3, 5, 12, &[1, 1, 3]),
            (4, 5, 12, &[1, 2, 1, 1]),
            (4, 6, 16, &[1, 2, 1, 2]),
            (4, 7, 20, &[1, 2, 1, 3]),
        ];
        for &(k, r, value, vector) in cells {
            assert_eq!(m_filter(k, r), Some(MValue { value, vector: vector.to_vec() }), "k={k} r={r}");
        }
        assert_eq!(m_filter(2, 4), None);
        assert_eq!(m_filter(4, 0).unwrap().value, 0);
    }

    #[test]
    fn closed_forms() {
        let lower: Vec<u32> = (1..=18).map(lower_bound).collect();
        assert_eq!(&lower[..13], &[1, 4, 7, 11, 14, 18, 21, 26, 29, 33, 37, 41, 42]);
        assert_eq!(&lower[14..], &[52, 57, 56, 64]);
        let upper: Vec<u32> = (1..=18).map(upper_bound).collect();
        assert_eq!(upper, [1, 4, 7, 11, 14, 18, 22, 26, 29, 33, 37, 41, 45, 49, 53, 57, 61, 65]);
        assert_eq!(reference_formulas(5).conjecture_pq, 13);
        assert_eq!(reference_formulas(11).conjecture_log, 36);
        assert_eq!(reference_formulas(15).conjecture_log, 51);
        assert_eq!(reference_formulas(3).log_bound, 7);
    }

    #[test]
    fn factorize_small() {
        assert_eq!(factorize(1), vec![]);
        assert_eq!(factorize(18), vec![(2, 1), (3, 2)]);
        assert_eq!(factorize(97), vec![(97, 1)]);
    }
}
