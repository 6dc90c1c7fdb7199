use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::bounds::{partial_refuted, upper_bound};
use crate::equivalence::{Label, LabeledFactorization, LabeledMatching};
use crate::error::Result;
use crate::graph::{Edge, OneFactorization, PairedOrdering, PerfectMatching};

use super::{Meter, SearchBudget};

/// Which prunings `σ` search may use. All on by default.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SigmaOptions {
    /// Refute partial factorizations whose implied shift vector fails a filter.
    pub filters: bool,
    /// Cut branches that cannot beat the best factorization found so far.
    pub branch_and_bound: bool,
    /// Stop once the closed-form upper bound on `W` is reached.
    pub upper_bound_cap: bool,
}

impl Default for SigmaOptions {
    fn default() -> Self {
        SigmaOptions {
            filters: true,
            branch_and_bound: true,
            upper_bound_cap: true,
        }
    }
}

impl SigmaOptions {
    /// Plain enumeration of every 1-factorization.
    pub fn exhaustive() -> Self {
        SigmaOptions {
            filters: false,
            branch_and_bound: false,
            upper_bound_cap: false,
        }
    }
}

#[derive(Debug, Clone)]
pub struct SigmaResult {
    pub n: usize,
    pub sigma: usize,
    /// Identity ordering; every splitted matching tagged with its least split.
    pub witness: LabeledFactorization,
    /// The whole space was explored, or the upper bound was met.
    pub exhaustive: bool,
    pub nodes: u64,
    /// Complete 1-factorizations reached.
    pub leaves: u64,
}

/// A perfect matching together with the boundaries it does not cross.
#[derive(Clone)]
struct Candidate {
    edges: Vec<(u8, u8)>,
    /// Least split index, 0 when not splitted.
    split: usize,
}

fn crossing_mask(a: usize, b: usize) -> u64 {
    let (pa, pb) = (a / 2, b / 2);
    // boundaries pa+1..=pb
    if pa == pb {
        0
    } else {
        (u64::MAX >> (63 - pb)) & !(u64::MAX >> (63 - pa))
    }
}

fn least_split(edges: &[(u8, u8)], n: usize) -> usize {
    let crossed = edges
        .iter()
        .fold(0u64, |m, &(a, b)| m | crossing_mask(a as usize, b as usize));
    (1..n).find(|&i| crossed & (1 << i) == 0).unwrap_or(0)
}

/// Perfect matchings of the graph `adj` containing `(first, last)`.
fn matchings_with(adj: &[u64], first: usize, last: usize, n: usize) -> Vec<Candidate> {
    let v = adj.len();
    let full: u64 = if v == 64 { u64::MAX } else { (1 << v) - 1 };
    let mut out = Vec::new();
    let mut edges = vec![(first as u8, last as u8)];
    fn rec(adj: &[u64], covered: u64, full: u64, edges: &mut Vec<(u8, u8)>, out: &mut Vec<Candidate>, n: usize) {
        if covered == full {
            out.push(Candidate {
                edges: edges.clone(),
                split: least_split(edges, n),
            });
            return;
        }
        let x = (!covered).trailing_zeros() as usize;
        let mut free = adj[x] & !covered;
        while free != 0 {
            let y = free.trailing_zeros() as usize;
            free &= free - 1;
            edges.push((x as u8, y as u8));
            rec(adj, covered | 1 << x | 1 << y, full, edges, out, n);
            edges.pop();
        }
    }
    if adj[first] & (1 << last) != 0 {
        rec(adj, 1 << first | 1 << last, full, &mut edges, &mut out, n);
    }
    out
}

struct Shared<'a> {
    n: usize,
    opts: SigmaOptions,
    cap: usize,
    meter: &'a Meter,
    best: AtomicUsize,
    witness: Mutex<Vec<Candidate>>,
    leaves: AtomicUsize,
}

impl Shared<'_> {
    fn offer(&self, count: usize, chosen: &[Candidate]) {
        self.leaves.fetch_add(1, Ordering::Relaxed);
        if count <= self.best.load(Ordering::Relaxed) {
            return;
        }
        let mut w = self.witness.lock().unwrap();
        if count > self.best.load(Ordering::Relaxed) {
            self.best.store(count, Ordering::Relaxed);
            *w = chosen.to_vec();
            if self.opts.upper_bound_cap && count >= self.cap {
                self.meter.finish();
            }
        }
    }
}

struct Worker<'a, 'b> {
    shared: &'b Shared<'a>,
    adj: Vec<u64>,
    chosen: Vec<Candidate>,
    shift: Vec<u32>,
    splitted: usize,
    rng: Option<ChaCha8Rng>,
}

impl Worker<'_, '_> {
    fn order(&mut self, mut cands: Vec<Candidate>) -> Vec<Candidate> {
        if let Some(rng) = &mut self.rng {
            cands.shuffle(rng);
        }
        // splitted first; stable so the shuffle survives within groups
        cands.sort_by_key(|c| c.split == 0);
        cands
    }

    fn push(&mut self, c: Candidate) -> bool {
        for &(a, b) in &c.edges {
            self.adj[a as usize] &= !(1 << b);
            self.adj[b as usize] &= !(1 << a);
        }
        if c.split > 0 {
            self.shift[c.split - 1] += 1;
            self.splitted += 1;
        }
        self.chosen.push(c);
        !(self.shared.opts.filters && self.chosen.last().unwrap().split > 0 && partial_refuted(&self.shift))
    }

    fn pop(&mut self) {
        let c = self.chosen.pop().unwrap();
        for &(a, b) in &c.edges {
            self.adj[a as usize] |= 1 << b;
            self.adj[b as usize] |= 1 << a;
        }
        if c.split > 0 {
            self.shift[c.split - 1] -= 1;
            self.splitted -= 1;
        }
    }

    fn dfs(&mut self) {
        let sh = self.shared;
        if !sh.meter.tick(|| Some(sh.best.load(Ordering::Relaxed))) {
            return;
        }
        let slot = self.chosen.len();
        let last = 2 * sh.n - 1;
        if slot == last {
            sh.offer(self.splitted, &self.chosen);
            return;
        }
        if sh.opts.branch_and_bound && self.splitted + (last - slot) <= sh.best.load(Ordering::Relaxed) {
            return;
        }
        let cands = matchings_with(&self.adj, slot, last, sh.n);
        for c in self.order(cands) {
            if sh.opts.branch_and_bound
                && self.splitted + usize::from(c.split > 0) + (last - slot - 1) <= sh.best.load(Ordering::Relaxed)
            {
                // candidates are sorted splitted first, the rest do no better
                if c.split == 0 {
                    break;
                }
                continue;
            }
            if self.push(c) {
                self.dfs();
            }
            self.pop();
        }
    }
}

pub fn sigma_search(n: usize, budget: &SearchBudget) -> Result<SigmaResult> {
    sigma_search_with(n, budget, SigmaOptions::default())
}

/// Maximum number of splitted matchings over all 1-factorizations of
/// `K_2n` under the identity ordering.
///
/// Matching `k` is the one containing edge `{k, 2n-1}`, so each
/// factorization is met once. The first matching is distributed over the
/// workers.
pub fn sigma_search_with(n: usize, budget: &SearchBudget, opts: SigmaOptions) -> Result<SigmaResult> {
    budget.validate()?;
    if n == 0 || n > 32 {
        return Err(crate::Error::Precondition(format!("sigma search needs 1 <= n <= 32, got {n}")));
    }
    let v = 2 * n;
    let meter = Meter::new(budget);

    // the round-robin factorization is the starting witness
    let rr = OneFactorization::round_robin(n);
    let mut start: Vec<Candidate> = rr
        .matchings()
        .iter()
        .map(|m| {
            let edges: Vec<(u8, u8)> = m.edges().iter().map(|e| (e.a() as u8, e.b() as u8)).collect();
            Candidate {
                split: least_split(&edges, n),
                edges,
            }
        })
        .collect();
    start.sort_by_key(|c| c.split == 0);
    let start_count = start.iter().filter(|c| c.split > 0).count();

    let shared = Shared {
        n,
        opts,
        cap: (upper_bound(n) as usize).saturating_sub(2 * n - 1),
        meter: &meter,
        best: AtomicUsize::new(start_count),
        witness: Mutex::new(start.clone()),
        leaves: AtomicUsize::new(0),
    };

    let full: Vec<u64> = (0..v)
        .map(|x| (if v == 64 { u64::MAX } else { (1u64 << v) - 1 }) & !(1 << x))
        .collect();
    let reached_cap = opts.upper_bound_cap && start_count >= shared.cap;
    if !reached_cap {
        let top = matchings_with(&full, 0, v - 1, n);
        let next = AtomicUsize::new(0);
        let workers = budget.worker_count().min(top.len().max(1));
        let seed = budget.seed;
        let make = |id: usize| Worker {
            shared: &shared,
            adj: full.clone(),
            chosen: Vec::with_capacity(v),
            shift: vec![0; n.saturating_sub(1)],
            splitted: 0,
            rng: seed.map(|s| ChaCha8Rng::seed_from_u64(s.wrapping_add(id as u64))),
        };
        let run = |w: &mut Worker, top: &[Candidate]| loop {
            let i = next.fetch_add(1, Ordering::Relaxed);
            let Some(c) = top.get(i) else { break };
            if w.push(c.clone()) {
                w.dfs();
            }
            w.pop();
        };
        let mut first = make(0);
        let top = first.order(top);
        if workers == 1 {
            run(&mut first, &top);
        } else {
            std::thread::scope(|s| {
                for id in 0..workers {
                    let top = &top;
                    let run = &run;
                    let make = &make;
                    s.spawn(move || run(&mut make(id), top));
                }
            });
        }
    }

    let chosen = shared.witness.into_inner().unwrap();
    let sigma = chosen.iter().filter(|c| c.split > 0).count();
    let matchings = chosen
        .into_iter()
        .map(|c| {
            let edges = c.edges.iter().map(|&(a, b)| Edge::new(a as usize, b as usize)).collect();
            Ok(LabeledMatching {
                matching: PerfectMatching::from_edges(n, edges)?,
                label: if c.split > 0 { Label::Split(c.split) } else { Label::Free },
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let witness = LabeledFactorization::new(n, PairedOrdering::identity(n), matchings)?;
    Ok(SigmaResult {
        n,
        sigma,
        witness,
        exhaustive: !meter.spent(),
        nodes: meter.nodes(),
        leaves: shared.leaves.load(Ordering::Relaxed) as u64,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn crossing_masks() {
        assert_eq!(crossing_mask(0, 1), 0);
        assert_eq!(crossing_mask(0, 2), 0b10);
        assert_eq!(crossing_mask(1, 7), 0b1110);
        assert_eq!(least_split(&[(0, 1), (2, 5), (3, 4)], 3), 1);
        assert_eq!(least_split(&[(0, 2), (1, 3)], 2), 0);
    }

    #[test]
    fn small_sigma() {
        let b = SearchBudget::unlimited().with_workers(1);
        for (n, want) in [(1, 0), (2, 1), (3, 2), (4, 4)] {
            let r = sigma_search(n, &b).unwrap();
            assert_eq!(r.sigma, want, "n={n}");
            assert!(r.exhaustive);
            assert_eq!(r.witness.labeled_count(), want);
        }
    }

    #[test]
    fn plain_enumeration_counts_factorizations() {
        let b = SearchBudget::unlimited().with_workers(1);
        for (n, count, sigma) in [(1, 1, 0), (2, 1, 1), (3, 6, 2)] {
            let r = sigma_search_with(n, &b, SigmaOptions::exhaustive()).unwrap();
            assert_eq!(r.leaves, count, "n={n}");
            assert_eq!(r.sigma, sigma, "n={n}");
            assert!(r.exhaustive);
        }
    }

    #[test]
    fn node_limit_marks_result_inexhaustive() {
        let b = SearchBudget::unlimited().with_workers(1).with_nodes(10);
        let r = sigma_search_with(5, &b, SigmaOptions::exhaustive()).unwrap();
        assert!(!r.exhaustive);
        assert!(r.witness.labeled_count() == r.sigma);
    }
}
