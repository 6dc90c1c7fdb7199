use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::bounds::{filter_feasible, CandidateVector};
use crate::coloring::{shift_vector, verify_interval, EdgeColoring};
use crate::constructions::round_robin;
use crate::equivalence::factorization_to_coloring;
use crate::error::{Error, Result};
use crate::graph::{all_edges, edge_count};

use super::dlx::{Dlx, DlxOutcome};
use super::{Meter, SearchBudget};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Realization {
    /// A verified coloring with the requested shift vector.
    Found(EdgeColoring),
    /// The whole space was searched: no interval coloring has this shift
    /// vector.
    Infeasible { nodes: u64 },
    /// Budget exhausted or cancelled; says nothing about existence.
    NotFound { nodes: u64 },
}

/// Searches for an interval coloring of `K_2n` whose shift vector is
/// `target`.
///
/// Under the identity ordering, pair `p` must see exactly the colors
/// `B_{p-1} + 1 ..= B_{p-1} + 2n - 1`. Each (vertex, color) slot and each
/// edge is an item; coloring edge `ab` with `c` covers the edge and the
/// slots `(a, c)`, `(b, c)`. Exact covers are the wanted colorings.
pub fn realize_shift(n: usize, target: &CandidateVector, budget: &SearchBudget) -> Result<Realization> {
    budget.validate()?;
    if target.n() != n {
        return Err(Error::Precondition(format!(
            "shift vector has {} entries, K_{} needs {}",
            target.as_slice().len(),
            2 * n,
            n - 1
        )));
    }
    let verdict = filter_feasible(target);
    if !verdict.passed() {
        return Err(Error::Precondition(format!("shift vector ({target}) is {verdict}")));
    }
    if target.total() == 0 {
        return Ok(Realization::Found(factorization_to_coloring(&round_robin(n)?)));
    }

    let v = 2 * n;
    let d = (2 * n - 1) as u32;
    let sums = target.partial_sums();
    let low = |x: usize| sums[x / 2] + 1;
    let t = d + target.total();
    // slot (x, c) is item x * d + (c - low(x))
    let edge_base = v * d as usize;
    let edges: Vec<_> = all_edges(n).collect();
    let mut options = Vec::new();
    let mut meaning = Vec::new();
    for (k, e) in edges.iter().enumerate() {
        let (a, b) = e.endpoints();
        let lo = low(a).max(low(b));
        let hi = (low(a) + d - 1).min(low(b) + d - 1);
        for c in lo..=hi {
            options.push(vec![
                edge_base + k,
                a * d as usize + (c - low(a)) as usize,
                b * d as usize + (c - low(b)) as usize,
            ]);
            meaning.push((k, c));
        }
    }
    let items = edge_base + edge_count(n);

    let meter = Meter::new(budget);
    let mut order: Vec<usize> = (0..options.len()).collect();
    if let Some(seed) = budget.seed {
        order.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    }
    let shuffled: Vec<Vec<usize>> = order.iter().map(|&i| options[i].clone()).collect();
    let mut dlx = Dlx::new(items, &shuffled);
    match dlx.solve(&mut || meter.tick(|| None)) {
        DlxOutcome::Solved(rows) => {
            let mut colors = vec![0u32; edge_count(n)];
            for r in rows {
                let (k, c) = meaning[order[r]];
                colors[k] = c;
            }
            let c = EdgeColoring::with_declared_t(n, t, colors)?;
            let report = verify_interval(&c);
            if let Some(v) = report.failure {
                return Err(Error::Inconsistency(format!("exact cover is not an interval coloring: {v}")));
            }
            if shift_vector(&c)? != *target {
                return Err(Error::Inconsistency("exact cover has the wrong shift vector".into()));
            }
            Ok(Realization::Found(c))
        }
        DlxOutcome::Exhausted => Ok(Realization::Infeasible { nodes: meter.nodes() }),
        DlxOutcome::Aborted => Ok(Realization::NotFound { nodes: meter.nodes() }),
    }
}
