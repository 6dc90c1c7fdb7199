use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{Edge, Vertex};

/// Splits an `r`-regular bipartite graph on `vertices` into `r` perfect
/// matchings by repeatedly extracting a maximum matching (augmenting paths,
/// vertices and neighbours scanned in ascending order) and deleting it.
pub fn bipartite_one_factorization(vertices: &[Vertex], edges: &[Edge]) -> Result<Vec<Vec<Edge>>> {
    let size = vertices.iter().copied().max().map_or(0, |v| v + 1);
    let mut local = vec![usize::MAX; size];
    for (k, &v) in vertices.iter().enumerate() {
        if local[v] != usize::MAX {
            return Err(Error::Precondition(format!("vertex {v} listed twice")));
        }
        local[v] = k;
    }
    let count = vertices.len();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); count];
    for &e in edges {
        let (a, b) = e.endpoints();
        let (la, lb) = match (local.get(a), local.get(b)) {
            (Some(&la), Some(&lb)) if la != usize::MAX && lb != usize::MAX => (la, lb),
            _ => return Err(Error::Precondition(format!("edge {e} leaves the vertex set"))),
        };
        adj[la].push(lb);
        adj[lb].push(la);
    }
    for list in &mut adj {
        list.sort_unstable();
        if list.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Precondition("repeated edge".into()));
        }
    }

    let degree = adj.first().map_or(0, Vec::len);
    if let Some(k) = adj.iter().position(|l| l.len() != degree) {
        return Err(Error::Precondition(format!(
            "graph is not regular: vertex {} has degree {}, expected {degree}",
            vertices[k],
            adj[k].len()
        )));
    }
    let side = two_color(&adj)?;
    let left: Vec<usize> = (0..count).filter(|&k| side[k] == 0).collect();
    if degree > 0 && 2 * left.len() != count {
        return Err(Error::Precondition("bipartition sides differ in size".into()));
    }

    let mut out = Vec::with_capacity(degree);
    for round in 0..degree {
        let mate = max_matching(&adj, &left, count);
        let mut matching = Vec::with_capacity(left.len());
        for &l in &left {
            let r = mate[l];
            if r == usize::MAX {
                return Err(Error::Inconsistency(format!(
                    "regular bipartite graph without a perfect matching in round {round}"
                )));
            }
            matching.push(Edge::new(vertices[l], vertices[r]));
            adj[l].retain(|&x| x != r);
            adj[r].retain(|&x| x != l);
        }
        matching.sort_unstable();
        out.push(matching);
    }
    Ok(out)
}

fn two_color(adj: &[Vec<usize>]) -> Result<Vec<u8>> {
    let mut side = vec![u8::MAX; adj.len()];
    let mut queue = VecDeque::new();
    for start in 0..adj.len() {
        if side[start] != u8::MAX {
            continue;
        }
        side[start] = 0;
        queue.push_back(start);
        while let Some(x) = queue.pop_front() {
            for &y in &adj[x] {
                if side[y] == u8::MAX {
                    side[y] = 1 - side[x];
                    queue.push_back(y);
                } else if side[y] == side[x] {
                    return Err(Error::Precondition("graph is not bipartite".into()));
                }
            }
        }
    }
    Ok(side)
}

/// Kuhn's augmenting-path matching from the `left` side; returns `mate`.
fn max_matching(adj: &[Vec<usize>], left: &[usize], count: usize) -> Vec<usize> {
    let mut mate = vec![usize::MAX; count];
    let mut seen = vec![0usize; count];
    for (stamp, &l) in left.iter().enumerate() {
        augment(l, adj, &mut mate, &mut seen, stamp + 1);
    }
    mate
}

fn augment(l: usize, adj: &[Vec<usize>], mate: &mut [usize], seen: &mut [usize], stamp: usize) -> bool {
    for &r in &adj[l] {
        if seen[r] == stamp {
            continue;
        }
        seen[r] = stamp;
        if mate[r] == usize::MAX || augment(mate[r], adj, mate, seen, stamp) {
            mate[r] = l;
            mate[l] = r;
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{k2_times_kn, u_of, v_of};

    fn check_partition(vertices: &[Vertex], edges: &[Edge], parts: &[Vec<Edge>]) {
        let mut all: Vec<Edge> = parts.iter().flatten().copied().collect();
        all.sort();
        let mut want = edges.to_vec();
        want.sort();
        assert_eq!(all, want);
        for p in parts {
            assert_eq!(2 * p.len(), vertices.len());
            let mut covered: Vec<Vertex> = p.iter().flat_map(|e| [e.a(), e.b()]).collect();
            covered.sort();
            let mut vs = vertices.to_vec();
            vs.sort();
            assert_eq!(covered, vs);
        }
    }

    #[test]
    fn k2_times_k2_single_matching() {
        let vs: Vec<Vertex> = (0..4).collect();
        let parts = bipartite_one_factorization(&vs, &k2_times_kn(2)).unwrap();
        assert_eq!(parts.len(), 1);
        check_partition(&vs, &k2_times_kn(2), &parts);
    }

    #[test]
    fn k2_times_kn_factorizes() {
        for n in 2..=12 {
            let vs: Vec<Vertex> = (0..2 * n).collect();
            let edges = k2_times_kn(n);
            let parts = bipartite_one_factorization(&vs, &edges).unwrap();
            assert_eq!(parts.len(), n - 1);
            check_partition(&vs, &edges, &parts);
        }
    }

    #[test]
    fn induced_half_of_k2_times_k6() {
        let vs: Vec<Vertex> = (1..=3).flat_map(|i| [u_of(i), v_of(i)]).collect();
        let edges: Vec<Edge> = k2_times_kn(6)
            .into_iter()
            .filter(|e| vs.contains(&e.a()) && vs.contains(&e.b()))
            .collect();
        let parts = bipartite_one_factorization(&vs, &edges).unwrap();
        assert_eq!(parts.len(), 2);
        check_partition(&vs, &edges, &parts);
    }

    #[test]
    fn rejects_irregular_and_odd_cycle() {
        let vs: Vec<Vertex> = (0..4).collect();
        let path = [Edge::new(0, 1), Edge::new(1, 2), Edge::new(2, 3)];
        assert!(matches!(bipartite_one_factorization(&vs, &path), Err(Error::Precondition(_))));
        let tri = [Edge::new(0, 1), Edge::new(1, 2), Edge::new(0, 2)];
        assert!(matches!(bipartite_one_factorization(&[0, 1, 2], &tri), Err(Error::Precondition(_))));
    }

    #[test]
    fn edgeless_graph_has_no_factors() {
        assert!(bipartite_one_factorization(&[0, 1], &[]).unwrap().is_empty());
    }
}
