#![allow(dead_code)]

use interval_kn::coloring::{shift_vector, EdgeColoring};
use interval_kn::constructions::{construct_composite, drop_color, reverse_coloring, Method};
use interval_kn::equivalence::factorization_to_coloring;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// A random interval coloring of some `K_2n`, `n <= max_n`: a construction,
/// then random color drops, an optional reversal and a vertex relabeling.
pub fn random_coloring(seed: u64, max_n: usize) -> EdgeColoring {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(1..=max_n);
    let f = match rng.gen_range(0..4) {
        0 => Method::RoundRobin.build(n),
        1 => Method::Pn.build(n),
        2 if n >= 4 && n % 2 == 0 => {
            let half = Method::ThreeFive.build(n / 2).unwrap();
            construct_composite(&Method::ThreeFive.build(2).unwrap(), &half)
        }
        _ => Method::ThreeFive.build(n),
    }
    .unwrap();
    let mut c = factorization_to_coloring(&f);
    for _ in 0..rng.gen_range(0..4) {
        let sh = shift_vector(&c).unwrap();
        let live: Vec<usize> = (1..n).filter(|&i| sh.get(i) > 0).collect();
        let Some(&i) = live.choose(&mut rng) else { break };
        c = drop_color(&c, i).unwrap();
    }
    if rng.gen_bool(0.5) {
        c = reverse_coloring(&c).unwrap();
    }
    let mut perm: Vec<usize> = (0..2 * n).collect();
    perm.shuffle(&mut rng);
    c.relabel_vertices(&perm).unwrap()
}
