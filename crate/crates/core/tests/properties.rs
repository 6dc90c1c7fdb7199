mod common;

use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use interval_kn::bounds::{
    composite_bound, enumerate_feasible, enumerate_feasible_with, filter_feasible, lower_bound, FilterKind, FilterSet,
};
use interval_kn::coloring::{
    color_class, ordering_and_shift, shift_vector, spectrum, spectrum_meet, verify_interval, EdgeColoring,
};
use interval_kn::constructions::{construct_composite, construct_three_five, Method};
use interval_kn::equivalence::{coloring_to_factorization, factorization_to_coloring, Label, LabeledFactorization};
use interval_kn::graph::{all_edges, is_splitted_at, split_indices, split_parts, Edge, PairedOrdering, PerfectMatching};
use interval_kn::io::{ColoringDocument, FactorizationDocument};

fn witnesses() -> Vec<LabeledFactorization> {
    let mut out = Vec::new();
    for n in 1..=10 {
        for method in [Method::ThreeFive, Method::Pn, Method::RoundRobin] {
            out.push(method.build(n).unwrap());
        }
    }
    for m in 2..=4 {
        for k in 2..=4 {
            out.push(construct_composite(&construct_three_five(m).unwrap(), &construct_three_five(k).unwrap()).unwrap());
        }
    }
    out
}

fn random_matching(n: usize, rng: &mut ChaCha8Rng) -> PerfectMatching {
    let mut vs: Vec<usize> = (0..2 * n).collect();
    vs.shuffle(rng);
    PerfectMatching::from_edges(n, vs.chunks(2).map(|p| Edge::new(p[0], p[1])).collect()).unwrap()
}

fn random_ordering(n: usize, rng: &mut ChaCha8Rng) -> PairedOrdering {
    let mut vs: Vec<usize> = (0..2 * n).collect();
    vs.shuffle(rng);
    PairedOrdering::from_sequence(vs).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn split_parts_partition_the_matching(seed in any::<u64>(), n in 2usize..10) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = random_matching(n, &mut rng);
        let ord = random_ordering(n, &mut rng);
        for i in 1..n {
            let parts = split_parts(&m, i, &ord).unwrap();
            let mut all: Vec<Edge> = parts.left.iter().chain(&parts.right).chain(&parts.crossing).copied().collect();
            all.sort();
            let mut want = m.edges().to_vec();
            want.sort();
            prop_assert_eq!(all, want);
        }
    }

    #[test]
    fn split_index_implementations_agree(seed in any::<u64>(), n in 1usize..10) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = random_matching(n, &mut rng);
        let ord = random_ordering(n, &mut rng);
        let by_parts: Vec<usize> =
            (1..n).filter(|&i| split_parts(&m, i, &ord).unwrap().crossing.is_empty()).collect();
        let by_predicate: Vec<usize> = (1..n).filter(|&i| is_splitted_at(&m, i, &ord)).collect();
        prop_assert_eq!(&split_indices(&m, &ord), &by_parts);
        prop_assert_eq!(&by_parts, &by_predicate);
    }

    #[test]
    fn shift_total_counts_extra_colors(seed in any::<u64>()) {
        let c = common::random_coloring(seed, 8);
        let n = c.n() as u32;
        prop_assert!(verify_interval(&c).valid);
        prop_assert_eq!(shift_vector(&c).unwrap().total(), c.t() - (2 * n - 1));
    }

    #[test]
    fn common_colors_are_the_perfect_classes(seed in any::<u64>()) {
        let c = common::random_coloring(seed, 8);
        let n = c.n();
        let sh = shift_vector(&c).unwrap();
        let all: Vec<usize> = (0..2 * n).collect();
        let meet = spectrum_meet(&c, &all);
        let want: Vec<u32> = (sh.total() + 1..=(2 * n - 1) as u32).collect();
        prop_assert!(!meet.is_empty());
        prop_assert_eq!(meet.iter().copied().collect::<Vec<_>>(), want);
        for k in 1..=c.t() {
            let perfect = color_class(&c, k).unwrap().len() == n;
            prop_assert_eq!(perfect, meet.contains(&k), "color {}", k);
        }
    }

    #[test]
    fn shifted_colors_stay_on_their_side(seed in any::<u64>()) {
        let c = common::random_coloring(seed, 8);
        let n = c.n();
        let (ord, sh) = ordering_and_shift(&c).unwrap();
        let spectra: Vec<_> = (1..=n).map(|p| spectrum(&c, ord.u(p))).collect();
        let pairs_with = |color: u32| -> Vec<usize> {
            (1..=n)
                .filter(|&p| spectrum(&c, ord.u(p)).contains(color) || spectrum(&c, ord.v(p)).contains(color))
                .collect()
        };
        for i in 1..n {
            if sh.get(i) == 0 {
                continue;
            }
            for color in spectra[i - 1].lo..spectra[i].lo {
                prop_assert!(pairs_with(color).iter().all(|&p| p <= i), "left color {} at i={}", color, i);
            }
            for color in spectra[i - 1].hi + 1..=spectra[i].hi {
                prop_assert!(pairs_with(color).iter().all(|&p| p > i), "right color {} at i={}", color, i);
            }
        }
    }

    #[test]
    fn coloring_round_trip(seed in any::<u64>()) {
        let c = common::random_coloring(seed, 8);
        let f = coloring_to_factorization(&c).unwrap();
        let back = factorization_to_coloring(&f);
        prop_assert!(verify_interval(&back).valid);
        prop_assert_eq!(back.t(), c.t());
        prop_assert_eq!(shift_vector(&back).unwrap(), shift_vector(&c).unwrap());
        let again = coloring_to_factorization(&back).unwrap();
        prop_assert_eq!(again.labeled_count(), f.labeled_count());
        prop_assert_eq!(again.implied_shift(), f.implied_shift());
    }

    #[test]
    fn realized_vectors_pass_every_filter(seed in any::<u64>()) {
        let c = common::random_coloring(seed, 10);
        let sh = shift_vector(&c).unwrap();
        let verdict = filter_feasible(&sh);
        prop_assert!(verdict.passed(), "{} rejected: {}", sh, verdict);
    }

    #[test]
    fn documents_round_trip_byte_identically(seed in any::<u64>()) {
        let c = common::random_coloring(seed, 8);
        let text = ColoringDocument::from_coloring(&c, None).to_json();
        let doc = ColoringDocument::from_json(&text).unwrap();
        prop_assert_eq!(doc.to_coloring().unwrap(), c.clone());
        prop_assert_eq!(doc.to_json(), text);

        let f = coloring_to_factorization(&c).unwrap();
        let text = FactorizationDocument::from_factorization(&f).to_json();
        let doc = FactorizationDocument::from_json(&text).unwrap();
        prop_assert_eq!(doc.to_factorization().unwrap(), f);
        prop_assert_eq!(doc.to_json(), text);
    }
}

#[test]
fn constructions_verify_and_count_labels() {
    for f in witnesses() {
        let c = factorization_to_coloring(&f);
        let n = f.n();
        assert!(verify_interval(&c).valid, "n={n}");
        assert_eq!(c.t() as usize, 2 * n - 1 + f.labeled_count(), "n={n}");
        assert!(filter_feasible(&shift_vector(&c).unwrap()).passed(), "n={n}");
    }
}

#[test]
fn color_classes_are_matchings_or_their_sides() {
    for f in witnesses() {
        let c = factorization_to_coloring(&f);
        let mut pieces: Vec<Vec<Edge>> = Vec::new();
        for lm in f.matchings() {
            match lm.label {
                Label::Free => pieces.push(lm.matching.edges().to_vec()),
                Label::Split(i) => {
                    let parts = split_parts(&lm.matching, i, f.ordering()).unwrap();
                    pieces.push(parts.left);
                    pieces.push(parts.right);
                }
            }
        }
        for p in &mut pieces {
            p.sort();
        }
        for k in 1..=c.t() {
            let mut class = color_class(&c, k).unwrap();
            class.sort();
            assert!(pieces.contains(&class), "n={} color {k}", f.n());
        }
    }
}

#[test]
fn three_five_label_count() {
    for n in 2..=16 {
        assert_eq!(construct_three_five(n).unwrap().labeled_count(), 3 * n / 2 - 2, "n={n}");
    }
}

#[test]
fn composition_excess_is_superadditive() {
    let excess = |f: &LabeledFactorization| {
        factorization_to_coloring(f).t() as i64 - (4 * f.n() as i64 - 3)
    };
    for m in 2..=4 {
        for k in 2..=4 {
            let fm = construct_three_five(m).unwrap();
            let fk = construct_three_five(k).unwrap();
            let product = construct_composite(&fm, &fk).unwrap();
            assert!(excess(&product) >= excess(&fm) + excess(&fk), "m={m} k={k}");
        }
    }
}

#[test]
fn lower_bound_dominates_composite_bound() {
    for m in 1..=6 {
        for k in 1..=6 {
            let combined = composite_bound(m, lower_bound(m), k, lower_bound(k));
            assert!(lower_bound(m * k) >= combined, "m={m} k={k}");
        }
    }
}

#[test]
fn prefix_sum_alone_caps_the_total() {
    for n in 3..=12 {
        let (found, _) = enumerate_feasible_with(n, (2 * n - 3) as u32, FilterSet::only(FilterKind::PrefixSum));
        assert!(found.is_empty(), "n={n}: {:?}", found.first());
    }
}

#[test]
fn all_filters_cap_the_total() {
    for n in 5..=8 {
        assert!(enumerate_feasible(n, (2 * n - 4) as u32).is_empty(), "n={n}");
    }
    for n in 9..=12 {
        assert!(enumerate_feasible(n, (2 * n - 5) as u32).is_empty(), "n={n}");
    }
}

#[test]
fn filters_leave_one_below_the_cap() {
    // totals one below the caps above still have survivors, except at n = 7
    assert!(enumerate_feasible(7, 9).is_empty());
    for n in [5, 6, 8] {
        assert!(!enumerate_feasible(n, (2 * n - 5) as u32).is_empty(), "n={n}");
    }
    for n in 9..=12 {
        assert!(!enumerate_feasible(n, (2 * n - 6) as u32).is_empty(), "n={n}");
    }
}

#[test]
fn every_edge_gets_exactly_one_color() {
    for f in witnesses() {
        let c: EdgeColoring = factorization_to_coloring(&f);
        let n = f.n();
        assert_eq!(all_edges(n).count(), c.entries().count());
        assert!(c.entries().all(|(_, col)| (1..=c.t()).contains(&col)));
    }
}
