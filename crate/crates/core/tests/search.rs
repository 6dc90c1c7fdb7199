use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::sync::Arc;

use interval_kn::coloring::{shift_vector, verify_interval, ShiftVector};
use interval_kn::equivalence::factorization_to_coloring;
use interval_kn::io::ColoringDocument;
use interval_kn::search::{realize_shift, sigma_search, sigma_search_with, Realization, SearchBudget, SigmaOptions};

fn single() -> SearchBudget {
    SearchBudget::unlimited().with_workers(1)
}

#[test]
fn k8_has_6240_factorizations() {
    let r = sigma_search_with(4, &single(), SigmaOptions::exhaustive()).unwrap();
    assert!(r.exhaustive);
    assert_eq!(r.leaves, 6240);
    assert_eq!(r.sigma, 4);
}

#[test]
fn pruning_keeps_sigma() {
    for n in 1..=4 {
        let pruned = sigma_search(n, &single()).unwrap();
        let plain = sigma_search_with(n, &single(), SigmaOptions::exhaustive()).unwrap();
        assert_eq!(pruned.sigma, plain.sigma, "n={n}");
        assert!(pruned.exhaustive && plain.exhaustive);
        assert!(pruned.nodes <= plain.nodes, "n={n}");
    }
}

#[test]
fn witnesses_verify() {
    for n in 1..=4 {
        let r = sigma_search(n, &single()).unwrap();
        let c = factorization_to_coloring(&r.witness);
        assert!(verify_interval(&c).valid);
        assert_eq!(c.t() as usize, 2 * n - 1 + r.sigma);
        assert_eq!(r.witness.labeled_count(), r.sigma);
    }
}

#[test]
fn seeded_search_is_deterministic() {
    let budget = single().with_seed(7);
    let a = sigma_search_with(4, &budget, SigmaOptions::exhaustive()).unwrap();
    let b = sigma_search_with(4, &budget, SigmaOptions::exhaustive()).unwrap();
    assert_eq!(a.witness, b.witness);
    assert_eq!(a.nodes, b.nodes);

    let target = ShiftVector::new(vec![1, 1, 3, 0, 0]);
    let x = realize_shift(6, &target, &single().with_seed(3)).unwrap();
    let y = realize_shift(6, &target, &single().with_seed(3)).unwrap();
    assert_eq!(x, y);
}

#[test]
fn worker_count_does_not_change_sigma() {
    for workers in [1, 2, 4] {
        let r = sigma_search(4, &SearchBudget::unlimited().with_workers(workers)).unwrap();
        assert_eq!(r.sigma, 4, "workers={workers}");
        assert!(r.exhaustive);
    }
}

#[test]
fn cancelled_search_is_inconclusive() {
    let flag = Arc::new(AtomicBool::new(true));
    let r = sigma_search_with(6, &single().with_cancel(flag), SigmaOptions::exhaustive()).unwrap();
    assert!(!r.exhaustive);
    assert!(verify_interval(&factorization_to_coloring(&r.witness)).valid);
}

#[test]
fn progress_hook_fires() {
    let calls = Arc::new(AtomicU64::new(0));
    let seen = calls.clone();
    let mut budget = single().with_progress(Arc::new(move |_| {
        seen.fetch_add(1, Ordering::Relaxed);
    }));
    budget.progress_every = Some(100);
    sigma_search_with(4, &budget, SigmaOptions::exhaustive()).unwrap();
    assert!(calls.load(Ordering::Relaxed) > 0);
}

#[test]
fn rejected_budgets() {
    assert!(sigma_search(3, &SearchBudget::unlimited().with_nodes(0)).is_err());
    assert!(sigma_search(3, &SearchBudget::unlimited().with_workers(0)).is_err());
}

#[test]
fn realized_witnesses_match_golden_files() {
    for (file, n, vector, t) in [
        ("k12_shift_11300.json", 6, vec![1, 1, 3, 0, 0], 16),
        ("k22_shift_1213113121.json", 11, vec![1, 2, 1, 3, 1, 1, 3, 1, 2, 1], 37),
    ] {
        let path = format!("{}/tests/data/{file}", env!("CARGO_MANIFEST_DIR"));
        let text = std::fs::read_to_string(&path).unwrap();
        let golden = ColoringDocument::from_json(&text).unwrap().to_coloring().unwrap();
        assert!(verify_interval(&golden).valid, "{file}");
        assert_eq!(golden.t(), t);
        let target = ShiftVector::new(vector);
        assert_eq!(shift_vector(&golden).unwrap(), target);

        match realize_shift(n, &target, &single()).unwrap() {
            Realization::Found(c) => assert_eq!(c, golden, "{file}"),
            other => panic!("{file}: {other:?}"),
        }
    }
}

#[test]
fn composite_golden_file_verifies() {
    let path = format!("{}/tests/data/k28_composite.json", env!("CARGO_MANIFEST_DIR"));
    let c = ColoringDocument::from_json(&std::fs::read_to_string(path).unwrap()).unwrap().to_coloring().unwrap();
    assert!(verify_interval(&c).valid);
    assert_eq!((c.n(), c.t()), (14, 48));
}
