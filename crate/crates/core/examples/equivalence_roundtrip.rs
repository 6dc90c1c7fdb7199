//! Converts a coloring to a labeled 1-factorization and back, after dropping
//! colors and reversing, and writes both documents to stdout.
//!
//!     cargo run --example equivalence_roundtrip

use interval_kn::coloring::{shift_vector, verify_interval};
use interval_kn::constructions::{construct_three_five, drop_color, reverse_coloring};
use interval_kn::equivalence::{coloring_to_factorization, factorization_to_coloring, Label};
use interval_kn::io::{ColoringDocument, FactorizationDocument};

fn main() {
    let full = factorization_to_coloring(&construct_three_five(4).unwrap());
    println!("start: t={} shift ({})", full.t(), shift_vector(&full).unwrap());
    let dropped = drop_color(&full, 2).unwrap();
    println!("drop at 2: t={} shift ({})", dropped.t(), shift_vector(&dropped).unwrap());
    let c = reverse_coloring(&dropped).unwrap();
    println!("reversed: t={} shift ({})", c.t(), shift_vector(&c).unwrap());

    let f = coloring_to_factorization(&c).unwrap();
    for (j, lm) in f.matchings().iter().enumerate() {
        let tag = match lm.label {
            Label::Free => "free".to_string(),
            Label::Split(i) => format!("{i}-splitted"),
        };
        println!("  matching {:>2}: {tag}", j + 1);
    }
    let back = factorization_to_coloring(&f);
    assert!(verify_interval(&back).valid);
    assert_eq!(shift_vector(&back).unwrap(), shift_vector(&c).unwrap());

    print!("{}", FactorizationDocument::from_factorization(&f).to_json());
    print!("{}", ColoringDocument::from_coloring(&back, None).to_json());
}
