//! Interval edge-colorings of complete graphs `K_2n`.
//!
//! An edge-coloring with colors `1..=t` is an *interval* coloring when it is
//! proper, uses every color and the colors at each vertex are consecutive.
//! The largest such `t` is `W(K_2n)`. This crate builds, verifies, converts
//! and bounds these colorings:
//!
//! * [`coloring`]: verification, spectra and the shift vector of a coloring;
//! * [`equivalence`]: colorings versus 1-factorizations with matchings tagged
//!   as splitted;
//! * [`constructions`]: explicit factorizations, including the product of two
//!   factorizations;
//! * [`bounds`]: conditions on shift vectors, certified upper bounds and the
//!   closed forms;
//! * [`search`]: exact `σ_n` for small `n` and colorings with a prescribed
//!   shift vector;
//! * [`io`] and [`table`]: JSON documents and the bounds tables.
//!
//! ```
//! use interval_kn::constructions::{construct_composite, construct_three_five};
//! use interval_kn::coloring::verify_interval;
//! use interval_kn::equivalence::factorization_to_coloring;
//!
//! let k6 = construct_three_five(3)?;
//! let k10 = construct_three_five(5)?;
//! let k30 = factorization_to_coloring(&construct_composite(&k6, &k10)?);
//! assert!(verify_interval(&k30).valid);
//! assert_eq!(k30.t(), 52);
//! # Ok::<(), interval_kn::Error>(())
//! ```

pub mod bounds;
pub mod coloring;
pub mod constructions;
pub mod equivalence;
pub mod error;
pub mod graph;
pub mod io;
pub mod search;
pub mod table;

pub use error::{Error, Result};
