//! Explicit factorizations and coloring transformations.

pub mod bipartite;
pub mod composite;
pub mod pn;
pub mod three_five;
pub mod transform;

pub use bipartite::bipartite_one_factorization;
pub use composite::{construct_composite, construct_composite_with_report, CompositeReport, PieceCount};
pub use pn::{pn_factorization, PnFactorization};
pub use three_five::{construct_pn, construct_three_five};
pub use transform::{drop_color, reverse_coloring};

use std::fmt;
use std::str::FromStr;

use crate::equivalence::{Label, LabeledFactorization, LabeledMatching};
use crate::error::{Error, Result};
use crate::graph::{OneFactorization, PairedOrdering};

/// Constructions that take a single size parameter.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    ThreeFive,
    Pn,
    RoundRobin,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::ThreeFive => "three-five",
            Method::Pn => "pn",
            Method::RoundRobin => "round-robin",
        }
    }

    pub fn build(self, n: usize) -> Result<LabeledFactorization> {
        match self {
            Method::ThreeFive if n == 1 => round_robin(1),
            Method::ThreeFive => construct_three_five(n),
            Method::Pn => construct_pn(n),
            Method::RoundRobin => round_robin(n),
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        [Method::ThreeFive, Method::Pn, Method::RoundRobin]
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::Precondition(format!("unknown method {s:?}")))
    }
}

/// The circle-method factorization with every matching free: `t = 2n - 1`.
pub fn round_robin(n: usize) -> Result<LabeledFactorization> {
    if n == 0 {
        return Err(Error::Precondition("n must be at least 1".into()));
    }
    let matchings = OneFactorization::round_robin(n)
        .into_matchings()
        .into_iter()
        .map(|matching| LabeledMatching { matching, label: Label::Free })
        .collect();
    LabeledFactorization::new(n, PairedOrdering::identity(n), matchings)
}
