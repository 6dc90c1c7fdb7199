use crate::coloring::{shift_vector, verify_interval, EdgeColoring};
use crate::equivalence::{coloring_to_factorization, factorization_to_coloring};
use crate::error::{Error, Result};

/// Recolors `c -> t + 1 - c`; the shift vector comes out reversed.
pub fn reverse_coloring(c: &EdgeColoring) -> Result<EdgeColoring> {
    let report = verify_interval(c);
    if let Some(v) = report.failure {
        return Err(Error::NotInterval(v.to_string()));
    }
    let t = c.t();
    EdgeColoring::with_declared_t(c.n(), t, c.colors().iter().map(|&x| t + 1 - x).collect())
}

/// An interval `(t - 1)`-coloring whose shift vector is that of `c` with
/// `b_i` decreased by one.
pub fn drop_color(c: &EdgeColoring, i: usize) -> Result<EdgeColoring> {
    let sh = shift_vector(c)?;
    if i == 0 || i >= c.n() {
        return Err(Error::PairIndexOutOfRange { index: i, max: c.n() - 1 });
    }
    if sh.get(i) == 0 {
        return Err(Error::Precondition(format!("b_{i} is 0 in shift vector ({sh})")));
    }
    let f = coloring_to_factorization(c)?.release_split(i)?;
    Ok(factorization_to_coloring(&f))
}
