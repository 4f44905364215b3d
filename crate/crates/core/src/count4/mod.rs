//! Approximate counting of length-4 patterns.
//!
//! A pattern is first mapped to one of eight class representatives by a
//! symmetry of the square, and the permutation is transformed with it.

mod easy;
mod family1324;
mod pattern2413;

use rayon::prelude::*;

pub use pattern2413::{cells_2413, classify_copy_type, Cell, Heaviness};

use crate::error::{Error, Result};
use crate::perm::{Pattern, Permutation};
use crate::precision::{Estimator, Precision};
use crate::range12::{PairKind, RangeTree2D};
use crate::segtree::SegTree1D;
use crate::symmetry::canonicalize;

/// Number of copies of a length-4 pattern, within `1 + eps` from below.
pub fn count4(p: &Permutation, s: &Pattern, precision: Precision) -> Result<f64> {
    count4_with(p, s, Estimator::new(precision))
}

pub fn count4_with(p: &Permutation, s: &Pattern, est: Estimator<'_>) -> Result<f64> {
    if s.len() != 4 {
        return Err(Error::InvalidPattern(format!("{s} does not have length 4")));
    }
    if p.len() < 4 {
        return Ok(0.0);
    }
    let (rep, t) = canonicalize(s)?;
    let q = t.apply(p);
    let seg = SegTree1D::build(&q);
    Ok(match rep.order() {
        [1, 3, 2, 4] => family1324::count_1324(&seg, est),
        [1, 3, 4, 2] => family1324::count_1342(&seg, est),
        [1, 4, 2, 3] => family1324::count_1423(&seg, est),
        [1, 4, 3, 2] => family1324::count_1432(&seg, est),
        [2, 4, 1, 3] => pattern2413::count_2413(&seg, est),
        [1, 2, 3, 4] => easy::count_1234(&seg, &RangeTree2D::build(&q, PairKind::Increasing), est),
        [1, 2, 4, 3] => easy::count_1243(&seg, &RangeTree2D::build(&q, PairKind::Increasing), est),
        [2, 1, 4, 3] => easy::count_2143(&seg, &RangeTree2D::build(&q, PairKind::Decreasing), est),
        _ => unreachable!("canonicalize returns a class representative"),
    })
}

/// Parallel sum over `0..n` with a fixed summation order.
pub(crate) fn sum_over(n: usize, f: impl Fn(usize) -> f64 + Sync + Send) -> f64 {
    let parts: Vec<f64> = (0..n).into_par_iter().map(f).collect();
    parts.iter().sum()
}
