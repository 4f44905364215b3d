//! Approximate counting and listing of permutation patterns of length up to 5.
//!
//! ```
//! use patcount::{count, ingest, Precision};
//!
//! let p = ingest(&[1.0, 3.0, 6.0, 5.0, 4.0, 8.0, 2.0, 7.0, 9.0]).unwrap();
//! let s = "1324".parse().unwrap();
//! assert_eq!(count(&p, &s, Precision::Exact).unwrap(), 32.0);
//! let e = count(&p, &s, Precision::approx(0.1).unwrap()).unwrap();
//! assert!(e <= 32.0 && 32.0 <= 1.1 * e);
//! ```
//!
//! Approximate counts are always lower bounds: the true count `c` and the
//! estimate `e` satisfy `e <= c <= (1 + eps) e`.

pub mod birge;
pub mod count4;
pub mod enumerate;
pub mod error;
pub mod oracle;
pub mod perm;
pub mod precision;
pub mod range12;
pub mod recipe;
pub mod rng;
pub mod segtree;
pub mod separator;
pub mod small;
pub mod symmetry;

pub use count4::count4;
pub use enumerate::{list_copies, Listing, ListingStats};
pub use error::{Error, Result};
pub use perm::{ingest, ingest_with, parse_sequence, CopyTuple, Pattern, Permutation, TieBreak};
pub use precision::{Estimator, Precision};
pub use segtree::{Point, Rect};
pub use separator::count5;

/// Number of copies of `s` in `p`.
///
/// Patterns of length at most 3 are always counted exactly. Longer ones are
/// exact under [`Precision::Exact`] and `(1 + eps)`-approximate otherwise.
pub fn count(p: &Permutation, s: &Pattern, precision: Precision) -> Result<f64> {
    count_with(p, s, Estimator::new(precision))
}

pub fn count_with(p: &Permutation, s: &Pattern, est: Estimator<'_>) -> Result<f64> {
    if let Precision::Approx(e) = est.precision {
        Precision::approx(e)?;
    }
    match s.len() {
        0..=3 => Ok(small::exact_count_small(p, s)? as f64),
        4 => count4::count4_with(p, s, est),
        _ => separator::count_separated(p, s, est),
    }
}
