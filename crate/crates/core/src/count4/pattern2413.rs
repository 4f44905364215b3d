//! 2413 split by the dyadic level at which its "4" and "3" separate.
//!
//! For a copy at positions `i1 < i2 < i3 < i4`, the type `j` is the highest
//! bit where `i2` and `i4` differ, so `i2` and `i4` sit in neighbouring
//! buckets of size `2^j`. The copy is 4-heavy when `i3` shares the bucket of
//! `i2` and 3-heavy when it shares the bucket of `i4`. Each class has two
//! monotone layers once the heavy element and `j` are fixed.

use crate::birge::Direction::{NonDecreasing, NonIncreasing};
use crate::precision::Estimator;
use crate::segtree::{Order::Ascending, Rect, SegTree1D};

use super::sum_over;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Heaviness {
    /// The "1" shares the bucket of the "4".
    FourHeavy,
    /// The "1" shares the bucket of the "3".
    ThreeHeavy,
}

/// One term of the 2413 decomposition: the heavy element's position, the
/// level `j`, and the class.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Cell {
    pub index: usize,
    pub level: u32,
    pub heaviness: Heaviness,
    pub value: f64,
}

/// Type and class of a 2413 copy given by 0-based positions.
pub fn classify_copy_type(pos: [usize; 4]) -> (u32, Heaviness) {
    let [_, i2, i3, i4] = pos;
    let j = usize::BITS - 1 - (i2 ^ i4).leading_zeros();
    let h = if i2 >> j == i3 >> j { Heaviness::FourHeavy } else { Heaviness::ThreeHeavy };
    (j, h)
}

fn four_heavy(seg: &SegTree1D, i: usize, j: u32, e: Estimator<'_>) -> f64 {
    if (i >> j) & 1 == 1 {
        return 0.0;
    }
    let top = seg.len() as i64 - 1;
    let (x, v) = (i as i64, seg.perm()[i] as i64);
    let bl_end = (i | ((1 << j) - 1)) as i64;
    let threes = Rect::new(bl_end + 1, bl_end + (1 << j), 0, v - 1);
    e.monotone_sum(seg.count(&threes), NonDecreasing, |l| {
        let t = seg.nth_by_value(&threes, l, Ascending).unwrap().y as i64;
        let ones = Rect::new(x + 1, bl_end.min(top), 0, t - 1);
        e.monotone_sum(seg.count(&ones), NonIncreasing, |r| {
            let o = seg.nth_by_value(&ones, r, Ascending).unwrap().y as i64;
            seg.count(&Rect::new(0, x - 1, o + 1, t - 1)) as f64
        })
    })
}

fn three_heavy(seg: &SegTree1D, i: usize, j: u32, e: Estimator<'_>) -> f64 {
    if (i >> j) & 1 == 0 {
        return 0.0;
    }
    let top = seg.len() as i64 - 1;
    let (x, v) = (i as i64, seg.perm()[i] as i64);
    let br_start = ((i >> j) << j) as i64;
    let fours = Rect::new(br_start - (1 << j), br_start - 1, v + 1, top);
    let ones = Rect::new(br_start, x - 1, 0, v - 1);
    if seg.count(&ones) == 0 {
        return 0.0;
    }
    e.monotone_sum(seg.count(&fours), NonDecreasing, |l| {
        let f = seg.nth_by_position(&fours, l, Ascending).unwrap().x as i64;
        e.monotone_sum(seg.count(&ones), NonIncreasing, |r| {
            let o = seg.nth_by_value(&ones, r, Ascending).unwrap().y as i64;
            seg.count(&Rect::new(0, f - 1, o + 1, v - 1)) as f64
        })
    })
}

fn levels(n: usize) -> u32 {
    n.max(1).next_power_of_two().trailing_zeros()
}

pub(super) fn count_2413(seg: &SegTree1D, est: Estimator<'_>) -> f64 {
    let e = est.divide(3.0);
    let l = levels(seg.len());
    sum_over(seg.len(), |i| {
        (0..l).map(|j| four_heavy(seg, i, j, e) + three_heavy(seg, i, j, e)).sum()
    })
}

/// Every nonzero term of the decomposition, in `(index, level, class)` order.
pub fn cells_2413(seg: &SegTree1D, est: Estimator<'_>) -> Vec<Cell> {
    let e = est.divide(3.0);
    let mut out = Vec::new();
    for i in 0..seg.len() {
        for j in 0..levels(seg.len()) {
            for (h, value) in [
                (Heaviness::FourHeavy, four_heavy(seg, i, j, e)),
                (Heaviness::ThreeHeavy, three_heavy(seg, i, j, e)),
            ] {
                if value != 0.0 {
                    out.push(Cell { index: i, level: j, heaviness: h, value });
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classify_example() {
        assert_eq!(classify_copy_type([0, 6, 7, 14]), (3, Heaviness::FourHeavy));
        assert_eq!(classify_copy_type([0, 6, 9, 14]), (3, Heaviness::ThreeHeavy));
    }
}
