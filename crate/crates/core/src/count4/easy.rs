//! Classes that reduce to one monotone layer over a 12- or 21-range count.

use crate::birge::Direction::{NonDecreasing, NonIncreasing};
use crate::precision::Estimator;
use crate::range12::RangeTree2D;
use crate::segtree::{Order::Ascending, Rect, SegTree1D};

use super::sum_over;

/// Fix the "3"; every "4" above and to the right sees the same 12-count.
pub(super) fn count_1234(seg: &SegTree1D, inc: &RangeTree2D, est: Estimator<'_>) -> f64 {
    let top = seg.len() as i64 - 1;
    let e = est.per_stage(2);
    sum_over(seg.len(), |i| {
        let (x, v) = (i as i64, seg.perm()[i] as i64);
        let fours = seg.count(&Rect::new(x + 1, top, v + 1, top));
        if fours == 0 {
            return 0.0;
        }
        let below = inc.approx_pairs(&Rect::new(0, x - 1, 0, v - 1), e);
        e.monotone_sum(fours, NonIncreasing, |_| below)
    })
}

/// Fix the "4"; the "3" is to its right and lower.
pub(super) fn count_1243(seg: &SegTree1D, inc: &RangeTree2D, est: Estimator<'_>) -> f64 {
    let top = seg.len() as i64 - 1;
    let e = est.per_stage(2);
    sum_over(seg.len(), |i| {
        let (x, v) = (i as i64, seg.perm()[i] as i64);
        let threes = Rect::new(x + 1, top, 0, v - 1);
        e.monotone_sum(seg.count(&threes), NonDecreasing, |l| {
            let d = seg.nth_by_value(&threes, l, Ascending).unwrap().y as i64;
            inc.approx_pairs(&Rect::new(0, x - 1, 0, d - 1), e)
        })
    })
}

/// Fix the "1"; the "2" is to its left and higher, the "43" pair lies to the
/// right and above the "2".
pub(super) fn count_2143(seg: &SegTree1D, dec: &RangeTree2D, est: Estimator<'_>) -> f64 {
    let top = seg.len() as i64 - 1;
    let e = est.per_stage(2);
    sum_over(seg.len(), |i| {
        let (x, v) = (i as i64, seg.perm()[i] as i64);
        let twos = Rect::new(0, x - 1, v + 1, top);
        e.monotone_sum(seg.count(&twos), NonIncreasing, |l| {
            let a = seg.nth_by_value(&twos, l, Ascending).unwrap().y as i64;
            dec.approx_pairs(&Rect::new(x + 1, top, a + 1, top), e)
        })
    })
}
