//! The 1324 class and the three classes counted the same way: fix the middle
//! element, walk two monotone layers, and finish with a rectangle count.

use crate::birge::Direction::{NonDecreasing, NonIncreasing};
use crate::precision::Estimator;
use crate::segtree::{Order::Ascending, Rect, SegTree1D};

use super::sum_over;

pub(super) fn count_1324(seg: &SegTree1D, est: Estimator<'_>) -> f64 {
    let top = seg.len() as i64 - 1;
    let e = est.divide(3.0);
    sum_over(seg.len(), |i| {
        let (x, v) = (i as i64, seg.perm()[i] as i64);
        let fours = Rect::new(x + 1, top, v + 1, top);
        e.monotone_sum(seg.count(&fours), NonDecreasing, |l| {
            let d = seg.nth_by_position(&fours, l, Ascending).unwrap().x as i64;
            let twos = Rect::new(x + 1, d - 1, 0, v - 1);
            e.monotone_sum(seg.count(&twos), NonDecreasing, |r| {
                let c = seg.nth_by_value(&twos, r, Ascending).unwrap().y as i64;
                seg.count(&Rect::new(0, x - 1, 0, c - 1)) as f64
            })
        })
    })
}

pub(super) fn count_1342(seg: &SegTree1D, est: Estimator<'_>) -> f64 {
    let top = seg.len() as i64 - 1;
    let e = est.per_stage(2);
    sum_over(seg.len(), |i| {
        let (x, v) = (i as i64, seg.perm()[i] as i64);
        let fours = Rect::new(x + 1, top, v + 1, top);
        e.monotone_sum(seg.count(&fours), NonIncreasing, |l| {
            let c = seg.nth_by_position(&fours, l, Ascending).unwrap().x as i64;
            let twos = Rect::new(c + 1, top, 0, v - 1);
            e.monotone_sum(seg.count(&twos), NonDecreasing, |r| {
                let d = seg.nth_by_value(&twos, r, Ascending).unwrap().y as i64;
                seg.count(&Rect::new(0, x - 1, 0, d - 1)) as f64
            })
        })
    })
}

pub(super) fn count_1423(seg: &SegTree1D, est: Estimator<'_>) -> f64 {
    let top = seg.len() as i64 - 1;
    let e = est.per_stage(2);
    sum_over(seg.len(), |i| {
        let (x, v) = (i as i64, seg.perm()[i] as i64);
        let threes = Rect::new(x + 1, top, v + 1, top);
        e.monotone_sum(seg.count(&threes), NonIncreasing, |l| {
            let d = seg.nth_by_value(&threes, l, Ascending).unwrap().y as i64;
            let fours = Rect::new(0, x - 1, d + 1, top);
            e.monotone_sum(seg.count(&fours), NonDecreasing, |r| {
                let b = seg.nth_by_position(&fours, r, Ascending).unwrap().x as i64;
                seg.count(&Rect::new(0, b - 1, 0, v - 1)) as f64
            })
        })
    })
}

pub(super) fn count_1432(seg: &SegTree1D, est: Estimator<'_>) -> f64 {
    let top = seg.len() as i64 - 1;
    let e = est.per_stage(2);
    sum_over(seg.len(), |i| {
        let (x, v) = (i as i64, seg.perm()[i] as i64);
        let twos = Rect::new(x + 1, top, 0, v - 1);
        e.monotone_sum(seg.count(&twos), NonDecreasing, |l| {
            let d = seg.nth_by_value(&twos, l, Ascending).unwrap().y as i64;
            let fours = Rect::new(0, x - 1, v + 1, top);
            e.monotone_sum(seg.count(&fours), NonDecreasing, |r| {
                let b = seg.nth_by_position(&fours, r, Ascending).unwrap().x as i64;
                seg.count(&Rect::new(0, b - 1, 0, d - 1)) as f64
            })
        })
    })
}
