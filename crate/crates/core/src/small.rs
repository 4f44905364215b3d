//! Exact counts for patterns of length at most 3.
//!
//! Every element gets four statistics: smaller/greater values to its left
//! (`ls`, `lg`) and to its right (`rs`, `rg`). Patterns 123 and 321 are sums
//! of products of these; the other four follow from choosing two elements on
//! one side and subtracting the monotone pattern that gets counted by mistake.

use crate::error::{Error, Result};
use crate::perm::{Pattern, Permutation};
use crate::segtree::{Rect, SegTree1D};

pub fn exact_count_small(p: &Permutation, s: &Pattern) -> Result<u128> {
    let n = p.len();
    let k = s.len();
    if k > 3 {
        return Err(Error::PatternTooLong { len: k, max: 3 });
    }
    if k > n {
        return Ok(0);
    }
    match k {
        1 => return Ok(n as u128),
        2 => {
            let inv = inversions(p);
            let total = n as u128 * (n as u128 - 1) / 2;
            return Ok(if s.at(0) == 1 { total - inv } else { inv });
        }
        _ => {}
    }
    let t = SegTree1D::build(p);
    let last = n as i64 - 1;
    let c2 = |m: u128| m * m.saturating_sub(1) / 2;
    let (mut s123, mut s321, mut rg2, mut ls2, mut lsrs, mut rs2) = (0u128, 0u128, 0u128, 0u128, 0u128, 0u128);
    for i in 0..n {
        let (x, y) = (i as i64, p.value(i) as i64);
        let ls = t.count(&Rect::new(0, x - 1, 0, y - 1)) as u128;
        let rs = t.count(&Rect::new(x + 1, last, 0, y - 1)) as u128;
        let lg = x as u128 - ls;
        let rg = (last - x) as u128 - rs;
        s123 += ls * rg;
        s321 += lg * rs;
        rg2 += c2(rg);
        ls2 += c2(ls);
        lsrs += ls * rs;
        rs2 += c2(rs);
    }
    let s132 = rg2 - s123;
    Ok(match s.order() {
        [1, 2, 3] => s123,
        [3, 2, 1] => s321,
        [1, 3, 2] => s132,
        [2, 1, 3] => ls2 - s123,
        [2, 3, 1] => lsrs - s132,
        [3, 1, 2] => rs2 - s321,
        _ => unreachable!(),
    })
}

/// Number of inversions, by merge sort.
pub fn inversions(p: &Permutation) -> u128 {
    fn sort(v: &mut [u32], buf: &mut Vec<u32>) -> u128 {
        if v.len() < 2 {
            return 0;
        }
        let mid = v.len() / 2;
        let mut inv = sort(&mut v[..mid], buf) + sort(&mut v[mid..], buf);
        buf.clear();
        let (mut i, mut j) = (0, mid);
        while i < mid && j < v.len() {
            if v[i] < v[j] {
                buf.push(v[i]);
                i += 1;
            } else {
                inv += (mid - i) as u128;
                buf.push(v[j]);
                j += 1;
            }
        }
        buf.extend_from_slice(&v[i..mid]);
        buf.extend_from_slice(&v[j..]);
        v.copy_from_slice(buf);
        inv
    }
    let mut v = p.values().to_vec();
    sort(&mut v, &mut Vec::with_capacity(p.len()))
}
