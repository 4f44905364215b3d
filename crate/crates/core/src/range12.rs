//! Two-level range tree answering "how many increasing pairs lie in this
//! rectangle" to within `1 + eps`, and listing those pairs.
//!
//! The outer tree splits positions into aligned dyadic blocks. Every outer
//! node keeps its points sorted by value and carries an inner tree that splits
//! values dyadically. An inner node stores its points sorted by position, the
//! exact number of increasing pairs among them, and the points that have a
//! dominating partner inside the node (used for listing).
//!
//! Inner nodes holding a single point are leaves even when their value
//! interval is wider than one, which keeps the structure at
//! `O(n log^2 n)` entries in the worst case and much less in practice.
//!
//! A query is decomposed into outer strips and, inside each strip, into inner
//! nodes. Pairs inside a node are read off `count12`. Pairs split between two
//! nodes of one strip are separated in value, and pairs split between two
//! strips are separated in position; each such cross term is a monotone sum
//! over one side handed to the coreset estimator.
//!
//! Decreasing pairs use the same structure built over the mirrored
//! permutation.

use crate::birge::Direction;
use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::precision::{Estimator, Precision};
use crate::segtree::{Point, Rect};

const NONE: u32 = u32::MAX;

/// Which pairs a tree counts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PairKind {
    /// `x1 < x2` and `y1 < y2`.
    Increasing,
    /// `x1 < x2` and `y1 > y2`.
    Decreasing,
}

#[derive(Clone, Copy, Debug)]
struct OuterNode {
    level: u32,
    x_lo: u32,
    ys_start: u32,
    len: u32,
    root: u32,
    inner_start: u32,
    inner_end: u32,
}

/// A node of an inner (value-splitting) tree.
#[derive(Clone, Copy, Debug)]
pub struct InnerNode {
    pub outer: u32,
    pub level: u32,
    pub y_lo: u32,
    pub children: [u32; 2],
    ys_start: u32,
    xs_start: u32,
    pub len: u32,
    pub count12: u64,
    dom_start: u32,
    dom_len: u32,
}

impl InnerNode {
    pub fn y_hi(&self) -> u32 {
        self.y_lo + ((1u32 << self.level) - 1)
    }

    pub fn is_leaf(&self) -> bool {
        self.children == [NONE, NONE]
    }

    pub fn child(&self, i: usize) -> Option<u32> {
        (self.children[i] != NONE).then_some(self.children[i])
    }
}

#[derive(Clone, Debug)]
pub struct RangeTree2D {
    kind: PairKind,
    n: usize,
    depth: u32,
    /// Value at each tree position. Mirrored for decreasing trees.
    perm: Vec<u32>,
    inv: Vec<u32>,
    outer: Vec<OuterNode>,
    ys: Vec<u32>,
    inner: Vec<InnerNode>,
    xs: Vec<u32>,
    dom: Vec<u32>,
}

impl RangeTree2D {
    pub fn build(p: &Permutation, kind: PairKind) -> Self {
        let n = p.len();
        let perm: Vec<u32> = match kind {
            PairKind::Increasing => p.values().to_vec(),
            PairKind::Decreasing => p.values().iter().rev().copied().collect(),
        };
        let mut inv = vec![0u32; n];
        for (x, &y) in perm.iter().enumerate() {
            inv[y as usize] = x as u32;
        }
        let depth = n.max(1).next_power_of_two().trailing_zeros();
        let m = 1usize << depth;
        let empty = OuterNode { level: 0, x_lo: 0, ys_start: 0, len: 0, root: NONE, inner_start: 0, inner_end: 0 };
        let mut t = Self {
            kind,
            n,
            depth,
            perm,
            inv,
            outer: vec![empty; 2 * m],
            ys: Vec::new(),
            inner: Vec::new(),
            xs: Vec::new(),
            dom: Vec::new(),
        };
        for v in (1..2 * m).rev() {
            let level = depth - (usize::BITS - 1 - v.leading_zeros());
            let x_lo = ((v - (1 << (depth - level))) << level) as u32;
            let start = t.ys.len() as u32;
            if v >= m {
                if (x_lo as usize) < n {
                    t.ys.push(t.perm[x_lo as usize]);
                }
            } else {
                let (a, b) = (t.outer[2 * v], t.outer[2 * v + 1]);
                let mut merged = Vec::with_capacity((a.len + b.len) as usize);
                merge(t.ys_of(&a), t.ys_of(&b), &mut merged, |_| {});
                t.ys.extend_from_slice(&merged);
            }
            let len = t.ys.len() as u32 - start;
            t.outer[v] = OuterNode { level, x_lo, ys_start: start, len, root: NONE, inner_start: 0, inner_end: 0 };
        }
        for v in 1..2 * m {
            let o = t.outer[v];
            let inner_start = t.inner.len() as u32;
            let root = t.build_inner(v as u32, o.ys_start, o.len, 0, depth);
            let o = &mut t.outer[v];
            o.root = root;
            o.inner_start = inner_start;
            o.inner_end = t.inner.len() as u32;
        }
        t
    }

    fn ys_of(&self, o: &OuterNode) -> &[u32] {
        &self.ys[o.ys_start as usize..(o.ys_start + o.len) as usize]
    }

    fn build_inner(&mut self, outer: u32, ys_start: u32, len: u32, y_lo: u32, level: u32) -> u32 {
        if len == 0 {
            return NONE;
        }
        let id = self.inner.len() as u32;
        self.inner.push(InnerNode {
            outer,
            level,
            y_lo,
            children: [NONE, NONE],
            ys_start,
            xs_start: 0,
            len,
            count12: 0,
            dom_start: 0,
            dom_len: 0,
        });
        let (xs, count12) = if len == 1 || level == 0 {
            (vec![self.inv[self.ys[ys_start as usize] as usize]], 0)
        } else {
            let mid = y_lo + (1 << (level - 1));
            let slice = &self.ys[ys_start as usize..(ys_start + len) as usize];
            let split = slice.partition_point(|&y| y < mid) as u32;
            let lo = self.build_inner(outer, ys_start, split, y_lo, level - 1);
            let hi = self.build_inner(outer, ys_start + split, len - split, mid, level - 1);
            self.inner[id as usize].children = [lo, hi];
            let (lx, lc) = self.node_xs_count(lo);
            let (hx, hc) = self.node_xs_count(hi);
            // Increasing pairs with the lower point in `lo` and the upper one in `hi`.
            let mut cross = 0u64;
            let mut taken_lo = 0u64;
            let mut out = Vec::with_capacity(len as usize);
            let hset: Vec<u32> = hx.to_vec();
            merge_tagged(lx, &hset, &mut out, |from_hi| {
                if from_hi {
                    cross += taken_lo;
                } else {
                    taken_lo += 1;
                }
            });
            (out, lc + hc + cross)
        };
        let xs_start = self.xs.len() as u32;
        self.xs.extend_from_slice(&xs);
        let dom_start = self.dom.len() as u32;
        let mut max_y_after: i64 = -1;
        let mut dominated = Vec::new();
        for &x in xs.iter().rev() {
            let y = self.perm[x as usize] as i64;
            if max_y_after > y {
                dominated.push(x);
            }
            max_y_after = max_y_after.max(y);
        }
        dominated.reverse();
        self.dom.extend_from_slice(&dominated);
        let node = &mut self.inner[id as usize];
        node.xs_start = xs_start;
        node.count12 = count12;
        node.dom_start = dom_start;
        node.dom_len = dominated.len() as u32;
        id
    }

    fn node_xs_count(&self, id: u32) -> (&[u32], u64) {
        if id == NONE {
            (&[], 0)
        } else {
            let w = &self.inner[id as usize];
            (self.node_xs(w), w.count12)
        }
    }

    pub fn kind(&self) -> PairKind {
        self.kind
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// Levels of the outer tree; the root sits at level `depth`.
    pub fn depth(&self) -> u32 {
        self.depth
    }

    /// Value of the point at tree position `x`.
    pub fn value_at(&self, x: u32) -> u32 {
        self.perm[x as usize]
    }

    /// Tree position of the point with value `y`.
    pub fn position_of(&self, y: u32) -> u32 {
        self.inv[y as usize]
    }

    pub fn inner_node(&self, id: u32) -> &InnerNode {
        &self.inner[id as usize]
    }

    pub fn inner_node_count(&self) -> usize {
        self.inner.len()
    }

    /// Ids of the inner nodes belonging to outer node `v`.
    pub fn inner_ids(&self, v: u32) -> std::ops::Range<u32> {
        let o = &self.outer[v as usize];
        o.inner_start..o.inner_end
    }

    pub fn inner_root(&self, v: u32) -> Option<u32> {
        let r = self.outer[v as usize].root;
        (r != NONE).then_some(r)
    }

    /// Level and first position of outer node `v` (heap numbering, root 1).
    pub fn outer_span(&self, v: u32) -> (u32, u32) {
        let o = &self.outer[v as usize];
        (o.level, o.x_lo)
    }

    pub fn outer_len(&self, v: u32) -> u32 {
        self.outer[v as usize].len
    }

    /// Heap id of the outer leaf at position `x`.
    pub fn outer_leaf(&self, x: u32) -> u32 {
        (1u32 << self.depth) + x
    }

    /// Values of node `v`'s points that fall in `[y_lo, y_hi]`, ascending.
    pub fn strip(&self, v: u32, y_lo: i64, y_hi: i64) -> &[u32] {
        let s = self.ys_of(&self.outer[v as usize]);
        if y_lo > y_hi {
            return &[];
        }
        let a = s.partition_point(|&y| (y as i64) < y_lo);
        let b = s.partition_point(|&y| (y as i64) <= y_hi);
        &s[a..b.max(a)]
    }

    /// Points of an inner node sorted by position.
    pub fn node_xs(&self, w: &InnerNode) -> &[u32] {
        &self.xs[w.xs_start as usize..(w.xs_start + w.len) as usize]
    }

    /// Points of an inner node sorted by value.
    pub fn node_ys(&self, w: &InnerNode) -> &[u32] {
        &self.ys[w.ys_start as usize..(w.ys_start + w.len) as usize]
    }

    fn node_dominated(&self, w: &InnerNode) -> &[u32] {
        &self.dom[w.dom_start as usize..(w.dom_start + w.dom_len) as usize]
    }

    /// Entries stored across all arrays, for memory accounting.
    pub fn stored_entries(&self) -> usize {
        self.ys.len() + self.xs.len() + self.dom.len() + self.inner.len()
    }

    /// Maps a rectangle in permutation coordinates to tree coordinates.
    fn to_tree(&self, r: &Rect) -> Option<(u32, u32, u32, u32)> {
        let top = self.n as i64 - 1;
        let (mut xl, mut xh) = (r.x_lo.max(0), r.x_hi.min(top));
        let (yl, yh) = (r.y_lo.max(0), r.y_hi.min(top));
        if xl > xh || yl > yh {
            return None;
        }
        if self.kind == PairKind::Decreasing {
            (xl, xh) = (top - xh, top - xl);
        }
        Some((xl as u32, xh as u32, yl as u32, yh as u32))
    }

    fn outer_cover(&self, xl: u32, xh: u32) -> Vec<u32> {
        let m = 1u32 << self.depth;
        let (mut l, mut r) = (xl + m, xh + m + 1);
        let (mut left, mut right) = (Vec::new(), Vec::new());
        while l < r {
            if l & 1 == 1 {
                left.push(l);
                l += 1;
            }
            if r & 1 == 1 {
                r -= 1;
                right.push(r);
            }
            l >>= 1;
            r >>= 1;
        }
        left.extend(right.into_iter().rev());
        left
    }

    fn inner_cover(&self, id: u32, yl: u32, yh: u32, out: &mut Vec<u32>) {
        if id == NONE {
            return;
        }
        let w = &self.inner[id as usize];
        if w.y_hi() < yl || w.y_lo > yh {
            return;
        }
        if yl <= w.y_lo && w.y_hi() <= yh {
            out.push(id);
        } else if w.is_leaf() {
            let y = self.ys[w.ys_start as usize];
            if yl <= y && y <= yh {
                out.push(id);
            }
        } else {
            self.inner_cover(w.children[0], yl, yh, out);
            self.inner_cover(w.children[1], yl, yh, out);
        }
    }

    fn decompose(&self, xl: u32, xh: u32, yl: u32, yh: u32) -> Vec<(u32, Vec<u32>)> {
        self.outer_cover(xl, xh)
            .into_iter()
            .filter(|&v| self.outer[v as usize].len > 0)
            .map(|v| {
                let mut nodes = Vec::new();
                self.inner_cover(self.outer[v as usize].root, yl, yh, &mut nodes);
                (v, nodes)
            })
            .collect()
    }

    /// Canonical pieces of a query: number of outer strips and of inner nodes.
    pub fn canonical_sizes(&self, r: &Rect) -> (usize, usize) {
        match self.to_tree(r) {
            None => (0, 0),
            Some((xl, xh, yl, yh)) => {
                let d = self.decompose(xl, xh, yl, yh);
                (d.len(), d.iter().map(|(_, w)| w.len()).sum())
            }
        }
    }

    /// Number of this tree's pairs inside `r`, within `1 + eps` from below.
    pub fn approx_pairs(&self, r: &Rect, est: Estimator<'_>) -> f64 {
        let Some((xl, xh, yl, yh)) = self.to_tree(r) else { return 0.0 };
        let strips = self.decompose(xl, xh, yl, yh);
        let mut total = 0.0;
        for (_, nodes) in &strips {
            for (a, &wa) in nodes.iter().enumerate() {
                total += self.inner[wa as usize].count12 as f64;
                for &wb in &nodes[a + 1..] {
                    total += self.cross_below_above(wa, wb, est);
                }
            }
        }
        let slices: Vec<&[u32]> = strips
            .iter()
            .map(|(v, _)| self.strip(*v, yl as i64, yh as i64))
            .collect();
        for (a, left) in slices.iter().enumerate() {
            for right in &slices[a + 1..] {
                total += cross_left_right(left, right, est);
            }
        }
        total
    }

    /// Pairs `u` in `lower`, `v` in `upper` with `u.x < v.x`.
    fn cross_below_above(&self, lower: u32, upper: u32, est: Estimator<'_>) -> f64 {
        let lx = self.node_xs(&self.inner[lower as usize]);
        let ux = self.node_xs(&self.inner[upper as usize]);
        if lx.is_empty() || ux.is_empty() || lx[0] > *ux.last().unwrap() {
            return 0.0;
        }
        est.monotone_sum(lx.len(), Direction::NonIncreasing, |i| {
            (ux.len() - ux.partition_point(|&x| x <= lx[i])) as f64
        })
    }

    /// Increasing pairs (in tree coordinates) between the points of two inner
    /// nodes whose rectangles are disjoint.
    pub fn cross_rect_12(&self, w1: u32, w2: u32, est: Estimator<'_>) -> Result<f64> {
        let (a, b) = (&self.inner[w1 as usize], &self.inner[w2 as usize]);
        let span = |w: &InnerNode| {
            let (lvl, lo) = self.outer_span(w.outer);
            (lo, lo + ((1u32 << lvl) - 1))
        };
        let ((ax0, ax1), (bx0, bx1)) = (span(a), span(b));
        let x_apart = ax1 < bx0 || bx1 < ax0;
        let y_apart = a.y_hi() < b.y_lo || b.y_hi() < a.y_lo;
        if x_apart {
            let (l, r) = if ax1 < bx0 { (a, b) } else { (b, a) };
            Ok(cross_left_right(self.node_ys(l), self.node_ys(r), est))
        } else if y_apart {
            let (lo, hi) = if a.y_hi() < b.y_lo { (w1, w2) } else { (w2, w1) };
            Ok(self.cross_below_above(lo, hi, est))
        } else {
            Err(Error::NotDisjoint)
        }
    }

    /// Lists up to `limit` of this tree's pairs inside `r`, each as two points
    /// in permutation coordinates ordered by position.
    pub fn list_pairs(&self, r: &Rect, limit: usize) -> Vec<(Point, Point)> {
        if limit == 0 {
            return Vec::new();
        }
        let Some((xl, xh, yl, yh)) = self.to_tree(r) else { return Vec::new() };
        let strips = self.decompose(xl, xh, yl, yh);
        let mut raw: Vec<(u32, u32)> = Vec::new();
        'strips: for (_, nodes) in &strips {
            for (a, &wa) in nodes.iter().enumerate() {
                let w = &self.inner[wa as usize];
                for &ux in self.node_dominated(w) {
                    self.report_dominators(wa, ux, &mut raw, limit);
                    if raw.len() >= limit {
                        break 'strips;
                    }
                }
                let lx = self.node_xs(w);
                for &wb in &nodes[a + 1..] {
                    let ux = self.node_xs(&self.inner[wb as usize]);
                    for &u in lx {
                        let start = ux.partition_point(|&x| x <= u);
                        if start == ux.len() {
                            break;
                        }
                        for &v in &ux[start..] {
                            raw.push((u, v));
                            if raw.len() >= limit {
                                break 'strips;
                            }
                        }
                    }
                }
            }
        }
        if raw.len() < limit {
            let slices: Vec<&[u32]> = strips
                .iter()
                .map(|(v, _)| self.strip(*v, yl as i64, yh as i64))
                .collect();
            'cross: for (a, left) in slices.iter().enumerate() {
                for right in &slices[a + 1..] {
                    for &uy in left.iter() {
                        let start = right.partition_point(|&y| y <= uy);
                        if start == right.len() {
                            break;
                        }
                        for &vy in &right[start..] {
                            raw.push((self.inv[uy as usize], self.inv[vy as usize]));
                            if raw.len() >= limit {
                                break 'cross;
                            }
                        }
                    }
                }
            }
        }
        raw.truncate(limit);
        raw.into_iter().map(|(u, v)| self.to_pair(u, v)).collect()
    }

    /// True when `r` holds at least one of this tree's pairs.
    pub fn has_pair(&self, r: &Rect) -> bool {
        !self.list_pairs(r, 1).is_empty()
    }

    fn to_pair(&self, u: u32, v: u32) -> (Point, Point) {
        let pu = Point { x: u, y: self.perm[u as usize] };
        let pv = Point { x: v, y: self.perm[v as usize] };
        match self.kind {
            PairKind::Increasing => (pu, pv),
            PairKind::Decreasing => {
                let top = self.n as u32 - 1;
                (Point { x: top - v, y: pv.y }, Point { x: top - u, y: pu.y })
            }
        }
    }

    /// Points of node `id` lying above and to the right of tree position `ux`.
    fn report_dominators(&self, id: u32, ux: u32, out: &mut Vec<(u32, u32)>, limit: usize) {
        if id == NONE || out.len() >= limit {
            return;
        }
        let uy = self.perm[ux as usize];
        let w = &self.inner[id as usize];
        if w.y_hi() <= uy {
            return;
        }
        if w.y_lo > uy || w.is_leaf() {
            let xs = self.node_xs(w);
            for &v in &xs[xs.partition_point(|&x| x <= ux)..] {
                if self.perm[v as usize] > uy {
                    out.push((ux, v));
                    if out.len() >= limit {
                        return;
                    }
                }
            }
            return;
        }
        self.report_dominators(w.children[0], ux, out, limit);
        self.report_dominators(w.children[1], ux, out, limit);
    }
}

/// Pairs `u` in `left`, `v` in `right` with `u.y < v.y`; both value-sorted.
fn cross_left_right(left: &[u32], right: &[u32], est: Estimator<'_>) -> f64 {
    if left.is_empty() || right.is_empty() || left[0] > *right.last().unwrap() {
        return 0.0;
    }
    est.monotone_sum(left.len(), Direction::NonIncreasing, |i| {
        (right.len() - right.partition_point(|&y| y <= left[i])) as f64
    })
}

fn merge(a: &[u32], b: &[u32], out: &mut Vec<u32>, mut tag: impl FnMut(bool)) {
    merge_tagged(a, b, out, &mut tag)
}

fn merge_tagged(a: &[u32], b: &[u32], out: &mut Vec<u32>, mut tag: impl FnMut(bool)) {
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i] < b[j]) {
            out.push(a[i]);
            tag(false);
            i += 1;
        } else {
            out.push(b[j]);
            tag(true);
            j += 1;
        }
    }
}

/// Increasing pairs inside `r`, within `1 + eps` from below.
pub fn approx_12_in_rect(t: &RangeTree2D, r: &Rect, precision: Precision) -> f64 {
    assert_eq!(t.kind(), PairKind::Increasing, "tree counts decreasing pairs");
    t.approx_pairs(r, Estimator::new(precision))
}

/// Decreasing pairs inside `r`; `t` must be built with [`PairKind::Decreasing`].
pub fn approx_21_in_rect(t: &RangeTree2D, r: &Rect, precision: Precision) -> f64 {
    assert_eq!(t.kind(), PairKind::Decreasing, "tree counts increasing pairs");
    t.approx_pairs(r, Estimator::new(precision))
}

/// Lists up to `limit` increasing pairs inside `r`.
pub fn list_12_in_rect(t: &RangeTree2D, r: &Rect, limit: usize) -> Vec<(Point, Point)> {
    t.list_pairs(r, limit)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::random_permutation;
    use proptest::prelude::*;

    fn naive_pairs(p: &Permutation, r: &Rect, kind: PairKind) -> Vec<(Point, Point)> {
        let pts: Vec<Point> = (0..p.len() as u32)
            .map(|x| Point { x, y: p.value(x as usize) })
            .filter(|q| r.contains(q.x, q.y))
            .collect();
        let mut out = Vec::new();
        for (i, a) in pts.iter().enumerate() {
            for b in &pts[i + 1..] {
                if (a.y < b.y) == (kind == PairKind::Increasing) {
                    out.push((*a, *b));
                }
            }
        }
        out.sort();
        out
    }

    #[test]
    fn node_counts_are_exact() {
        let p = random_permutation(53, 9);
        let t = RangeTree2D::build(&p, PairKind::Increasing);
        for id in 0..t.inner_node_count() as u32 {
            let w = *t.inner_node(id);
            let xs = t.node_xs(&w);
            let mut want = 0;
            for (i, &a) in xs.iter().enumerate() {
                for &b in &xs[i + 1..] {
                    want += (t.value_at(a) < t.value_at(b)) as u64;
                }
            }
            assert_eq!(w.count12, want);
            assert!(xs.windows(2).all(|q| q[0] < q[1]));
            let ys = t.node_ys(&w);
            assert!(ys.iter().all(|&y| w.y_lo <= y && y <= w.y_hi()));
        }
    }

    #[test]
    fn cross_rect_rejects_overlap() {
        let p = random_permutation(16, 1);
        let t = RangeTree2D::build(&p, PairKind::Increasing);
        let root = t.inner_root(1).unwrap();
        let est = Estimator::new(Precision::Exact);
        assert_eq!(t.cross_rect_12(root, root, est), Err(Error::NotDisjoint));
        let w = *t.inner_node(root);
        let (lo, hi) = (w.children[0], w.children[1]);
        let got = t.cross_rect_12(lo, hi, est).unwrap();
        assert_eq!(got as u64, w.count12 - t.inner_node(lo).count12 - t.inner_node(hi).count12);
    }

    #[test]
    fn list_respects_limit() {
        let p = Permutation::identity(20);
        let t = RangeTree2D::build(&p, PairKind::Increasing);
        let r = Rect::new(0, 19, 0, 19);
        assert_eq!(t.list_pairs(&r, 7).len(), 7);
        assert_eq!(t.list_pairs(&r, 1000).len(), 190);
        assert!(t.has_pair(&r));
        let d = RangeTree2D::build(&p, PairKind::Decreasing);
        assert!(!d.has_pair(&r));
    }

    proptest! {
        #[test]
        fn exact_and_listing_match_naive(n in 1usize..70, seed in any::<u64>(),
                                         a in 0i64..70, b in 0i64..70, c in 0i64..70, d in 0i64..70) {
            let p = random_permutation(n, seed);
            let r = Rect::new(a.min(b), a.max(b), c.min(d), c.max(d));
            for kind in [PairKind::Increasing, PairKind::Decreasing] {
                let t = RangeTree2D::build(&p, kind);
                let want = naive_pairs(&p, &r, kind);
                let got = t.approx_pairs(&r, Estimator::new(Precision::Exact));
                prop_assert_eq!(got as usize, want.len());
                let mut listed = t.list_pairs(&r, usize::MAX);
                listed.sort();
                prop_assert_eq!(&listed, &want);
                prop_assert_eq!(t.has_pair(&r), !want.is_empty());
            }
        }

        #[test]
        fn approx_is_sandwiched(n in 1usize..200, seed in any::<u64>(), eps in 0.05f64..0.9,
                                a in 0i64..200, b in 0i64..200, c in 0i64..200, d in 0i64..200) {
            let p = random_permutation(n, seed);
            let r = Rect::new(a.min(b), a.max(b), c.min(d), c.max(d));
            let t = RangeTree2D::build(&p, PairKind::Increasing);
            let exact = naive_pairs(&p, &r, PairKind::Increasing).len() as f64;
            let e = approx_12_in_rect(&t, &r, Precision::Approx(eps));
            prop_assert!(e <= exact + 1e-9);
            prop_assert!(exact <= (1.0 + eps) * e + 1e-9);
        }
    }
}
