//! Merge-sort tree over the points `(i, p(i))` of a permutation.
//!
//! Positions are padded to a power of two `m`. Level `h` stores, for every
//! aligned block of `2^h` positions, the values of that block in sorted order.
//! Levels are flat arrays of length `n`, so the whole structure holds
//! `n * (log m + 1)` entries. A second tree over the inverse permutation
//! answers selection by value.

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Closed rectangle `[x_lo, x_hi] x [y_lo, y_hi]` in 0-based coordinates.
/// Any side with `lo > hi` makes the rectangle empty.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Rect {
    pub x_lo: i64,
    pub x_hi: i64,
    pub y_lo: i64,
    pub y_hi: i64,
}

impl Rect {
    pub const fn new(x_lo: i64, x_hi: i64, y_lo: i64, y_hi: i64) -> Self {
        Self { x_lo, x_hi, y_lo, y_hi }
    }

    pub fn is_empty(&self) -> bool {
        self.x_lo > self.x_hi || self.y_lo > self.y_hi
    }

    pub fn contains(&self, x: u32, y: u32) -> bool {
        let (x, y) = (x as i64, y as i64);
        self.x_lo <= x && x <= self.x_hi && self.y_lo <= y && y <= self.y_hi
    }

    pub fn transposed(&self) -> Self {
        Self::new(self.y_lo, self.y_hi, self.x_lo, self.x_hi)
    }

    fn clamp(&self, n: usize) -> Option<(usize, usize, u32, u32)> {
        let top = n as i64 - 1;
        let (xl, xh) = (self.x_lo.max(0), self.x_hi.min(top));
        let (yl, yh) = (self.y_lo.max(0), self.y_hi.min(top));
        if xl > xh || yl > yh {
            None
        } else {
            Some((xl as usize, xh as usize, yl as u32, yh as u32))
        }
    }
}

/// A point `(position, value)`, both 0-based.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    pub x: u32,
    pub y: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Order {
    Ascending,
    Descending,
}

#[derive(Clone, Debug)]
pub struct MergeTree {
    n: usize,
    depth: u32,
    levels: Vec<Vec<u32>>,
}

impl MergeTree {
    /// Builds the tree over keys indexed by position.
    pub fn build(keys: &[u32]) -> Self {
        let n = keys.len();
        let depth = n.max(1).next_power_of_two().trailing_zeros();
        let mut levels = Vec::with_capacity(depth as usize + 1);
        levels.push(keys.to_vec());
        for h in 1..=depth {
            let prev: &Vec<u32> = &levels[h as usize - 1];
            let half = 1usize << (h - 1);
            let mut cur = Vec::with_capacity(n);
            let mut a = 0;
            while a < n {
                let mid = (a + half).min(n);
                let end = (a + 2 * half).min(n);
                merge_into(&prev[a..mid], &prev[mid..end], &mut cur);
                a = end;
            }
            levels.push(cur);
        }
        Self { n, depth, levels }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn depth(&self) -> u32 {
        self.depth
    }

    /// Sorted keys of the block at level `h` starting at position `a`.
    pub fn block(&self, h: u32, a: usize) -> &[u32] {
        let end = (a + (1usize << h)).min(self.n);
        &self.levels[h as usize][a.min(end)..end]
    }

    pub fn stored_entries(&self) -> usize {
        self.levels.iter().map(Vec::len).sum()
    }

    #[inline]
    fn count_in_block(&self, h: u32, a: usize, y_lo: u32, y_hi: u32) -> usize {
        let b = self.block(h, a);
        b.partition_point(|&y| y <= y_hi) - b.partition_point(|&y| y < y_lo)
    }

    /// Canonical blocks `(level, start)` covering `[x_lo, x_hi]`, left to right.
    fn canonical(&self, x_lo: usize, x_hi: usize, out: &mut Vec<(u32, usize)>) {
        // Bottom-up walk, collecting left and right fringes separately.
        let mut right = Vec::new();
        let (mut l, mut r) = (x_lo, x_hi + 1);
        let mut h = 0;
        while l < r {
            let size = 1usize << h;
            if (l >> h) & 1 == 1 && l + size <= r {
                out.push((h, l));
                l += size;
            }
            if (r >> h) & 1 == 1 && r - size >= l && r > l {
                r -= size;
                right.push((h, r));
            }
            h += 1;
        }
        out.extend(right.into_iter().rev());
    }

    pub fn count(&self, rect: &Rect) -> usize {
        let Some((xl, xh, yl, yh)) = rect.clamp(self.n) else { return 0 };
        let mut nodes = Vec::with_capacity(2 * self.depth as usize + 2);
        self.canonical(xl, xh, &mut nodes);
        nodes.iter().map(|&(h, a)| self.count_in_block(h, a, yl, yh)).sum()
    }

    /// Number of canonical blocks used to answer a query on `[x_lo, x_hi]`.
    pub fn canonical_node_count(&self, x_lo: usize, x_hi: usize) -> usize {
        if x_lo > x_hi || x_hi >= self.n {
            return 0;
        }
        let mut nodes = Vec::new();
        self.canonical(x_lo, x_hi, &mut nodes);
        nodes.len()
    }

    /// The `idx`-th (0-based) position inside `rect` in the given position order.
    pub fn nth(&self, rect: &Rect, idx: usize, order: Order) -> Option<usize> {
        let (xl, xh, yl, yh) = rect.clamp(self.n)?;
        let mut nodes = Vec::with_capacity(2 * self.depth as usize + 2);
        self.canonical(xl, xh, &mut nodes);
        if order == Order::Descending {
            nodes.reverse();
        }
        let mut rem = idx;
        for (h, a) in nodes {
            let c = self.count_in_block(h, a, yl, yh);
            if rem < c {
                return Some(self.descend(h, a, rem, yl, yh, order));
            }
            rem -= c;
        }
        None
    }

    fn descend(&self, mut h: u32, mut a: usize, mut rem: usize, yl: u32, yh: u32, order: Order) -> usize {
        while h > 0 {
            let half = 1usize << (h - 1);
            let (first, second) = match order {
                Order::Ascending => (a, a + half),
                Order::Descending => (a + half, a),
            };
            let c = if first < self.n { self.count_in_block(h - 1, first, yl, yh) } else { 0 };
            if rem < c {
                a = first;
            } else {
                rem -= c;
                a = second;
            }
            h -= 1;
        }
        a
    }
}

fn merge_into(a: &[u32], b: &[u32], out: &mut Vec<u32>) {
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        if a[i] <= b[j] {
            out.push(a[i]);
            i += 1;
        } else {
            out.push(b[j]);
            j += 1;
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
}

/// Orthogonal range counting and selection over a permutation's points.
#[derive(Clone, Debug)]
pub struct SegTree1D {
    perm: Vec<u32>,
    inv: Vec<u32>,
    by_position: MergeTree,
    by_value: MergeTree,
}

impl SegTree1D {
    pub fn build(p: &Permutation) -> Self {
        let inv = p.inverse();
        Self {
            perm: p.values().to_vec(),
            by_position: MergeTree::build(p.values()),
            by_value: MergeTree::build(inv.values()),
            inv: inv.values().to_vec(),
        }
    }

    pub fn len(&self) -> usize {
        self.perm.len()
    }

    pub fn is_empty(&self) -> bool {
        self.perm.is_empty()
    }

    pub fn perm(&self) -> &[u32] {
        &self.perm
    }

    pub fn inv(&self) -> &[u32] {
        &self.inv
    }

    pub fn position_tree(&self) -> &MergeTree {
        &self.by_position
    }

    #[inline]
    pub fn count(&self, rect: &Rect) -> usize {
        self.by_position.count(rect)
    }

    /// The `idx`-th point of `rect` ordered by position.
    #[inline]
    pub fn nth_by_position(&self, rect: &Rect, idx: usize, order: Order) -> Option<Point> {
        let x = self.by_position.nth(rect, idx, order)?;
        Some(Point { x: x as u32, y: self.perm[x] })
    }

    /// The `idx`-th point of `rect` ordered by value.
    #[inline]
    pub fn nth_by_value(&self, rect: &Rect, idx: usize, order: Order) -> Option<Point> {
        let y = self.by_value.nth(&rect.transposed(), idx, order)?;
        Some(Point { x: self.inv[y], y: y as u32 })
    }

    /// Number of points with position in `i..=j` and value in `a..=b`, all 1-based.
    pub fn count_rect(&self, i: usize, j: usize, a: usize, b: usize) -> Result<u64> {
        let n = self.len();
        if !(1 <= i && i <= j && j <= n && 1 <= a && a <= b && b <= n) {
            return Err(Error::InvalidRange(format!("[{i}, {j}] x [{a}, {b}] with n = {n}")));
        }
        Ok(self.count(&rect1(i, j, a, b)) as u64)
    }

    /// Position (1-based) of the `l`-th leftmost point in the 1-based rectangle.
    pub fn select_by_location(&self, i: usize, j: usize, a: usize, b: usize, l: u64) -> Result<usize> {
        let available = self.count_rect(i, j, a, b)?;
        if l == 0 || l > available {
            return Err(Error::RankOutOfRange { rank: l, available });
        }
        let p = self.nth_by_position(&rect1(i, j, a, b), l as usize - 1, Order::Ascending).unwrap();
        Ok(p.x as usize + 1)
    }

    /// Value (1-based) of the `l`-th largest point in the 1-based rectangle.
    pub fn select_by_value(&self, i: usize, j: usize, a: usize, b: usize, l: u64) -> Result<usize> {
        let available = self.count_rect(i, j, a, b)?;
        if l == 0 || l > available {
            return Err(Error::RankOutOfRange { rank: l, available });
        }
        let p = self.nth_by_value(&rect1(i, j, a, b), l as usize - 1, Order::Descending).unwrap();
        Ok(p.y as usize + 1)
    }
}

fn rect1(i: usize, j: usize, a: usize, b: usize) -> Rect {
    Rect::new(i as i64 - 1, j as i64 - 1, a as i64 - 1, b as i64 - 1)
}
