//! Constraint bookkeeping for a pattern placed across a separator.
//!
//! Elements are indexed by their 0-based position in the pattern. Two unfixed
//! elements have an ordering constraint on each axis. A constraint is
//! resolved when the separator already forces it (the elements lie on
//! different sides) or when a fixed element lies strictly between them on
//! that axis, since both are then bounded by it from opposite sides.

use super::{Axis, Configuration, Group, StepDirection};
use crate::perm::Pattern;
use crate::range12::PairKind;

pub type Mask = u8;

#[derive(Clone, Copy, Debug)]
pub struct ConstraintGraph {
    pattern: Pattern,
    config: Configuration,
}

impl ConstraintGraph {
    pub fn new(pattern: Pattern, config: Configuration) -> Self {
        Self { pattern, config }
    }

    pub fn k(&self) -> usize {
        self.pattern.len()
    }

    pub fn is_left(&self, e: usize) -> bool {
        e < self.config.vertical
    }

    pub fn is_below(&self, e: usize) -> bool {
        (self.pattern.at(e) as usize) <= self.config.below
    }

    fn coord(&self, e: usize, axis: Axis) -> usize {
        match axis {
            Axis::Position => e,
            Axis::Value => self.pattern.at(e) as usize,
        }
    }

    fn side(&self, e: usize, axis: Axis) -> bool {
        match axis {
            Axis::Position => self.is_left(e),
            Axis::Value => self.is_below(e),
        }
    }

    /// Whether the constraint between unfixed `e` and `f` on `axis` still matters.
    pub fn live(&self, fixed: Mask, e: usize, f: usize, axis: Axis) -> bool {
        if self.side(e, axis) != self.side(f, axis) {
            return false;
        }
        let (a, b) = (self.coord(e, axis), self.coord(f, axis));
        let (lo, hi) = (a.min(b), a.max(b));
        !(0..self.k()).any(|g| fixed & (1 << g) != 0 && lo < self.coord(g, axis) && self.coord(g, axis) < hi)
    }

    /// Direction of the count as a function of `e`'s coordinate on `axis`, if
    /// fixing `e` next is a valid monotone step.
    pub fn step(&self, fixed: Mask, e: usize, axis: Axis) -> Option<StepDirection> {
        let other = axis.other();
        let (mut before, mut after) = (false, false);
        for f in self.unfixed(fixed | (1 << e)) {
            if self.live(fixed, e, f, other) {
                return None;
            }
            if self.live(fixed, e, f, axis) {
                if self.coord(f, axis) < self.coord(e, axis) {
                    before = true;
                } else {
                    after = true;
                }
            }
        }
        match (before, after) {
            (true, true) => None,
            (true, false) => Some(StepDirection::NonDecreasing),
            (false, true) => Some(StepDirection::NonIncreasing),
            (false, false) => Some(StepDirection::Constant),
        }
    }

    /// Splits the unfixed elements into independent singletons and pairs that
    /// share a rectangle, or `None` if some dependency is more involved.
    pub fn terminal_groups(&self, fixed: Mask) -> Option<Vec<Group>> {
        let rest: Vec<usize> = self.unfixed(fixed).collect();
        let mut partner = [usize::MAX; 8];
        for (i, &e) in rest.iter().enumerate() {
            for &f in &rest[i + 1..] {
                let lx = self.live(fixed, e, f, Axis::Position);
                let ly = self.live(fixed, e, f, Axis::Value);
                if !(lx || ly) {
                    continue;
                }
                if !(lx && ly) || partner[e] != usize::MAX || partner[f] != usize::MAX {
                    return None;
                }
                partner[e] = f;
                partner[f] = e;
            }
        }
        let mut groups = Vec::new();
        for &e in &rest {
            match partner[e] {
                usize::MAX => groups.push(Group::Single(e)),
                f if f > e => {
                    let kind = if self.pattern.at(e) < self.pattern.at(f) {
                        PairKind::Increasing
                    } else {
                        PairKind::Decreasing
                    };
                    groups.push(Group::Pair(e, f, kind));
                }
                _ => {}
            }
        }
        Some(groups)
    }

    pub fn unfixed(&self, fixed: Mask) -> impl Iterator<Item = usize> {
        (0..self.k()).filter(move |&e| fixed & (1 << e) == 0)
    }
}
