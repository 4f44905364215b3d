//! Counting through separators.
//!
//! Every copy of a pattern with at least two elements is charged to exactly
//! one separator pair `(v, w)`: `v` is the lowest outer node whose position
//! block contains the whole copy, and `w` is the lowest node of `v`'s inner
//! tree whose value block contains it. The copy then straddles both the
//! vertical split of `v` and the horizontal split of `w`, and the numbers of
//! elements left of and below those splits form its [`Configuration`]. The
//! recipe for that configuration counts all copies charged to `(v, w)`.

use rayon::prelude::*;

use crate::birge::Direction;
use crate::count4::count4_with;
use crate::error::{Error, Result};
use crate::perm::{Pattern, Permutation};
use crate::precision::{Estimator, Precision};
use crate::range12::{PairKind, RangeTree2D};
use crate::recipe::{Axis, Configuration, Factorization, Group, Plan, Recipe, RecipeTable, StepDirection};
use crate::segtree::{Order, Point, Rect, SegTree1D};

/// An outer node together with one non-leaf node of its inner tree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SeparatorPair {
    pub outer: u32,
    pub inner: u32,
}

/// Rectangle of a separator pair and its two split lines, all inclusive.
#[derive(Clone, Copy, Debug)]
pub struct Geometry {
    pub x: [i64; 3],
    pub y: [i64; 3],
}

impl Geometry {
    pub fn quadrant(&self, left: bool, below: bool) -> Rect {
        let (xl, xh) = if left { (self.x[0], self.x[1]) } else { (self.x[1] + 1, self.x[2]) };
        let (yl, yh) = if below { (self.y[0], self.y[1]) } else { (self.y[1] + 1, self.y[2]) };
        Rect::new(xl, xh, yl, yh)
    }
}

/// Pattern elements placed so far: 0-based pattern position to point.
#[derive(Clone, Copy, Debug, Default)]
pub(crate) struct Placement {
    pub mask: u8,
    pub pts: [Point; 5],
}

impl Placement {
    pub fn with(mut self, e: usize, p: Point) -> Self {
        self.mask |= 1 << e;
        self.pts[e] = p;
        self
    }
}

/// Structures shared by counting and listing.
pub struct Engine {
    pattern: Pattern,
    pub(crate) seg: SegTree1D,
    pub(crate) inc: RangeTree2D,
    pub(crate) dec: Option<RangeTree2D>,
    pub(crate) plans: Vec<Plan>,
}

impl Engine {
    pub fn new(p: &Permutation, s: &Pattern) -> Result<Self> {
        Self::with_table(p, s, RecipeTable::for_length(s.len())?)
    }

    pub fn with_table(p: &Permutation, s: &Pattern, table: &RecipeTable) -> Result<Self> {
        let k = s.len();
        if !(2..=5).contains(&k) || table.k() != k {
            return Err(Error::InvalidPattern(format!("{s} needs a recipe table of length {k}")));
        }
        let plans: Vec<Plan> = Configuration::all(k).map(|c| table.get(s, c).cloned()).collect::<Result<_>>()?;
        let needs_dec = plans.iter().any(|pl| {
            matches!(pl, Plan::Recipe(r) if r.terminal.iter().any(|g| matches!(g, Group::Pair(_, _, PairKind::Decreasing))))
        });
        Ok(Self {
            pattern: *s,
            seg: SegTree1D::build(p),
            inc: RangeTree2D::build(p, PairKind::Increasing),
            dec: needs_dec.then(|| RangeTree2D::build(p, PairKind::Decreasing)),
            plans,
        })
    }

    pub fn pattern(&self) -> Pattern {
        self.pattern
    }

    pub fn tree(&self) -> &RangeTree2D {
        &self.inc
    }

    pub(crate) fn pair_tree(&self, kind: PairKind) -> &RangeTree2D {
        match kind {
            PairKind::Increasing => &self.inc,
            PairKind::Decreasing => self.dec.as_ref().expect("decreasing tree built when a recipe needs it"),
        }
    }

    /// Every separator pair, ordered by outer node and then inner node id.
    pub fn separator_pairs(&self) -> Vec<SeparatorPair> {
        let t = &self.inc;
        let mut out = Vec::new();
        for v in 1..(2u32 << t.depth()) {
            if t.outer_span(v).0 == 0 {
                continue;
            }
            for w in t.inner_ids(v) {
                if !t.inner_node(w).is_leaf() {
                    out.push(SeparatorPair { outer: v, inner: w });
                }
            }
        }
        out
    }

    pub(crate) fn geometry(&self, sp: SeparatorPair) -> Geometry {
        let (h, x_lo) = self.inc.outer_span(sp.outer);
        let w = self.inc.inner_node(sp.inner);
        let x_lo = x_lo as i64;
        let y_lo = w.y_lo as i64;
        Geometry {
            x: [x_lo, x_lo + (1 << (h - 1)) - 1, x_lo + (1 << h) - 1],
            y: [y_lo, y_lo + (1 << (w.level - 1)) - 1, y_lo + (1 << w.level) - 1],
        }
    }

    /// Value-sorted points of one quadrant, as values.
    pub(crate) fn quadrant_values(&self, sp: SeparatorPair, geo: &Geometry, left: bool, below: bool) -> &[u32] {
        let child = 2 * sp.outer + u32::from(!left);
        let r = geo.quadrant(left, below);
        self.inc.strip(child, r.y_lo, r.y_hi)
    }

    pub(crate) fn element_quadrant(&self, config: Configuration, e: usize) -> (bool, bool) {
        (e < config.vertical, (self.pattern.at(e) as usize) <= config.below)
    }

    /// Candidate rectangle for element `e` given the elements already placed.
    pub(crate) fn rect_of(&self, geo: &Geometry, config: Configuration, placed: &Placement, e: usize) -> Rect {
        let (left, below) = self.element_quadrant(config, e);
        let mut r = geo.quadrant(left, below);
        let ve = self.pattern.at(e);
        for g in 0..self.pattern.len() {
            if placed.mask & (1 << g) == 0 {
                continue;
            }
            let p = placed.pts[g];
            if g < e {
                r.x_lo = r.x_lo.max(p.x as i64 + 1);
            } else {
                r.x_hi = r.x_hi.min(p.x as i64 - 1);
            }
            if self.pattern.at(g) < ve {
                r.y_lo = r.y_lo.max(p.y as i64 + 1);
            } else {
                r.y_hi = r.y_hi.min(p.y as i64 - 1);
            }
        }
        r
    }

    /// Whether every quadrant holds at least as many points as the
    /// configuration places there.
    pub(crate) fn feasible(&self, sp: SeparatorPair, geo: &Geometry, config: Configuration) -> bool {
        let mut need = [[0usize; 2]; 2];
        for e in 0..self.pattern.len() {
            let (l, b) = self.element_quadrant(config, e);
            need[l as usize][b as usize] += 1;
        }
        for l in [false, true] {
            for b in [false, true] {
                let want = need[l as usize][b as usize];
                if want > 0 && self.quadrant_values(sp, geo, l, b).len() < want {
                    return false;
                }
            }
        }
        true
    }

    /// The `idx`-th candidate of `rect` in ascending order along `axis`.
    pub(crate) fn nth(&self, rect: &Rect, axis: Axis, idx: usize, order: Order) -> Point {
        match axis {
            Axis::Position => self.seg.nth_by_position(rect, idx, order),
            Axis::Value => self.seg.nth_by_value(rect, idx, order),
        }
        .expect("index below the rectangle count")
    }

    /// Copies charged to `sp` under `config`.
    pub fn contribution(&self, sp: SeparatorPair, config: Configuration, est: Estimator<'_>) -> Result<f64> {
        let geo = self.geometry(sp);
        if !self.feasible(sp, &geo, config) {
            return Ok(0.0);
        }
        match &self.plans[config_index(self.pattern.len(), config)] {
            Plan::Recipe(r) => Ok(self.execute_recipe(sp, &geo, r, est)),
            Plan::Factor(f) => self.factorization_fallback(sp, &geo, f, est),
        }
    }

    fn execute_recipe(&self, sp: SeparatorPair, geo: &Geometry, r: &Recipe, est: Estimator<'_>) -> f64 {
        let e = est.per_stage(r.stages());
        let (left, below) = self.element_quadrant(r.config, r.fixed);
        let mut total = 0.0;
        for &y in self.quadrant_values(sp, geo, left, below) {
            let p = Point { x: self.inc.position_of(y), y };
            total += self.eval_steps(geo, r, e, Placement::default().with(r.fixed, p), 0);
        }
        total
    }

    fn eval_steps(&self, geo: &Geometry, r: &Recipe, est: Estimator<'_>, placed: Placement, depth: usize) -> f64 {
        let Some(step) = r.steps.get(depth) else {
            return self.eval_terminal(geo, r, est, &placed);
        };
        let rect = self.rect_of(geo, r.config, &placed, step.element);
        let dir = match step.direction {
            StepDirection::NonDecreasing => Direction::NonDecreasing,
            StepDirection::NonIncreasing | StepDirection::Constant => Direction::NonIncreasing,
        };
        est.monotone_sum(self.seg.count(&rect), dir, |l| {
            let p = self.nth(&rect, step.axis, l, Order::Ascending);
            self.eval_steps(geo, r, est, placed.with(step.element, p), depth + 1)
        })
    }

    fn eval_terminal(&self, geo: &Geometry, r: &Recipe, est: Estimator<'_>, placed: &Placement) -> f64 {
        let mut prod = 1.0;
        for g in &r.terminal {
            let term = match *g {
                Group::Single(e) => self.seg.count(&self.rect_of(geo, r.config, placed, e)) as f64,
                Group::Pair(e, f, kind) => {
                    let rect = self.rect_of(geo, r.config, placed, e);
                    debug_assert_eq!(rect, self.rect_of(geo, r.config, placed, f));
                    self.pair_tree(kind).approx_pairs(&rect, est)
                }
            };
            if term == 0.0 {
                return 0.0;
            }
            prod *= term;
        }
        prod
    }

    /// Points of the block quadrant of a factorization, rank-compressed.
    pub(crate) fn block_permutation(&self, sp: SeparatorPair, geo: &Geometry, f: &Factorization) -> (Permutation, Vec<u32>) {
        let (l, b) = self.element_quadrant(f.config, f.single);
        let ys = self.quadrant_values(sp, geo, !l, !b);
        let mut pts: Vec<(u32, u32)> = ys.iter().enumerate().map(|(rank, &y)| (self.inc.position_of(y), rank as u32)).collect();
        pts.sort_unstable();
        let positions = pts.iter().map(|&(x, _)| x).collect();
        let perm = Permutation::from_zero_based(pts.into_iter().map(|(_, r)| r).collect()).expect("ranks form a permutation");
        (perm, positions)
    }

    /// Count for configurations with one element alone in a quadrant and the
    /// other four in the opposite quadrant: the two parts are independent.
    pub fn factorization_fallback(&self, sp: SeparatorPair, geo: &Geometry, f: &Factorization, est: Estimator<'_>) -> Result<f64> {
        let (l, b) = self.element_quadrant(f.config, f.single);
        let singles = self.quadrant_values(sp, geo, l, b).len();
        if singles == 0 {
            return Ok(0.0);
        }
        let (sub, _) = self.block_permutation(sp, geo, f);
        Ok(singles as f64 * count4_with(&sub, &f.block, est)?)
    }

    /// Sum over all separator pairs and configurations.
    pub fn count(&self, est: Estimator<'_>) -> Result<f64> {
        let pairs = self.separator_pairs();
        let k = self.pattern.len();
        let parts: Vec<f64> = pairs
            .par_iter()
            .map(|&sp| Configuration::all(k).map(|c| self.contribution(sp, c, est)).sum::<Result<f64>>())
            .collect::<Result<_>>()?;
        Ok(parts.iter().sum())
    }

    /// Nonzero contributions, one per separator pair and configuration.
    pub fn contributions(&self, est: Estimator<'_>) -> Result<Vec<(SeparatorPair, Configuration, f64)>> {
        let mut out = Vec::new();
        for sp in self.separator_pairs() {
            for c in Configuration::all(self.pattern.len()) {
                let v = self.contribution(sp, c, est)?;
                if v != 0.0 {
                    out.push((sp, c, v));
                }
            }
        }
        Ok(out)
    }

    /// The separator pair and configuration a copy is charged to, given its
    /// 0-based positions.
    pub fn charge(&self, positions: &[u32]) -> (SeparatorPair, Configuration) {
        let t = &self.inc;
        let (x0, x1) = (positions[0], *positions.last().unwrap());
        let (mut a, mut b) = (t.outer_leaf(x0), t.outer_leaf(x1));
        while a != b {
            a >>= 1;
            b >>= 1;
        }
        let (h, x_lo) = t.outer_span(a);
        let x_mid = x_lo + (1 << (h - 1)) - 1;
        let ys: Vec<u32> = positions.iter().map(|&x| t.value_at(x)).collect();
        let (y0, y1) = (*ys.iter().min().unwrap(), *ys.iter().max().unwrap());
        let mut w = t.inner_root(a).unwrap();
        loop {
            let node = t.inner_node(w);
            let mid = node.y_lo + (1 << (node.level - 1));
            if y1 < mid {
                w = node.children[0];
            } else if y0 >= mid {
                w = node.children[1];
            } else {
                let config = Configuration::new(
                    positions.iter().filter(|&&x| x <= x_mid).count(),
                    ys.iter().filter(|&&y| y < mid).count(),
                );
                return (SeparatorPair { outer: a, inner: w }, config);
            }
        }
    }
}

/// Index of `c` in the order of [`Configuration::all`].
pub(crate) fn config_index(k: usize, c: Configuration) -> usize {
    (c.vertical - 1) * (k - 1) + (c.below - 1)
}

/// Number of copies of a length-5 pattern, within `1 + eps` from below.
pub fn count5(p: &Permutation, s: &Pattern, precision: Precision) -> Result<f64> {
    count_separated(p, s, Estimator::new(precision))
}

/// Separator-based count for patterns of length 2 to 5.
pub fn count_separated(p: &Permutation, s: &Pattern, est: Estimator<'_>) -> Result<f64> {
    if s.len() > p.len() {
        return Ok(0.0);
    }
    Engine::new(p, s)?.count(est)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::birge::MonotoneAudit;
    use crate::oracle::{oracle_count_all, oracle_enumerate};
    use crate::rng::random_permutation;
    use std::collections::BTreeMap;

    #[test]
    fn exact_mode_matches_oracle_all_lengths() {
        for n in [5usize, 8, 13, 21] {
            let p = random_permutation(n, n as u64);
            for k in 2..=5 {
                let hist = oracle_count_all(&p, k);
                for s in Pattern::all(k) {
                    let got = count_separated(&p, &s, Estimator::new(Precision::Exact)).unwrap();
                    assert_eq!(got as u128, hist[s.rank()], "n={n} {s}");
                }
            }
        }
    }

    #[test]
    fn every_copy_is_charged_once() {
        let p = random_permutation(19, 4);
        for s in ["13524", "12345", "25314", "53142"] {
            let s: Pattern = s.parse().unwrap();
            let engine = Engine::new(&p, &s).unwrap();
            let mut want: BTreeMap<(SeparatorPair, Configuration), u64> = BTreeMap::new();
            for c in oracle_enumerate(&p, &s) {
                let pos: Vec<u32> = c.positions().iter().map(|x| x - 1).collect();
                *want.entry(engine.charge(&pos)).or_default() += 1;
            }
            let got: BTreeMap<_, _> = engine
                .contributions(Estimator::new(Precision::Exact))
                .unwrap()
                .into_iter()
                .map(|(sp, c, v)| ((sp, c), v as u64))
                .collect();
            assert_eq!(got, want, "{s}");
        }
    }

    #[test]
    fn declared_directions_hold() {
        let audit = MonotoneAudit::new();
        let p = random_permutation(24, 8);
        for s in Pattern::all(5).into_iter().step_by(7) {
            count_separated(&p, &s, Estimator::audited(Precision::Exact, &audit)).unwrap();
        }
        assert!(audit.sequences() > 100);
        assert_eq!(audit.violations(), 0);
    }

    #[test]
    fn approximation_is_sandwiched() {
        let p = random_permutation(45, 77);
        let hist = oracle_count_all(&p, 5);
        for s in ["24135", "13524", "54321", "31524"] {
            let s: Pattern = s.parse().unwrap();
            let exact = hist[s.rank()] as f64;
            let e = count5(&p, &s, Precision::Approx(0.2)).unwrap();
            assert!(e <= exact && exact <= 1.2 * e, "{s}: {e} vs {exact}");
        }
    }
}
