//! Listing copies of a pattern, reusing the counting recipes.
//!
//! Each recipe level visits its candidates from the one with the most
//! completions to the one with the fewest, which the step direction tells us.
//! A candidate is kept only if following the best candidate at every deeper
//! level reaches a nonempty terminal; the first candidate that fails ends the
//! level, since all later ones have no completions either. Output order is
//! deterministic, so a shorter listing is always a prefix of a longer one.

use crate::error::Result;
use crate::perm::{CopyTuple, Pattern, Permutation};
use crate::recipe::{Factorization, Group, Plan, Recipe, StepDirection};
use crate::segtree::{Order, Point};
use crate::separator::{Engine, Geometry, Placement, SeparatorPair};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ListingStats {
    pub emitted: u64,
    /// Candidates at recipe steps that turned out to have no completion.
    pub abandoned: u64,
    /// Fixed-element candidates with no completion.
    pub root_rejections: u64,
}

#[derive(Clone, Debug, Default)]
pub struct Listing {
    pub copies: Vec<CopyTuple>,
    pub stats: ListingStats,
}

/// Lists up to `limit` copies of `s` in `p` (all of them for `None`).
pub fn list_copies(p: &Permutation, s: &Pattern, limit: Option<usize>) -> Result<Listing> {
    let limit = limit.unwrap_or(usize::MAX);
    let mut out = Listing::default();
    let k = s.len();
    if limit == 0 || k > p.len() {
        return Ok(out);
    }
    if k == 1 {
        out.copies = (1..=p.len().min(limit) as u32).map(|x| CopyTuple::new(&[x])).collect();
        out.stats.emitted = out.copies.len() as u64;
        return Ok(out);
    }
    let engine = Engine::new(p, s)?;
    let mut lister = Lister { engine: &engine, limit, out };
    'pairs: for sp in engine.separator_pairs() {
        let geo = engine.geometry(sp);
        for plan in &engine.plans {
            if !engine.feasible(sp, &geo, plan.config()) {
                continue;
            }
            match plan {
                Plan::Recipe(r) => lister.recipe(sp, &geo, r),
                Plan::Factor(f) => lister.factor(sp, &geo, f)?,
            }
            if lister.full() {
                break 'pairs;
            }
        }
    }
    lister.out.stats.emitted = lister.out.copies.len() as u64;
    Ok(lister.out)
}

struct Lister<'a> {
    engine: &'a Engine,
    limit: usize,
    out: Listing,
}

impl Lister<'_> {
    fn full(&self) -> bool {
        self.out.copies.len() >= self.limit
    }

    fn remaining(&self) -> usize {
        self.limit - self.out.copies.len()
    }

    fn recipe(&mut self, sp: SeparatorPair, geo: &Geometry, r: &Recipe) {
        let e = self.engine;
        let (left, below) = e.element_quadrant(r.config, r.fixed);
        for &y in e.quadrant_values(sp, geo, left, below) {
            let placed = Placement::default().with(r.fixed, Point { x: e.inc.position_of(y), y });
            if !self.positive(geo, r, placed, 0) {
                self.out.stats.root_rejections += 1;
                continue;
            }
            self.level(geo, r, placed, 0);
            if self.full() {
                return;
            }
        }
    }

    /// Candidate indices from most to fewest completions.
    fn best_first(dir: StepDirection, m: usize) -> Box<dyn Iterator<Item = usize>> {
        match dir {
            StepDirection::NonDecreasing => Box::new((0..m).rev()),
            StepDirection::NonIncreasing | StepDirection::Constant => Box::new(0..m),
        }
    }

    fn level(&mut self, geo: &Geometry, r: &Recipe, placed: Placement, depth: usize) {
        let Some(step) = r.steps.get(depth) else {
            self.terminal(geo, r, &placed);
            return;
        };
        let rect = self.engine.rect_of(geo, r.config, &placed, step.element);
        let m = self.engine.seg.count(&rect);
        for l in Self::best_first(step.direction, m) {
            let p = self.engine.nth(&rect, step.axis, l, Order::Ascending);
            let next = placed.with(step.element, p);
            if !self.positive(geo, r, next, depth + 1) {
                self.out.stats.abandoned += 1;
                break;
            }
            self.level(geo, r, next, depth + 1);
            if self.full() {
                return;
            }
        }
    }

    /// Whether `placed` extends to at least one copy.
    fn positive(&self, geo: &Geometry, r: &Recipe, mut placed: Placement, depth: usize) -> bool {
        let e = self.engine;
        for step in &r.steps[depth..] {
            let rect = e.rect_of(geo, r.config, &placed, step.element);
            let m = e.seg.count(&rect);
            if m == 0 {
                return false;
            }
            let best = if step.direction == StepDirection::NonDecreasing { m - 1 } else { 0 };
            placed = placed.with(step.element, e.nth(&rect, step.axis, best, Order::Ascending));
        }
        r.terminal.iter().all(|g| match *g {
            Group::Single(x) => e.seg.count(&e.rect_of(geo, r.config, &placed, x)) > 0,
            Group::Pair(x, _, kind) => e.pair_tree(kind).has_pair(&e.rect_of(geo, r.config, &placed, x)),
        })
    }

    fn terminal(&mut self, geo: &Geometry, r: &Recipe, placed: &Placement) {
        let e = self.engine;
        let want = self.remaining();
        // Each group's options as (element, point) lists.
        let mut options: Vec<Vec<Vec<(usize, Point)>>> = Vec::with_capacity(r.terminal.len());
        for g in &r.terminal {
            let opts: Vec<Vec<(usize, Point)>> = match *g {
                Group::Single(x) => {
                    let rect = e.rect_of(geo, r.config, placed, x);
                    let m = e.seg.count(&rect).min(want);
                    (0..m).map(|i| vec![(x, e.seg.nth_by_position(&rect, i, Order::Ascending).unwrap())]).collect()
                }
                Group::Pair(x, y, kind) => {
                    let rect = e.rect_of(geo, r.config, placed, x);
                    e.pair_tree(kind).list_pairs(&rect, want).into_iter().map(|(a, b)| vec![(x, a), (y, b)]).collect()
                }
            };
            if opts.is_empty() {
                return;
            }
            options.push(opts);
        }
        let k = e.pattern().len();
        let mut idx = vec![0usize; options.len()];
        loop {
            let mut full = *placed;
            for (g, &i) in options.iter().zip(&idx) {
                for &(el, p) in &g[i] {
                    full = full.with(el, p);
                }
            }
            let xs: Vec<u32> = full.pts[..k].iter().map(|p| p.x).collect();
            debug_assert!(xs.windows(2).all(|w| w[0] < w[1]));
            self.out.copies.push(CopyTuple::from_zero_based(&xs));
            if self.full() {
                return;
            }
            // Odometer with the last group turning fastest.
            let mut d = options.len();
            loop {
                if d == 0 {
                    return;
                }
                d -= 1;
                idx[d] += 1;
                if idx[d] < options[d].len() {
                    break;
                }
                idx[d] = 0;
            }
        }
    }

    fn factor(&mut self, sp: SeparatorPair, geo: &Geometry, f: &Factorization) -> Result<()> {
        let e = self.engine;
        let (l, b) = e.element_quadrant(f.config, f.single);
        let singles = e.quadrant_values(sp, geo, l, b);
        if singles.is_empty() {
            return Ok(());
        }
        let (sub, positions) = e.block_permutation(sp, geo, f);
        let blocks = list_copies(&sub, &f.block, Some(self.remaining()))?;
        self.out.stats.abandoned += blocks.stats.abandoned;
        self.out.stats.root_rejections += blocks.stats.root_rejections;
        for &y in singles {
            let sx = e.inc.position_of(y);
            for c in &blocks.copies {
                let mut xs: Vec<u32> = c.positions().iter().map(|&i| positions[i as usize - 1]).collect();
                xs.push(sx);
                xs.sort_unstable();
                self.out.copies.push(CopyTuple::from_zero_based(&xs));
                if self.full() {
                    return Ok(());
                }
            }
        }
        Ok(())
    }
}
