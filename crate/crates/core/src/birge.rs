//! Coresets for sums of monotone sequences.
//!
//! For a nonincreasing sequence `x_1 >= ... >= x_n >= 0`, split `1..=n` into
//! consecutive intervals where the interval starting at `s` has length
//! `1 + floor(eps * (s - 1))`. Probing only the last element of each interval
//! and weighting it by the interval length gives a lower bound `E` with
//! `S / (1 + eps) <= E <= S`.
//!
//! The bound holds because every such sequence is a nonnegative combination
//! of prefix indicators `1[i <= t]`, and on an indicator the only loss comes
//! from the interval containing `t`, whose length is at most `1 + eps(t-1)`
//! while `S = t`. Nondecreasing sequences are handled by mirroring.

use std::sync::atomic::{AtomicU64, Ordering};

use crate::error::{Error, Result};
use crate::precision::Precision;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    NonIncreasing,
    NonDecreasing,
}

/// Read access to a monotone sequence.
pub trait MonotoneAccess {
    fn len(&self) -> usize;
    /// Value at 0-based index `i`.
    fn probe(&mut self, i: usize) -> f64;
    fn direction(&self) -> Direction;

    fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Adapts a closure to [`MonotoneAccess`].
pub struct FnAccess<F> {
    pub len: usize,
    pub dir: Direction,
    pub probe: F,
}

impl<F: FnMut(usize) -> f64> MonotoneAccess for FnAccess<F> {
    fn len(&self) -> usize {
        self.len
    }
    fn probe(&mut self, i: usize) -> f64 {
        (self.probe)(i)
    }
    fn direction(&self) -> Direction {
        self.dir
    }
}

/// Interval partition of `0..n`, ordered from the large end of a
/// nonincreasing sequence.
#[derive(Clone, Debug, PartialEq)]
pub struct BirgeSchedule {
    n: usize,
    epsilon: f64,
    intervals: Vec<(usize, usize)>,
}

impl BirgeSchedule {
    pub fn new(n: usize, epsilon: f64) -> Result<Self> {
        if !(epsilon.is_finite() && epsilon > 0.0 && epsilon < 1.0) {
            return Err(Error::InvalidEpsilon(epsilon));
        }
        Ok(Self { n, epsilon, intervals: Intervals::new(n, epsilon).collect() })
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn epsilon(&self) -> f64 {
        self.epsilon
    }

    /// `(start, length)` pairs with 0-based starts.
    pub fn intervals(&self) -> &[(usize, usize)] {
        &self.intervals
    }

    pub fn probe_count(&self) -> usize {
        self.intervals.len()
    }

    /// Probed index and weight of each interval for a sequence of direction `dir`.
    pub fn probes(&self, dir: Direction) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.n;
        self.intervals.iter().map(move |&(s, l)| match dir {
            Direction::NonIncreasing => (s + l - 1, l),
            Direction::NonDecreasing => (n - (s + l), l),
        })
    }
}

/// Lazily generated schedule, so the hot path does not allocate.
#[derive(Clone, Copy)]
struct Intervals {
    n: usize,
    eps: f64,
    next: usize,
}

impl Intervals {
    fn new(n: usize, eps: f64) -> Self {
        Self { n, eps, next: 0 }
    }
}

impl Iterator for Intervals {
    type Item = (usize, usize);

    #[inline]
    fn next(&mut self) -> Option<(usize, usize)> {
        let s = self.next;
        if s >= self.n {
            return None;
        }
        let len = (1 + (self.eps * s as f64).floor() as usize).min(self.n - s);
        self.next = s + len;
        Some((s, len))
    }
}

/// Sum of a monotone sequence, exact or within a factor `1 + eps` from below.
pub fn approx_monotone_sum<A: MonotoneAccess + ?Sized>(acc: &mut A, precision: Precision) -> f64 {
    let n = acc.len();
    match precision {
        Precision::Exact => (0..n).map(|i| acc.probe(i)).sum(),
        Precision::Approx(eps) => {
            let dir = acc.direction();
            let mut total = 0.0;
            for (s, l) in Intervals::new(n, eps) {
                let i = match dir {
                    Direction::NonIncreasing => s + l - 1,
                    Direction::NonDecreasing => n - (s + l),
                };
                let x = acc.probe(i);
                if x == 0.0 {
                    // Every later probe of a monotone nonnegative sequence is zero too.
                    break;
                }
                total += l as f64 * x;
            }
            total
        }
    }
}

/// Records how many monotone sequences were fully evaluated and how many of
/// them broke their declared direction.
#[derive(Debug, Default)]
pub struct MonotoneAudit {
    sequences: AtomicU64,
    violations: AtomicU64,
}

impl MonotoneAudit {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn sequences(&self) -> u64 {
        self.sequences.load(Ordering::Relaxed)
    }

    pub fn violations(&self) -> u64 {
        self.violations.load(Ordering::Relaxed)
    }

    /// Evaluates the whole sequence, checks its direction and returns the exact sum.
    pub fn checked_sum<A: MonotoneAccess + ?Sized>(&self, acc: &mut A) -> f64 {
        let vals: Vec<f64> = (0..acc.len()).map(|i| acc.probe(i)).collect();
        let ok = match acc.direction() {
            Direction::NonIncreasing => vals.windows(2).all(|w| w[0] >= w[1]),
            Direction::NonDecreasing => vals.windows(2).all(|w| w[0] <= w[1]),
        };
        self.sequences.fetch_add(1, Ordering::Relaxed);
        if !ok || vals.iter().any(|&v| v < 0.0) {
            self.violations.fetch_add(1, Ordering::Relaxed);
        }
        vals.iter().sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn sum_of(v: &[f64], dir: Direction, eps: f64) -> f64 {
        let mut acc = FnAccess { len: v.len(), dir, probe: |i: usize| v[i] };
        approx_monotone_sum(&mut acc, Precision::Approx(eps))
    }

    #[test]
    fn schedule_covers_range() {
        for n in [0, 1, 2, 17, 1000] {
            let sch = BirgeSchedule::new(n, 0.2).unwrap();
            let mut next = 0;
            for &(s, l) in sch.intervals() {
                assert_eq!(s, next);
                assert!(l as f64 <= 1.0 + 0.2 * s as f64);
                next = s + l;
            }
            assert_eq!(next, n);
        }
    }

    #[test]
    fn probe_count_is_logarithmic() {
        for n in [1usize << 10, 1 << 16, 1 << 20] {
            for eps in [0.05, 0.1, 0.3] {
                let bound = 8.0 / eps * (n as f64).log2();
                let count = BirgeSchedule::new(n, eps).unwrap().probe_count();
                assert!((count as f64) <= bound, "n={n} eps={eps} count={count}");
            }
        }
    }

    #[test]
    fn step_function_worst_case() {
        // A prefix indicator ending where an interval starts loses the most.
        let eps = 0.25;
        let n = 400;
        let sch = BirgeSchedule::new(n, eps).unwrap();
        for &(s, _) in sch.intervals() {
            let v: Vec<f64> = (0..n).map(|i| if i <= s { 1.0 } else { 0.0 }).collect();
            let e = sum_of(&v, Direction::NonIncreasing, eps);
            let exact = (s + 1) as f64;
            assert!(e <= exact && exact <= (1.0 + eps) * e, "s={s} e={e}");
        }
    }

    #[test]
    fn frozen_small_schedule() {
        assert_eq!(BirgeSchedule::new(1, 0.3).unwrap().intervals(), &[(0, 1)]);
        let sch = BirgeSchedule::new(10, 0.5).unwrap();
        assert_eq!(sch.intervals(), &[(0, 1), (1, 1), (2, 2), (4, 3), (7, 3)]);
    }

    #[test]
    fn noisy_probes_stay_in_band() {
        use rand_core::{RngCore, SeedableRng};
        let mut rng = rand_xoshiro::SplitMix64::seed_from_u64(11);
        for gamma in [0.01, 0.1] {
            for eps in [0.5, 0.1] {
                for _ in 0..200 {
                    let n = 1 + (rng.next_u64() % 2000) as usize;
                    let mut v: Vec<f64> = (0..n).map(|_| (rng.next_u64() % 1000) as f64).collect();
                    v.sort_unstable_by(|a, b| b.total_cmp(a));
                    let s: f64 = v.iter().sum();
                    let noise: Vec<f64> =
                        (0..n).map(|_| 1.0 + gamma * (2.0 * (rng.next_u64() % 1_000_001) as f64 / 1e6 - 1.0)).collect();
                    let mut acc = FnAccess { len: n, dir: Direction::NonIncreasing, probe: |i: usize| v[i] * noise[i] };
                    let e = approx_monotone_sum(&mut acc, Precision::Approx(eps));
                    assert!(e <= (1.0 + gamma) * s + 1e-9 && (1.0 - gamma) * s <= (1.0 + eps) * e + 1e-9);
                }
            }
        }
    }

    #[test]
    fn rejects_bad_epsilon() {
        for e in [0.0, 1.0, -0.1, f64::NAN] {
            assert!(BirgeSchedule::new(10, e).is_err());
        }
    }

    #[test]
    fn audit_flags_wrong_direction() {
        let audit = MonotoneAudit::new();
        let v = [1.0, 2.0, 3.0];
        let mut acc = FnAccess { len: 3, dir: Direction::NonIncreasing, probe: |i: usize| v[i] };
        assert_eq!(audit.checked_sum(&mut acc), 6.0);
        assert_eq!(audit.violations(), 1);
    }

    proptest! {
        #[test]
        fn sandwich_holds(mut v in prop::collection::vec(0u32..1000, 0..300), eps in 0.01f64..0.99, inc in any::<bool>()) {
            v.sort_unstable_by(|a, b| b.cmp(a));
            let mut x: Vec<f64> = v.iter().map(|&a| a as f64).collect();
            let dir = if inc { x.reverse(); Direction::NonDecreasing } else { Direction::NonIncreasing };
            let s: f64 = x.iter().sum();
            let e = sum_of(&x, dir, eps);
            prop_assert!(e <= s + 1e-9);
            prop_assert!(s <= (1.0 + eps) * e + 1e-9);

            // Interval bracketing with first and last elements.
            let sch = BirgeSchedule::new(x.len(), eps).unwrap();
            let (mut lo, mut hi) = (0.0, 0.0);
            for &(st, l) in sch.intervals() {
                let (first, last) = match dir {
                    Direction::NonIncreasing => (st, st + l - 1),
                    Direction::NonDecreasing => (x.len() - 1 - st, x.len() - st - l),
                };
                lo += l as f64 * x[last];
                hi += l as f64 * x[first];
            }
            prop_assert!(lo <= s && s <= hi);
        }
    }
}
