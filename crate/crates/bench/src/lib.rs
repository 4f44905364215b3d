//! Shared inputs for the benchmarks.

use patcount::rng::random_permutation;
use patcount::{Permutation, Rect};

/// Seed used by every benchmark input.
pub const SEED: u64 = 0x5eed;

pub fn input(n: usize) -> Permutation {
    random_permutation(n, SEED)
}

/// `count` query rectangles spread over an `n` by `n` grid, deterministic.
pub fn rects(n: usize, count: usize) -> Vec<Rect> {
    let n = n as i64;
    (0..count as i64)
        .map(|i| {
            let a = (i * 7919) % n;
            let b = (i * 104729 + n / 3) % n;
            let w = n / 2 + (i * 31) % (n / 2).max(1);
            Rect::new(a.min(b), (a.max(b) + w / 4).min(n - 1), (a + b) % (n / 2).max(1), (a + b) % (n / 2).max(1) + w)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rects_are_nonempty_and_stable() {
        let r = rects(1000, 50);
        assert_eq!(r, rects(1000, 50));
        assert!(r.iter().all(|r| !r.is_empty()));
    }
}
