//! Seeded random permutations.
//!
//! The generator is SplitMix64 and the shuffle is Fisher-Yates run from the
//! back: for `i` from `n - 1` down to `1`, draw `j = next_u64() % (i + 1)` and
//! swap positions `i` and `j`. Any implementation following these two rules
//! reproduces the same permutation for a given `(n, seed)`.

use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;

use crate::perm::Permutation;

pub fn random_permutation(n: usize, seed: u64) -> Permutation {
    let mut rng = SplitMix64::seed_from_u64(seed);
    let mut v: Vec<u32> = (0..n as u32).collect();
    for i in (1..n).rev() {
        let j = (rng.next_u64() % (i as u64 + 1)) as usize;
        v.swap(i, j);
    }
    Permutation::from_zero_based(v).expect("shuffle preserves a permutation")
}
